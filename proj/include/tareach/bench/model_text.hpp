// Line-based text format for networks of timed automata.
//
//   system:<name>
//   clock:<name>
//   process:<name>
//   location:<process>:<name>[:initial][:accepting]
//   edge:<process>:<src>:<dst>:<action>[:guard=<atom>(&&<atom>)*][:reset=<clock>(,<clock>)*]
//   sync:<process>@<action>:<process>@<action>
//
// An atom is <clock><op><nat> with op one of <, <=, =, >=, >. Whitespace
// around tokens is ignored and '#' starts a comment. Names must be declared
// before they are referenced; actions are declared by the edges using them.

#ifndef TAREACH_BENCH_MODEL_TEXT_HPP
#define TAREACH_BENCH_MODEL_TEXT_HPP

#include <string>
#include <string_view>

#include "tareach/automaton.hpp"

namespace tareach::bench {

class ParseError : public ModelError {
public:
  ParseError(std::size_t line, std::size_t column, std::string const &message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses and validates a model. Throws ParseError.
Network parse_model(std::string_view text);

Network load_model(std::string const &path);

std::string render_model(Network const &net);

}  // namespace tareach::bench

#endif
