#include "tareach/bench/model_text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace tareach::bench {

ParseError::ParseError(std::size_t line, std::size_t column, std::string const &message)
    : ModelError(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_{line}, column_{column}
{
}

namespace {

struct Field {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::string_view trim(std::string_view s, std::size_t &offset)
{
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b])))
    ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    --e;
  offset += b;
  return s.substr(b, e - b);
}

std::vector<Field> split(std::string_view line, char sep, std::size_t base_column)
{
  std::vector<Field> out;
  std::size_t start = 0;
  while (true) {
    std::size_t const end = line.find(sep, start);
    std::string_view raw = line.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    std::size_t col = base_column + start;
    std::string_view const t = trim(raw, col);
    out.push_back({t, col});
    if (end == std::string_view::npos)
      break;
    start = end + 1;
  }
  return out;
}

struct PendingSync {
  std::size_t line;
  Field field;
  std::string process1, action1, process2, action2;
};

class Parser {
public:
  Network parse(std::string_view text)
  {
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t const nl = text.find('\n', pos);
      std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      ++lineno;
      line_ = lineno;
      if (auto hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
      std::size_t offset = 1;
      if (!trim(line, offset).empty())
        statement(split(line, ':', 1));
      if (nl == std::string_view::npos)
        break;
      pos = nl + 1;
    }
    for (auto const &s : syncs_)
      resolve_sync(s);
    try {
      validate(net_);
    }
    catch (ModelError const &e) {
      throw ParseError(lineno, 1, e.what());
    }
    return std::move(net_);
  }

private:
  [[noreturn]] void fail(Field const &f, std::string const &msg) const { throw ParseError(line_, f.column, msg); }

  void need_name(Field const &f, char const *what) const
  {
    if (f.text.empty())
      fail(f, std::string("missing ") + what);
    for (char c : f.text)
      if (std::isspace(static_cast<unsigned char>(c)) || c == '@' || c == ',' || c == '&' || c == '=' || c == '<'
          || c == '>')
        fail(f, std::string("invalid character in ") + what + " '" + std::string(f.text) + "'");
  }

  void arity(std::vector<Field> const &fs, std::size_t lo, std::size_t hi) const
  {
    if (fs.size() < lo)
      fail(fs.back(), "too few fields for '" + std::string(fs[0].text) + "'");
    if (fs.size() > hi)
      fail(fs[hi], "unexpected field '" + std::string(fs[hi].text) + "'");
  }

  ProcessId process(Field const &f) const
  {
    auto id = net_.find_process(f.text);
    if (!id)
      fail(f, "unknown process '" + std::string(f.text) + "'");
    return *id;
  }

  LocationId location(ProcessId p, Field const &f) const
  {
    auto id = net_.processes[p].find_location(f.text);
    if (!id)
      fail(f, "unknown location '" + std::string(f.text) + "' in process " + net_.processes[p].name);
    return *id;
  }

  ClockId clock(Field const &f) const
  {
    auto id = net_.find_clock(f.text);
    if (!id)
      fail(f, "unknown clock '" + std::string(f.text) + "'");
    return *id;
  }

  void statement(std::vector<Field> const &fs)
  {
    std::string_view const kw = fs[0].text;
    if (kw == "system") {
      arity(fs, 2, 2);
      need_name(fs[1], "system name");
      net_.name = fs[1].text;
    }
    else if (kw == "clock") {
      arity(fs, 2, 2);
      need_name(fs[1], "clock name");
      if (net_.find_clock(fs[1].text))
        fail(fs[1], "duplicate clock '" + std::string(fs[1].text) + "'");
      net_.clocks.emplace_back(fs[1].text);
    }
    else if (kw == "process") {
      arity(fs, 2, 2);
      need_name(fs[1], "process name");
      if (net_.find_process(fs[1].text))
        fail(fs[1], "duplicate process '" + std::string(fs[1].text) + "'");
      net_.processes.push_back(TimedAutomaton{std::string(fs[1].text), {}, {}});
    }
    else if (kw == "location") {
      location_statement(fs);
    }
    else if (kw == "edge") {
      edge_statement(fs);
    }
    else if (kw == "sync") {
      arity(fs, 3, 3);
      auto endpoint = [&](Field const &f) {
        auto at = f.text.find('@');
        if (at == std::string_view::npos)
          fail(f, "expected <process>@<action>");
        std::size_t col = f.column;
        std::string_view p = trim(f.text.substr(0, at), col);
        col = f.column + at + 1;
        std::string_view a = trim(f.text.substr(at + 1), col);
        if (p.empty() || a.empty())
          fail(f, "expected <process>@<action>");
        return std::pair<std::string, std::string>{std::string(p), std::string(a)};
      };
      auto [p1, a1] = endpoint(fs[1]);
      auto [p2, a2] = endpoint(fs[2]);
      syncs_.push_back({line_, fs[1], p1, a1, p2, a2});
    }
    else {
      fail(fs[0], "unknown declaration '" + std::string(kw) + "'");
    }
  }

  void location_statement(std::vector<Field> const &fs)
  {
    arity(fs, 3, 5);
    ProcessId const p = process(fs[1]);
    need_name(fs[2], "location name");
    auto &proc = net_.processes[p];
    if (proc.find_location(fs[2].text))
      fail(fs[2], "duplicate location '" + std::string(fs[2].text) + "'");
    Location loc{std::string(fs[2].text)};
    for (std::size_t k = 3; k < fs.size(); ++k) {
      if (fs[k].text == "initial") {
        for (auto const &other : proc.locations)
          if (other.initial)
            fail(fs[k], "second initial location in process " + proc.name);
        loc.initial = true;
      }
      else if (fs[k].text == "accepting") {
        loc.accepting = true;
      }
      else {
        fail(fs[k], "unknown location attribute '" + std::string(fs[k].text) + "'");
      }
    }
    proc.locations.push_back(std::move(loc));
  }

  AtomicConstraint atom(Field const &f) const
  {
    std::size_t const op_pos = f.text.find_first_of("<>=");
    if (op_pos == std::string_view::npos || op_pos == 0)
      fail(f, "malformed guard atom '" + std::string(f.text) + "'");
    std::size_t col = f.column;
    Field const clock_field{trim(f.text.substr(0, op_pos), col), col};
    std::string_view rest = f.text.substr(op_pos);
    AtomicConstraint a;
    a.clock = clock(clock_field);
    std::size_t op_len = 1;
    if (rest.starts_with("<="))
      a.op = CmpOp::le, op_len = 2;
    else if (rest.starts_with(">="))
      a.op = CmpOp::ge, op_len = 2;
    else if (rest.starts_with("=="))
      a.op = CmpOp::eq, op_len = 2;
    else if (rest[0] == '<')
      a.op = CmpOp::lt;
    else if (rest[0] == '>')
      a.op = CmpOp::gt;
    else
      a.op = CmpOp::eq;
    col = f.column + op_pos + op_len;
    std::string_view const num = trim(rest.substr(op_len), col);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
    if (num.empty() || ec != std::errc{} || ptr != num.data() + num.size() || value < 0 || value > kMaxConstant)
      fail({num, col}, "expected a natural constant in '" + std::string(f.text) + "'");
    a.constant = value;
    return a;
  }

  void edge_statement(std::vector<Field> const &fs)
  {
    arity(fs, 5, 7);
    ProcessId const p = process(fs[1]);
    Edge e;
    e.source = location(p, fs[2]);
    e.target = location(p, fs[3]);
    need_name(fs[4], "action name");
    e.action = net_.intern_action(std::string(fs[4].text));
    bool seen_guard = false;
    bool seen_reset = false;
    for (std::size_t k = 5; k < fs.size(); ++k) {
      Field const &f = fs[k];
      auto eq = f.text.find('=');
      std::size_t key_col = f.column;
      std::string_view const key = trim(f.text.substr(0, eq), key_col);
      if (eq == std::string_view::npos || (key != "guard" && key != "reset"))
        fail(f, "expected guard=... or reset=...");
      std::string_view const body = f.text.substr(eq + 1);
      std::size_t const body_col = f.column + eq + 1;
      if (key == "guard") {
        if (seen_guard)
          fail(f, "duplicate guard clause");
        seen_guard = true;
        std::size_t col = body_col;
        if (trim(body, col).empty())
          continue;
        std::size_t start = 0;
        while (true) {
          std::size_t const amp = body.find("&&", start);
          std::string_view const piece = body.substr(start, amp == std::string_view::npos ? amp : amp - start);
          std::size_t c = body_col + start;
          Field const atom_field{trim(piece, c), c};
          e.guard.push_back(atom(atom_field));
          if (amp == std::string_view::npos)
            break;
          start = amp + 2;
        }
      }
      else {
        if (seen_reset)
          fail(f, "duplicate reset clause");
        seen_reset = true;
        std::size_t col = body_col;
        if (trim(body, col).empty())
          continue;
        for (Field const &cf : split(body, ',', body_col)) {
          ClockId const x = clock(cf);
          if (std::find(e.resets.begin(), e.resets.end(), x) != e.resets.end())
            fail(cf, "clock reset twice");
          e.resets.push_back(x);
        }
      }
    }
    net_.processes[p].edges.push_back(std::move(e));
  }

  void resolve_sync(PendingSync const &s)
  {
    line_ = s.line;
    auto endpoint = [&](std::string const &p, std::string const &a) {
      auto pid = net_.find_process(p);
      if (!pid)
        fail(s.field, "unknown process '" + p + "'");
      auto aid = net_.find_action(a);
      if (!aid)
        fail(s.field, "unknown action '" + a + "'");
      return SyncEndpoint{*pid, *aid};
    };
    SyncPair pair{endpoint(s.process1, s.action1), endpoint(s.process2, s.action2)};
    if (pair.first.process == pair.second.process)
      fail(s.field, "sync pair within one process " + s.process1);
    net_.syncs.push_back(pair);
  }

  Network net_;
  std::size_t line_ = 0;
  std::vector<PendingSync> syncs_;
};

}  // namespace

Network parse_model(std::string_view text) { return Parser{}.parse(text); }

Network load_model(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw ModelError("cannot open model file " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_model(os.str());
}

std::string render_model(Network const &net)
{
  std::ostringstream os;
  if (!net.name.empty())
    os << "system:" << net.name << "\n";
  for (auto const &c : net.clocks)
    os << "clock:" << c << "\n";
  for (auto const &p : net.processes) {
    os << "process:" << p.name << "\n";
    for (auto const &l : p.locations)
      os << "location:" << p.name << ":" << l.name << (l.initial ? ":initial" : "") << (l.accepting ? ":accepting" : "")
         << "\n";
    for (auto const &e : p.edges) {
      os << "edge:" << p.name << ":" << p.locations[e.source].name << ":" << p.locations[e.target].name << ":"
         << net.actions[e.action];
      if (!e.guard.empty()) {
        os << ":guard=";
        for (std::size_t k = 0; k < e.guard.size(); ++k)
          os << (k ? "&&" : "") << net.clock_name(e.guard[k].clock) << to_string(e.guard[k].op)
             << e.guard[k].constant;
      }
      if (!e.resets.empty()) {
        os << ":reset=";
        for (std::size_t k = 0; k < e.resets.size(); ++k)
          os << (k ? "," : "") << net.clock_name(e.resets[k]);
      }
      os << "\n";
    }
  }
  for (auto const &s : net.syncs)
    os << "sync:" << net.processes[s.first.process].name << "@" << net.actions[s.first.action] << ":"
       << net.processes[s.second.process].name << "@" << net.actions[s.second.action] << "\n";
  return os.str();
}

}  // namespace tareach::bench
