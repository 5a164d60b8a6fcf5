// Command-line front end shared by the `tareach` executable and the tests.
//
//   tareach check   (--model PATH | --gen NAME[:N]) --strategy NAME [options]
//   tareach compare (--model PATH | --gen NAME[:N]) [options]
//   tareach gen     NAME[:N] [-o PATH]
//
// Exit status: 0 when the analysis ran (whatever the verdict), 1 on usage,
// parse or I/O errors, 2 when the oracle limit is exceeded or the oracle
// disagrees with a search under --verify.

#ifndef TAREACH_CLI_HPP
#define TAREACH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tareach {

/// `args` excludes the program name.
int run_cli(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

}  // namespace tareach

#endif
