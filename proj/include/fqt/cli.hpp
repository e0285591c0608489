// Command-line front end; parses argv, runs a subcommand, writes to the given
// streams and returns the process exit code (0 ok, 1 usage, 2 domain).
#ifndef FQT_CLI_HPP
#define FQT_CLI_HPP

#include <iosfwd>

namespace fqt {

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fqt

#endif
