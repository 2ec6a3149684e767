#ifndef FROB_CLI_HPP
#define FROB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace frob::cli {

// Exit codes: 0 success, 1 domain error, 2 verification failure,
// 64 usage error, 74 I/O error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 1;
inline constexpr int exit_verify = 2;
inline constexpr int exit_usage = 64;
inline constexpr int exit_io = 74;

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);
int dispatch(int argc, char** argv);

} // namespace frob::cli

#endif
