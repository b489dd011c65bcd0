#pragma once

#include <colorsim/function.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace colorsim
{

/*! \brief Parses a function table.
 *
 * \verbatim
 * m 2 p 1 q 1
 * 0 -> 1
 * 1 -> 0
 * \endverbatim
 * Rows that are absent are undefined. Blank lines and lines starting with '#' are ignored.
 * Errors carry the offending line number.
 */
PartialFunction parse_function_table( std::string_view text );

/// Header plus one row per defined input in ascending index order.
std::string serialize_function_table( const PartialFunction& phi );

namespace exit_code
{
constexpr int ok = 0;
constexpr int usage = 1;
constexpr int verification_failed = 2;
constexpr int infeasible = 3;
constexpr int unresolved = 4;
} // namespace exit_code

/// Runs one subcommand (compile, eval, verify, stats, gadget); `args` excludes the program name.
int run_command( const std::vector<std::string>& args, std::ostream& out, std::ostream& err );

} // namespace colorsim
