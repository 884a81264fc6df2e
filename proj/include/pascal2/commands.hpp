#ifndef PASCAL2_COMMANDS_HPP
#define PASCAL2_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "pascal2/fermat.hpp"
#include "pascal2/report.hpp"

namespace pascal2 {

/// Bad command-line input. The CLI maps it (and PreconditionError,
/// CapExceeded) to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Range flags shared by the verification suites; unset fields take the
/// suite's default.
struct SuiteOptions {
  std::optional<std::uint64_t> nmax;
  std::optional<std::uint64_t> t;
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> terms;
  std::optional<std::uint64_t> degree;
  unsigned cap = kDefaultFermatCap;
};

/// seq in {c, l, d, fermat, p, q}; method (only for c) in {fermat, ca, hewgill, recursion}.
std::string cmd_value(const std::string& seq, std::uint64_t n, const std::string& method,
                      unsigned cap = kDefaultFermatCap);

/// suite in {rows, theorem1, glaisher, addition, stephan, poly, genfunc, semigroup}.
Report cmd_verify(const std::string& suite, const SuiteOptions& opts);

/// 0 if the report passes, 1 otherwise.
int verify_exit_code(const Report& report);

/// id in {6.12, 6.16, 6.19, 6.22}. First line is the truncated decimal, the
/// second names the bound or closed-form target.
std::string cmd_series(const std::string& id, std::optional<std::uint64_t> terms, unsigned digits);

/// OEIS b-file body: "n a(n)\n" for n = 0..nmax; seq in {c, l}.
std::string cmd_bfile(const std::string& seq, std::uint64_t nmax, unsigned cap = kDefaultFermatCap);

}  // namespace pascal2

#endif  // PASCAL2_COMMANDS_HPP
