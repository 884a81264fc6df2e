#ifndef PASCAL2_REPORT_HPP
#define PASCAL2_REPORT_HPP

#include <map>
#include <string>
#include <vector>

namespace pascal2 {

using Params = std::map<std::string, std::string>;

/// Outcome of one identity instance.
struct Check {
  std::string id;
  Params params;
  bool pass = false;
  std::string lhs;
  std::string rhs;

  friend bool operator==(const Check&, const Check&) = default;
};

/// Result of a verification suite. Overall status is pass iff every check passes.
struct Report {
  std::string suite;
  Params params;
  std::vector<Check> checks;

  bool pass() const;
  std::size_t failures() const;

  /// Records a check. Passing checks keep at most 64 characters per side;
  /// failing checks keep full witnesses.
  void add(std::string id, Params params, bool pass, std::string lhs, std::string rhs);

  /// Checks stably sorted by id.
  Report sorted() const;

  friend bool operator==(const Report&, const Report&) = default;
};

/// Long witness strings become "<head>...<tail> (N chars)".
std::string abbreviate(const std::string& value, std::size_t limit = 64);

std::string to_text(const Report& r);
std::string to_json(const Report& r);

/// Inverse of to_text / to_json. Throw std::invalid_argument on malformed input.
Report report_from_text(const std::string& text);
Report report_from_json(const std::string& json);

}  // namespace pascal2

#endif  // PASCAL2_REPORT_HPP
