#ifndef LINES_QUERY_HPP
#define LINES_QUERY_HPP

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lines {

/// Raised when a request falls outside an operation's domain.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One invariant request: lines on a degree-`degree` hypersurface in
/// CP^{ambient-1} meeting linear subspaces of codimensions `insertions`.
struct InvariantQuery {
  int ambient = 0;  // N
  int degree = 0;   // k
  std::vector<int> insertions;

  std::size_t points() const { return insertions.size(); }

  friend bool operator==(const InvariantQuery&, const InvariantQuery&) = default;
  friend auto operator<=>(const InvariantQuery&, const InvariantQuery&) = default;
};

/// Checks N >= 2, k >= 1, n >= 1 and 1 <= a_j <= N-1. Returns a one-line
/// diagnostic for the first violated condition.
std::optional<std::string> validation_error(const InvariantQuery& q);

/// Throws InputError with the diagnostic from validation_error.
void validate(const InvariantQuery& q);

/// Sum a_j == 2N + n - 5 - k, the condition for a nonzero count.
bool dimension_check(const InvariantQuery& q);

std::string to_string(const InvariantQuery& q);

}  // namespace lines

#endif  // LINES_QUERY_HPP
