#include "lines/query.hpp"

#include <numeric>

namespace lines {

std::optional<std::string> validation_error(const InvariantQuery& q) {
  if (q.ambient < 2) return "ambient dimension N must be >= 2, got " + std::to_string(q.ambient);
  if (q.degree < 1) return "hypersurface degree k must be >= 1, got " + std::to_string(q.degree);
  if (q.insertions.empty()) return "at least one insertion is required";
  for (int a : q.insertions) {
    if (a < 1 || a > q.ambient - 1)
      return "insertion " + std::to_string(a) + " out of range [1, " + std::to_string(q.ambient - 1) + "]";
  }
  return std::nullopt;
}

void validate(const InvariantQuery& q) {
  if (auto err = validation_error(q)) throw InputError(*err);
}

bool dimension_check(const InvariantQuery& q) {
  const long sum = std::accumulate(q.insertions.begin(), q.insertions.end(), 0L);
  return sum == 2L * q.ambient + static_cast<long>(q.points()) - 5 - q.degree;
}

std::string to_string(const InvariantQuery& q) {
  std::string out = "(N=" + std::to_string(q.ambient) + ", k=" + std::to_string(q.degree) + ", [";
  for (std::size_t i = 0; i < q.insertions.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(q.insertions[i]);
  }
  return out + "])";
}

}  // namespace lines
