#ifndef LINES_INVARIANTS_HPP
#define LINES_INVARIANTS_HPP

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lines/bipoly.hpp"
#include "lines/query.hpp"

namespace lines {

/// Mirror-transformation data for a two-point query:
/// difference = w(h^a h^b) - w(h^{a+b} 1).
struct MirrorBlock {
  BigInt w_ab;
  BigInt w_total;
  BigInt difference;

  friend bool operator==(const MirrorBlock&, const MirrorBlock&) = default;
};

struct InvariantReport {
  InvariantQuery query;
  bool dimension_ok = false;
  BigInt residue_value;
  std::optional<BigInt> schubert_value;
  std::optional<bool> engines_agree;
  std::optional<MirrorBlock> mirror;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

/// The two evaluators used by compute(). Replaceable so tests can inject a
/// faulty engine and exercise the disagreement path.
struct Engines {
  std::function<BigInt(const InvariantQuery&)> residue;
  std::function<BigInt(const InvariantQuery&)> schubert;

  static Engines standard();
};

/// Runs the residue engine (always) and the Schubert engine (when requested
/// and N >= 3). Adds the mirror block for n = 2. Queries failing the
/// dimension condition report zeros without evaluating either engine.
/// Throws InputError for an invalid query.
InvariantReport compute(const InvariantQuery& q, bool run_schubert,
                        const Engines& engines = Engines::standard());

struct SweepError {
  InvariantQuery query;
  std::string message;
};

using SweepEntry = std::variant<InvariantReport, SweepError>;

/// Hypersurface degrees to try for a given N.
using DegreeRule = std::function<std::vector<int>(int ambient)>;
/// Insertion lists to try for a given (N, k).
using InsertionRule = std::function<std::vector<std::vector<int>>(int ambient, int degree)>;

namespace rules {
/// k = N
DegreeRule calabi_yau();
DegreeRule fixed_degree(int k);
DegreeRule degree_range(int k_min, int k_max);
/// Every nondecreasing list of `points` insertions in [1, N-1] that
/// satisfies the dimension condition.
InsertionRule dimension_valid(int points);
/// The same list for every (N, k).
InsertionRule fixed(std::vector<int> insertions);
}  // namespace rules

struct SweepOptions {
  bool run_schubert = true;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// One entry per generated query in lexicographic (N, k, insertions) order.
/// Invalid queries become SweepError entries and the sweep continues.
std::vector<SweepEntry> sweep(int ambient_min, int ambient_max, const DegreeRule& degrees,
                              const InsertionRule& insertions, const SweepOptions& options = {},
                              const Engines& engines = Engines::standard());

}  // namespace lines

#endif  // LINES_INVARIANTS_HPP
