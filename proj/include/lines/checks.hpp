#ifndef LINES_CHECKS_HPP
#define LINES_CHECKS_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lines/bipoly.hpp"

namespace lines::checks {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct CheckOptions {
  std::uint64_t seed = 20240611;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Random homogeneous polynomial of the given degree with coefficients drawn
/// uniformly from [lo, hi] (zero draws are simply absent monomials).
BiPoly random_homogeneous(std::mt19937_64& rng, unsigned degree, int lo, int hi);

/// Projective-bundle normalization: integral of z1^{N-1} z2^{N-2} is 1 in
/// both residue modes, 2 <= N <= 12.
CheckResult normalization(const CheckOptions& opt = {});
/// Simplified and TruncatedSeries modes agree on 100 random homogeneous
/// polynomials of degree 2N-3 for each 3 <= N <= 8.
CheckResult residue_modes_agree(const CheckOptions& opt = {});
/// n-point residue at n = 2 equals the localized two-point formula, all valid
/// dimension-matched (N, k, a, b) with 3 <= N <= 9, 1 <= k <= N+2. < 30 s.
CheckResult two_point_reduction(const CheckOptions& opt = {});
/// Localized invariant equals w(a,b) - w(a+b,0) over the same sweep.
CheckResult mirror_identity(const CheckOptions& opt = {});
/// Residue and Schubert engines agree on every query with 3 <= N <= 9,
/// 1 <= k <= N+2, 1 <= n <= 4, 1 <= a_j <= N-2. < 2 min.
CheckResult cross_engine(const CheckOptions& opt = {});
/// n-point residue is invariant under permutations of the insertions on 60
/// random dimension-matched queries with n = 3, 4.
CheckResult permutation_invariance(const CheckOptions& opt = {});
/// Degree-mismatched, z1^N-divisible and w_N-divisible inputs integrate to 0.
CheckResult vanishing(const CheckOptions& opt = {});

/// Every check above, in declaration order.
std::vector<CheckResult> run_all(const CheckOptions& opt = {});

}  // namespace lines::checks

#endif  // LINES_CHECKS_HPP
