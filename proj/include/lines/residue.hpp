#ifndef LINES_RESIDUE_HPP
#define LINES_RESIDUE_HPP

#include "lines/bipoly.hpp"
#include "lines/query.hpp"

namespace lines::residue {

/// e^k(z1,z2) = prod_{j=0}^{k} (j*z1 + (k-j)*z2); homogeneous of degree k+1.
/// Throws InputError for k < 1.
BiPoly euler_poly(int k);

/// w_a(z1,z2) = (z1^a - z2^a)/(z1 - z2) = sum_{j<a} z1^j z2^{a-1-j}.
/// w_0 = 0, w_1 = 1. Throws InputError for a < 0.
BiPoly w_poly(int a);

/// Residue at z1 = z2 = 0 of f / (z1^N z2^N), i.e. the coefficient of
/// z1^{N-1} z2^{N-1}.
BigInt double_residue(const BiPoly& f, int N);

/// Two-point function of the linear sigma model:
/// residue of z1^a * e^k * z2^b. Requires N >= 2, k >= 1, a, b >= 0.
BigInt w_two_point(int N, int k, int a, int b);

/// Two-point degree-1 invariant from the localization formula,
/// -1/2 * residue of e^k (z1-z2)^2 w_a w_b. Requires a, b >= 1.
/// Throws std::logic_error if the intermediate residue is odd.
BigInt gw_two_point_localized(int N, int k, int a, int b);

/// n-point degree-1 invariant:
/// residue of (z2-z1) e^k z1^{a_1} prod_{j>=2} w_{a_j}.
/// Requires N >= 2, k >= 1, n >= 1 and every a_j >= 1.
BigInt gw_n_point_residue(const InvariantQuery& q);

enum class ResidueMode {
  /// residue of (z2-z1) f / (z1^N z2^N)
  Simplified,
  /// residue of (z2-z1) f / (z1^N (z2^N - z1^N)), with the second factor
  /// expanded as a geometric series in (z1/z2)^N on |z1| < |z2|
  TruncatedSeries,
};

/// Integral over the projective bundle P(C^N/S_1) of f(h1, h2), evaluated as a
/// nested residue. Both modes agree on every polynomial input. Requires N >= 2.
BigInt projective_bundle_integral(const BiPoly& f, int N, ResidueMode mode);

}  // namespace lines::residue

#endif  // LINES_RESIDUE_HPP
