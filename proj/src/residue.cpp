#include "lines/residue.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace lines::residue {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

// z2 - z1
BiPoly vandermonde() { return BiPoly::linear(-1, 1); }

}  // namespace

BiPoly euler_poly(int k) {
  require(k >= 1, "euler_poly: degree k must be >= 1, got " + std::to_string(k));
  BiPoly out(1);
  for (int j = 0; j <= k; ++j) out *= BiPoly::linear(j, k - j);
  return out;
}

BiPoly w_poly(int a) {
  require(a >= 0, "w_poly: index must be >= 0, got " + std::to_string(a));
  BiPoly out;
  for (int j = 0; j < a; ++j) out += BiPoly::monomial(1, j, a - 1 - j);
  return out;
}

BigInt double_residue(const BiPoly& f, int N) {
  require(N >= 1, "double_residue: N must be >= 1, got " + std::to_string(N));
  return f.coeff(N - 1, N - 1);
}

BigInt w_two_point(int N, int k, int a, int b) {
  require(N >= 2, "w_two_point: N must be >= 2");
  require(a >= 0 && b >= 0, "w_two_point: insertion exponents must be >= 0");
  const BiPoly integrand = BiPoly::monomial(1, a, 0) * euler_poly(k) * BiPoly::monomial(1, 0, b);
  return double_residue(integrand, N);
}

BigInt gw_two_point_localized(int N, int k, int a, int b) {
  require(N >= 2, "gw_two_point_localized: N must be >= 2");
  require(a >= 1 && b >= 1, "gw_two_point_localized: insertions must be >= 1");
  const BiPoly diff = BiPoly::linear(1, -1);
  const BiPoly integrand = euler_poly(k) * diff * diff * w_poly(a) * w_poly(b);
  const BigInt twice = double_residue(integrand, N);
  if (!mpz_even_p(twice.get_mpz_t()))
    throw std::logic_error("gw_two_point_localized: odd intermediate residue " + twice.get_str());
  BigInt half;
  mpz_divexact_ui(half.get_mpz_t(), twice.get_mpz_t(), 2);
  return -half;
}

BigInt gw_n_point_residue(const InvariantQuery& q) {
  require(q.ambient >= 2, "gw_n_point_residue: N must be >= 2");
  require(q.degree >= 1, "gw_n_point_residue: k must be >= 1");
  require(!q.insertions.empty(), "gw_n_point_residue: at least one insertion is required");
  for (int a : q.insertions)
    require(a >= 1, "gw_n_point_residue: insertion " + std::to_string(a) + " must be >= 1");

  BiPoly integrand = vandermonde() * euler_poly(q.degree);
  integrand *= BiPoly::monomial(1, q.insertions.front(), 0);
  for (std::size_t j = 1; j < q.insertions.size(); ++j) integrand *= w_poly(q.insertions[j]);
  return double_residue(integrand, q.ambient);
}

namespace {

using LaurentExponent = std::pair<long, long>;
using Laurent = std::map<LaurentExponent, BigInt>;

// Expands (z2-z1) f / (z1^N (z2^N - z1^N)) on |z1| < |z2| as
//   (z2-z1) f * sum_{s>=0} z1^{N s - N} z2^{-N (s+1)},
// keeping s = 0..s_max, and returns the coefficient of z1^-1 z2^-1.
BigInt truncated_series_residue(const BiPoly& f, int N) {
  const BiPoly numerator = vandermonde() * f;
  if (numerator.is_zero()) return 0;
  const long n = N;
  const long z1_degree = *numerator.max_z1_degree();
  const long s_max = (z1_degree + 1 + n - 1) / n;

  Laurent expansion;
  for (long s = 0; s <= s_max; ++s) {
    const long shift1 = n * s - n;
    const long shift2 = -n * (s + 1);
    for (const auto& [e, c] : numerator.terms()) {
      auto& slot = expansion[{static_cast<long>(e.z1) + shift1, static_cast<long>(e.z2) + shift2}];
      slot += c;
    }
  }
  auto it = expansion.find({-1, -1});
  return it == expansion.end() ? BigInt(0) : it->second;
}

}  // namespace

BigInt projective_bundle_integral(const BiPoly& f, int N, ResidueMode mode) {
  require(N >= 2, "projective_bundle_integral: N must be >= 2, got " + std::to_string(N));
  switch (mode) {
    case ResidueMode::Simplified:
      return double_residue(vandermonde() * f, N);
    case ResidueMode::TruncatedSeries:
      return truncated_series_residue(f, N);
  }
  throw std::logic_error("projective_bundle_integral: unknown mode");
}

}  // namespace lines::residue
