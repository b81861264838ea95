#include <doctest.h>

#include <random>

#include "lines/residue.hpp"
#include "lines/schubert.hpp"

using namespace lines;
using namespace lines::schubert;

namespace {

// s_{(a,b)}(z1,z2) = (z1^{a+1} z2^b - z1^b z2^{a+1}) / (z1 - z2), written out
// as the sum it equals: (z1 z2)^b * h_{a-b}(z1, z2).
BiPoly schur_poly(int a, int b) {
  return BiPoly::monomial(1, b, b) * residue::w_poly(a - b + 1);
}

SchubertClass random_class(std::mt19937_64& rng, int width) {
  std::uniform_int_distribution<int> coef(-20, 20);
  SchubertClass c(width);
  for (int a = 0; a <= width; ++a)
    for (int b = 0; b <= a; ++b)
      if (rng() % 3 == 0) c.accumulate(Partition2(a, b), coef(rng));
  return c;
}

BiPoly random_symmetric(std::mt19937_64& rng, int max_size) {
  std::uniform_int_distribution<int> coef(-9, 9);
  BiPoly p;
  for (int a = 0; a <= max_size; ++a)
    for (int b = 0; b <= a && a + b <= max_size; ++b) p += BiPoly(coef(rng)) * schur_poly(a, b);
  return p;
}

}  // namespace

TEST_CASE("Partition2 validates its shape") {
  CHECK_NOTHROW(Partition2(3, 3));
  CHECK_THROWS_AS(Partition2(1, 2), InputError);
  CHECK_THROWS_AS(Partition2(1, -1), InputError);
}

TEST_CASE("SchubertClass stores only in-box nonzero terms") {
  SchubertClass c(2);
  c.accumulate(Partition2(3, 0), 5);
  CHECK(c.is_zero());
  c.accumulate(Partition2(2, 1), 4);
  c.accumulate(Partition2(2, 1), -4);
  CHECK(c.is_zero());
  CHECK(SchubertClass::basis(2, Partition2(1, 0), 3).coeff(Partition2(1, 0)) == 3);
}

TEST_CASE("schur_expand") {
  CHECK(schur_expand(BiPoly(1), 3) == SchubertClass::basis(3, Partition2(0, 0)));
  CHECK(schur_expand(BiPoly::z1() + BiPoly::z2(), 3) == SchubertClass::basis(3, Partition2(1, 0)));
  const SchubertClass cubic = schur_expand(residue::euler_poly(3), 2);
  CHECK(cubic.coeff(Partition2(2, 2)) == 27);
  // 9 z1 z2 (2 z1^2 + 5 z1 z2 + 2 z2^2) = 18 s_{(3,1)} + 27 s_{(2,2)}; s_{(3,1)} leaves the box.
  CHECK(cubic == SchubertClass::basis(2, Partition2(2, 2), 27));
  CHECK(schur_expand(residue::euler_poly(3), 3).coeff(Partition2(3, 1)) == 18);
  CHECK_THROWS_AS(schur_expand(BiPoly::z1(), 2), InputError);
}

TEST_CASE("bialternant inverts evaluation") {
  for (int width = 0; width <= 8; ++width)
    for (int a = 0; a <= width; ++a)
      for (int b = 0; b <= a; ++b) CHECK(schur_expand(schur_poly(a, b), width) == SchubertClass::basis(width, Partition2(a, b)));
}

TEST_CASE("pieri_multiply") {
  const SchubertClass s10 = SchubertClass::basis(2, Partition2(1, 0));
  SchubertClass expected(2);
  expected.accumulate(Partition2(2, 0), 1);
  expected.accumulate(Partition2(1, 1), 1);
  CHECK(pieri_multiply(s10, 1) == expected);
  CHECK(pieri_multiply(SchubertClass::basis(2, Partition2(2, 2)), 1).is_zero());

  SchubertClass expected5(3);
  expected5.accumulate(Partition2(3, 0), 1);
  expected5.accumulate(Partition2(2, 1), 1);
  CHECK(pieri_multiply(SchubertClass::basis(3, Partition2(1, 0)), 2) == expected5);

  std::mt19937_64 rng(3);
  const SchubertClass c = random_class(rng, 4);
  CHECK(pieri_multiply(c, 0) == c);
  CHECK_THROWS_AS(pieri_multiply(c, -1), InputError);
}

TEST_CASE("Pieri products commute") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int width = 1 + static_cast<int>(rng() % 7);
    const SchubertClass c = random_class(rng, width);
    for (int p = 0; p <= 4; ++p)
      for (int q = 0; q <= 4; ++q) CHECK(pieri_multiply(pieri_multiply(c, p), q) == pieri_multiply(pieri_multiply(c, q), p));
  }
}

TEST_CASE("Pieri agrees with multiplication by w_{a+1}") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int width = 1 + static_cast<int>(rng() % 7);
    const BiPoly p = random_symmetric(rng, 2 * width + 2);
    for (int a = 0; a <= width + 1; ++a)
      CHECK(schur_expand(p * residue::w_poly(a + 1), width) == pieri_multiply(schur_expand(p, width), a));
  }
}

TEST_CASE("integrate_g2n") {
  for (int N = 3; N <= 9; ++N) CHECK(integrate_g2n(SchubertClass::basis(N - 2, Partition2(N - 2, N - 2))) == 1);
  CHECK(integrate_g2n(SchubertClass::basis(3, Partition2(1, 0), 5)) == 0);
  CHECK(integrate_g2n(schur_expand(residue::euler_poly(3), 2)) == 27);
}

TEST_CASE("gw_n_point_schubert") {
  CHECK(gw_n_point_schubert({4, 3, {1}}) == 27);
  CHECK(gw_n_point_schubert({5, 5, {1, 1}}) == 2875);
  CHECK(gw_n_point_schubert({5, 5, {1, 2}}) == 0);
  CHECK_THROWS_AS(gw_n_point_schubert({2, 1, {1}}), InputError);
  CHECK_THROWS_AS(gw_n_point_schubert({5, 5, {0, 1}}), InputError);
  CHECK_THROWS_AS(gw_n_point_schubert({5, 5, {5}}), InputError);
  CHECK_THROWS_AS(gw_n_point_schubert({5, 0, {1}}), InputError);
  CHECK_THROWS_AS(gw_n_point_schubert({5, 5, {}}), InputError);
}

TEST_CASE("classical line counts") {
  // Lines on a general hypersurface of degree 2N-5 in CP^{N-1}: 27, 2875, 698005.
  CHECK(gw_n_point_schubert({4, 3, {1}}) == 27);
  CHECK(gw_n_point_schubert({5, 5, {1, 1}}) == 2875);
  CHECK(gw_n_point_schubert({6, 7, {1}}) == 698005);
  CHECK(residue::gw_n_point_residue({6, 7, {1}}) == 698005);
}

TEST_CASE("cross-engine agreement, all insertions up to n = 3") {
  for (int N = 3; N <= 8; ++N)
    for (int k = 1; k <= N + 2; ++k)
      for (int a = 1; a <= N - 1; ++a)
        for (int b = 1; b <= N - 1; ++b)
          for (int c = 1; c <= N - 1; ++c) {
            const InvariantQuery q{N, k, {a, b, c}};
            CHECK(gw_n_point_schubert(q) == residue::gw_n_point_residue(q));
          }
}
