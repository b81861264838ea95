#ifndef LINES_SCHUBERT_HPP
#define LINES_SCHUBERT_HPP

#include <compare>
#include <map>
#include <string>

#include "lines/bipoly.hpp"
#include "lines/query.hpp"

namespace lines::schubert {

/// Two-row partition (first >= second >= 0) indexing the Schubert class
/// sigma_{first,second} of G(2,N).
class Partition2 {
 public:
  /// Throws InputError unless first >= second >= 0.
  Partition2(int first, int second);

  int first() const { return first_; }
  int second() const { return second_; }
  int size() const { return first_ + second_; }

  friend bool operator==(const Partition2&, const Partition2&) = default;
  friend auto operator<=>(const Partition2&, const Partition2&) = default;

 private:
  int first_;
  int second_;
};

/// Integer combination of Schubert classes of G(2, box_width + 2).
/// Partitions with first > box_width vanish in cohomology and are never
/// stored, nor are zero coefficients.
class SchubertClass {
 public:
  using Terms = std::map<Partition2, BigInt>;

  explicit SchubertClass(int box_width);
  /// sigma_{first,second}, or the zero class if it falls outside the box.
  static SchubertClass basis(int box_width, Partition2 p, const BigInt& c = 1);

  int box_width() const { return box_width_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(Partition2 p) const;

  /// Adds c * sigma_p; silently drops partitions outside the box.
  void accumulate(Partition2 p, const BigInt& c);

  friend bool operator==(const SchubertClass&, const SchubertClass&) = default;

  std::string to_string() const;

 private:
  int box_width_;
  Terms terms_;
};

/// Expands a symmetric polynomial in the Chern roots of S_G^* into Schur
/// polynomials s_{(a,b)}(x1,x2) via the bialternant: the coefficient of
/// s_{(a,b)} is coeff(p * (z1 - z2), a + 1, b). Terms outside the
/// box_width x 2 box are discarded. Throws InputError if p is not symmetric.
SchubertClass schur_expand(const BiPoly& p, int box_width);

/// Pieri rule: sigma_p * c, summing sigma_{c1,d} over horizontal strips of
/// size p (c1 >= a >= d >= b, c1 + d = a + b + p), truncated to the box.
SchubertClass pieri_multiply(const SchubertClass& c, int p);

/// Degree of the point class sigma_{w,w}, w = box_width.
BigInt integrate_g2n(const SchubertClass& c);

/// Integral over G(2,N) of c_top(S^k S_G^*) * prod_j sigma_{a_j - 1}.
/// Requires N >= 3, k >= 1, n >= 1 and 1 <= a_j <= N - 1.
BigInt gw_n_point_schubert(const InvariantQuery& q);

}  // namespace lines::schubert

#endif  // LINES_SCHUBERT_HPP
