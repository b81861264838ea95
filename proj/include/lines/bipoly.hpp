#ifndef LINES_BIPOLY_HPP
#define LINES_BIPOLY_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace lines {

/// Arbitrary-precision signed integer. Every coefficient and every invariant
/// computed by this library lives in this type.
using BigInt = mpz_class;

/// Exponent pair of a monomial z1^z1 * z2^z2.
struct Exponent {
  unsigned z1 = 0;
  unsigned z2 = 0;

  unsigned total() const { return z1 + z2; }
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// Graded lexicographic order with z1 > z2: total degree first, then z1 power.
struct GradedLex {
  bool operator()(const Exponent& lhs, const Exponent& rhs) const {
    if (lhs.total() != rhs.total()) return lhs.total() < rhs.total();
    return lhs.z1 < rhs.z1;
  }
};

enum class HomogeneityKind { Zero, Homogeneous, Mixed };

/// Result of a homogeneity test. `degree` is meaningful only for Homogeneous;
/// the zero polynomial is homogeneous of every degree and reports Zero.
struct Homogeneity {
  HomogeneityKind kind = HomogeneityKind::Zero;
  unsigned degree = 0;

  bool is_zero() const { return kind == HomogeneityKind::Zero; }
  bool is_homogeneous() const { return kind != HomogeneityKind::Mixed; }
  /// True when every monomial has total degree `d` (vacuously for zero).
  bool has_degree(unsigned d) const {
    return kind == HomogeneityKind::Zero ||
           (kind == HomogeneityKind::Homogeneous && degree == d);
  }
};

/// Polynomial in two commuting variables z1, z2 with BigInt coefficients.
///
/// Stored sparsely; a stored coefficient is never zero, so two polynomials
/// are equal exactly when their term maps are equal.
class BiPoly {
 public:
  using Terms = std::map<Exponent, BigInt, GradedLex>;

  BiPoly() = default;
  explicit BiPoly(const BigInt& constant);
  explicit BiPoly(long constant) : BiPoly(BigInt(constant)) {}

  static BiPoly monomial(const BigInt& c, unsigned i, unsigned j);
  static BiPoly z1() { return monomial(1, 1, 0); }
  static BiPoly z2() { return monomial(1, 0, 1); }
  /// a*z1 + b*z2
  static BiPoly linear(const BigInt& a, const BigInt& b);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  BigInt coeff(unsigned i, unsigned j) const;
  /// Largest z1 exponent present; empty for the zero polynomial.
  std::optional<unsigned> max_z1_degree() const;
  std::optional<unsigned> max_total_degree() const;
  Homogeneity homogeneity() const;

  /// p(z2, z1)
  BiPoly swapped() const;
  bool is_symmetric() const { return swapped() == *this; }

  /// Coefficient-wise exact division; throws std::domain_error if any
  /// coefficient is not a multiple of `d` or if `d` is zero.
  BiPoly divide_exact(const BigInt& d) const;

  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  BiPoly& operator*=(const BiPoly& rhs);
  BiPoly& operator*=(const BigInt& scalar);

  friend BiPoly operator+(BiPoly lhs, const BiPoly& rhs) { return lhs += rhs; }
  friend BiPoly operator-(BiPoly lhs, const BiPoly& rhs) { return lhs -= rhs; }
  friend BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs);
  friend BiPoly operator*(BiPoly lhs, const BigInt& s) { return lhs *= s; }
  friend BiPoly operator*(const BigInt& s, BiPoly rhs) { return rhs *= s; }
  BiPoly operator-() const;

  friend bool operator==(const BiPoly& lhs, const BiPoly& rhs);

  /// Human-readable form, highest degree first, e.g. "4*z1^2 + 17*z1*z2 + 4*z2^2".
  std::string to_string() const;

 private:
  void accumulate(const Exponent& e, const BigInt& c);

  Terms terms_;
};

BiPoly add(const BiPoly& p, const BiPoly& q);
BiPoly mul(const BiPoly& p, const BiPoly& q);
BigInt coeff(const BiPoly& p, unsigned i, unsigned j);
Homogeneity is_homogeneous(const BiPoly& p);
BiPoly pow(const BiPoly& p, unsigned n);

std::string to_string(const BigInt& v);

}  // namespace lines

#endif  // LINES_BIPOLY_HPP
