#include "lines/bipoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lines {

BiPoly::BiPoly(const BigInt& constant) {
  if (constant != 0) terms_.emplace(Exponent{0, 0}, constant);
}

BiPoly BiPoly::monomial(const BigInt& c, unsigned i, unsigned j) {
  BiPoly p;
  if (c != 0) p.terms_.emplace(Exponent{i, j}, c);
  return p;
}

BiPoly BiPoly::linear(const BigInt& a, const BigInt& b) {
  BiPoly p = monomial(a, 1, 0);
  p.accumulate(Exponent{0, 1}, b);
  return p;
}

void BiPoly::accumulate(const Exponent& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BigInt BiPoly::coeff(unsigned i, unsigned j) const {
  auto it = terms_.find(Exponent{i, j});
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::optional<unsigned> BiPoly::max_z1_degree() const {
  std::optional<unsigned> best;
  for (const auto& [e, c] : terms_)
    if (!best || e.z1 > *best) best = e.z1;
  return best;
}

std::optional<unsigned> BiPoly::max_total_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.total();
}

Homogeneity BiPoly::homogeneity() const {
  if (terms_.empty()) return {HomogeneityKind::Zero, 0};
  // Terms are graded, so the first and last entries bound the total degree.
  unsigned lo = terms_.begin()->first.total();
  unsigned hi = terms_.rbegin()->first.total();
  if (lo != hi) return {HomogeneityKind::Mixed, 0};
  return {HomogeneityKind::Homogeneous, lo};
}

BiPoly BiPoly::swapped() const {
  BiPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponent{e.z2, e.z1}, c);
  return out;
}

BiPoly BiPoly::divide_exact(const BigInt& d) const {
  if (d == 0) throw std::domain_error("BiPoly::divide_exact: division by zero");
  BiPoly out;
  for (const auto& [e, c] : terms_) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
      throw std::domain_error("BiPoly::divide_exact: coefficient " + lines::to_string(c) +
                              " not divisible by " + lines::to_string(d));
    BigInt q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    out.terms_.emplace(e, std::move(q));
  }
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) accumulate(e, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) accumulate(e, -c);
  return *this;
}

BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs) {
  BiPoly out;
  if (lhs.is_zero() || rhs.is_zero()) return out;
  // Accumulate into a dense grid, then prune; degrees here stay small.
  unsigned rows = 0, cols = 0;
  for (const auto& [e, c] : lhs.terms_) rows = std::max(rows, e.z1), cols = std::max(cols, e.z2);
  unsigned rrows = 0, rcols = 0;
  for (const auto& [e, c] : rhs.terms_) rrows = std::max(rrows, e.z1), rcols = std::max(rcols, e.z2);
  const unsigned width = cols + rcols + 1;
  std::vector<BigInt> grid(static_cast<std::size_t>(rows + rrows + 1) * width);
  for (const auto& [a, ca] : lhs.terms_) {
    for (const auto& [b, cb] : rhs.terms_) {
      auto& slot = grid[static_cast<std::size_t>(a.z1 + b.z1) * width + (a.z2 + b.z2)];
      mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  }
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    if (grid[idx] == 0) continue;
    out.terms_.emplace(Exponent{static_cast<unsigned>(idx / width), static_cast<unsigned>(idx % width)},
                       std::move(grid[idx]));
  }
  return out;
}

BiPoly& BiPoly::operator*=(const BiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

BiPoly& BiPoly::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const BiPoly& lhs, const BiPoly& rhs) {
  if (lhs.terms_.size() != rhs.terms_.size()) return false;
  auto it = rhs.terms_.begin();
  for (const auto& [e, c] : lhs.terms_) {
    if (!(it->first == e) || it->second != c) return false;
    ++it;
  }
  return true;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string factors;
    BigInt mag = abs(c);
    if (mag != 1) factors = mag.get_str();
    for (auto [var, exp] : {std::pair{"z1", e.z1}, std::pair{"z2", e.z2}}) {
      if (exp == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += var;
      if (exp > 1) factors += "^" + std::to_string(exp);
    }
    out += factors.empty() ? "1" : factors;
  }
  return out;
}

BiPoly add(const BiPoly& p, const BiPoly& q) { return p + q; }
BiPoly mul(const BiPoly& p, const BiPoly& q) { return p * q; }
BigInt coeff(const BiPoly& p, unsigned i, unsigned j) { return p.coeff(i, j); }
Homogeneity is_homogeneous(const BiPoly& p) { return p.homogeneity(); }

BiPoly pow(const BiPoly& p, unsigned n) {
  BiPoly result(1);
  BiPoly base = p;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace lines
