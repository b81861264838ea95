#include "lines/schubert.hpp"

#include <algorithm>

#include "lines/residue.hpp"

namespace lines::schubert {

Partition2::Partition2(int first, int second) : first_(first), second_(second) {
  if (second < 0 || first < second)
    throw InputError("Partition2: need first >= second >= 0, got (" + std::to_string(first) + "," +
                     std::to_string(second) + ")");
}

SchubertClass::SchubertClass(int box_width) : box_width_(box_width) {
  if (box_width < 0) throw InputError("SchubertClass: negative box width");
}

SchubertClass SchubertClass::basis(int box_width, Partition2 p, const BigInt& c) {
  SchubertClass out(box_width);
  out.accumulate(p, c);
  return out;
}

BigInt SchubertClass::coeff(Partition2 p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void SchubertClass::accumulate(Partition2 p, const BigInt& c) {
  if (c == 0 || p.first() > box_width_) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

std::string SchubertClass::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [p, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.get_str() + "*s(" + std::to_string(p.first()) + "," + std::to_string(p.second()) + ")";
  }
  return out;
}

SchubertClass schur_expand(const BiPoly& p, int box_width) {
  if (!p.is_symmetric()) throw InputError("schur_expand: polynomial is not symmetric: " + p.to_string());
  SchubertClass out(box_width);
  // p * (z1 - z2) is alternating; its monomials z1^{a+1} z2^b with a >= b
  // are the leading terms of the alternants a_{(a+1,b)}.
  const BiPoly alternant = p * BiPoly::linear(1, -1);
  for (const auto& [e, c] : alternant.terms()) {
    const int a = static_cast<int>(e.z1) - 1;
    const int b = static_cast<int>(e.z2);
    if (a >= b) out.accumulate(Partition2(a, b), c);
  }
  return out;
}

SchubertClass pieri_multiply(const SchubertClass& c, int p) {
  if (p < 0) throw InputError("pieri_multiply: negative special class index");
  const int width = c.box_width();
  SchubertClass out(width);
  for (const auto& [part, coeff] : c.terms()) {
    const int a = part.first();
    const int b = part.second();
    // Boxes added to the second row: d - b, limited by the first row (d <= a).
    for (int d = b; d <= std::min(a, b + p); ++d) {
      const int top = a + (p - (d - b));
      if (top > width) continue;
      out.accumulate(Partition2(top, d), coeff);
    }
  }
  return out;
}

BigInt integrate_g2n(const SchubertClass& c) {
  return c.coeff(Partition2(c.box_width(), c.box_width()));
}

BigInt gw_n_point_schubert(const InvariantQuery& q) {
  if (q.ambient < 3) throw InputError("gw_n_point_schubert: N must be >= 3");
  if (q.degree < 1) throw InputError("gw_n_point_schubert: k must be >= 1");
  if (q.insertions.empty()) throw InputError("gw_n_point_schubert: at least one insertion is required");
  const int width = q.ambient - 2;
  for (int a : q.insertions) {
    if (a < 1 || a - 1 > width)
      throw InputError("gw_n_point_schubert: insertion " + std::to_string(a) + " out of range [1, " +
                       std::to_string(width + 1) + "]");
  }
  SchubertClass cls = schur_expand(residue::euler_poly(q.degree), width);
  for (int a : q.insertions) cls = pieri_multiply(cls, a - 1);
  return integrate_g2n(cls);
}

}  // namespace lines::schubert
