// Test-only reference computations. Deliberately shares no code with the
// library: homogeneous bivariate polynomials are dehomogenized to t = z1/z2
// and handled as dense __int128 coefficient vectors.
#ifndef LINES_TESTS_ORACLE_HPP
#define LINES_TESTS_ORACLE_HPP

#include <string>
#include <vector>

namespace oracle {

using Int = __int128;
/// Coefficient i multiplies z1^i z2^{d-i}, d = size()-1.
using Homog = std::vector<Int>;

inline Homog times(const Homog& p, const Homog& q) {
  if (p.empty() || q.empty()) return {};
  Homog out(p.size() + q.size() - 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  return out;
}

/// prod_{j=0}^{k} (j z1 + (k-j) z2)
inline Homog euler(int k) {
  Homog out{1};
  for (int j = 0; j <= k; ++j) out = times(out, Homog{Int(k - j), Int(j)});
  return out;
}

/// sum_{j<a} z1^j z2^{a-1-j}; empty for a = 0.
inline Homog w(int a) { return a == 0 ? Homog{} : Homog(a, 1); }

inline Homog z1_power(int a) {
  Homog out(a + 1, 0);
  out[a] = 1;
  return out;
}

/// Coefficient of z1^{N-1} z2^{N-1}: zero unless the degree is 2N-2.
inline Int residue(const Homog& p, int N) {
  if (p.empty() || static_cast<int>(p.size()) - 1 != 2 * N - 2) return 0;
  return p[N - 1];
}

/// Residue of (z2 - z1) e^k z1^{a_1} prod_{j>=2} w_{a_j}.
inline Int n_point(int N, int k, const std::vector<int>& a) {
  Homog p = times(Homog{1, -1}, euler(k));
  p = times(p, z1_power(a.front()));
  for (std::size_t j = 1; j < a.size(); ++j) p = times(p, w(a[j]));
  return residue(p, N);
}

inline std::string str(Int v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  std::string s;
  while (v != 0) {
    int digit = static_cast<int>(v % 10);
    s.insert(s.begin(), static_cast<char>('0' + (neg ? -digit : digit)));
    v /= 10;
  }
  return neg ? "-" + s : s;
}

}  // namespace oracle

#endif  // LINES_TESTS_ORACLE_HPP
