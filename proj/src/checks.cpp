#include "lines/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "lines/query.hpp"
#include "lines/residue.hpp"
#include "lines/schubert.hpp"

namespace lines::checks {

namespace {

using residue::ResidueMode;
using Clock = std::chrono::steady_clock;

// Collects the first few failures; thread-safe.
class Failures {
 public:
  void add(std::string what) {
    std::lock_guard lock(mu_);
    ++count_;
    if (samples_.size() < 5) samples_.push_back(std::move(what));
  }
  bool empty() const { return count_ == 0; }
  std::string summary() const {
    std::ostringstream os;
    os << count_ << " failure(s)";
    for (const auto& s : samples_) os << "; " << s;
    return os.str();
  }

 private:
  std::mutex mu_;
  std::size_t count_ = 0;
  std::vector<std::string> samples_;
};

template <class Body>
void parallel_for(std::size_t n, unsigned threads, Body body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) body(i);
  };
  if (threads <= 1 || n < 2) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
}

template <class Fn>
CheckResult timed(int id, std::string name, Fn fn) {
  CheckResult r;
  r.id = id;
  r.name = std::move(name);
  const auto start = Clock::now();
  fn(r);
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

void finish(CheckResult& r, const Failures& f, std::size_t cases, double limit_seconds, Clock::time_point start) {
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  std::ostringstream os;
  os << cases << " cases";
  if (!f.empty()) os << ", " << f.summary();
  if (limit_seconds > 0 && elapsed >= limit_seconds) os << ", exceeded time limit " << limit_seconds << " s";
  r.passed = f.empty() && cases > 0 && (limit_seconds <= 0 || elapsed < limit_seconds);
  r.detail = os.str();
}

struct TwoPointCase {
  int N, k, a, b;
};

std::vector<TwoPointCase> two_point_sweep() {
  std::vector<TwoPointCase> out;
  for (int N = 3; N <= 9; ++N)
    for (int k = 1; k <= N + 2; ++k)
      for (int a = 1; a <= N - 1; ++a)
        for (int b = 1; b <= N - 1; ++b)
          if (dimension_check(InvariantQuery{N, k, {a, b}})) out.push_back({N, k, a, b});
  return out;
}

std::string describe(const TwoPointCase& c) {
  return "(N=" + std::to_string(c.N) + ",k=" + std::to_string(c.k) + ",a=" + std::to_string(c.a) +
         ",b=" + std::to_string(c.b) + ")";
}

}  // namespace

BiPoly random_homogeneous(std::mt19937_64& rng, unsigned degree, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  BiPoly p;
  for (unsigned i = 0; i <= degree; ++i) p += BiPoly::monomial(dist(rng), i, degree - i);
  return p;
}

CheckResult normalization(const CheckOptions&) {
  return timed(3, "projective-bundle normalization", [](CheckResult& r) {
    const auto start = Clock::now();
    Failures f;
    std::size_t cases = 0;
    for (int N = 2; N <= 12; ++N) {
      const BiPoly top = BiPoly::monomial(1, N - 1, N - 2);
      for (auto mode : {ResidueMode::Simplified, ResidueMode::TruncatedSeries}) {
        ++cases;
        const BigInt v = residue::projective_bundle_integral(top, N, mode);
        if (v != 1) f.add("N=" + std::to_string(N) + " gave " + v.get_str());
      }
    }
    finish(r, f, cases, 0, start);
  });
}

CheckResult residue_modes_agree(const CheckOptions& opt) {
  return timed(4, "residue modes agree", [&](CheckResult& r) {
    const auto start = Clock::now();
    std::mt19937_64 rng(opt.seed);
    Failures f;
    std::size_t cases = 0;
    for (int N = 3; N <= 8; ++N) {
      for (int trial = 0; trial < 100; ++trial) {
        const BiPoly p = random_homogeneous(rng, 2 * N - 3, -9, 9);
        ++cases;
        const BigInt s = residue::projective_bundle_integral(p, N, ResidueMode::Simplified);
        const BigInt t = residue::projective_bundle_integral(p, N, ResidueMode::TruncatedSeries);
        if (s != t) f.add("N=" + std::to_string(N) + " f=" + p.to_string() + ": " + s.get_str() + " vs " + t.get_str());
      }
    }
    finish(r, f, cases, 0, start);
  });
}

CheckResult two_point_reduction(const CheckOptions& opt) {
  return timed(5, "n-point formula reduces to two-point formula", [&](CheckResult& r) {
    const auto start = Clock::now();
    const auto cases = two_point_sweep();
    Failures f;
    parallel_for(cases.size(), opt.threads, [&](std::size_t i) {
      const auto& c = cases[i];
      const BigInt n_point = residue::gw_n_point_residue(InvariantQuery{c.N, c.k, {c.a, c.b}});
      const BigInt localized = residue::gw_two_point_localized(c.N, c.k, c.a, c.b);
      if (n_point != localized) f.add(describe(c) + ": " + n_point.get_str() + " vs " + localized.get_str());
    });
    finish(r, f, cases.size(), 30.0, start);
  });
}

CheckResult mirror_identity(const CheckOptions& opt) {
  return timed(6, "mirror identity", [&](CheckResult& r) {
    const auto start = Clock::now();
    const auto cases = two_point_sweep();
    Failures f;
    parallel_for(cases.size(), opt.threads, [&](std::size_t i) {
      const auto& c = cases[i];
      const BigInt gw = residue::gw_two_point_localized(c.N, c.k, c.a, c.b);
      const BigInt w_ab = residue::w_two_point(c.N, c.k, c.a, c.b);
      const BigInt w_total = residue::w_two_point(c.N, c.k, c.a + c.b, 0);
      if (gw != w_ab - w_total)
        f.add(describe(c) + ": " + gw.get_str() + " vs " + w_ab.get_str() + " - " + w_total.get_str());
    });
    finish(r, f, cases.size(), 30.0, start);
  });
}

CheckResult cross_engine(const CheckOptions& opt) {
  return timed(7, "residue and Schubert engines agree", [&](CheckResult& r) {
    const auto start = Clock::now();
    std::vector<InvariantQuery> queries;
    for (int N = 3; N <= 9; ++N) {
      for (int k = 1; k <= N + 2; ++k) {
        for (int n = 1; n <= 4; ++n) {
          std::vector<int> a(n, 1);
          while (true) {
            queries.push_back(InvariantQuery{N, k, a});
            int pos = n - 1;
            while (pos >= 0 && a[pos] == N - 2) a[pos--] = 1;
            if (pos < 0) break;
            ++a[pos];
          }
        }
      }
    }
    Failures f;
    std::atomic<std::size_t> nonzero{0};
    parallel_for(queries.size(), opt.threads, [&](std::size_t i) {
      const auto& q = queries[i];
      const BigInt res = residue::gw_n_point_residue(q);
      const BigInt sch = schubert::gw_n_point_schubert(q);
      if (res != 0) ++nonzero;
      if (res != sch) f.add(to_string(q) + ": residue " + res.get_str() + " vs schubert " + sch.get_str());
    });
    finish(r, f, queries.size(), 120.0, start);
    r.detail += ", " + std::to_string(nonzero.load()) + " nonzero";
  });
}

CheckResult permutation_invariance(const CheckOptions& opt) {
  return timed(8, "insertion permutation invariance", [&](CheckResult& r) {
    const auto start = Clock::now();
    std::mt19937_64 rng(opt.seed ^ 0x5eedULL);
    Failures f;
    std::size_t cases = 0;
    std::size_t nonzero = 0;
    while (cases < 60) {
      const int N = std::uniform_int_distribution<int>(4, 9)(rng);
      const int n = std::uniform_int_distribution<int>(3, 4)(rng);
      const int k = std::uniform_int_distribution<int>(1, N + 2)(rng);
      const int target = 2 * N + n - 5 - k;
      if (target < n || target > n * (N - 1)) continue;
      // Draw a composition of `target` into n parts in [1, N-1] by rejection.
      std::vector<int> a(n);
      std::uniform_int_distribution<int> part(1, N - 1);
      bool found = false;
      for (int attempt = 0; attempt < 1000 && !found; ++attempt) {
        for (int& x : a) x = part(rng);
        found = std::accumulate(a.begin(), a.end(), 0) == target;
      }
      if (!found) continue;
      ++cases;
      const BigInt base = residue::gw_n_point_residue(InvariantQuery{N, k, a});
      if (base != 0) ++nonzero;
      std::vector<int> perm = a;
      std::sort(perm.begin(), perm.end());
      do {
        const BigInt v = residue::gw_n_point_residue(InvariantQuery{N, k, perm});
        if (v != base) f.add(to_string(InvariantQuery{N, k, perm}) + ": " + v.get_str() + " vs " + base.get_str());
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    finish(r, f, cases, 0, start);
    r.detail += ", " + std::to_string(nonzero) + " nonzero";
  });
}

CheckResult vanishing(const CheckOptions& opt) {
  return timed(9, "vanishing on degree mismatch and ring relations", [&](CheckResult& r) {
    const auto start = Clock::now();
    std::mt19937_64 rng(opt.seed ^ 0xfaceULL);
    Failures f;
    std::size_t cases = 0;
    auto expect_zero = [&](const BiPoly& p, int N, const std::string& label) {
      for (auto mode : {ResidueMode::Simplified, ResidueMode::TruncatedSeries}) {
        ++cases;
        const BigInt v = residue::projective_bundle_integral(p, N, mode);
        if (v != 0) f.add(label + " N=" + std::to_string(N) + " f=" + p.to_string() + " gave " + v.get_str());
      }
    };
    for (int N = 2; N <= 9; ++N) {
      const unsigned top = 2 * N - 3;
      for (unsigned d = 0; d <= top + 3; ++d) {
        if (d == top) continue;
        for (int t = 0; t < 5; ++t) expect_zero(random_homogeneous(rng, d, -9, 9), N, "degree " + std::to_string(d));
      }
      const BiPoly z1_pow = BiPoly::monomial(1, N, 0);
      const BiPoly relation = residue::w_poly(N);
      for (int t = 0; t < 10; ++t) {
        // Cofactors of every degree, so both the matched and mismatched cases appear.
        const unsigned z1_cofactor = std::uniform_int_distribution<unsigned>(0, N)(rng);
        expect_zero(z1_pow * random_homogeneous(rng, z1_cofactor, -9, 9), N, "z1^N multiple");
        const unsigned rel_cofactor = std::uniform_int_distribution<unsigned>(0, N)(rng);
        expect_zero(relation * random_homogeneous(rng, rel_cofactor, -9, 9), N, "relation multiple");
      }
      expect_zero(z1_pow * BiPoly::monomial(1, 0, N - 3 < 0 ? 0 : N - 3), N, "z1^N multiple");
      expect_zero(relation * BiPoly::monomial(1, N - 2, 0), N, "relation multiple");
    }
    // Degree selection at the invariant level: mismatched queries give 0 from every formula.
    for (int N = 3; N <= 8; ++N) {
      for (int k = 1; k <= N + 2; ++k) {
        for (int a = 1; a <= N - 2; ++a) {
          for (int b = 1; b <= N - 2; ++b) {
            const InvariantQuery q{N, k, {a, b}};
            if (dimension_check(q)) continue;
            ++cases;
            const BigInt res = residue::gw_n_point_residue(q);
            const BigInt sch = schubert::gw_n_point_schubert(q);
            const BigInt loc = residue::gw_two_point_localized(N, k, a, b);
            if (res != 0 || sch != 0 || loc != 0)
              f.add(to_string(q) + " gave " + res.get_str() + "/" + sch.get_str() + "/" + loc.get_str());
          }
        }
      }
    }
    finish(r, f, cases, 0, start);
  });
}

std::vector<CheckResult> run_all(const CheckOptions& opt) {
  return {normalization(opt),  residue_modes_agree(opt),    two_point_reduction(opt), mirror_identity(opt),
          cross_engine(opt),   permutation_invariance(opt), vanishing(opt)};
}

}  // namespace lines::checks
