#include "lines/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "lines/residue.hpp"
#include "lines/schubert.hpp"

namespace lines {

Engines Engines::standard() {
  return Engines{residue::gw_n_point_residue, schubert::gw_n_point_schubert};
}

InvariantReport compute(const InvariantQuery& q, bool run_schubert, const Engines& engines) {
  validate(q);
  InvariantReport report;
  report.query = q;
  report.dimension_ok = dimension_check(q);
  const bool schubert = run_schubert && q.ambient >= 3;

  if (report.dimension_ok) {
    report.residue_value = engines.residue(q);
    if (schubert) report.schubert_value = engines.schubert(q);
  } else {
    report.residue_value = 0;
    if (schubert) report.schubert_value = BigInt(0);
  }
  if (report.schubert_value) report.engines_agree = (*report.schubert_value == report.residue_value);

  if (q.points() == 2) {
    MirrorBlock m;
    if (report.dimension_ok) {
      const int a = q.insertions[0];
      const int b = q.insertions[1];
      m.w_ab = residue::w_two_point(q.ambient, q.degree, a, b);
      m.w_total = residue::w_two_point(q.ambient, q.degree, a + b, 0);
    }
    m.difference = m.w_ab - m.w_total;
    report.mirror = m;
  }
  return report;
}

namespace rules {

DegreeRule calabi_yau() {
  return [](int ambient) { return std::vector<int>{ambient}; };
}

DegreeRule fixed_degree(int k) {
  return [k](int) { return std::vector<int>{k}; };
}

DegreeRule degree_range(int k_min, int k_max) {
  return [k_min, k_max](int) {
    std::vector<int> out;
    for (int k = k_min; k <= k_max; ++k) out.push_back(k);
    return out;
  };
}

namespace {

void extend(int ambient, int target, int points, int lo, std::vector<int>& prefix,
            std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == points) {
    if (target == 0) out.push_back(prefix);
    return;
  }
  const int remaining = points - static_cast<int>(prefix.size());
  for (int a = lo; a <= ambient - 1 && a * remaining <= target; ++a) {
    prefix.push_back(a);
    extend(ambient, target - a, points, a, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

InsertionRule dimension_valid(int points) {
  return [points](int ambient, int degree) {
    std::vector<std::vector<int>> out;
    if (points < 1) return out;
    const int target = 2 * ambient + points - 5 - degree;
    std::vector<int> prefix;
    extend(ambient, target, points, 1, prefix, out);
    return out;
  };
}

InsertionRule fixed(std::vector<int> insertions) {
  return [insertions = std::move(insertions)](int, int) { return std::vector<std::vector<int>>{insertions}; };
}

}  // namespace rules

std::vector<SweepEntry> sweep(int ambient_min, int ambient_max, const DegreeRule& degrees,
                              const InsertionRule& insertions, const SweepOptions& options,
                              const Engines& engines) {
  std::vector<InvariantQuery> queries;
  for (int n = ambient_min; n <= ambient_max; ++n)
    for (int k : degrees(n))
      for (auto& list : insertions(n, k)) queries.push_back(InvariantQuery{n, k, std::move(list)});
  std::sort(queries.begin(), queries.end());

  std::vector<std::optional<SweepEntry>> slots(queries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < queries.size(); i = next++) {
      const InvariantQuery& q = queries[i];
      if (auto err = validation_error(q)) {
        slots[i] = SweepError{q, *err};
        continue;
      }
      try {
        slots[i] = compute(q, options.run_schubert, engines);
      } catch (const InputError& e) {
        slots[i] = SweepError{q, e.what()};
      }
    }
  };

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(queries.size(), 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<SweepEntry> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace lines
