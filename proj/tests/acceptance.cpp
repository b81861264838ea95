// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lines/checks.hpp"
#include "lines/cli.hpp"
#include "lines/invariants.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Line {
  int id;
  std::string name;
  bool passed;
  std::string detail;
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Line classical_count(int id, const std::string& name, const lines::InvariantQuery& q, long expected,
                     const std::optional<lines::MirrorBlock>& mirror) {
  const auto start = Clock::now();
  const lines::InvariantReport r = lines::compute(q, true);
  const double elapsed = seconds_since(start);
  bool ok = r.dimension_ok && r.residue_value == expected && r.schubert_value == lines::BigInt(expected) &&
            r.engines_agree == true && r.mirror == mirror && elapsed < 1.0;
  if (mirror) ok = ok && r.mirror->w_ab - r.mirror->w_total == r.residue_value;
  std::ostringstream os;
  os << "residue " << r.residue_value.get_str() << ", schubert "
     << (r.schubert_value ? r.schubert_value->get_str() : "-");
  if (r.mirror)
    os << ", mirror (" << r.mirror->w_ab.get_str() << ", " << r.mirror->w_total.get_str() << ", "
       << r.mirror->difference.get_str() << ")";
  os << ", " << elapsed << " s";
  return {id, name, ok, os.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string run_cli(std::vector<const char*> args, int& code) {
  args.insert(args.begin(), "linecount");
  std::ostringstream out, err;
  code = lines::cli::main(static_cast<int>(args.size()), args.data(), out, err);
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  const std::string golden_dir = argc > 1 ? argv[1] : GOLDEN_DIR;
  std::vector<Line> results;

  results.push_back(classical_count(1, "quintic threefold: 2875 lines, mirror (6725, 3850, 2875)", {5, 5, {1, 1}},
                                    2875, lines::MirrorBlock{6725, 3850, 2875}));
  results.push_back(classical_count(2, "cubic surface: 27 lines", {4, 3, {1}}, 27, std::nullopt));

  for (const auto& c : lines::checks::run_all()) {
    std::ostringstream os;
    os << c.detail << ", " << c.seconds << " s";
    results.push_back({c.id, c.name, c.passed, os.str()});
  }

  {
    int selftest_code = -1;
    run_cli({"selftest"}, selftest_code);
    int q_code = -1, c_code = -1;
    const std::string quintic =
        run_cli({"compute", "--ambient", "5", "--degree", "5", "--insertions", "1,1", "--engine", "both", "--mirror",
                 "--json"},
                q_code);
    const std::string cubic = run_cli(
        {"compute", "--ambient", "4", "--degree", "3", "--insertions", "1", "--engine", "both", "--mirror", "--json"},
        c_code);
    const bool q_match = quintic == read_file(golden_dir + "/quintic.json");
    const bool c_match = cubic == read_file(golden_dir + "/cubic.json");
    std::ostringstream os;
    os << "selftest exit " << selftest_code << ", quintic golden " << (q_match ? "match" : "MISMATCH")
       << ", cubic golden " << (c_match ? "match" : "MISMATCH");
    results.push_back({10, "selftest exits 0 and JSON goldens match byte-exactly",
                       selftest_code == 0 && q_code == 0 && c_code == 0 && q_match && c_match, os.str()});
  }

  bool all = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.name << " (" << r.detail << ")\n";
    all = all && r.passed;
  }
  std::cout << (all ? "all acceptance criteria passed" : "acceptance FAILED") << '\n';
  return all ? 0 : 1;
}
