// Acceptance run: one line per criterion, exit status 0 iff all pass.

#include <cstdio>
#include <string>
#include <vector>

#include "opdam/verify.hpp"

namespace v = opdam::verify;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> suites;
  double time_limit_s;  // <= 0: none
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "rank-one 2F1 vs integral", {"rank1"}, 5},
      {2, "exact rational identities", {"exact"}, 60},
      {3, "A2 symmetric vs oracle", {"a2-oracle"}, 60},
      {4, "nonsymmetric G vs oracle, Cherednik eigen-residuals", {"eigen"}, 120},
      {5, "symmetrization of G", {"symmetrize"}, 0},
      {6, "F* shift route vs integral", {"fstar-routes"}, 0},
      {7, "Laplace kernel and intertwining", {"kernel"}, 120},
      {8, "Laplacian eigen-equation", {"pde"}, 0},
      {9, "normalization and growth bound", {"normalization"}, 0},
      {10, "Jacobi function identities", {"jacobi-id"}, 0},
  };
  v::Options opt;
  bool all = true;
  for (const auto& c : criteria) {
    bool pass = true;
    double t = 0, worst = 0;
    std::size_t n = 0, fails = 0, excluded = 0;
    for (const auto& s : c.suites) {
      const auto r = v::run_suite(s, opt);
      pass = pass && r.pass();
      t += r.runtime_s;
      n += r.records.size();
      fails += r.failures();
      for (const auto& rec : r.records) {
        if (rec.tolerance > 0) worst = std::max(worst, rec.residual / rec.tolerance);
        if (rec.note.rfind("excluded", 0) == 0) ++excluded;
        if (!rec.pass)
          std::printf("  fail [%s] %s residual=%.3e tol=%.1e %s\n", rec.suite.c_str(),
                      rec.params.c_str(), rec.residual, rec.tolerance, rec.note.c_str());
      }
    }
    const bool in_time = c.time_limit_s <= 0 || t < c.time_limit_s;
    pass = pass && in_time;
    all = all && pass;
    std::printf("criterion %d: %s  %s  cases=%zu failed=%zu excluded=%zu worst residual/tol=%.2e time=%.2fs",
                c.id, pass ? "PASS" : "FAIL", c.title.c_str(), n, fails, excluded, worst, t);
    if (c.time_limit_s > 0) std::printf(" (limit %.0fs)", c.time_limit_s);
    std::printf("\n");
    if (c.id == 10) {
      std::printf("  note: variant with phi^{(k+1/2,-1/2)} on the right-hand side has residual %.3e\n",
                  v::ode_shifted_rhs_residual());
    }
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
