// Acceptance suite: runs every verification experiment at its pinned default
// configuration (master seed 20250825) and reports one verdict line per
// acceptance criterion. Exit status 0 iff every criterion passes.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "vardim/harness.hpp"

namespace {

vardim::Report run_experiment(const std::string& name) {
  vardim::ExperimentConfig cfg;
  cfg.experiment = name;
  return vardim::run(cfg);
}

// Verdict over the subset of report rows whose name matches the filter
// (empty filter: all rows).
bool rows_pass(const vardim::Report& rep, const std::vector<std::string>& needles) {
  bool ok = true;
  bool any = false;
  for (const auto& row : rep.rows) {
    bool matched = needles.empty();
    for (const auto& n : needles)
      if (row.name.find(n) != std::string::npos) matched = true;
    if (!matched) continue;
    any = true;
    ok = ok && row.pass;
    if (!row.pass)
      std::printf("    failing check: %s = %g (band: %s)\n", row.name.c_str(), row.value,
                  row.band.c_str());
  }
  return ok && any;
}

}  // namespace

int main() {
  int failures = 0;
  auto verdict = [&](int criterion, const std::string& what, bool pass) {
    std::printf("criterion %2d: %-66s %s\n", criterion, what.c_str(), pass ? "PASS" : "FAIL");
    std::fflush(stdout);
    if (!pass) ++failures;
  };

  {
    const vardim::Report rep = run_experiment("balance");
    verdict(1, "exact detailed balance, both kernel variants, k=3..6, <1s per scan",
            rows_pass(rep, {}));
  }
  {
    const vardim::Report rep = run_experiment("build");
    verdict(2, "darning-vertex structure and degree census, exact, k=3..8, <1s",
            rows_pass(rep, {}));
  }
  {
    const vardim::Report rep = run_experiment("geometry");
    verdict(3, "projection Lipschitz bound 9*2^-k over all plane edges, k=3..6, <10s",
            rows_pass(rep, {"lipschitz"}));
    verdict(4, "metric comparability: |x|_rho identity and stable C2 constant",
            rows_pass(rep, {"rho_norm", "metric_c2"}));
  }
  {
    const vardim::Report rep = run_experiment("generator");
    verdict(5, "generator convergence slope in [-1.3,-0.7], quadratic exactness, <30s",
            rows_pass(rep, {"slope", "sup_err", "max_abs_generator", "mbar_outside",
                            "quadratic_exact", "seconds"}));
    verdict(6, "quadratic variation bound 81(t-s) and mean-zero martingales (3 SE)",
            rows_pass(rep, {"qv_", "martingale_"}));
  }
  {
    const vardim::Report rep = run_experiment("occupation");
    verdict(7, "stationary occupation fractions match mbar (chi-square p > 0.01)",
            rows_pass(rep, {}));
  }
  {
    const vardim::Report rep = run_experiment("resurrection");
    verdict(8, "resurrected vs reflected marginals within 3 SE at t in {0.5,1,2}",
            rows_pass(rep, {}));
  }
  {
    const vardim::Report rep = run_experiment("variance");
    verdict(9, "rod variance/t = 1 (exact and MC 5%), plane/rod ratio 1/2",
            rows_pass(rep, {}));
  }
  {
    const vardim::Report rep = run_experiment("tightness");
    verdict(10, "P[w_rho > delta] decreasing in k; killed radial marginals Cauchy",
            rows_pass(rep, {}));
  }

  std::printf("%s: %d/10 criteria passed\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              10 - failures);
  return failures == 0 ? 0 : 1;
}
