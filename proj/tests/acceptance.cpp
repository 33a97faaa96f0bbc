// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "mpconc/mpconc.hpp"
#include "oracles.hpp"

using namespace mpconc;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

int failures = 0;

void run(int id, const char* name, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_budget = secs < budget_s;
  const bool ok = o.pass && in_budget;
  if (!ok) ++failures;
  std::printf("[%s] AC%d %s: %s (%.2fs, budget %.0fs%s)\n", ok ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs,
              budget_s, in_budget ? "" : ", OVER BUDGET");
  std::fflush(stdout);
}

Outcome scan_near(Family f, Detector d, double target) {
  const ScanResult r = threshold_scan(f, d, 1e-4);
  const double err = std::abs(r.p_star - target);
  return {err <= 1e-3, fmt("p* = %.6f, target %.5f, |diff| = %.2e", r.p_star, target, err)};
}

}  // namespace

int main() {
  run(1, "wmix tau3 threshold", 10, [] { return scan_near(Family::wmix, Detector::tau3, 0.2727); });
  run(2, "ghzmix tau3 threshold", 10, [] { return scan_near(Family::ghzmix, Detector::tau3, 0.200); });
  run(3, "Ky Fan thresholds", 5, [] {
    const Outcome g = scan_near(Family::ghzmix, Detector::kf, 0.35355);
    const Outcome w = scan_near(Family::wmix, Detector::kf, 0.3068);
    return Outcome{g.pass && w.pass, "ghzmix " + g.detail + "; wmix " + w.detail};
  });
  run(4, "pure-state identity", 60, [] {
    const VerifyResult q = verify_suite(Property::pure_identity, 200, 7, 2);
    const VerifyResult t = verify_suite(Property::pure_identity, 50, 7, 3);
    return Outcome{q.pass && t.pass && q.samples_checked == 200 && t.samples_checked == 50,
                   fmt("max |tau3 - C^2| qubits %.2e (200), qutrits %.2e (50)", q.max_violation, t.max_violation)};
  });
  run(5, "reduction inequality", 120, [] {
    const VerifyResult r = verify_suite(Property::thm3, 500, 42);
    const DensityMatrix w(make_w(3));
    const auto red = tau2_of_reductions(w);
    const double lhs = red[0] + red[1] + red[2];
    const double rhs = 3.0 * tau_bound(w, BoundMethod::tau3).tau;
    const bool eq = std::abs(lhs - 4.0 / 3.0) <= 1e-9 && std::abs(rhs - 4.0 / 3.0) <= 1e-9;
    return Outcome{r.pass && r.samples_checked == 500 && eq,
                   fmt("max violation %.2e over 500; W: lhs %.12f, rhs %.12f", r.max_violation, lhs, rhs)};
  });
  run(6, "separable and PPT states give zero", 120, [] {
    const VerifyResult s = verify_suite(Property::separable_zero, 300, 1);
    const VerifyResult p = verify_suite(Property::ppt_zero, 300, 1);
    return Outcome{s.pass && s.samples_checked == 300 && p.pass && p.samples_checked > 0,
                   fmt("separable max tau3 %.2e (300); PPT-passing max tau3 %.2e (%.0f of 300 sampled)",
                       s.max_violation, p.max_violation, p.samples_checked)};
  });
  run(7, "two-qubit Wootters equivalence", 30, [] {
    Rng rng(2718);
    double worst = 0.0;
    int positive = 0;
    for (int t = 0; t < 500; ++t) {
      const DensityMatrix rho = random_mixed(Dims{2, 2}, rng, 1 + t % 4);
      const double c = oracle::wootters_decomposition(rho.matrix());
      if (c > 0.0) ++positive;
      worst = std::max(worst, std::abs(std::sqrt(tau_bound(rho, BoundMethod::tau2).tau) - c));
    }
    return Outcome{worst <= 1e-8, fmt("max |sqrt(tau2) - C_W| = %.2e over 500 (%.0f entangled)", worst, positive)};
  });
  run(8, "rank-4 contract", 60, [] {
    const VerifyResult r = verify_suite(Property::rank4, 200, 5);
    return Outcome{r.pass && r.samples_checked == 200 && total_pair_count(Dims::uniform(2, 3)) == 18,
                   fmt("max fifth eigenvalue %.2e over 200 states x 18 pairs", r.max_violation)};
  });
  run(9, "calibration stability", 60, [] {
    const Calibration c2 = calibrate(100, 11, 2);
    const Calibration c3 = calibrate(100, 11, 3);
    const double diff = std::abs(c2.kappa - c3.kappa);
    return Outcome{c2.spread < 1e-8 && c3.spread < 1e-8 && diff <= 1e-8,
                   fmt("kappa(d=2) = %.12f spread %.1e; kappa(d=3) = %.12f spread %.1e", c2.kappa, c2.spread,
                       c3.kappa, c3.spread)};
  });
  std::printf("%d of 9 acceptance criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
