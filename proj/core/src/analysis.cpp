#include "mpconc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#ifndef MPCONC_VERSION
#define MPCONC_VERSION "0.0.0"
#endif

namespace mpconc {

std::string_view version() { return MPCONC_VERSION; }

std::string_view to_string(Detector d) {
  switch (d) {
    case Detector::tau3: return "tau3";
    case Detector::kf: return "kf";
    case Detector::witness: return "witness";
  }
  return "?";
}

std::optional<Detector> parse_detector(std::string_view name) {
  for (Detector d : {Detector::tau3, Detector::kf, Detector::witness})
    if (to_string(d) == name) return d;
  return std::nullopt;
}

DetectorReading evaluate_detector(Detector detector, const DensityMatrix& rho, const Matrix* witness) {
  switch (detector) {
    case Detector::tau3: {
      const double tau = tau_bound(rho, BoundMethod::tau3).tau;
      return {tau, tau > kBoundDetectionTolerance};
    }
    case Detector::kf: {
      const KfResult kf = kf_criterion(correlation_tensor(rho));
      return {kf.norm, kf.entangled};
    }
    case Detector::witness: {
      const WitnessResult w = witness ? witness_expectation(rho, *witness)
                                      : witness_expectation(rho, ghz_witness());
      return {w.value, w.entangled};
    }
  }
  throw InputError("unknown detector");
}

// ---------------------------------------------------------------------------

namespace {

std::string prescan_table(const std::vector<ScanEvaluation>& rows) {
  std::ostringstream os;
  os << "    p      value            verdict\n";
  for (const auto& r : rows)
    os << "  " << std::fixed << std::setprecision(2) << r.p << "  " << std::scientific
       << std::setprecision(6) << std::setw(14) << r.value << "  "
       << (r.entangled ? "entangled" : "-") << '\n';
  return os.str();
}

}  // namespace

ScanResult threshold_scan(Family family, Detector detector, double tol, const Matrix* witness) {
  if (!(tol > 0.0 && tol < 1.0)) throw InputError("scan tolerance must lie in (0, 1)");
  if (family != Family::wmix && family != Family::ghzmix)
    throw InputError("threshold scans are defined for the wmix and ghzmix families");

  ScanResult result;
  result.family = family;
  result.detector = detector;
  result.tol = tol;

  auto eval = [&](double p) {
    const DetectorReading r = evaluate_detector(detector, StateFamily{family, p, Dims::uniform(2, 3)}.state(), witness);
    result.evaluations.push_back({p, r.value, r.entangled});
    return r.entangled;
  };

  constexpr int kPrescanPoints = 11;
  std::vector<bool> verdicts;
  for (int i = 0; i < kPrescanPoints; ++i) verdicts.push_back(eval(i / 10.0));

  const auto first_true = std::find(verdicts.begin(), verdicts.end(), true);
  const bool monotone = std::all_of(first_true, verdicts.end(), [](bool v) { return v; });
  if (!monotone)
    throw ScanError("detector verdict is not monotone in p; pre-scan:\n" + prescan_table(result.evaluations));
  if (first_true == verdicts.end() || first_true == verdicts.begin())
    throw ScanError("detector verdict does not change sign on [0, 1]; pre-scan:\n" +
                    prescan_table(result.evaluations));

  const auto k = static_cast<int>(first_true - verdicts.begin());
  double lo = (k - 1) / 10.0;
  double hi = k / 10.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (eval(mid) ? hi : lo) = mid;
    ++result.iterations;
  }
  result.lo = lo;
  result.hi = hi;
  result.width = hi - lo;
  result.p_star = 0.5 * (lo + hi);
  result.p_star_value =
      evaluate_detector(detector, StateFamily{family, result.p_star, Dims::uniform(2, 3)}.state(), witness).value;
  return result;
}

// ---------------------------------------------------------------------------

std::string_view to_string(Property p) {
  switch (p) {
    case Property::thm3: return "thm3";
    case Property::pure_identity: return "pure-identity";
    case Property::separable_zero: return "separable-zero";
    case Property::ppt_zero: return "ppt-zero";
    case Property::ckw_identity: return "ckw-identity";
    case Property::rank4: return "rank4";
  }
  return "?";
}

std::optional<Property> parse_property(std::string_view name) {
  for (Property p : {Property::thm3, Property::pure_identity, Property::separable_zero, Property::ppt_zero,
                     Property::ckw_identity, Property::rank4})
    if (to_string(p) == name) return p;
  return std::nullopt;
}

double property_tolerance(Property p) { return p == Property::rank4 ? 1e-8 : 1e-9; }

namespace {

double purity(const DensityMatrix& rho, int party) {
  const std::array<int, 1> keep{party};
  return rho.reduce(keep).purity();
}

double square(double x) { return x * x; }

}  // namespace

VerifyResult verify_suite(Property property, int trials, std::uint64_t seed, int local_dim) {
  if (trials < 1) throw InputError("verify needs at least one trial");
  const Dims dims = Dims::uniform(local_dim, 3);
  Rng rng(seed);

  VerifyResult out;
  out.property = property;
  out.trials = trials;
  out.seed = seed;
  out.local_dim = local_dim;
  out.tolerance = property_tolerance(property);

  auto note = [&](double violation) {
    out.max_violation = std::max(out.max_violation, violation);
    ++out.samples_checked;
  };

  for (int t = 0; t < trials; ++t) {
    switch (property) {
      case Property::thm3: {
        const DensityMatrix rho(haar_random_pure(dims, rng));
        const auto r = tau2_of_reductions(rho);
        note(std::max(0.0, r[0] + r[1] + r[2] - 3.0 * tau_bound(rho, BoundMethod::tau3).tau));
        break;
      }
      case Property::pure_identity: {
        const PureState psi = haar_random_pure(dims, rng);
        note(std::abs(tau_bound(DensityMatrix(psi), BoundMethod::tau3).tau - square(pure_concurrence(psi).value)));
        break;
      }
      case Property::separable_zero:
        note(tau_bound(random_separable(dims, rng), BoundMethod::tau3).tau);
        break;
      case Property::ppt_zero: {
        const DensityMatrix base = random_mixed(dims, rng);
        const double q = rng.uniform();
        const int dim = dims.total();
        const DensityMatrix rho((1.0 - q) / dim * Matrix::Identity(dim, dim) + q * base.matrix(), dims);
        if (ppt_check(rho).ppt) note(tau_bound(rho, BoundMethod::tau3).tau);
        break;
      }
      case Property::ckw_identity: {
        const DensityMatrix rho(haar_random_pure(dims, rng));
        const std::array<double, 3> pur{purity(rho, 0), purity(rho, 1), purity(rho, 2)};
        // (i, j, k): the reduction on {i, j} and the remaining party k.
        const std::array<std::array<int, 3>, 3> triples{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
        double worst = 0.0;
        for (const auto& [i, j, k] : triples) {
          const std::array<int, 2> keep{i, j};
          const double lhs = pair_weight(2, kDefaultKappa) * pair_trace_sum(rho.reduce(keep));
          const double rhs = 1.0 - pur[static_cast<std::size_t>(i)] - pur[static_cast<std::size_t>(j)] +
                             pur[static_cast<std::size_t>(k)];
          worst = std::max(worst, std::abs(lhs - rhs));
        }
        note(worst);
        break;
      }
      case Property::rank4: {
        const DensityMatrix rho = random_mixed(dims, rng);
        BoundOptions opts;
        opts.spectrum.rank_tol = std::numeric_limits<double>::infinity();
        double worst = 0.0;
        for (const auto& rec : tau_bound(rho, BoundMethod::tau3, opts).records)
          worst = std::max(worst, rec.spectrum.fifth_eigenvalue);
        note(worst);
        break;
      }
    }
  }
  out.pass = out.samples_checked > 0 && out.max_violation <= out.tolerance;
  return out;
}

// ---------------------------------------------------------------------------

CriteriaReport criteria_compare(const DensityMatrix& rho, const Matrix* witness) {
  CriteriaReport r;
  const std::size_t n = rho.dims().parties();
  r.bound = tau_bound(rho, n == 3 ? BoundMethod::tau3 : n == 2 ? BoundMethod::tau2 : BoundMethod::taun);
  r.bound_entangled = r.bound.tau > kBoundDetectionTolerance;
  r.ppt = ppt_check(rho);
  if (witness) r.witness = witness_expectation(rho, *witness);
  const bool qubits = std::all_of(rho.dims().begin(), rho.dims().end(), [](int d) { return d == 2; });
  if (qubits) r.kf = kf_criterion(correlation_tensor(rho));
  return r;
}

std::string render_table(const CriteriaReport& r) {
  std::ostringstream os;
  auto row = [&](std::string_view name, double value, std::string_view verdict) {
    os << std::left << std::setw(12) << name << std::right << std::setw(16) << std::setprecision(8)
       << std::defaultfloat << value << "  " << verdict << '\n';
  };
  os << std::left << std::setw(12) << "detector" << std::right << std::setw(16) << "value"
     << "  verdict\n";
  row(to_string(r.bound.method), r.bound.tau, r.bound_entangled ? "entangled" : "not detected");
  row("ppt(min ev)", r.ppt.min_eigenvalue(), r.ppt.ppt ? "PPT (pass)" : "NPT: entangled");
  if (r.witness) row("witness", r.witness->value, r.witness->entangled ? "entangled" : "not detected");
  if (r.kf) row("kf", r.kf->norm, r.kf->entangled ? "entangled" : "not detected");
  return os.str();
}

DistillReport distill_flag(const PureState& psi) {
  if (psi.dims().parties() != 3) throw InputError("distillability flag needs a tripartite pure state");
  DistillReport r;
  r.tau2 = tau2_of_reductions(DensityMatrix(psi));
  const auto positive = std::count_if(r.tau2.begin(), r.tau2.end(), [](double t) { return t > kBoundDetectionTolerance; });
  r.flag = positive >= 2;
  return r;
}

}  // namespace mpconc
