#include "mpconc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "parallel.hpp"

namespace mpconc {

LambdaSpectrum lambda_spectrum(const Matrix& rho, const Matrix& s, const SpectrumOptions& opts) {
  if (rho.rows() != s.rows() || rho.cols() != s.cols())
    throw InputError("lambda_spectrum: state and operator dimensions differ");
  // S is real, so S* = S and rho~ = S rho* S.
  const Matrix rho_tilde = s * rho.conjugate() * s;
  const RealSpectrum spec = real_spectrum(rho * rho_tilde, opts.clamp_tol);

  LambdaSpectrum out;
  for (std::size_t i = 0; i < 4 && i < spec.values.size(); ++i) out.lambdas[i] = std::sqrt(spec.values[i]);
  if (spec.raw.size() > 4) out.fifth_eigenvalue = spec.raw[4];
  out.max_imag = spec.max_imag;
  if (out.fifth_eigenvalue > opts.rank_tol) {
    std::ostringstream os;
    os << "rank contract violated: fifth eigenvalue of rho*rho~ is " << out.fifth_eigenvalue;
    throw SpectralContractError(os.str());
  }
  return out;
}

LambdaSpectrum lambda_spectrum(const DensityMatrix& rho, const SOperator& s, const SpectrumOptions& opts) {
  return lambda_spectrum(rho.matrix(), s.matrix, opts);
}

double pair_concurrence(const LambdaSpectrum& spec) {
  const auto& l = spec.lambdas;
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

double pure_pair_amplitude(const PureState& psi, const Matrix& s) {
  const Vector conj = psi.amplitudes().conjugate();
  return std::abs((conj.transpose() * (s * conj)).value());
}

PureConcurrence pure_concurrence(const PureState& psi) {
  const Dims& dims = psi.dims();
  const int n = static_cast<int>(dims.parties());
  if (n < 2) throw InputError("concurrence needs at least two parties");
  const DensityMatrix rho(psi);

  double linear_entropy_sum = 0.0;
  for (const auto& bip : enumerate_bipartitions(n)) linear_entropy_sum += 1.0 - rho.reduce(bip.left).purity();

  if (!dims.is_uniform()) return {std::sqrt(std::max(0.0, 2.0 * linear_entropy_sum)), false};

  const double d = dims[0];
  const double m = std::ldexp(1.0, n - 1) - 1.0;
  const double c2 = n == 2 ? d / (d - 1.0) * linear_entropy_sum
                           : d / (2.0 * m * (d - 1.0)) * linear_entropy_sum;
  return {std::sqrt(std::max(0.0, c2)), true};
}

std::string_view to_string(BoundMethod m) {
  switch (m) {
    case BoundMethod::tau2: return "tau2";
    case BoundMethod::tau3: return "tau3";
    case BoundMethod::taun: return "taun";
  }
  return "?";
}

std::optional<BoundMethod> parse_bound_method(std::string_view name) {
  for (BoundMethod m : {BoundMethod::tau2, BoundMethod::tau3, BoundMethod::taun})
    if (to_string(m) == name) return m;
  return std::nullopt;
}

double pair_weight(std::size_t parties, double kappa) { return parties == 2 ? 2.0 * kappa : kappa; }

double pairwise_sum(std::span<const double> values) {
  if (values.empty()) return 0.0;
  if (values.size() <= 4) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double BoundReport::recompute() const {
  std::vector<double> sq;
  sq.reserve(records.size());
  for (const auto& r : records) sq.push_back(r.concurrence * r.concurrence);
  return prefactor * weight * pairwise_sum(sq);
}

BoundReport tau_bound(const DensityMatrix& rho, BoundMethod method, const BoundOptions& opts) {
  const Dims& dims = rho.dims();
  const std::size_t n = dims.parties();
  if (n < 2) throw InputError("the bound needs at least two parties");
  if (method == BoundMethod::tau2 && n != 2) throw InputError("tau2 needs a two-party state");
  if (method == BoundMethod::tau3 && n != 3) throw InputError("tau3 needs a three-party state");

  BoundReport report;
  report.method = method;
  report.dims = dims;
  report.kappa = opts.kappa;
  report.normalized = dims.is_uniform();
  if (report.normalized) {
    const double d = dims[0];
    const double m = std::ldexp(1.0, static_cast<int>(n) - 1) - 1.0;
    report.prefactor = d / (2.0 * m * (d - 1.0));
    report.weight = pair_weight(n, opts.kappa);
  }

  const auto bips = enumerate_bipartitions(static_cast<int>(n));
  const auto keys = enumerate_pairs(dims);
  report.records.resize(keys.size());
  detail::parallel_for(keys.size(), opts.threads, [&](std::size_t i) {
    const auto& key = keys[i];
    const SOperator s =
        embed_pair_operator(bips[static_cast<std::size_t>(key.bipartition)], key.left_gen, key.right_gen, dims);
    PairRecord& rec = report.records[i];
    rec.bipartition = s.bipartition;
    rec.left_gen = s.left_gen;
    rec.right_gen = s.right_gen;
    rec.spectrum = lambda_spectrum(rho, s, opts.spectrum);
    rec.concurrence = pair_concurrence(rec.spectrum);
  });
  report.tau = report.recompute();
  return report;
}

namespace {

double purity_of(const DensityMatrix& rho, std::initializer_list<int> keep) {
  const std::vector<int> k(keep);
  return rho.reduce(k).purity();
}

}  // namespace

Calibration calibrate(int trials, std::uint64_t seed, int local_dim) {
  if (trials < 1) throw InputError("calibration needs at least one trial");
  const Dims dims = Dims::uniform(local_dim, 3);
  Rng rng(seed);
  std::vector<double> ratios;
  ratios.reserve(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) {
    const PureState psi = haar_random_pure(dims, rng);
    const DensityMatrix rho(psi);
    const double target = 3.0 - purity_of(rho, {0}) - purity_of(rho, {1}) - purity_of(rho, {2});
    std::vector<double> terms;
    for_each_pair_operator(dims, [&](const SOperator& s) {
      const double a = pure_pair_amplitude(psi, s.matrix);
      terms.push_back(a * a);
    });
    ratios.push_back(target / pairwise_sum(terms));
  }
  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  Calibration c;
  c.trials = trials;
  c.local_dim = local_dim;
  c.kappa = pairwise_sum(ratios) / static_cast<double>(ratios.size());
  c.spread = (*hi - *lo) / c.kappa;
  if (!(c.spread < 1e-8)) {
    std::ostringstream os;
    os << "calibration ratio is not constant across states (relative spread " << c.spread
       << "); the generator enumeration is inconsistent";
    throw NormalizationError(os.str());
  }
  return c;
}

double calibration_constant(int trials, std::uint64_t seed, int local_dim) {
  return calibrate(trials, seed, local_dim).kappa;
}

double pair_trace_sum(const DensityMatrix& rho2) {
  if (rho2.dims().parties() != 2) throw InputError("pair_trace_sum needs a two-party state");
  const Matrix& rho = rho2.matrix();
  std::vector<double> terms;
  for_each_pair_operator(rho2.dims(), [&](const SOperator& s) {
    terms.push_back((rho * s.matrix * rho.conjugate() * s.matrix).trace().real());
  });
  return pairwise_sum(terms);
}

std::array<double, 3> tau2_of_reductions(const DensityMatrix& rho, const BoundOptions& opts) {
  if (rho.dims().parties() != 3) throw InputError("two-party reductions need a tripartite state");
  const std::array<std::array<int, 2>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  std::array<double, 3> out{};
  for (std::size_t i = 0; i < 3; ++i)
    out[i] = tau_bound(rho.reduce(pairs[i]), BoundMethod::tau2, opts).tau;
  return out;
}

}  // namespace mpconc
