#include "mpconc/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace mpconc {

PureState::PureState(Vector amplitudes, Dims dims, double norm_tol)
    : amps_(std::move(amplitudes)), dims_(std::move(dims)) {
  if (amps_.size() != dims_.total()) {
    std::ostringstream os;
    os << "pure state has " << amps_.size() << " amplitudes but dims " << dims_.to_string()
       << " need " << dims_.total();
    throw InputError(os.str());
  }
  const double norm2 = amps_.squaredNorm();
  if (std::abs(norm2 - 1.0) > norm_tol) {
    std::ostringstream os;
    os << "pure state is not normalized: |psi|^2 = " << norm2;
    throw InputError(os.str());
  }
}

Matrix PureState::projector() const { return amps_ * amps_.adjoint(); }

DensityMatrix::DensityMatrix(Matrix m, Dims dims, DensityTolerance tol)
    : m_(std::move(m)), dims_(std::move(dims)) {
  require_square(m_, dims_.total(), "density matrix");
  const double herm = hermiticity_defect(m_);
  if (herm > tol.hermitian) {
    std::ostringstream os;
    os << "density matrix is not Hermitian (max |M - M^dagger| = " << herm << ")";
    throw InputError(os.str());
  }
  // Symmetrize away rounding.
  m_ = 0.5 * (m_ + m_.adjoint()).eval();
  const double tr = m_.trace().real();
  if (std::abs(tr - 1.0) > tol.trace) {
    std::ostringstream os;
    os << "density matrix trace is " << tr << ", expected 1";
    throw InputError(os.str());
  }
  const double min_ev = hermitian_eigenvalues(m_).back();
  if (min_ev < -tol.min_eigenvalue) {
    std::ostringstream os;
    os << "density matrix is not positive semidefinite (minimum eigenvalue " << min_ev << ")";
    throw InputError(os.str());
  }
}

DensityMatrix::DensityMatrix(const PureState& psi) : m_(psi.projector()), dims_(psi.dims()) {}

DensityMatrix DensityMatrix::reduce(std::span<const int> keep) const {
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  return DensityMatrix(partial_trace(m_, dims_, kept), dims_.select(kept),
                       {1e-9, 1e-9, 1e-9});
}

double DensityMatrix::purity() const { return (m_ * m_).trace().real(); }

PureState make_ghz(int d, int n) {
  if (d < 2 || n < 2) throw InputError("make_ghz needs d >= 2 and n >= 2");
  const Dims dims = Dims::uniform(d, n);
  Vector amps = Vector::Zero(dims.total());
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (int i = 0; i < d; ++i) {
    std::fill(digits.begin(), digits.end(), i);
    amps(encode_index(digits, dims)) = 1.0 / std::sqrt(static_cast<double>(d));
  }
  return PureState(std::move(amps), dims);
}

PureState make_w(int n) {
  if (n < 2) throw InputError("make_w needs n >= 2");
  const Dims dims = Dims::uniform(2, n);
  Vector amps = Vector::Zero(dims.total());
  for (int k = 0; k < n; ++k) amps(1 << k) = 1.0 / std::sqrt(static_cast<double>(n));
  return PureState(std::move(amps), dims);
}

PureState make_basis_state(std::span<const int> digits, const Dims& dims) {
  if (digits.size() != dims.parties()) throw InputError("basis state digit count mismatch");
  for (std::size_t k = 0; k < digits.size(); ++k)
    if (digits[k] < 0 || digits[k] >= dims[k]) throw InputError("basis state digit out of range");
  Vector amps = Vector::Zero(dims.total());
  amps(encode_index(digits, dims)) = 1.0;
  return PureState(std::move(amps), dims);
}

DensityMatrix isotropic_mix(const PureState& psi, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("mixing parameter p must lie in [0, 1]");
  const int dim = psi.dims().total();
  Matrix m = ((1.0 - p) / dim) * Matrix::Identity(dim, dim) + p * psi.projector();
  return DensityMatrix(std::move(m), psi.dims());
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::ghz: return "ghz";
    case Family::w: return "w";
    case Family::wmix: return "wmix";
    case Family::ghzmix: return "ghzmix";
    case Family::product: return "product";
    case Family::bell: return "bell";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::ghz, Family::w, Family::wmix, Family::ghzmix, Family::product, Family::bell})
    if (to_string(f) == name) return f;
  return std::nullopt;
}

void StateFamily::validate() const {
  if (family == Family::wmix || family == Family::ghzmix) {
    if (dims != Dims::uniform(2, 3))
      throw InputError(std::string(to_string(family)) + " is defined on three qubits only");
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("mixing parameter p must lie in [0, 1]");
  }
  if ((family == Family::ghz || family == Family::w) && !dims.is_uniform())
    throw InputError("ghz/w families need equal local dimensions");
  if (family == Family::w && dims[0] != 2) throw InputError("w family is defined on qubits");
  if (family == Family::bell && dims.parties() != 2) throw InputError("bell family is bipartite");
}

DensityMatrix StateFamily::state() const {
  validate();
  const int n = static_cast<int>(dims.parties());
  switch (family) {
    case Family::ghz: return DensityMatrix(make_ghz(dims[0], n));
    case Family::w: return DensityMatrix(make_w(n));
    case Family::wmix: return isotropic_mix(make_w(3), p);
    case Family::ghzmix: return isotropic_mix(make_ghz(2, 3), p);
    case Family::product: {
      std::vector<int> zeros(dims.parties(), 0);
      return DensityMatrix(make_basis_state(zeros, dims));
    }
    case Family::bell:
      if (!dims.is_uniform()) throw InputError("bell family needs equal local dimensions");
      return DensityMatrix(make_ghz(dims[0], 2));
  }
  throw InputError("unknown family");
}

// ---------------------------------------------------------------------------

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

double Rng::uniform() {
  // 53 random mantissa bits.
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (spare_) {
    const double z = *spare_;
    spare_.reset();
    return z;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  return r * std::cos(theta);
}

cplx Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

double Rng::exponential() {
  double u = uniform();
  while (u <= 0.0) u = uniform();
  return -std::log(u);
}

PureState haar_random_pure(const Dims& dims, Rng& rng) {
  Vector v(dims.total());
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = rng.complex_normal();
  v /= v.norm();
  return PureState(std::move(v), dims);
}

PureState haar_random_pure(const Dims& dims, std::uint64_t seed) {
  Rng rng(seed);
  return haar_random_pure(dims, rng);
}

namespace {

std::vector<double> dirichlet_weights(Rng& rng, int k) {
  std::vector<double> w(static_cast<std::size_t>(k));
  double sum = 0.0;
  for (double& x : w) sum += (x = rng.exponential());
  for (double& x : w) x /= sum;
  return w;
}

}  // namespace

DensityMatrix random_mixed(const Dims& dims, Rng& rng, int k) {
  const int dim = dims.total();
  if (k <= 0) k = dim;
  const auto w = dirichlet_weights(rng, k);
  Matrix m = Matrix::Zero(dim, dim);
  for (int i = 0; i < k; ++i) {
    const PureState phi = haar_random_pure(dims, rng);
    m += w[static_cast<std::size_t>(i)] * phi.projector();
  }
  return DensityMatrix(std::move(m), dims, {1e-10, 1e-10, 1e-10});
}

DensityMatrix random_separable(const Dims& dims, Rng& rng, int k) {
  const int dim = dims.total();
  if (k <= 0) k = dim;
  const auto w = dirichlet_weights(rng, k);
  Matrix m = Matrix::Zero(dim, dim);
  for (int i = 0; i < k; ++i) {
    Vector v = Vector::Ones(1);
    for (int d : dims) v = kron(v, haar_random_pure(Dims{d}, rng).amplitudes());
    m += w[static_cast<std::size_t>(i)] * (v * v.adjoint());
  }
  return DensityMatrix(std::move(m), dims, {1e-10, 1e-10, 1e-10});
}

DensityMatrix as_density(const AnyState& state) {
  return std::visit(
      [](const auto& s) -> DensityMatrix {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PureState>)
          return DensityMatrix(s);
        else
          return s;
      },
      state);
}

}  // namespace mpconc
