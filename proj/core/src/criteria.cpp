#include "mpconc/criteria.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace mpconc {

double PptReport::min_eigenvalue() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& s : subsets) m = std::min(m, s.min_eigenvalue);
  return m;
}

PptReport ppt_check(const DensityMatrix& rho, double tol) {
  const int n = static_cast<int>(rho.dims().parties());
  PptReport report;
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    SubsetPpt s;
    for (int p = 0; p < n; ++p)
      if ((mask >> p) & 1u) s.subset.push_back(p);
    s.min_eigenvalue = hermitian_eigenvalues(partial_transpose(rho.matrix(), rho.dims(), s.subset)).back();
    s.positive = s.min_eigenvalue >= -tol;
    report.ppt = report.ppt && s.positive;
    report.subsets.push_back(std::move(s));
  }
  return report;
}

WitnessResult witness_expectation(const DensityMatrix& rho, const Matrix& w) {
  require_square(w, rho.dim(), "witness");
  if (hermiticity_defect(w) > 1e-10) throw InputError("witness operator is not Hermitian");
  WitnessResult r;
  r.value = (w * rho.matrix()).trace().real();
  r.entangled = r.value < 0.0;
  return r;
}

Matrix ghz_witness() { return 0.5 * Matrix::Identity(8, 8) - make_ghz(2, 3).projector(); }

CorrelationTensor::CorrelationTensor(int parties, std::vector<double> entries)
    : parties_(parties), t_(std::move(entries)) {
  if (parties < 1 || t_.size() != static_cast<std::size_t>(std::pow(3, parties) + 0.5))
    throw InputError("correlation tensor size does not match 3^N");
}

double CorrelationTensor::at(std::span<const int> axes) const {
  if (static_cast<int>(axes.size()) != parties_) throw InputError("correlation tensor index arity");
  std::size_t flat = 0;
  for (int a : axes) {
    if (a < 0 || a > 2) throw InputError("Pauli axis must be 0, 1 or 2");
    flat = flat * 3 + static_cast<std::size_t>(a);
  }
  return t_[flat];
}

RealMatrix CorrelationTensor::unfold(int mode) const {
  if (mode < 0 || mode >= parties_) throw InputError("unfolding mode out of range");
  const std::size_t cols = t_.size() / 3;
  RealMatrix m(3, static_cast<Eigen::Index>(cols));
  std::vector<int> axes(static_cast<std::size_t>(parties_));
  for (std::size_t flat = 0; flat < t_.size(); ++flat) {
    std::size_t rest = flat;
    for (int p = parties_; p-- > 0;) {
      axes[static_cast<std::size_t>(p)] = static_cast<int>(rest % 3);
      rest /= 3;
    }
    std::size_t col = 0;
    for (int p = 0; p < parties_; ++p)
      if (p != mode) col = col * 3 + static_cast<std::size_t>(axes[static_cast<std::size_t>(p)]);
    m(axes[static_cast<std::size_t>(mode)], static_cast<Eigen::Index>(col)) = t_[flat];
  }
  return m;
}

namespace {

const std::array<Matrix, 3>& paulis() {
  static const std::array<Matrix, 3> p = [] {
    const cplx i{0.0, 1.0};
    Matrix x(2, 2), y(2, 2), z(2, 2);
    x << 0.0, 1.0, 1.0, 0.0;
    y << 0.0, -i, i, 0.0;
    z << 1.0, 0.0, 0.0, -1.0;
    return std::array<Matrix, 3>{x, y, z};
  }();
  return p;
}

}  // namespace

CorrelationTensor correlation_tensor(const DensityMatrix& rho) {
  const Dims& dims = rho.dims();
  for (int d : dims)
    if (d != 2) throw InputError("the correlation tensor is defined for qubit systems only");
  const int n = static_cast<int>(dims.parties());
  const std::size_t count = static_cast<std::size_t>(std::pow(3, n) + 0.5);
  std::vector<double> t(count);
  std::vector<int> axes(static_cast<std::size_t>(n));
  for (std::size_t flat = 0; flat < count; ++flat) {
    std::size_t rest = flat;
    for (int p = n; p-- > 0;) {
      axes[static_cast<std::size_t>(p)] = static_cast<int>(rest % 3);
      rest /= 3;
    }
    Matrix op = paulis()[static_cast<std::size_t>(axes[0])];
    for (int p = 1; p < n; ++p) op = kron(op, paulis()[static_cast<std::size_t>(axes[static_cast<std::size_t>(p)])]);
    t[flat] = (rho.matrix() * op).trace().real();
  }
  return CorrelationTensor(n, std::move(t));
}

KfResult kf_criterion(const CorrelationTensor& t, double tol) {
  KfResult r;
  for (int mode = 0; mode < t.parties(); ++mode) {
    const auto sv = singular_values(t.unfold(mode));
    double s = 0.0;
    for (double x : sv) s += x;
    r.mode_norms.push_back(s);
    if (s > r.norm) {
      r.norm = s;
      r.mode = mode;
    }
  }
  r.entangled = r.norm > 1.0 + tol;
  return r;
}

}  // namespace mpconc
