#pragma once

// Reference computations used by the tests. They depend only on Eigen and
// deliberately avoid the library's own routines.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat sigma_y_yy() {
  Mat sy(2, 2);
  sy << 0, cplx(0, -1), cplx(0, 1), 0;
  Mat out = Mat::Zero(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = sy(i, j) * sy(k, l);
  return out;
}

inline Mat psd_sqrt(const Mat& rho) {
  Eigen::SelfAdjointEigenSolver<Mat> es(rho);
  Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * ev.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
}

/// Descending eigenvalues of sqrt(rho) rho~ sqrt(rho), a PSD matrix sharing
/// the spectrum of rho rho~.
inline std::vector<double> hermitian_route(const Mat& rho, const Mat& rho_tilde) {
  const Mat r = psd_sqrt(rho);
  Mat h = r * rho_tilde * r;
  h = 0.5 * (h + h.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(ev.rbegin(), ev.rend());
  return ev;
}

/// Two-qubit concurrence with the sigma_y ⊗ sigma_y spin flip.
inline double wootters(const Mat& rho) {
  const Mat yy = sigma_y_yy();
  const Mat flipped = yy * rho.conjugate() * yy;
  const auto ev = hermitian_route(rho, flipped);
  std::vector<double> l;
  for (int i = 0; i < 4; ++i) l.push_back(std::sqrt(std::max(0.0, ev[static_cast<std::size_t>(i)])));
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

/// Two-qubit concurrence from Wootters' decomposition route: with
/// rho = sum_i |v_i><v_i| (v_i = sqrt(mu_i) e_i from the eigendecomposition),
/// the lambdas are the singular values of T_ij = <v_i| sigma_y ⊗ sigma_y |v_j*>.
/// Eigenvalues mu_i below `floor` are treated as exact zeros.
inline double wootters_decomposition(const Mat& rho, double floor = 1e-14) {
  Eigen::SelfAdjointEigenSolver<Mat> es(rho);
  std::vector<Vec> v;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) > floor) v.push_back(std::sqrt(es.eigenvalues()(i)) * es.eigenvectors().col(i));
  const Mat yy = sigma_y_yy();
  const auto k = static_cast<Eigen::Index>(v.size());
  Mat t = Mat::Zero(4, 4);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j)
      t(i, j) = v[static_cast<std::size_t>(i)].dot(yy * v[static_cast<std::size_t>(j)].conjugate());
  Eigen::JacobiSVD<Mat> svd(t);
  const auto& l = svd.singularValues();
  return std::max(0.0, l(0) - l(1) - l(2) - l(3));
}

/// Sum over all ordered index quadruples of |a_{i1 j1} a_{i2 j2} - a_{i1 j2} a_{i2 j1}|^2
/// for a coefficient matrix a (rows: one side of a cut, columns: the other).
inline double ordered_minor_sum(const Mat& a) {
  double s = 0.0;
  for (Eigen::Index i1 = 0; i1 < a.rows(); ++i1)
    for (Eigen::Index i2 = 0; i2 < a.rows(); ++i2)
      for (Eigen::Index j1 = 0; j1 < a.cols(); ++j1)
        for (Eigen::Index j2 = 0; j2 < a.cols(); ++j2)
          s += std::norm(a(i1, j1) * a(i2, j2) - a(i1, j2) * a(i2, j1));
  return s;
}

/// Coefficient matrix of a pure state of `n` d-level parties across the cut
/// left|rest, with the left group's digits read in ascending party order.
inline Mat coefficient_matrix(const Vec& psi, int d, int n, const std::vector<int>& left) {
  std::vector<int> right;
  for (int k = 0; k < n; ++k)
    if (std::find(left.begin(), left.end(), k) == left.end()) right.push_back(k);
  const auto rows = static_cast<Eigen::Index>(std::pow(d, left.size()));
  const auto cols = static_cast<Eigen::Index>(std::pow(d, right.size()));
  Mat a = Mat::Zero(rows, cols);
  for (Eigen::Index idx = 0; idx < psi.size(); ++idx) {
    std::vector<int> digit(static_cast<std::size_t>(n));
    Eigen::Index rem = idx;
    for (int k = n - 1; k >= 0; --k) {
      digit[static_cast<std::size_t>(k)] = static_cast<int>(rem % d);
      rem /= d;
    }
    Eigen::Index r = 0, c = 0;
    for (int k : left) r = r * d + digit[static_cast<std::size_t>(k)];
    for (int k : right) c = c * d + digit[static_cast<std::size_t>(k)];
    a(r, c) = psi(idx);
  }
  return a;
}

}  // namespace oracle
