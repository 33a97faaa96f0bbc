#include "mpconc/tensor.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

namespace mpconc {

Dims::Dims(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw InputError("dimension list is empty");
  for (int d : dims_) {
    if (d < 2) throw InputError("local dimension must be >= 2, got " + std::to_string(d));
  }
}

Dims Dims::uniform(int d, int n) {
  if (n < 1) throw InputError("party count must be >= 1");
  return Dims(std::vector<int>(static_cast<std::size_t>(n), d));
}

int Dims::total() const {
  return std::accumulate(dims_.begin(), dims_.end(), 1, std::multiplies<>());
}

int Dims::total(std::span<const int> parties) const {
  int t = 1;
  for (int p : parties) t *= dims_.at(static_cast<std::size_t>(p));
  return t;
}

bool Dims::is_uniform() const {
  return std::all_of(dims_.begin(), dims_.end(), [&](int d) { return d == dims_.front(); });
}

Dims Dims::select(std::span<const int> parties) const {
  std::vector<int> out;
  out.reserve(parties.size());
  for (int p : parties) out.push_back(dims_.at(static_cast<std::size_t>(p)));
  return Dims(std::move(out));
}

std::string Dims::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < dims_.size(); ++i) os << (i ? "," : "") << dims_[i];
  return os.str();
}

std::vector<int> decode_index(int index, const Dims& dims) {
  std::vector<int> digits(dims.parties());
  for (std::size_t k = dims.parties(); k-- > 0;) {
    digits[k] = index % dims[k];
    index /= dims[k];
  }
  return digits;
}

int encode_index(std::span<const int> digits, const Dims& dims) {
  int index = 0;
  for (std::size_t k = 0; k < dims.parties(); ++k) index = index * dims[k] + digits[k];
  return index;
}

void require_square(const Matrix& m, int dim, const char* what) {
  if (m.rows() != dim || m.cols() != dim) {
    std::ostringstream os;
    os << what << ": expected " << dim << "x" << dim << " matrix, got " << m.rows() << "x"
       << m.cols();
    throw InputError(os.str());
  }
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

namespace {

void check_permutation(std::span<const int> perm, std::size_t n) {
  if (perm.size() != n) throw InputError("permutation length does not match party count");
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= n || seen[static_cast<std::size_t>(p)])
      throw InputError("not a permutation of the parties");
    seen[static_cast<std::size_t>(p)] = true;
  }
}

void check_subset(std::span<const int> subset, std::size_t n) {
  std::vector<bool> seen(n, false);
  for (int p : subset) {
    if (p < 0 || static_cast<std::size_t>(p) >= n || seen[static_cast<std::size_t>(p)])
      throw InputError("party subset has out-of-range or repeated entries");
    seen[static_cast<std::size_t>(p)] = true;
  }
}

// new_index[old] for the permutation convention of permute_subsystems.
std::vector<int> permuted_indices(const Dims& dims, std::span<const int> perm) {
  const Dims out_dims = dims.select(perm);
  const int total = dims.total();
  std::vector<int> map(static_cast<std::size_t>(total));
  std::vector<int> moved(dims.parties());
  for (int i = 0; i < total; ++i) {
    const auto digits = decode_index(i, dims);
    for (std::size_t k = 0; k < perm.size(); ++k) moved[k] = digits[static_cast<std::size_t>(perm[k])];
    map[static_cast<std::size_t>(i)] = encode_index(moved, out_dims);
  }
  return map;
}

}  // namespace

std::vector<int> inverse_permutation(std::span<const int> perm) {
  check_permutation(perm, perm.size());
  std::vector<int> inv(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) inv[static_cast<std::size_t>(perm[k])] = static_cast<int>(k);
  return inv;
}

Matrix permute_subsystems(const Matrix& m, const Dims& dims, std::span<const int> perm) {
  require_square(m, dims.total(), "permute_subsystems");
  check_permutation(perm, dims.parties());
  const auto map = permuted_indices(dims, perm);
  Matrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)]) = m(i, j);
  return out;
}

Vector permute_subsystems(const Vector& v, const Dims& dims, std::span<const int> perm) {
  if (v.size() != dims.total()) throw InputError("permute_subsystems: vector length mismatch");
  check_permutation(perm, dims.parties());
  const auto map = permuted_indices(dims, perm);
  Vector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(map[static_cast<std::size_t>(i)]) = v(i);
  return out;
}

Matrix partial_trace(const Matrix& rho, const Dims& dims, std::span<const int> keep) {
  require_square(rho, dims.total(), "partial_trace");
  if (keep.empty()) throw InputError("partial_trace: keep set is empty");
  check_subset(keep, dims.parties());

  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  std::vector<int> traced;
  for (int p = 0; p < static_cast<int>(dims.parties()); ++p)
    if (!std::binary_search(kept.begin(), kept.end(), p)) traced.push_back(p);
  if (traced.empty()) return rho;

  const Dims kept_dims = dims.select(kept);
  const Dims traced_dims = dims.select(traced);
  const int total = dims.total();
  std::vector<int> kept_index(static_cast<std::size_t>(total)), traced_index(static_cast<std::size_t>(total));
  std::vector<int> kd(kept.size()), td(traced.size());
  for (int i = 0; i < total; ++i) {
    const auto digits = decode_index(i, dims);
    for (std::size_t k = 0; k < kept.size(); ++k) kd[k] = digits[static_cast<std::size_t>(kept[k])];
    for (std::size_t k = 0; k < traced.size(); ++k) td[k] = digits[static_cast<std::size_t>(traced[k])];
    kept_index[static_cast<std::size_t>(i)] = encode_index(kd, kept_dims);
    traced_index[static_cast<std::size_t>(i)] = encode_index(td, traced_dims);
  }

  const int out_dim = kept_dims.total();
  Matrix out = Matrix::Zero(out_dim, out_dim);
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < total; ++j)
      if (traced_index[static_cast<std::size_t>(i)] == traced_index[static_cast<std::size_t>(j)])
        out(kept_index[static_cast<std::size_t>(i)], kept_index[static_cast<std::size_t>(j)]) += rho(i, j);
  return out;
}

Matrix partial_transpose(const Matrix& rho, const Dims& dims, std::span<const int> subset) {
  require_square(rho, dims.total(), "partial_transpose");
  check_subset(subset, dims.parties());
  const int total = dims.total();
  std::vector<std::vector<int>> digits(static_cast<std::size_t>(total));
  for (int i = 0; i < total; ++i) digits[static_cast<std::size_t>(i)] = decode_index(i, dims);

  Matrix out(total, total);
  std::vector<int> row, col;
  for (int i = 0; i < total; ++i) {
    for (int j = 0; j < total; ++j) {
      row = digits[static_cast<std::size_t>(i)];
      col = digits[static_cast<std::size_t>(j)];
      for (int p : subset) std::swap(row[static_cast<std::size_t>(p)], col[static_cast<std::size_t>(p)]);
      out(encode_index(row, dims), encode_index(col, dims)) = rho(i, j);
    }
  }
  return out;
}

RealSpectrum real_spectrum(const Matrix& m, double clamp_tol) {
  if (m.rows() != m.cols()) throw InputError("eig_real_spectrum: matrix is not square");
  Eigen::ComplexEigenSolver<Matrix> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw SpectralContractError("eig_real_spectrum: eigenvalue iteration did not converge");

  RealSpectrum out;
  out.raw.reserve(static_cast<std::size_t>(m.rows()));
  for (const cplx& ev : solver.eigenvalues()) {
    if (std::abs(ev.imag()) > clamp_tol || ev.real() < -clamp_tol) {
      std::ostringstream os;
      os.precision(3);
      os << "spectral contract violated: eigenvalue (" << ev.real() << ", " << ev.imag()
         << ") is not real and nonnegative within " << clamp_tol;
      throw SpectralContractError(os.str());
    }
    out.max_imag = std::max(out.max_imag, std::abs(ev.imag()));
    out.raw.push_back(ev.real());
  }
  std::sort(out.raw.begin(), out.raw.end(), std::greater<>());
  out.values.reserve(out.raw.size());
  for (double x : out.raw) out.values.push_back(x < clamp_tol ? 0.0 : x);
  return out;
}

std::vector<double> eig_real_spectrum(const Matrix& m, double clamp_tol) {
  return real_spectrum(m, clamp_tol).values;
}

std::vector<double> hermitian_eigenvalues(const Matrix& m) {
  if (m.rows() != m.cols()) throw InputError("hermitian_eigenvalues: matrix is not square");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();  // ascending
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<double> singular_values(const Matrix& m) {
  if (m.size() == 0) return {};
  Eigen::JacobiSVD<Matrix> svd(m);
  const Eigen::VectorXd& sv = svd.singularValues();  // already descending
  return {sv.begin(), sv.end()};
}

std::vector<double> singular_values(const RealMatrix& m) {
  if (m.size() == 0) return {};
  Eigen::JacobiSVD<RealMatrix> svd(m);
  const Eigen::VectorXd& sv = svd.singularValues();
  return {sv.begin(), sv.end()};
}

double hermiticity_defect(const Matrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace mpconc
