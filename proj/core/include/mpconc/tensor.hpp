#pragma once

// Dense complex linear algebra on multipartite index spaces.
//
// Conventions used throughout the library:
//   * Matrices are Eigen::MatrixXcd; the logical entry order is row-major.
//   * Basis states of a composite system are indexed big-endian: party 0 is
//     the most significant digit. For dims (d0, d1, d2) the basis index of
//     |i0 i1 i2> is (i0 * d1 + i1) * d2 + i2.
//   * Parties are numbered from 0 in the API; user-facing strings
//     (e.g. "12|3") number them from 1.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace mpconc {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

/// Raised on malformed inputs: wrong dimensions, bad ranges, parse failures.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical contract is broken, e.g. a spectrum that was
/// promised to be real comes back with a large imaginary part.
class SpectralContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ordered list of local subsystem dimensions, each >= 2.
class Dims {
 public:
  Dims() = default;
  explicit Dims(std::vector<int> dims);
  Dims(std::initializer_list<int> dims) : Dims(std::vector<int>(dims)) {}

  /// n copies of the same local dimension.
  static Dims uniform(int d, int n);

  std::size_t parties() const { return dims_.size(); }
  int operator[](std::size_t i) const { return dims_[i]; }
  const std::vector<int>& values() const { return dims_; }
  auto begin() const { return dims_.begin(); }
  auto end() const { return dims_.end(); }

  /// Product of all local dimensions.
  int total() const;
  /// Product of the dimensions of the listed parties.
  int total(std::span<const int> parties) const;
  /// True when every party has the same local dimension.
  bool is_uniform() const;
  /// Sub-list for the listed parties, in the order given.
  Dims select(std::span<const int> parties) const;

  std::string to_string() const;  // "2,2,2"

  friend bool operator==(const Dims&, const Dims&) = default;

 private:
  std::vector<int> dims_;
};

/// Big-endian digits of a flat basis index.
std::vector<int> decode_index(int index, const Dims& dims);
int encode_index(std::span<const int> digits, const Dims& dims);

/// Tensor (Kronecker) product A ⊗ B.
Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

/// Reorder tensor factors. perm[k] names the old party that ends up in
/// position k, so the result lives on dims' = (dims[perm[0]], dims[perm[1]], ...).
Matrix permute_subsystems(const Matrix& m, const Dims& dims, std::span<const int> perm);
Vector permute_subsystems(const Vector& v, const Dims& dims, std::span<const int> perm);

/// Inverse of a permutation given in the convention above.
std::vector<int> inverse_permutation(std::span<const int> perm);

/// Reduced matrix on `keep` (any order on input; the result is ordered by
/// ascending party index). Keeping every party returns rho unchanged.
Matrix partial_trace(const Matrix& rho, const Dims& dims, std::span<const int> keep);

/// Transpose only the indices belonging to `subset`.
Matrix partial_transpose(const Matrix& rho, const Dims& dims, std::span<const int> subset);

/// Eigenvalues of a matrix whose spectrum is known to be real and
/// nonnegative (a product of two PSD matrices). Imaginary parts larger than
/// clamp_tol raise SpectralContractError; real parts below clamp_tol are
/// clamped to zero. Returned in descending order.
std::vector<double> eig_real_spectrum(const Matrix& m, double clamp_tol = 1e-9);

/// eig_real_spectrum plus the unclamped real parts (same order) and the
/// largest imaginary residue seen.
struct RealSpectrum {
  std::vector<double> values;
  std::vector<double> raw;
  double max_imag = 0.0;
};
RealSpectrum real_spectrum(const Matrix& m, double clamp_tol = 1e-9);

/// Eigenvalues of a Hermitian matrix, descending.
std::vector<double> hermitian_eigenvalues(const Matrix& m);

/// Singular values, descending.
std::vector<double> singular_values(const Matrix& m);
std::vector<double> singular_values(const RealMatrix& m);

/// max |M - M^dagger|.
double hermiticity_defect(const Matrix& m);

void require_square(const Matrix& m, int dim, const char* what);

}  // namespace mpconc
