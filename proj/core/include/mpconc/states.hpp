#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>

#include "mpconc/tensor.hpp"

namespace mpconc {

/// Normalized state vector on a composite space.
class PureState {
 public:
  /// Throws InputError unless |amplitudes| = 1 within norm_tol and the
  /// length matches dims.
  PureState(Vector amplitudes, Dims dims, double norm_tol = 1e-10);

  const Vector& amplitudes() const { return amps_; }
  const Dims& dims() const { return dims_; }
  cplx operator[](int basis_index) const { return amps_(basis_index); }

  /// |psi><psi|
  Matrix projector() const;

 private:
  Vector amps_;
  Dims dims_;
};

/// Tolerances for DensityMatrix validation.
struct DensityTolerance {
  double hermitian = 1e-10;
  double min_eigenvalue = 1e-10;  // allowed negative excursion
  double trace = 1e-10;

  /// Looser settings for matrices read from disk.
  static DensityTolerance loaded() { return {1e-8, 1e-8, 1e-8}; }
};

/// Hermitian, positive semidefinite, unit-trace matrix.
class DensityMatrix {
 public:
  DensityMatrix(Matrix m, Dims dims, DensityTolerance tol = {});
  explicit DensityMatrix(const PureState& psi);

  const Matrix& matrix() const { return m_; }
  const Dims& dims() const { return dims_; }
  int dim() const { return static_cast<int>(m_.rows()); }

  /// Reduced state on `keep` (ascending party order in the result).
  DensityMatrix reduce(std::span<const int> keep) const;
  /// Tr(rho^2)
  double purity() const;

 private:
  Matrix m_;
  Dims dims_;
};

// ---------------------------------------------------------------------------
// Canonical families

/// (1/sqrt d) sum_i |i...i> on n parties of dimension d.
PureState make_ghz(int d, int n);

/// Uniform superposition of the n single-excitation qubit states.
PureState make_w(int n);

/// Computational basis product state |digits>.
PureState make_basis_state(std::span<const int> digits, const Dims& dims);

/// (1 - p)/D * I + p |psi><psi|. Throws InputError unless 0 <= p <= 1.
DensityMatrix isotropic_mix(const PureState& psi, double p);

enum class Family { ghz, w, wmix, ghzmix, product, bell };

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view name);

/// A named state family with its mixing parameter.
struct StateFamily {
  Family family = Family::ghz;
  double p = 1.0;  // used by wmix / ghzmix
  Dims dims = Dims::uniform(2, 3);

  /// wmix / ghzmix require three qubits and p in [0,1].
  void validate() const;
  DensityMatrix state() const;
  static StateFamily wmix(double p) { return {Family::wmix, p, Dims::uniform(2, 3)}; }
  static StateFamily ghzmix(double p) { return {Family::ghzmix, p, Dims::uniform(2, 3)}; }
};

// ---------------------------------------------------------------------------
// Sampling

/// Versioned, seedable random source. The generator is std::mt19937_64 (whose
/// output sequence is fixed by the standard) and normal deviates come from a
/// Box-Muller transform implemented here, so a seed yields the same numbers on
/// every conforming toolchain.
class Rng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64/box-muller/v1";

  explicit Rng(std::uint64_t seed);

  /// Uniform in [0, 1).
  double uniform();
  /// Standard normal.
  double normal();
  /// Standard complex normal (independent N(0,1) real and imaginary parts).
  cplx complex_normal();
  /// Exp(1) deviate.
  double exponential();

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

/// Haar-distributed pure state: a normalized vector of i.i.d. complex normals.
PureState haar_random_pure(const Dims& dims, std::uint64_t seed);
PureState haar_random_pure(const Dims& dims, Rng& rng);

/// sum_i w_i |phi_i><phi_i| with k Haar vectors and Dirichlet(1,...,1)
/// weights. k = 0 means k = D.
DensityMatrix random_mixed(const Dims& dims, Rng& rng, int k = 0);

/// sum_i w_i rho_i^1 ⊗ ... ⊗ rho_i^N with Haar-random local pure states and
/// Dirichlet weights. k = 0 means k = D.
DensityMatrix random_separable(const Dims& dims, Rng& rng, int k = 0);

// ---------------------------------------------------------------------------
// Text file format (QSTATE 1)

using AnyState = std::variant<PureState, DensityMatrix>;

/// Writes the QSTATE text format with 17 significant digits. `comments` are
/// emitted as `# ...` lines after the header.
void save_state(std::ostream& os, const PureState& psi, std::string_view comment = {});
void save_state(std::ostream& os, const DensityMatrix& rho, std::string_view comment = {});
void save_state(const std::string& path, const AnyState& state, std::string_view comment = {});

/// Parses a state file; density matrices are validated with
/// DensityTolerance::loaded(). Throws InputError with a line-numbered message.
AnyState load_state(std::istream& is);
AnyState load_state(const std::string& path);

/// Loads a `kind density` file as a plain Hermitian operator (no trace or
/// positivity requirement), e.g. an entanglement witness.
struct Operator {
  Matrix matrix;
  Dims dims;
};
Operator load_operator(std::istream& is);
Operator load_operator(const std::string& path);
void save_operator(std::ostream& os, const Operator& op, std::string_view comment = "witness");

/// Density matrix view of either alternative.
DensityMatrix as_density(const AnyState& state);

}  // namespace mpconc
