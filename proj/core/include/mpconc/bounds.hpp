#pragma once

// Concurrence of pure states and the generator-pair lower bound for mixed
// states.
//
// For every bipartition A|B and every pair of antisymmetric generators
// (L_a on A, L_b on B) let S = L_a ⊗ L_b (embedded in canonical party order)
// and rho~ = S rho* S. The four largest eigenvalues of rho rho~ give
// lambda(1) >= ... >= lambda(4) (square roots), and the pair contributes
// C_ab = max{0, lambda(1) - lambda(2) - lambda(3) - lambda(4)}. The bound is
//
//     tau = prefactor * weight * sum_{A|B} sum_{a,b} C_ab^2,
//
// with prefactor d / (2 m (d - 1)), m = 2^(N-1) - 1, for equal local
// dimensions d. `weight` is the calibration constant kappa for N >= 3, and
// 2 * kappa for N = 2 (the two-party bound counts each generator pair with the
// weight that reproduces the two-qubit spin-flip concurrence). With unequal
// local dimensions the raw sum is reported (prefactor = weight = 1).

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mpconc/generators.hpp"
#include "mpconc/states.hpp"

namespace mpconc {

/// Pinned value of the calibration constant; calibrate() reproduces it.
inline constexpr double kDefaultKappa = 0.5;

/// Raised when the calibration ratio is not constant across random states.
class NormalizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LambdaSpectrum {
  std::array<double, 4> lambdas{};  // descending square roots
  double fifth_eigenvalue = 0.0;    // largest unclamped eigenvalue of rho rho~ past the fourth
  double max_imag = 0.0;            // largest imaginary residue of the spectrum
};

struct SpectrumOptions {
  double clamp_tol = 1e-9;
  double rank_tol = 1e-8;
};

/// lambda-spectrum of rho rho~ for one embedded operator. Throws
/// SpectralContractError when the spectrum is not real or rank(rho rho~) > 4.
LambdaSpectrum lambda_spectrum(const DensityMatrix& rho, const SOperator& s,
                               const SpectrumOptions& opts = {});
LambdaSpectrum lambda_spectrum(const Matrix& rho, const Matrix& s, const SpectrumOptions& opts = {});

/// max{0, l1 - l2 - l3 - l4}
double pair_concurrence(const LambdaSpectrum& spec);

/// |<psi| S |psi*>|
double pure_pair_amplitude(const PureState& psi, const Matrix& s);

struct PureConcurrence {
  double value = 0.0;
  bool normalized = true;  // false: unequal local dimensions, prefactor dropped
};

/// Pure-state concurrence from reduced purities. Equal local dimensions d:
///   N = 2:  C^2 = d/(d-1) * (1 - Tr rho_A^2)
///   N >= 3: C^2 = d/(2m(d-1)) * sum_{A|B} (1 - Tr rho_A^2)
/// (N = 3 is C^2 = d/(6(d-1)) * (3 - Tr rho_1^2 - Tr rho_2^2 - Tr rho_3^2)).
/// Unequal dimensions: C^2 = sum_{A|B} 2 (1 - Tr rho_A^2), flagged.
PureConcurrence pure_concurrence(const PureState& psi);

enum class BoundMethod { tau2, tau3, taun };
std::string_view to_string(BoundMethod m);
std::optional<BoundMethod> parse_bound_method(std::string_view name);

struct BoundOptions {
  double kappa = kDefaultKappa;
  int threads = 0;  // 0: pick from hardware concurrency
  SpectrumOptions spectrum;
};

struct PairRecord {
  Bipartition bipartition;
  GeneratorIndex left_gen;
  GeneratorIndex right_gen;
  LambdaSpectrum spectrum;
  double concurrence = 0.0;
};

struct BoundReport {
  BoundMethod method = BoundMethod::taun;
  Dims dims;
  double tau = 0.0;
  double kappa = kDefaultKappa;
  double weight = 1.0;     // kappa or 2*kappa, see header comment
  double prefactor = 1.0;  // d / (2m(d-1)) or 1
  bool normalized = true;
  std::vector<PairRecord> records;

  /// "normalized" or "unnormalized"
  std::string_view convention() const { return normalized ? "normalized" : "unnormalized"; }
  /// prefactor * weight * sum of squared pair concurrences, recomputed.
  double recompute() const;
};

/// The lower bound. tau2 requires two parties, tau3 three; taun accepts any
/// N >= 2 and agrees with the specific methods where they apply.
BoundReport tau_bound(const DensityMatrix& rho, BoundMethod method = BoundMethod::taun,
                      const BoundOptions& opts = {});

inline BoundReport tau_n(const DensityMatrix& rho, const BoundOptions& opts = {}) {
  return tau_bound(rho, BoundMethod::taun, opts);
}

/// Weight applied to the generator sum for an N-party system.
double pair_weight(std::size_t parties, double kappa);

/// Deterministic pairwise (tree) summation.
double pairwise_sum(std::span<const double> values);

struct Calibration {
  double kappa = 0.0;
  double spread = 0.0;  // (max - min) / mean over trials
  int trials = 0;
  int local_dim = 2;
};

/// Fits kappa from the pure tripartite identity
///   kappa * sum_{A|B} sum_{a,b} |<psi|S|psi*>|^2 = 3 - sum_i Tr rho_i^2
/// on Haar-random states of three d-level parties. Throws NormalizationError
/// when the ratio spread reaches 1e-8.
Calibration calibrate(int trials, std::uint64_t seed, int local_dim = 2);
double calibration_constant(int trials, std::uint64_t seed, int local_dim = 2);

/// sum over generator pairs of Tr(rho rho~) for a two-party state.
double pair_trace_sum(const DensityMatrix& rho2);

/// tau2 of the three two-party reductions (rho_12, rho_13, rho_23) of a
/// tripartite state.
std::array<double, 3> tau2_of_reductions(const DensityMatrix& rho, const BoundOptions& opts = {});

}  // namespace mpconc
