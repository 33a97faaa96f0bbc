#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mpconc/states.hpp"

namespace mpconc {

// --- PPT -------------------------------------------------------------------

inline constexpr double kPptTolerance = 1e-9;

struct SubsetPpt {
  std::vector<int> subset;  // transposed parties
  double min_eigenvalue = 0.0;
  bool positive = true;
};

struct PptReport {
  std::vector<SubsetPpt> subsets;  // every nonempty proper subset
  bool ppt = true;                 // all subsets positive

  /// Smallest eigenvalue over all partial transposes.
  double min_eigenvalue() const;
};

PptReport ppt_check(const DensityMatrix& rho, double tol = kPptTolerance);

// --- witness ---------------------------------------------------------------

struct WitnessResult {
  double value = 0.0;  // Tr(W rho)
  bool entangled = false;
};

/// Tr(W rho); entangled iff negative. Throws InputError for a non-Hermitian
/// or mis-sized operator.
WitnessResult witness_expectation(const DensityMatrix& rho, const Matrix& w);

/// 1/2 I - |GHZ><GHZ| on three qubits.
Matrix ghz_witness();

// --- correlation tensor / Ky Fan ------------------------------------------

/// t[a1...aN] = Tr(rho sigma_a1 ⊗ ... ⊗ sigma_aN) with a_i in {x, y, z}.
/// Stored flat; index digits are base 3 with party 0 most significant.
class CorrelationTensor {
 public:
  CorrelationTensor(int parties, std::vector<double> entries);

  int parties() const { return parties_; }
  const std::vector<double>& entries() const { return t_; }
  /// axes are 0 (x), 1 (y), 2 (z)
  double at(std::span<const int> axes) const;

  /// Mode-n unfolding: 3 x 3^(N-1); row = axis of party n, columns = the other
  /// parties' axes in lexicographic order, lower party index more significant.
  RealMatrix unfold(int mode) const;

 private:
  int parties_;
  std::vector<double> t_;
};

/// Throws InputError unless every party is a qubit.
CorrelationTensor correlation_tensor(const DensityMatrix& rho);

inline constexpr double kKfTolerance = 1e-9;

struct KfResult {
  double norm = 0.0;       // max over modes of the trace norm of the unfolding
  int mode = 0;            // maximizing mode (0-based party)
  std::vector<double> mode_norms;
  bool entangled = false;  // norm > 1 + tol
};

KfResult kf_criterion(const CorrelationTensor& t, double tol = kKfTolerance);

}  // namespace mpconc
