#pragma once

// Experiment drivers behind the command-line tool: detector threshold scans,
// randomized verification suites, detector comparison and the GHZ
// distillability flag.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mpconc/bounds.hpp"
#include "mpconc/criteria.hpp"
#include "mpconc/states.hpp"

namespace mpconc {

/// Library version string.
std::string_view version();

/// A bound counts as a detection when it exceeds this value.
inline constexpr double kBoundDetectionTolerance = 1e-9;

enum class Detector { tau3, kf, witness };
std::string_view to_string(Detector d);
std::optional<Detector> parse_detector(std::string_view name);

struct DetectorReading {
  double value = 0.0;
  bool entangled = false;
};

/// tau3 (> 1e-9), the Ky Fan norm (> 1 + 1e-9) or a witness (< 0).
/// `witness` defaults to ghz_witness() when null.
DetectorReading evaluate_detector(Detector detector, const DensityMatrix& rho,
                                  const Matrix* witness = nullptr);

/// Raised when a scan cannot bracket a threshold.
class ScanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScanEvaluation {
  double p = 0.0;
  double value = 0.0;
  bool entangled = false;
};

/// Result of a bisection on the mixing parameter. The detector reports
/// "not entangled" at lo and "entangled" at hi; p_star is the midpoint and
/// width = hi - lo <= tol.
struct ScanResult {
  Family family = Family::wmix;
  Detector detector = Detector::tau3;
  double tol = 1e-4;
  double p_star = 0.0;
  double lo = 0.0;
  double hi = 1.0;
  double width = 1.0;
  double p_star_value = 0.0;  // detector value at p_star
  int iterations = 0;
  double kappa = kDefaultKappa;
  std::vector<ScanEvaluation> evaluations;  // pre-scan then bisection steps
};

/// 11-point monotonicity pre-scan on p = 0, 0.1, ..., 1, then bisection until
/// the bracket is no wider than tol. Throws ScanError when the pre-scan shows
/// no sign change or a non-monotone verdict (the message carries the table).
ScanResult threshold_scan(Family family, Detector detector, double tol = 1e-4,
                          const Matrix* witness = nullptr);

enum class Property { thm3, pure_identity, separable_zero, ppt_zero, ckw_identity, rank4 };
std::string_view to_string(Property p);
std::optional<Property> parse_property(std::string_view name);
/// Allowed max violation for each property.
double property_tolerance(Property p);

struct VerifyResult {
  Property property = Property::thm3;
  int trials = 0;
  std::uint64_t seed = 0;
  int local_dim = 2;
  int samples_checked = 0;  // for ppt-zero: samples that passed the PPT test
  double max_violation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double kappa = kDefaultKappa;
};

/// Runs a randomized property over `trials` samples of three parties with
/// local dimension `local_dim` (rank4, separable-zero and ppt-zero use qubits
/// as well unless asked otherwise):
///   thm3            max(0, tau2(r12) + tau2(r13) + tau2(r23) - 3 tau3), pure states
///   pure-identity   |tau3 - C^2|, pure states
///   separable-zero  tau3 of random fully separable mixtures
///   ppt-zero        tau3 of random noisy mixtures that pass every PPT test
///   ckw-identity    |w2 sum Tr(r_ij r~_ij) - (1 - Tr r_i^2 - Tr r_j^2 + Tr r_k^2)|
///   rank4           fifth eigenvalue of rho rho~ over every generator pair
VerifyResult verify_suite(Property property, int trials, std::uint64_t seed, int local_dim = 2);

struct CriteriaReport {
  BoundReport bound;
  bool bound_entangled = false;
  PptReport ppt;
  std::optional<WitnessResult> witness;
  std::optional<KfResult> kf;  // qubit systems only
};

CriteriaReport criteria_compare(const DensityMatrix& rho, const Matrix* witness = nullptr);

/// Plain-text table, one row per detector.
std::string render_table(const CriteriaReport& report);

struct DistillReport {
  std::array<double, 3> tau2{};  // rho_12, rho_13, rho_23
  bool flag = false;             // at least two reductions above 1e-9
};

DistillReport distill_flag(const PureState& psi);

}  // namespace mpconc
