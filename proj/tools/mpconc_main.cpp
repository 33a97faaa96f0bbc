// mpconc: concurrence lower bounds and entanglement detectors from the command line.
//
// Exit codes: 0 success, 2 detector/property failure, 3 input error,
// 4 numerical-contract violation.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mpconc/mpconc.hpp"

namespace {

using namespace mpconc;

constexpr int kExitFailure = 2;
constexpr int kExitInput = 3;
constexpr int kExitNumerical = 4;

Dims parse_dims(const std::string& text) {
  std::vector<int> dims;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      dims.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InputError("bad --dims entry '" + tok + "'");
    }
  }
  return Dims(dims);
}

std::optional<Matrix> maybe_witness(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return load_operator(path).matrix;
}

struct GenArgs {
  std::string family = "ghz";
  std::string dims = "2,2,2";
  double p = 1.0;
  std::uint64_t seed = 0;
  std::string out;
};

int run_gen(const GenArgs& a) {
  const Dims dims = parse_dims(a.dims);
  const int n = static_cast<int>(dims.parties());
  AnyState state = [&]() -> AnyState {
    if (a.family == "haar") return haar_random_pure(dims, a.seed);
    const auto fam = parse_family(a.family);
    if (!fam) throw InputError("unknown family '" + a.family + "'");
    StateFamily sf{*fam, a.p, dims};
    sf.validate();
    switch (*fam) {
      case Family::ghz: return make_ghz(dims[0], n);
      case Family::w: return make_w(n);
      case Family::bell: return make_ghz(dims[0], 2);
      case Family::product: {
        std::vector<int> zeros(dims.parties(), 0);
        return make_basis_state(zeros, dims);
      }
      default: return sf.state();
    }
  }();
  std::ostringstream comment;
  comment << "family=" << a.family << " p=" << a.p << " seed=" << a.seed << " mpconc " << version();
  save_state(a.out, state, comment.str());
  std::cout << "wrote " << a.out << '\n';
  return 0;
}

struct BoundArgs {
  std::string state;
  std::string method = "taun";
  bool json = false;
};

int run_bound(const BoundArgs& a) {
  const auto method = parse_bound_method(a.method);
  if (!method) throw InputError("unknown method '" + a.method + "'");
  const AnyState st = load_state(a.state);
  const BoundReport r = tau_bound(as_density(st), *method);
  if (a.json) {
    std::cout << to_json(r) << '\n';
    return 0;
  }
  std::cout << std::setprecision(12);
  std::cout << a.method << " = " << r.tau << "  (" << r.convention() << ", kappa=" << r.kappa
            << ", weight=" << r.weight << ", prefactor=" << r.prefactor << ", pairs=" << r.records.size() << ")\n";
  if (const auto* psi = std::get_if<PureState>(&st)) {
    const auto c = pure_concurrence(*psi);
    std::cout << "pure-state C^2 = " << c.value * c.value << (c.normalized ? "" : "  (unnormalized)") << '\n';
  }
  int shown = 0;
  for (const auto& rec : r.records) {
    if (rec.concurrence <= 0.0) continue;
    if (shown++ == 0) std::cout << "nonzero pair terms:\n";
    std::cout << "  " << rec.bipartition.label() << "  L(" << rec.left_gen.p << "," << rec.left_gen.q << ") x L("
              << rec.right_gen.p << "," << rec.right_gen.q << ")  C=" << rec.concurrence << '\n';
  }
  return 0;
}

struct CriteriaArgs {
  std::string state;
  std::string witness;
  bool json = false;
};

int run_criteria(const CriteriaArgs& a) {
  const DensityMatrix rho = as_density(load_state(a.state));
  const auto w = maybe_witness(a.witness);
  const CriteriaReport r = criteria_compare(rho, w ? &*w : nullptr);
  std::cout << (a.json ? to_json(r) + "\n" : render_table(r));
  return 0;
}

struct ScanArgs {
  std::string family = "wmix";
  std::string detector = "tau3";
  double tol = 1e-4;
  std::string witness;
  std::string out;
  bool json = false;
};

int run_scan(const ScanArgs& a) {
  const auto fam = parse_family(a.family);
  if (!fam) throw InputError("unknown family '" + a.family + "'");
  const auto det = parse_detector(a.detector);
  if (!det) throw InputError("unknown detector '" + a.detector + "'");
  const auto w = maybe_witness(a.witness);
  const ScanResult r = threshold_scan(*fam, *det, a.tol, w ? &*w : nullptr);
  if (!a.out.empty()) {
    std::ofstream out(a.out);
    if (!out) throw InputError("cannot open '" + a.out + "' for writing");
    write_scan_csv(out, r);
  }
  if (a.json) {
    std::cout << to_json(r) << '\n';
  } else {
    std::cout << std::setprecision(10) << a.family << "/" << a.detector << ": p* = " << r.p_star << "  bracket ["
              << r.lo << ", " << r.hi << "]  width " << r.width << "  after " << r.iterations << " bisections\n";
  }
  return 0;
}

struct VerifyArgs {
  std::string property;
  int trials = 100;
  std::uint64_t seed = 0;
  int dim = 2;
  bool json = false;
};

int run_verify(const VerifyArgs& a) {
  const auto prop = parse_property(a.property);
  if (!prop) throw InputError("unknown property '" + a.property + "'");
  const VerifyResult r = verify_suite(*prop, a.trials, a.seed, a.dim);
  if (a.json) {
    std::cout << to_json(r) << '\n';
  } else {
    std::cout << a.property << ": " << (r.pass ? "PASS" : "FAIL") << "  max violation " << std::setprecision(3)
              << r.max_violation << " (tolerance " << r.tolerance << ", " << r.samples_checked << "/" << r.trials
              << " samples checked, seed " << r.seed << ")\n";
  }
  return r.pass ? 0 : kExitFailure;
}

struct DistillArgs {
  std::string state;
  bool json = false;
};

int run_distill(const DistillArgs& a) {
  const AnyState st = load_state(a.state);
  const auto* psi = std::get_if<PureState>(&st);
  if (!psi) throw InputError("distill needs a pure state file");
  const DistillReport r = distill_flag(*psi);
  if (a.json) {
    std::cout << to_json(r) << '\n';
  } else {
    std::cout << std::setprecision(10) << "tau2(rho12) = " << r.tau2[0] << "\ntau2(rho13) = " << r.tau2[1]
              << "\ntau2(rho23) = " << r.tau2[2] << "\nGHZ distillable (two positive reductions): "
              << (r.flag ? "yes" : "no") << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Concurrence lower bounds and entanglement detectors for multipartite states"};
  app.set_version_flag("--version", std::string(mpconc::version()));
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a state file");
  gen_cmd->add_option("--family", gen.family, "ghz|w|wmix|ghzmix|haar|product|bell")->required();
  gen_cmd->add_option("--dims", gen.dims, "Comma-separated local dimensions")->capture_default_str();
  gen_cmd->add_option("--p", gen.p, "Mixing parameter for wmix/ghzmix")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "Seed for haar")->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output state file")->required();

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Evaluate the concurrence lower bound");
  bound_cmd->add_option("--state", bound.state, "State file")->required();
  bound_cmd->add_option("--method", bound.method, "tau2|tau3|taun")->capture_default_str();
  bound_cmd->add_flag("--json", bound.json, "Emit JSON");

  CriteriaArgs crit;
  auto* crit_cmd = app.add_subcommand("criteria", "Compare the bound with PPT, witness and Ky Fan detectors");
  crit_cmd->add_option("--state", crit.state, "State file")->required();
  crit_cmd->add_option("--witness", crit.witness, "Witness operator file (kind density)");
  crit_cmd->add_flag("--json", crit.json, "Emit JSON");

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "Bisect the detection threshold of a mixed family");
  scan_cmd->add_option("--family", scan.family, "wmix|ghzmix")->required();
  scan_cmd->add_option("--detector", scan.detector, "tau3|kf|witness")->required();
  scan_cmd->add_option("--tol", scan.tol, "Bracket width in p")->capture_default_str();
  scan_cmd->add_option("--witness", scan.witness, "Witness operator file (default: 1/2 I - |GHZ><GHZ|)");
  scan_cmd->add_option("--out", scan.out, "CSV output");
  scan_cmd->add_flag("--json", scan.json, "Emit JSON");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a randomized property suite");
  verify_cmd->add_option("--property", verify.property,
                         "thm3|pure-identity|separable-zero|ppt-zero|ckw-identity|rank4")
      ->required();
  verify_cmd->add_option("--trials", verify.trials, "Number of samples")->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "Seed")->capture_default_str();
  verify_cmd->add_option("--dim", verify.dim, "Local dimension of the three parties")->capture_default_str();
  verify_cmd->add_flag("--json", verify.json, "Emit JSON");

  DistillArgs distill;
  auto* distill_cmd = app.add_subcommand("distill", "GHZ distillability flag of a tripartite pure state");
  distill_cmd->add_option("--state", distill.state, "Pure state file")->required();
  distill_cmd->add_flag("--json", distill.json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*bound_cmd) return run_bound(bound);
    if (*crit_cmd) return run_criteria(crit);
    if (*scan_cmd) return run_scan(scan);
    if (*verify_cmd) return run_verify(verify);
    if (*distill_cmd) return run_distill(distill);
  } catch (const mpconc::ScanError& e) {
    std::cerr << "scan failed: " << e.what() << '\n';
    return kExitFailure;
  } catch (const mpconc::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const mpconc::SpectralContractError& e) {
    std::cerr << "numerical contract violation: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const mpconc::NormalizationError& e) {
    std::cerr << "numerical contract violation: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
