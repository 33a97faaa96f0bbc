#include "mpconc/report.hpp"

#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace mpconc {

using nlohmann::json;

namespace {

json provenance(double kappa) {
  return {{"version", std::string(version())}, {"kappa", kappa}, {"rng", std::string(Rng::kAlgorithm)}};
}


json bound_json(const BoundReport& r, bool include_records) {
  json j{{"method", std::string(to_string(r.method))},
         {"dims", r.dims.values()},
         {"tau", r.tau},
         {"kappa", r.kappa},
         {"weight", r.weight},
         {"prefactor", r.prefactor},
         {"convention", std::string(r.convention())},
         {"pair_count", r.records.size()}};
  if (include_records) {
    json recs = json::array();
    for (const auto& rec : r.records) {
      recs.push_back({{"bipartition", rec.bipartition.label()},
                      {"left_gen", {rec.left_gen.p, rec.left_gen.q}},
                      {"right_gen", {rec.right_gen.p, rec.right_gen.q}},
                      {"lambdas", rec.spectrum.lambdas},
                      {"fifth_eigenvalue", rec.spectrum.fifth_eigenvalue},
                      {"concurrence", rec.concurrence}});
    }
    j["records"] = std::move(recs);
  }
  return j;
}

std::string fmt(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_num(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw InputError("bad number in report: '" + std::string(s) + "'");
  return v;
}

template <class E, class Parse>
E parse_enum(const std::string& name, Parse parse, const char* what) {
  const auto v = parse(name);
  if (!v) throw InputError(std::string("unknown ") + what + " '" + name + "'");
  return *v;
}

}  // namespace

std::string to_json(const BoundReport& r, bool include_records) {
  json j = bound_json(r, include_records);
  j["provenance"] = provenance(r.kappa);
  return j.dump(2);
}

std::string to_json(const CriteriaReport& r) {
  json j;
  j["bound"] = bound_json(r.bound, false);
  j["bound"]["entangled"] = r.bound_entangled;
  json subsets = json::array();
  for (const auto& s : r.ppt.subsets)
    subsets.push_back({{"subset", s.subset}, {"min_eigenvalue", s.min_eigenvalue}, {"positive", s.positive}});
  j["ppt"] = {{"ppt", r.ppt.ppt}, {"subsets", subsets}};
  if (r.witness) j["witness"] = {{"value", r.witness->value}, {"entangled", r.witness->entangled}};
  if (r.kf) j["kf"] = {{"norm", r.kf->norm}, {"mode", r.kf->mode}, {"mode_norms", r.kf->mode_norms}, {"entangled", r.kf->entangled}};
  j["provenance"] = provenance(r.bound.kappa);
  return j.dump(2);
}

std::string to_json(const ScanResult& r) {
  json evals = json::array();
  for (const auto& e : r.evaluations) evals.push_back({{"p", e.p}, {"value", e.value}, {"entangled", e.entangled}});
  json j{{"family", std::string(to_string(r.family))},
         {"detector", std::string(to_string(r.detector))},
         {"tol", r.tol},
         {"p_star", r.p_star},
         {"lo", r.lo},
         {"hi", r.hi},
         {"width", r.width},
         {"p_star_value", r.p_star_value},
         {"iterations", r.iterations},
         {"evaluations", evals},
         {"provenance", provenance(r.kappa)}};
  return j.dump(2);
}

std::string to_json(const VerifyResult& r) {
  json j{{"property", std::string(to_string(r.property))},
         {"trials", r.trials},
         {"seed", r.seed},
         {"local_dim", r.local_dim},
         {"samples_checked", r.samples_checked},
         {"max_violation", r.max_violation},
         {"tolerance", r.tolerance},
         {"pass", r.pass},
         {"provenance", provenance(r.kappa)}};
  return j.dump(2);
}

std::string to_json(const DistillReport& r) {
  json j{{"tau2_12", r.tau2[0]}, {"tau2_13", r.tau2[1]}, {"tau2_23", r.tau2[2]}, {"flag", r.flag},
         {"provenance", provenance(kDefaultKappa)}};
  return j.dump(2);
}

ScanResult scan_from_json(const std::string& text) {
  const json j = json::parse(text);
  ScanResult r;
  r.family = parse_enum<Family>(j.at("family").get<std::string>(), parse_family, "family");
  r.detector = parse_enum<Detector>(j.at("detector").get<std::string>(), parse_detector, "detector");
  r.tol = j.at("tol").get<double>();
  r.p_star = j.at("p_star").get<double>();
  r.lo = j.at("lo").get<double>();
  r.hi = j.at("hi").get<double>();
  r.width = j.at("width").get<double>();
  r.p_star_value = j.at("p_star_value").get<double>();
  r.iterations = j.at("iterations").get<int>();
  r.kappa = j.at("provenance").at("kappa").get<double>();
  for (const auto& e : j.at("evaluations"))
    r.evaluations.push_back({e.at("p").get<double>(), e.at("value").get<double>(), e.at("entangled").get<bool>()});
  return r;
}

VerifyResult verify_from_json(const std::string& text) {
  const json j = json::parse(text);
  VerifyResult r;
  r.property = parse_enum<Property>(j.at("property").get<std::string>(), parse_property, "property");
  r.trials = j.at("trials").get<int>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.local_dim = j.at("local_dim").get<int>();
  r.samples_checked = j.at("samples_checked").get<int>();
  r.max_violation = j.at("max_violation").get<double>();
  r.tolerance = j.at("tolerance").get<double>();
  r.pass = j.at("pass").get<bool>();
  r.kappa = j.at("provenance").at("kappa").get<double>();
  return r;
}

void write_scan_csv(std::ostream& os, const ScanResult& r) {
  os << "# mpconc " << version() << " family=" << to_string(r.family) << " detector=" << to_string(r.detector)
     << " tol=" << fmt(r.tol) << " lo=" << fmt(r.lo) << " hi=" << fmt(r.hi) << " width=" << fmt(r.width)
     << " iterations=" << r.iterations << " kappa=" << fmt(r.kappa) << '\n';
  os << "p,detector_value,verdict\n";
  for (const auto& e : r.evaluations)
    os << fmt(e.p) << ',' << fmt(e.value) << ',' << (e.entangled ? "entangled" : "not_detected") << '\n';
  os << fmt(r.p_star) << ',' << fmt(r.p_star_value) << ",threshold\n";
}

ScanResult read_scan_csv(std::istream& is) {
  ScanResult r;
  std::string line;
  std::map<std::string, std::string> meta;
  bool header = false, summary = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::istringstream ss(line.substr(1));
      std::string tok;
      while (ss >> tok) {
        const auto eq = tok.find('=');
        if (eq != std::string::npos) meta[tok.substr(0, eq)] = tok.substr(eq + 1);
      }
      continue;
    }
    if (!header) {
      if (line != "p,detector_value,verdict") throw InputError("scan CSV: unexpected header '" + line + "'");
      header = true;
      continue;
    }
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) throw InputError("scan CSV: malformed row '" + line + "'");
    const double p = parse_num(std::string_view(line).substr(0, c1));
    const double v = parse_num(std::string_view(line).substr(c1 + 1, c2 - c1 - 1));
    const std::string verdict = line.substr(c2 + 1);
    if (verdict == "threshold") {
      r.p_star = p;
      r.p_star_value = v;
      summary = true;
    } else if (verdict == "entangled" || verdict == "not_detected") {
      r.evaluations.push_back({p, v, verdict == "entangled"});
    } else {
      throw InputError("scan CSV: unknown verdict '" + verdict + "'");
    }
  }
  if (!header || !summary) throw InputError("scan CSV: missing header or summary row");
  auto need = [&](const char* key) -> const std::string& {
    const auto it = meta.find(key);
    if (it == meta.end()) throw InputError(std::string("scan CSV: missing '") + key + "' in provenance line");
    return it->second;
  };
  r.family = parse_enum<Family>(need("family"), parse_family, "family");
  r.detector = parse_enum<Detector>(need("detector"), parse_detector, "detector");
  r.tol = parse_num(need("tol"));
  r.lo = parse_num(need("lo"));
  r.hi = parse_num(need("hi"));
  r.width = parse_num(need("width"));
  r.iterations = std::stoi(need("iterations"));
  r.kappa = parse_num(need("kappa"));
  return r;
}

}  // namespace mpconc
