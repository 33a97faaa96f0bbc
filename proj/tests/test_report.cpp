#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "mpconc/mpconc.hpp"

using namespace mpconc;

TEST_CASE("scan JSON round trip") {
  const ScanResult r = threshold_scan(Family::wmix, Detector::kf, 1e-4);
  const ScanResult back = scan_from_json(to_json(r));
  CHECK(back.family == r.family);
  CHECK(back.detector == r.detector);
  CHECK(back.tol == r.tol);
  CHECK(back.p_star == r.p_star);
  CHECK(back.lo == r.lo);
  CHECK(back.hi == r.hi);
  CHECK(back.width == r.width);
  CHECK(back.p_star_value == r.p_star_value);
  CHECK(back.iterations == r.iterations);
  CHECK(back.kappa == r.kappa);
  REQUIRE(back.evaluations.size() == r.evaluations.size());
  for (std::size_t i = 0; i < r.evaluations.size(); ++i) {
    CHECK(back.evaluations[i].p == r.evaluations[i].p);
    CHECK(back.evaluations[i].value == r.evaluations[i].value);
    CHECK(back.evaluations[i].entangled == r.evaluations[i].entangled);
  }
}

TEST_CASE("scan CSV round trip") {
  const ScanResult r = threshold_scan(Family::ghzmix, Detector::tau3, 1e-4);
  std::stringstream ss;
  write_scan_csv(ss, r);
  const std::string text = ss.str();
  CHECK(text.find("p,detector_value,verdict\n") != std::string::npos);
  CHECK(text.find(",threshold\n") != std::string::npos);
  const ScanResult back = read_scan_csv(ss);
  CHECK(back.family == r.family);
  CHECK(back.detector == r.detector);
  CHECK(back.tol == r.tol);
  CHECK(back.p_star == r.p_star);
  CHECK(back.p_star_value == r.p_star_value);
  CHECK(back.lo == r.lo);
  CHECK(back.hi == r.hi);
  CHECK(back.width == r.width);
  CHECK(back.iterations == r.iterations);
  CHECK(back.kappa == r.kappa);
  REQUIRE(back.evaluations.size() == r.evaluations.size());
  for (std::size_t i = 0; i < r.evaluations.size(); ++i) {
    CHECK(back.evaluations[i].p == r.evaluations[i].p);
    CHECK(back.evaluations[i].value == r.evaluations[i].value);
    CHECK(back.evaluations[i].entangled == r.evaluations[i].entangled);
  }

  std::istringstream bad("p,detector_value,verdict\n0.1,0.2,maybe\n");
  CHECK_THROWS_AS(read_scan_csv(bad), InputError);
}

TEST_CASE("verify JSON round trip") {
  const VerifyResult r = verify_suite(Property::rank4, 5, 9);
  const VerifyResult back = verify_from_json(to_json(r));
  CHECK(back.property == r.property);
  CHECK(back.trials == r.trials);
  CHECK(back.seed == r.seed);
  CHECK(back.local_dim == r.local_dim);
  CHECK(back.samples_checked == r.samples_checked);
  CHECK(back.max_violation == r.max_violation);
  CHECK(back.tolerance == r.tolerance);
  CHECK(back.pass == r.pass);
  CHECK(back.kappa == r.kappa);
}

TEST_CASE("bound and criteria JSON carry provenance") {
  const BoundReport b = tau_bound(DensityMatrix(make_w(3)), BoundMethod::tau3);
  const auto j = nlohmann::json::parse(to_json(b));
  CHECK(j.at("tau").get<double>() == b.tau);
  CHECK(j.at("records").size() == 18);
  CHECK(j.at("records")[0].at("bipartition") == "1|23");
  CHECK(j.at("provenance").at("kappa").get<double>() == kDefaultKappa);
  CHECK(j.at("provenance").at("version") == std::string(version()));
  CHECK(j.at("provenance").at("rng") == std::string(Rng::kAlgorithm));
  CHECK_FALSE(nlohmann::json::parse(to_json(b, false)).contains("records"));

  const Matrix w = ghz_witness();
  const auto c = nlohmann::json::parse(to_json(criteria_compare(StateFamily::wmix(0.5).state(), &w)));
  CHECK(c.at("bound").at("entangled").get<bool>());
  CHECK(c.at("kf").at("entangled").get<bool>());
  CHECK_FALSE(c.at("witness").at("entangled").get<bool>());
  CHECK(c.at("ppt").at("subsets").size() == 6);

  const auto d = nlohmann::json::parse(to_json(distill_flag(make_w(3))));
  CHECK(d.at("flag").get<bool>());
}
