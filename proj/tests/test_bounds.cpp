#include <array>
#include <cmath>

#include "doctest.h"
#include "mpconc/mpconc.hpp"
#include "oracles.hpp"

using namespace mpconc;

namespace {

double tau3(const DensityMatrix& rho) { return tau_bound(rho, BoundMethod::tau3).tau; }

double minor_form(const PureState& psi) {
  const int d = psi.dims()[0];
  const int n = static_cast<int>(psi.dims().parties());
  const double m = std::pow(2.0, n - 1) - 1.0;
  double sum = 0.0;
  for (const auto& b : enumerate_bipartitions(n))
    sum += oracle::ordered_minor_sum(oracle::coefficient_matrix(psi.amplitudes(), d, n, b.left));
  const double weight = n == 2 ? 1.0 : 0.5;
  return d / (2.0 * m * (d - 1.0)) * weight * sum;
}

}  // namespace

TEST_CASE("pair_concurrence") {
  LambdaSpectrum s;
  s.lambdas = {1, 0, 0, 0};
  CHECK(pair_concurrence(s) == 1.0);
  s.lambdas = {0.4, 0.2, 0.1, 0.1};
  CHECK(pair_concurrence(s) == 0.0);
  s.lambdas = {0.5, 0.1, 0.1, 0.1};
  CHECK(pair_concurrence(s) == doctest::Approx(0.2).epsilon(1e-15));
}

TEST_CASE("pure_concurrence") {
  const std::array<int, 3> zeros{0, 0, 0};
  CHECK(pure_concurrence(make_basis_state(zeros, Dims::uniform(2, 3))).value == doctest::Approx(0.0));
  CHECK(pure_concurrence(make_ghz(2, 3)).value == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(pure_concurrence(make_w(3)).value == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(pure_concurrence(make_ghz(2, 2)).value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_FALSE(pure_concurrence(haar_random_pure(Dims{2, 3}, 1)).normalized);

  SUBCASE("purity form agrees with direct minor summation") {
    for (const Dims& d : {Dims::uniform(2, 2), Dims::uniform(3, 2), Dims::uniform(2, 3), Dims::uniform(3, 3),
                          Dims::uniform(2, 4)}) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const PureState psi = haar_random_pure(d, seed);
        const double c = pure_concurrence(psi).value;
        CHECK(std::abs(c * c - minor_form(psi)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("lambda_spectrum") {
  const Dims d = Dims::uniform(2, 3);

  SUBCASE("pure state") {
    const PureState psi = haar_random_pure(d, 17);
    const DensityMatrix rho(psi);
    for_each_pair_operator(d, [&](const SOperator& s) {
      const LambdaSpectrum l = lambda_spectrum(rho, s);
      CHECK(l.lambdas[0] == doctest::Approx(pure_pair_amplitude(psi, s.matrix)).epsilon(1e-9));
      for (int i = 1; i < 4; ++i) CHECK(l.lambdas[static_cast<std::size_t>(i)] <= 1e-4);
    });
  }

  SUBCASE("maximally mixed") {
    const DensityMatrix rho(Matrix::Identity(8, 8) / 8.0, d);
    for_each_pair_operator(d, [&](const SOperator& s) {
      const LambdaSpectrum l = lambda_spectrum(rho, s);
      for (double x : l.lambdas) CHECK(x == doctest::Approx(1.0 / 8.0).epsilon(1e-12));
      CHECK(pair_concurrence(l) == 0.0);
    });
  }

  SUBCASE("Hermitian square-root cross-check") {
    Rng rng(21);
    for (int t = 0; t < 10; ++t) {
      const DensityMatrix rho = random_mixed(d, rng);
      for_each_pair_operator(d, [&](const SOperator& s) {
        const LambdaSpectrum l = lambda_spectrum(rho, s);
        const Matrix tilde = s.matrix * rho.matrix().conjugate() * s.matrix;
        const auto ev = oracle::hermitian_route(rho.matrix(), tilde);
        for (std::size_t i = 0; i < 4; ++i) CHECK(l.lambdas[i] == doctest::Approx(std::sqrt(std::max(0.0, ev[i]))).epsilon(1e-7));
        CHECK(ev[4] <= 1e-10);
        CHECK(l.max_imag <= 1e-8);
      });
    }
  }

  SUBCASE("descending and rank four") {
    Rng rng(8);
    const DensityMatrix rho = random_mixed(Dims::uniform(3, 3), rng);
    for_each_pair_operator(rho.dims(), [&](const SOperator& s) {
      const LambdaSpectrum l = lambda_spectrum(rho, s);
      for (std::size_t i = 0; i < 3; ++i) CHECK(l.lambdas[i] >= l.lambdas[i + 1]);
      CHECK(l.lambdas[3] >= 0.0);
      CHECK(l.fifth_eigenvalue <= 1e-8);
    });
  }

  SUBCASE("rank contract enforced") {
    const DensityMatrix rho(Matrix::Identity(8, 8) / 8.0, d);
    const Matrix s = Matrix::Identity(8, 8);
    CHECK_THROWS_AS(lambda_spectrum(rho.matrix(), s), SpectralContractError);
  }
}

TEST_CASE("tau bounds on canonical states") {
  CHECK(tau3(DensityMatrix(make_ghz(2, 3))) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(tau3(DensityMatrix(make_w(3))) == doctest::Approx(4.0 / 9.0).epsilon(1e-9));
  const std::array<int, 3> zeros{0, 0, 0};
  CHECK(tau3(DensityMatrix(make_basis_state(zeros, Dims::uniform(2, 3)))) <= 1e-12);
  CHECK(tau_bound(DensityMatrix(make_ghz(2, 2)), BoundMethod::tau2).tau == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(tau_n(DensityMatrix(make_ghz(2, 4))).tau == doctest::Approx(pure_concurrence(make_ghz(2, 4)).value * pure_concurrence(make_ghz(2, 4)).value).epsilon(1e-9));

  CHECK_THROWS_AS(tau_bound(DensityMatrix(make_ghz(2, 3)), BoundMethod::tau2), InputError);
  CHECK_THROWS_AS(tau_bound(DensityMatrix(make_ghz(2, 2)), BoundMethod::tau3), InputError);
}

TEST_CASE("BoundReport") {
  Rng rng(4);
  const DensityMatrix rho = isotropic_mix(haar_random_pure(Dims::uniform(2, 3), rng), 0.8);
  const BoundReport r = tau_bound(rho, BoundMethod::tau3);
  CHECK(r.records.size() == 18);
  CHECK(r.kappa == kDefaultKappa);
  CHECK(r.weight == kDefaultKappa);
  CHECK(r.prefactor == doctest::Approx(2.0 / 6.0));
  CHECK(r.convention() == "normalized");
  CHECK(std::abs(r.recompute() - r.tau) <= 1e-12);
  CHECK(r.records[0].bipartition.label() == "1|23");

  SUBCASE("thread count does not change the bits") {
    BoundOptions one, many;
    one.threads = 1;
    many.threads = 7;
    CHECK(tau_bound(rho, BoundMethod::tau3, one).tau == tau_bound(rho, BoundMethod::tau3, many).tau);
  }

  SUBCASE("unequal dimensions are unnormalized") {
    Rng r2(1);
    const BoundReport u = tau_n(random_mixed(Dims{2, 3}, r2));
    CHECK(u.convention() == "unnormalized");
    CHECK(u.prefactor == 1.0);
    CHECK(u.weight == 1.0);
    CHECK(std::abs(u.recompute() - u.tau) <= 1e-12);
  }

  SUBCASE("two-party weight") {
    CHECK(pair_weight(2, kDefaultKappa) == 2.0 * kDefaultKappa);
    CHECK(pair_weight(3, kDefaultKappa) == kDefaultKappa);
  }
}

TEST_CASE("pairwise_sum") {
  std::vector<double> v(1000);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = 1.0 / static_cast<double>(i + 1);
  double naive = 0.0;
  for (double x : v) naive += x;
  CHECK(pairwise_sum(v) == doctest::Approx(naive).epsilon(1e-14));
  CHECK(pairwise_sum(std::span<const double>{}) == 0.0);
}

TEST_CASE("tau2 matches the Wootters oracle on two qubits") {
  Rng rng(77);
  for (int t = 0; t < 50; ++t) {
    const DensityMatrix rho = random_mixed(Dims{2, 2}, rng, 1 + t % 4);
    const double tau = tau_bound(rho, BoundMethod::tau2).tau;
    CHECK(std::abs(std::sqrt(tau) - oracle::wootters_decomposition(rho.matrix())) <= 1e-10);
    CHECK(std::abs(std::sqrt(tau) - oracle::wootters(rho.matrix())) <= 1e-7);
  }
}

TEST_CASE("lower bound and equality on pure states") {
  for (const Dims& d : {Dims::uniform(2, 3), Dims::uniform(3, 3), Dims::uniform(2, 2), Dims::uniform(2, 4)}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const PureState psi = haar_random_pure(d, seed);
      const double c2 = std::pow(pure_concurrence(psi).value, 2);
      CHECK(std::abs(tau_n(DensityMatrix(psi)).tau - c2) <= 1e-9);
    }
  }
}

TEST_CASE("monotone under mixing toward identity") {
  for (const auto& psi : {make_ghz(2, 3), make_w(3)}) {
    double prev = -1.0;
    for (int i = 0; i <= 100; ++i) {
      const double t = tau3(isotropic_mix(psi, i / 100.0));
      CHECK(t >= prev - 1e-12);
      prev = t;
    }
  }
}

TEST_CASE("detection set does not depend on kappa") {
  BoundOptions doubled;
  doubled.kappa = 2.0 * kDefaultKappa;
  for (int i = 0; i <= 100; ++i) {
    const DensityMatrix rho = StateFamily::wmix(i / 100.0).state();
    const double a = tau_bound(rho, BoundMethod::tau3).tau;
    const double b = tau_bound(rho, BoundMethod::tau3, doubled).tau;
    CHECK(b == doctest::Approx(2.0 * a).epsilon(1e-14));
    CHECK((a > 0.0) == (b > 0.0));
  }
}

TEST_CASE("calibration") {
  const Calibration c2 = calibrate(100, 1, 2);
  CHECK(c2.spread < 1e-8);
  CHECK(c2.kappa == doctest::Approx(0.5).epsilon(1e-10));
  const Calibration c3 = calibrate(20, 2, 3);
  CHECK(c3.spread < 1e-8);
  CHECK(std::abs(c3.kappa - c2.kappa) <= 1e-8);
  CHECK(std::abs(calibration_constant(10, 3) - kDefaultKappa) <= 1e-8);
  CHECK_THROWS_AS(calibrate(0, 1), InputError);
}

TEST_CASE("CKW-style trace identity") {
  const Dims d = Dims::uniform(2, 3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DensityMatrix rho(haar_random_pure(d, seed));
    auto pur = [&](int k) {
      const std::array<int, 1> keep{k};
      return rho.reduce(keep).purity();
    };
    const std::array<int, 2> keep01{0, 1};
    const double lhs = pair_weight(2, kDefaultKappa) * pair_trace_sum(rho.reduce(keep01));
    CHECK(std::abs(lhs - (1.0 - pur(0) - pur(1) + pur(2))) <= 1e-9);
  }
}

TEST_CASE("tau2 of the reductions of W") {
  const auto r = tau2_of_reductions(DensityMatrix(make_w(3)));
  for (double x : r) CHECK(x == doctest::Approx(4.0 / 9.0).epsilon(1e-9));
  const auto g = tau2_of_reductions(DensityMatrix(make_ghz(2, 3)));
  for (double x : g) CHECK(x <= 1e-12);
  const double lhs = r[0] + r[1] + r[2];
  CHECK(lhs == doctest::Approx(3.0 * tau3(DensityMatrix(make_w(3)))).epsilon(1e-9));
}
