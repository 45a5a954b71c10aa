#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "qgauss/asymptotics.hpp"
#include "qgauss/errors.hpp"
#include "qgauss/int_poly.hpp"
#include "qgauss/periods.hpp"

using namespace qgauss;

TEST_SUITE("asymptotics") {

TEST_CASE("floor logarithms") {
  REQUIRE(floor_log(2, 10) == 3);
  REQUIRE(floor_log(3, 9) == 2);
  REQUIRE(floor_log(3, 8) == 1);
  REQUIRE(floor_log(2, 1) == 0);
  REQUIRE(floor_log(5, 4) == 0);
  REQUIRE(floor_log(2, 1u << 20) == 20);
}

TEST_CASE("prime sieve") {
  auto p = primes_up_to(30);
  std::vector<std::uint64_t> got(p.begin(), p.end());
  REQUIRE(got == std::vector<std::uint64_t>({2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
  REQUIRE(primes_up_to(1).empty());
}

TEST_CASE("both second Chebyshev function paths agree") {
  REQUIRE(chebyshev_psi(1).lcm == 1);
  REQUIRE(chebyshev_psi(1).exact == 0.0);
  REQUIRE(chebyshev_psi(6).lcm == 60);

  PsiPair p4 = chebyshev_psi(4);
  REQUIRE(p4.lcm == 12);
  REQUIRE(p4.exact == doctest::Approx(std::log(12.0)).epsilon(1e-12));
  REQUIRE(p4.sieve == doctest::Approx(std::log(12.0)).epsilon(1e-12));

  PsiPair p10 = chebyshev_psi(10);
  REQUIRE(p10.lcm == 2520);
  REQUIRE(p10.exact == doctest::Approx(std::log(2520.0)).epsilon(1e-12));
  REQUIRE(p10.sieve == doctest::Approx(p10.exact).epsilon(1e-12));

  for (unsigned k : {1u, 2u, 17u, 100u, 1000u}) {
    PsiPair pk = chebyshev_psi(k);
    REQUIRE(pk.sieve == doctest::Approx(pk.exact).epsilon(1e-11));
  }
}

TEST_CASE("lcm valuations from the exact lcm and from counting") {
  NuLcmPair n = nu_lcm(2, 10);
  REQUIRE(n.exact == 3);
  REQUIRE(n.floor_log == 3);
  REQUIRE(nu_lcm(3, 100).exact == 4);
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    for (unsigned k = 1; k <= 300; ++k) {
      NuLcmPair v = nu_lcm(p, k);
      REQUIRE(v.exact == v.floor_log);
    }
  }
}

TEST_CASE("incremental lcm walker matches one-shot computation") {
  RunningLcm r;
  r.extend_to(10);
  REQUIRE(r.upto() == 10);
  REQUIRE(r.value() == 2520);
  REQUIRE(r.valuation(2) == 3);
  REQUIRE(r.valuation(3) == 2);
  REQUIRE(r.valuation(7) == 1);
  r.extend_to(30);
  REQUIRE(r.value() == lcm_range(30));
  REQUIRE(r.log() == doctest::Approx(log_mpz(lcm_range(30))).epsilon(1e-12));
}

TEST_CASE("weight-sum estimate improves with k") {
  CapitalPiEstimate a = capital_pi_estimate(5, 5);
  REQUIRE(a.exact == 9);
  CapitalPiEstimate b = capital_pi_estimate(2, 4);
  REQUIRE(b.exact == 8);
  CapitalPiEstimate coarse = capital_pi_estimate(2, 1000);
  CapitalPiEstimate fine = capital_pi_estimate(2, 1000000);
  REQUIRE(fine.rel_error < coarse.rel_error);
}

TEST_CASE("log-period assembly agrees with the direct logarithm") {
  // log_2 pi_2(4): the assembled value must equal log2(24), and for k = 4 the
  // estimate collapses to the same number exactly.
  PiLogEstimate pl = pi_estimate_log(2, 4);
  const double want = std::log(24.0) / std::log(2.0);
  REQUIRE(pl.exact_log == doctest::Approx(want).epsilon(1e-12));
  REQUIRE(pl.estimate == doctest::Approx(want).epsilon(1e-12));

  const std::pair<std::uint64_t, unsigned> grid[] = {{2, 100}, {3, 50}, {5, 30}};
  for (auto [p, k] : grid) {
    PiLogEstimate got = pi_estimate_log(p, k);
    double direct =
        log_mpz(pi_n(static_cast<std::uint32_t>(p), k)) / std::log(static_cast<double>(p));
    REQUIRE(got.exact_log == doctest::Approx(direct).epsilon(1e-9));
  }

  // At k = 100 the estimate should already sit well within a quarter of the
  // exact value.
  PiLogEstimate mid = pi_estimate_log(3, 100);
  REQUIRE(std::abs(mid.estimate - mid.exact_log) <= 0.25 * std::abs(mid.exact_log));
}

TEST_CASE("quasi-period ratio: stationary count versus the stated formula") {
  QRatioEstimate qr = qperiod_ratio_estimate(2, 8);
  REQUIRE(qr.exact == 4);
  REQUIRE(qr.formula == 3); // the stated k - b undercounts at p = 2
  // The exact column is the valuation of the quasi-period to period ratio.
  mpz_class ratio = pi_prime_n(2, 8) / pi_n(2, 8);
  REQUIRE(ratio == 16);
  REQUIRE(qr.exact == nu_p(ratio, 2));

  QRatioEstimate qr3 = qperiod_ratio_estimate(3, 9);
  mpz_class ratio3 = pi_prime_n(3, 9) / pi_n(3, 9);
  REQUIRE(qr3.exact == nu_p(ratio3, 3));
}

TEST_CASE("combined prime-power log estimate") {
  CombinedEstimate ce = combined_estimate(2, 2, 8);
  const double direct = log_mpz(pi_prime_power_formula(2, 2, 8)) / std::log(2.0);
  REQUIRE(pi_prime_power_formula(2, 2, 8) == 1720320);
  REQUIRE(ce.exact_log == doctest::Approx(direct).epsilon(1e-9));

  // At e = 1 the combined expression is the sum of the two partial ones, on
  // both the estimate and the exact side.
  CombinedEstimate c1 = combined_estimate(2, 1, 8);
  PiLogEstimate pl = pi_estimate_log(2, 8);
  QRatioEstimate qr = qperiod_ratio_estimate(2, 8);
  REQUIRE(c1.estimate == doctest::Approx(pl.estimate + qr.estimate).epsilon(1e-12));
  REQUIRE(c1.exact_log ==
          doctest::Approx(pl.exact_log + static_cast<double>(qr.exact)).epsilon(1e-12));
  REQUIRE(c1.exact_log ==
          doctest::Approx(log_mpz(pi_prime_power_formula(2, 1, 8)) / std::log(2.0))
              .epsilon(1e-9));
}

TEST_CASE("small k stays out of the asymptotic regime") {
  REQUIRE_THROWS_AS(pi_estimate_log(2, 2), DomainError);
  REQUIRE_THROWS_AS(pi_estimate_log(5, 5), DomainError);
  REQUIRE_THROWS_AS(qperiod_ratio_estimate(3, 3), DomainError);
  REQUIRE_THROWS_AS(combined_estimate(2, 2, 2), DomainError);
  REQUIRE_THROWS_AS(pi_estimate_log(4, 10), InvalidPrime);
}

} // TEST_SUITE
