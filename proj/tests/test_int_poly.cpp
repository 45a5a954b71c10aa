#include <doctest.h>

#include <random>
#include <vector>

#include "qgauss/errors.hpp"
#include "qgauss/int_poly.hpp"
#include "qgauss/residue_seq.hpp"

#include "oracles.hpp"

using namespace qgauss;

namespace {

IntPoly random_poly(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long> coef(-9, 9);
  std::vector<mpz_class> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  return IntPoly(std::move(c));
}

} // namespace

TEST_SUITE("int_poly") {

TEST_CASE("degree and trimming") {
  REQUIRE(IntPoly{}.degree() == -1);
  REQUIRE(IntPoly({0, 0, 0}).degree() == -1);
  IntPoly p({1, 0, 2, 0});
  REQUIRE(p.degree() == 2);
  REQUIRE(p.coeff(0) == 1);
  REQUIRE(p.coeff(1) == 0);
  REQUIRE(p.coeff(2) == 2);
  REQUIRE(p.coeff(99) == 0);
}

TEST_CASE("multiplication against a hand product") {
  IntPoly a({1, 1});       // 1 + q
  IntPoly b({1, 0, -1});   // 1 - q^2
  IntPoly c = poly_mul(a, b);
  REQUIRE(c == IntPoly({1, 1, -1, -1}));
  REQUIRE(poly_mul(a, IntPoly{}).degree() == -1);
}

TEST_CASE("exact division round-trips random products") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 200; ++trial) {
    IntPoly a = random_poly(rng, 8);
    IntPoly b = random_poly(rng, 8);
    if (b.degree() < 0) continue;
    IntPoly prod = poly_mul(a, b);
    REQUIRE(poly_div_exact(prod, b) == a);
  }
}

TEST_CASE("division failures throw") {
  IntPoly p({1, 0, 1}); // 1 + q^2
  REQUIRE_THROWS_AS(poly_div_exact(p, IntPoly({1, 1})), NonExactDivision);
  REQUIRE_THROWS_AS(poly_div_exact(p, IntPoly{}), InvalidArgument);
}

TEST_CASE("add and sub agree with eval") {
  std::mt19937_64 rng(405);
  for (int trial = 0; trial < 100; ++trial) {
    IntPoly a = random_poly(rng, 6);
    IntPoly b = random_poly(rng, 6);
    REQUIRE(poly_add(a, b).eval_one() == a.eval_one() + b.eval_one());
    REQUIRE(poly_sub(a, b).eval_one() == a.eval_one() - b.eval_one());
  }
}

TEST_CASE("palindrome detection") {
  REQUIRE(IntPoly({1, 1, 2, 2, 1, 1}).is_palindrome());
  REQUIRE(IntPoly({5}).is_palindrome());
  REQUIRE(!IntPoly({1, 2, 3}).is_palindrome());
  REQUIRE(IntPoly{}.is_palindrome());
}

TEST_CASE("partition series prefix matches brute-force counts") {
  for (unsigned k = 1; k <= 5; ++k) {
    auto pre = partition_series_exact(k, 41);
    REQUIRE(pre.size() == 41);
    for (std::uint64_t n = 0; n <= 40; ++n)
      REQUIRE(pre[static_cast<std::size_t>(n)] == oracles::count_at_most(n, k));
  }
}

TEST_CASE("lag difference on exact windows") {
  // delta with lag 5 on 1,1,2,3,4,5,7 leaves the first five alone.
  std::vector<mpz_class> w{1, 1, 2, 3, 4, 5, 7};
  w = delta_q(std::move(w), 5);
  std::vector<mpz_class> want{1, 1, 2, 3, 4, 4, 6};
  REQUIRE(w == want);
}

TEST_CASE("residue-sequence delta matches the exact delta mod N") {
  std::mt19937_64 rng(406);
  for (std::uint32_t N : {2u, 3u, 7u}) {
    std::uniform_int_distribution<std::uint32_t> dist(0, N - 1);
    std::vector<std::uint32_t> vals(50);
    for (auto& v : vals) v = dist(rng);
    for (std::uint64_t q : {1u, 4u, 9u}) {
      ResidueSeq seq{N, vals};
      seq = delta_q(seq, q);
      std::vector<mpz_class> w(vals.begin(), vals.end());
      w = delta_q(std::move(w), q);
      for (std::size_t i = 0; i < vals.size(); ++i) {
        mpz_class r = w[i] % N;
        if (r < 0) r += N;
        REQUIRE(mpz_class(seq[i]) == r);
      }
    }
  }
}

TEST_CASE("prime testing") {
  REQUIRE(!is_prime_u64(0));
  REQUIRE(!is_prime_u64(1));
  REQUIRE(is_prime_u64(2));
  REQUIRE(is_prime_u64(3));
  REQUIRE(!is_prime_u64(4));
  REQUIRE(is_prime_u64(97));
  REQUIRE(!is_prime_u64(91));
  REQUIRE(is_prime_u64(1000003));
  REQUIRE(!is_prime_u64(1000001));
}

TEST_CASE("valuations") {
  REQUIRE(nu_p(mpz_class(12), 2) == 2);
  REQUIRE(nu_p(mpz_class(12), 3) == 1);
  REQUIRE(nu_p(mpz_class(1), 5) == 0);
  REQUIRE(nu_p_u64(3360, 2) == 5);
  REQUIRE_THROWS_AS(nu_p(mpz_class(10), 4), InvalidPrime);
  REQUIRE_THROWS_AS(nu_p(mpz_class(0), 3), InvalidArgument);

  std::mt19937_64 rng(407);
  std::uniform_int_distribution<unsigned long> dist(1, 100000);
  for (int trial = 0; trial < 50; ++trial) {
    mpz_class a = dist(rng), b = dist(rng);
    for (std::uint64_t p : {2u, 3u, 7u})
      REQUIRE(nu_p(a * b, p) == nu_p(a, p) + nu_p(b, p));
  }
}

TEST_CASE("lcm of initial ranges") {
  const unsigned long want[] = {1, 1, 2, 6, 12, 60, 60, 420, 840, 2520, 2520};
  for (unsigned k = 0; k <= 10; ++k) REQUIRE(lcm_range(k) == want[k]);
  REQUIRE(lcm_range(30) == mpz_class("2329089562800"));
}

TEST_CASE("factorization") {
  auto f = factorize(360);
  REQUIRE(f.size() == 3);
  REQUIRE(f[0].first == 2);
  REQUIRE(f[0].second == 3);
  REQUIRE(f[1].first == 3);
  REQUIRE(f[1].second == 2);
  REQUIRE(f[2].first == 5);
  REQUIRE(f[2].second == 1);
  REQUIRE(factorize(97).size() == 1);
  REQUIRE(factorize(1).empty());
}

TEST_CASE("narrowing conversions guard their range") {
  REQUIRE(mpz_to_u64(mpz_class(123), "test") == 123);
  mpz_class huge;
  mpz_ui_pow_ui(huge.get_mpz_t(), 2, 80);
  REQUIRE_THROWS_AS(mpz_to_u64(huge, "test"), InvalidArgument);
  REQUIRE_THROWS_AS(mpz_to_size(huge, "test", 1000), InvalidArgument);
}

TEST_CASE("logarithms of big integers") {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, 100);
  REQUIRE(log_mpz(v) == doctest::Approx(100.0 * 0.6931471805599453).epsilon(1e-12));
  REQUIRE(log_mpz(mpz_class(1)) == doctest::Approx(0.0));
}

} // TEST_SUITE
