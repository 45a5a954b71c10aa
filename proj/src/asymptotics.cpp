#include "qgauss/asymptotics.hpp"

#include <cmath>

#include "qgauss/errors.hpp"
#include "qgauss/int_poly.hpp"
#include "qgauss/periods.hpp"

namespace qgauss {

namespace {

double log_base(double p, double x) { return std::log(x) / std::log(p); }

// b-increment scan shared by the ratio and log estimates: walks
// Pi(p, i) = sum p^{nu_p(i)} and tracks b = ceil(log_p Pi), counting the
// steps where b does not move (exactly the steps whose period ratio is
// coprime to p).
struct BScan {
  unsigned b = 0;
  std::uint64_t stationary = 0; // #{i <= k : b(i) == b(i-1)}
};

BScan b_scan(std::uint64_t p, unsigned k) {
  BScan r;
  std::uint64_t pi_sum = 0;
  mpz_class pw = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    std::uint64_t t = 1, m = i;
    while (m % p == 0) {
      m /= p;
      t *= p;
    }
    pi_sum += t;
    unsigned before = r.b;
    while (mpz_cmp_ui(pw.get_mpz_t(), pi_sum) < 0) {
      pw *= static_cast<unsigned long>(p);
      ++r.b;
    }
    if (r.b == before) ++r.stationary;
  }
  return r;
}

void check_pk(std::uint64_t p, unsigned k, std::uint32_t kcap) {
  if (!is_prime_u64(p)) throw InvalidPrime("asymptotics: p must be prime");
  if (k == 0) throw InvalidArgument("asymptotics: need k >= 1");
  if (k > kcap) throw InvalidArgument("asymptotics: k beyond supported range");
}

} // namespace

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
  if (n > 100000000u) throw InvalidArgument("primes_up_to: bound too large");
  std::vector<std::uint32_t> out;
  if (n < 2) return out;
  std::vector<std::uint8_t> composite(n + 1, 0);
  for (std::uint32_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= n; j += i)
      composite[j] = 1;
  }
  return out;
}

unsigned floor_log(std::uint64_t p, std::uint64_t k) {
  if (p < 2) throw InvalidArgument("floor_log: base must be >= 2");
  unsigned r = 0;
  std::uint64_t acc = 1;
  while (acc <= k / p) {
    acc *= p;
    ++r;
  }
  return r;
}

double psi_sieve(unsigned k) {
  if (k < 2) return 0.0;
  double sum = 0.0;
  for (std::uint32_t p : primes_up_to(k))
    sum += floor_log(p, k) * std::log(static_cast<double>(p));
  return sum;
}

PsiPair chebyshev_psi(unsigned k) {
  PsiPair out;
  if (k >= 2) out.lcm = lcm_range(k);
  out.exact = k < 2 ? 0.0 : log_mpz(out.lcm);
  out.sieve = psi_sieve(k);
  return out;
}

NuLcmPair nu_lcm(std::uint64_t p, unsigned k) {
  check_pk(p, k, 100000);
  NuLcmPair out;
  out.exact = k < 2 ? 0 : nu_p(lcm_range(k), p);
  out.floor_log = floor_log(p, k);
  return out;
}

void RunningLcm::extend_to(unsigned k) {
  for (unsigned i = k_ < 2 ? 2 : k_ + 1; i <= k; ++i)
    mpz_lcm_ui(v_.get_mpz_t(), v_.get_mpz_t(), i);
  if (k > k_) k_ = k;
}

unsigned RunningLcm::valuation(std::uint64_t p) const {
  return nu_p(v_, p);
}

double RunningLcm::log() const {
  return log_mpz(v_);
}

CapitalPiEstimate capital_pi_estimate(std::uint64_t p, unsigned k) {
  check_pk(p, k, 1000000000u);
  CapitalPiEstimate out;
  out.exact = capital_pi(p, k);
  const double pd = static_cast<double>(p);
  out.estimate = k < 2 ? 0.0
                       : (pd - 1.0) / pd * static_cast<double>(k) *
                             log_base(pd, static_cast<double>(k));
  out.rel_error = std::abs(out.exact.get_d() - out.estimate) / out.exact.get_d();
  return out;
}

PiLogEstimate pi_estimate_log(std::uint64_t p, unsigned k) {
  check_pk(p, k, 100000000u);
  if (k <= p) throw DomainError("pi_estimate_log: need k > p");
  const double pd = static_cast<double>(p);
  const double lp = std::log(pd);
  const double psi = psi_sieve(k);
  const unsigned nu = floor_log(p, k);

  PiLogEstimate out;
  // log_p(p^b L) with ln L = psi(k) - nu_p(lcm) ln p; no lcm is formed.
  out.exact_log = b_scan(p, k).b + (psi - nu * lp) / lp;
  out.estimate = log_base(pd, log_base(pd, static_cast<double>(k))) + psi / lp;
  return out;
}

QRatioEstimate qperiod_ratio_estimate(std::uint64_t p, unsigned k) {
  check_pk(p, k, 100000000u);
  if (k <= p) throw DomainError("qperiod_ratio_estimate: need k > p");
  BScan scan = b_scan(p, k);
  QRatioEstimate out;
  out.exact = scan.stationary;
  out.b = scan.b;
  out.formula = static_cast<long long>(k) - scan.b;
  const double pd = static_cast<double>(p);
  const double lk = log_base(pd, static_cast<double>(k));
  out.estimate = static_cast<double>(k) - lk - log_base(pd, lk);
  return out;
}

CombinedEstimate combined_estimate(std::uint64_t p, unsigned e, unsigned k) {
  check_pk(p, k, 100000000u);
  if (e == 0) throw InvalidArgument("combined_estimate: need e >= 1");
  if (k <= p) throw DomainError("combined_estimate: need k > p");
  const double pd = static_cast<double>(p);
  const double lp = std::log(pd);
  const double psi = psi_sieve(k);
  const unsigned nu = floor_log(p, k);
  BScan scan = b_scan(p, k);

  CombinedEstimate out;
  // log_p of pi_p(k) p^{e-1} (pi'_p/pi_p)^e, assembled from the same exact
  // pieces: nu_p(pi'_p/pi_p) equals the stationary-step count.
  out.exact_log = scan.b + (psi - nu * lp) / lp + (e - 1.0) +
                  static_cast<double>(e) * static_cast<double>(scan.stationary);
  const double lk = log_base(pd, static_cast<double>(k));
  out.estimate = psi / lp + static_cast<double>(e) * (static_cast<double>(k) - lk) +
                 (1.0 - static_cast<double>(e)) * log_base(pd, lk);
  return out;
}

} // namespace qgauss
