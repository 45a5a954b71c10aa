#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace qgauss {

// Chebyshev psi(k) = ln lcm(1..k), evaluated two independent ways: as the
// log of the exact lcm (kept alongside as an integer) and as the prime-power
// sum over p^a <= k.
struct PsiPair {
  mpz_class lcm = 1;
  double exact = 0.0;
  double sieve = 0.0;
};

PsiPair chebyshev_psi(unsigned k); // one-shot; k capped (use RunningLcm to sweep)
double psi_sieve(unsigned k);

std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

// floor(log_p(k)) by exact integer arithmetic; 0 for k < p.
unsigned floor_log(std::uint64_t p, std::uint64_t k);

// nu_p(lcm(1..k)) both ways: valuation of the exact lcm, and floor(log_p k).
struct NuLcmPair {
  unsigned exact = 0;
  unsigned floor_log = 0;
};

NuLcmPair nu_lcm(std::uint64_t p, unsigned k);

// Incremental lcm(1..k) for ascending sweeps.
class RunningLcm {
public:
  void extend_to(unsigned k);
  unsigned upto() const { return k_; }
  const mpz_class& value() const { return v_; }
  unsigned valuation(std::uint64_t p) const;
  double log() const;

private:
  mpz_class v_ = 1;
  unsigned k_ = 0;
};

// Pi(p,k) against ((p-1)/p) * k * log_p k.
struct CapitalPiEstimate {
  mpz_class exact;
  double estimate = 0.0;
  double rel_error = 0.0;
};

CapitalPiEstimate capital_pi_estimate(std::uint64_t p, unsigned k);

// log_p pi_p(k) against log_p log_p k + psi(k)/ln p. The exact side is
// assembled as b + (psi(k) - floor(log_p k) ln p)/ln p, which equals
// log_p(p^b * L) without forming the lcm. DomainError for k <= p.
struct PiLogEstimate {
  double exact_log = 0.0;
  double estimate = 0.0;
};

PiLogEstimate pi_estimate_log(std::uint64_t p, unsigned k);

// nu_p(pi'_p(k)/pi_p(k)) = #{i <= k : p does not divide pi_p(i)/pi_p(i-1)},
// against the closed form k - b and the estimate
// k - log_p k - log_p log_p k. The closed form undercounts by one at p = 2,
// k >= 2; both are reported. DomainError for k <= p.
struct QRatioEstimate {
  std::uint64_t exact = 0;
  long long formula = 0;
  unsigned b = 0;
  double estimate = 0.0;
};

QRatioEstimate qperiod_ratio_estimate(std::uint64_t p, unsigned k);

// log_p of the closed-form quasi-period mod p^e against
// psi(k)/ln p + e(k - log_p k) + (1 - e) log_p log_p k. DomainError for k <= p.
struct CombinedEstimate {
  double exact_log = 0.0;
  double estimate = 0.0;
};

CombinedEstimate combined_estimate(std::uint64_t p, unsigned e, unsigned k);

} // namespace qgauss
