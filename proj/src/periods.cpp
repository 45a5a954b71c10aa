#include "qgauss/periods.hpp"

#include "qgauss/errors.hpp"
#include "qgauss/int_poly.hpp"

namespace qgauss {

mpz_class capital_pi(std::uint64_t p, unsigned k) {
  if (!is_prime_u64(p)) throw InvalidPrime("capital_pi: p must be prime");
  if (k == 0) return 0;
  if (k > 1000000000u) throw InvalidArgument("capital_pi: k too large");
  // Each term p^{nu_p(i)} <= i <= k, so the sum fits u64 comfortably.
  std::uint64_t sum = 0;
  for (std::uint64_t i = 1; i <= k; ++i) {
    std::uint64_t t = 1;
    std::uint64_t m = i;
    while (m % p == 0) {
      m /= p;
      t *= p;
    }
    sum += t;
  }
  return mpz_class(static_cast<unsigned long>(sum));
}

PeriodInfo pi_prime_power(std::uint64_t p, unsigned e, unsigned k) {
  if (!is_prime_u64(p)) throw InvalidPrime("pi_prime_power: p must be prime");
  if (e == 0) throw InvalidArgument("pi_prime_power: need e >= 1");
  if (k == 0) throw InvalidArgument("pi_prime_power: need k >= 1");

  PeriodInfo info;
  info.p = p;
  info.e = e;
  info.k = k;

  mpz_class big_pi = capital_pi(p, k);
  mpz_class pw = 1;
  unsigned b = 0;
  while (pw < big_pi) {
    pw *= static_cast<unsigned long>(p);
    ++b;
  }
  info.b = b;

  mpz_class l = lcm_range(k);
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class lfree;
  mpz_remove(lfree.get_mpz_t(), l.get_mpz_t(), pz.get_mpz_t());
  info.L = lfree;

  if (k == 1) {
    // p_{<=1} is constant; the closed form would report p^{e-1}.
    info.pi = 1;
    return info;
  }
  mpz_class pe;
  mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p), b + e - 1);
  info.pi = pe * lfree;
  return info;
}

mpz_class pi_n(std::uint32_t N, unsigned k) {
  check_modulus(N);
  if (k == 0) return 1;
  mpz_class result = 1;
  for (auto [p, e] : factorize(N)) {
    mpz_class part = pi_prime_power(p, e, k).pi;
    mpz_lcm(result.get_mpz_t(), result.get_mpz_t(), part.get_mpz_t());
  }
  return result;
}

std::uint64_t pi_n_u64(std::uint32_t N, unsigned k, std::uint64_t cap) {
  mpz_class v = pi_n(N, k);
  std::uint64_t r = mpz_to_u64(v, "pi_n");
  if (r > cap) throw InvalidArgument("pi_n: period beyond supported range");
  return r;
}

std::vector<QPeriodRow> qperiod_table(std::uint32_t N, unsigned kmax) {
  check_modulus(N);
  std::vector<QPeriodRow> rows(kmax + 1);
  rows[0] = QPeriodRow{0, 1, 1, false, 1};
  mpz_class nz(static_cast<unsigned long>(N));
  for (unsigned k = 1; k <= kmax; ++k) {
    QPeriodRow& r = rows[k];
    r.k = k;
    r.pi = pi_n(N, k);
    r.ratio = r.pi / rows[k - 1].pi;
    r.divisible = mpz_divisible_p(r.ratio.get_mpz_t(), nz.get_mpz_t()) != 0;
    r.pi_prime = rows[k - 1].pi_prime * r.ratio;
    if (!r.divisible) r.pi_prime *= nz;
  }
  return rows;
}

mpz_class pi_prime_n(std::uint32_t N, unsigned k) {
  return qperiod_table(N, k)[k].pi_prime;
}

std::uint64_t pi_prime_n_u64(std::uint32_t N, unsigned k, std::uint64_t cap) {
  mpz_class v = pi_prime_n(N, k);
  std::uint64_t r = mpz_to_u64(v, "pi_prime_n");
  if (r > cap) throw InvalidArgument("pi_prime_n: quasi-period beyond supported range");
  return r;
}

mpz_class pi_prime_power_formula(std::uint64_t p, unsigned e, unsigned k) {
  if (!is_prime_u64(p)) throw InvalidPrime("pi_prime_power_formula: p must be prime");
  if (e == 0) throw InvalidArgument("pi_prime_power_formula: need e >= 1");
  if (k == 0) throw InvalidArgument("pi_prime_power_formula: need k >= 1");
  if (p > 0xffffffffull) throw InvalidArgument("pi_prime_power_formula: p too large");

  mpz_class pi_p = pi_n(static_cast<std::uint32_t>(p), k);
  mpz_class qp = pi_prime_n(static_cast<std::uint32_t>(p), k);
  mpz_class ratio = qp / pi_p;
  mpz_class pe;
  mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p), e - 1);
  mpz_class ratio_e;
  mpz_pow_ui(ratio_e.get_mpz_t(), ratio.get_mpz_t(), e);
  return pi_p * pe * ratio_e;
}

std::optional<std::uint64_t> minimal_period(const std::vector<std::uint32_t>& v) {
  const std::size_t n = v.size();
  for (std::size_t P = 1; 3 * P <= n; ++P) {
    bool ok = true;
    for (std::size_t i = P; i < n; ++i) {
      if (v[i] != v[i - P]) {
        ok = false;
        break;
      }
    }
    if (ok) return P;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> minimal_period(const ResidueSeq& s) {
  return minimal_period(s.values);
}

} // namespace qgauss
