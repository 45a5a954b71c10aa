#include "qgauss/structure.hpp"

#include <string>

#include "qgauss/errors.hpp"
#include "qgauss/partitions.hpp"
#include "qgauss/periods.hpp"

namespace qgauss {

namespace {
std::uint64_t choose2(std::uint64_t a) { return a * (a - 1) / 2; }
} // namespace

SProfile s_sequence(unsigned k, std::uint32_t N) {
  check_modulus(N);
  if (k == 0) throw InvalidArgument("s_sequence: need k >= 1");

  SProfile prof;
  prof.k = k;
  prof.N = N;
  prof.sign = (k % 2 == 0) ? -1 : 1;

  const std::uint64_t pi = pi_n_u64(N, k, std::uint64_t{1} << 28);
  prof.seq = p_le_k_prefix(k, N, static_cast<std::size_t>(pi));
  prof.zero_tail = choose2(k + 1) - 1;

  const auto& s = prof.seq.values;
  if (prof.zero_tail < pi) {
    prof.tail_checked = true;
    for (std::uint64_t i = pi - prof.zero_tail; i < pi; ++i) {
      if (s[i] != 0)
        throw StructureViolation("s_sequence: tail entry " + std::to_string(i) +
                                 " nonzero for k=" + std::to_string(k) +
                                 " N=" + std::to_string(N));
    }
  }

  // s_i == sign * s_{hi - i} (mod N) with hi = pi - C(k+1,2); entries above
  // hi are the zero tail just checked.
  const std::uint64_t c = prof.zero_tail + 1;
  if (c <= pi) {
    prof.symmetry_checked = true;
    const std::uint64_t hi = pi - c;
    for (std::uint64_t i = 0; i <= hi; ++i) {
      std::uint32_t lhs = s[i];
      std::uint32_t rhs = s[hi - i];
      std::uint32_t expect = prof.sign == 1 ? rhs : (rhs == 0 ? 0 : N - rhs);
      if (lhs != expect)
        throw StructureViolation("s_sequence: symmetry fails at i=" + std::to_string(i) +
                                 " for k=" + std::to_string(k) + " N=" + std::to_string(N));
    }
  }
  return prof;
}

IntPoly gamma_poly(unsigned k, std::uint64_t Q) {
  if (k == 0) throw InvalidArgument("gamma_poly: need k >= 1");
  if (Q == 0) throw InvalidArgument("gamma_poly: need Q >= 1");
  if (Q > (std::uint64_t{1} << 24) / k)
    throw InvalidArgument("gamma_poly: Q too large");

  // (1 - x^Q)^k: sparse alternating binomials at multiples of Q.
  std::vector<mpz_class> num(static_cast<std::size_t>(k) * Q + 1);
  for (unsigned t = 0; t <= k; ++t) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), k, t);
    num[static_cast<std::size_t>(t) * Q] = (t % 2 == 0) ? c : -c;
  }

  std::vector<mpz_class> den{1};
  for (unsigned i = 1; i <= k; ++i) {
    std::vector<mpz_class> next(den.size() + i);
    for (std::size_t j = 0; j < den.size(); ++j) {
      next[j] += den[j];
      next[j + i] -= den[j];
    }
    den = std::move(next);
  }

  return poly_div_exact(IntPoly(std::move(num)), IntPoly(std::move(den)));
}

GammaCongruence check_gamma_congruence(unsigned k, std::uint64_t p, unsigned e) {
  GammaCongruence rep;
  rep.k = k;
  rep.p = p;
  rep.e = e;

  if (!is_prime_u64(p)) throw InvalidPrime("check_gamma_congruence: p must be prime");
  if (e == 0 || k == 0) throw InvalidArgument("check_gamma_congruence: need e, k >= 1");

  const std::uint64_t Q = mpz_to_u64(pi_prime_power(p, e, k).pi, "gamma congruence period");
  rep.Q = Q;
  IntPoly g = gamma_poly(k, Q);

  mpz_class mod;
  mpz_ui_pow_ui(mod.get_mpz_t(), static_cast<unsigned long>(p), e);
  const bool negate = (k % 2 == 0); // (-1)^{k-1}

  rep.pass = true;
  for (std::uint64_t r = 0; r < Q; ++r) {
    mpz_class lhs = g.coeff(static_cast<std::size_t>(r + Q * (k - 1)));
    mpz_class rhs = g.coeff(static_cast<std::size_t>(r));
    if (negate) rhs = -rhs;
    mpz_class diff = lhs - rhs;
    if (!mpz_divisible_p(diff.get_mpz_t(), mod.get_mpz_t())) {
      rep.pass = false;
      rep.first_bad_r = static_cast<long long>(r);
      break;
    }
  }
  return rep;
}

ZeroSumReport check_zero_sum(unsigned k, std::uint32_t N) {
  check_modulus(N);
  if (N % 2 == 0) throw InvalidArgument("check_zero_sum: N must be odd");
  if (N < 3) throw InvalidArgument("check_zero_sum: need N >= 3");
  if (k == 0) throw InvalidArgument("check_zero_sum: need k >= 1");

  ZeroSumReport rep;
  rep.k = k;
  rep.N = N;
  rep.period = pi_n(N, k);

  const std::uint64_t pi = pi_n_u64(N, k, std::uint64_t{1} << 28);
  ResidueSeq seq = p_le_k_prefix(k, N, static_cast<std::size_t>(pi));
  std::uint64_t sum = 0;
  for (std::uint32_t v : seq.values) sum += v; // pi * (N-1) stays far below 2^64
  rep.sum_mod = sum % N;
  rep.strong = rep.sum_mod == 0;

  mpz_class next = pi_n(N, k + 1);
  rep.ratio = next / rep.period;
  mpz_class rm = rep.ratio % N;
  rep.weak = (mpz_to_u64(rm, "zero-sum ratio") * rep.sum_mod) % N == 0;

  mpz_class g;
  mpz_class nz(static_cast<unsigned long>(N));
  mpz_gcd(g.get_mpz_t(), rep.ratio.get_mpz_t(), nz.get_mpz_t());
  rep.predicted_weak_only = (k % 2 == 1) && g > 1;
  return rep;
}

} // namespace qgauss
