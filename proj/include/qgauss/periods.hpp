#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "qgauss/residue_seq.hpp"

namespace qgauss {

// Pi(p, k) = sum_{i=1..k} p^{nu_p(i)}.
mpz_class capital_pi(std::uint64_t p, unsigned k);

// Minimal period of p_{<=k} mod p^e and the quantities behind it:
//   b  = least exponent with p^b >= Pi(p, k)
//   L  = p-free part of lcm(1..k)
//   pi = p^{b+e-1} * L, except k = 1 where the sequence is constant and the
//        minimal period is 1 (the closed form degenerates there).
struct PeriodInfo {
  std::uint64_t p = 0;
  unsigned e = 0;
  unsigned k = 0;
  unsigned b = 0;
  mpz_class L;
  mpz_class pi;
};

PeriodInfo pi_prime_power(std::uint64_t p, unsigned e, unsigned k);

// Minimal period of p_{<=k} mod N: lcm over the prime-power parts of N.
// pi_n(N, 0) = 1.
mpz_class pi_n(std::uint32_t N, unsigned k);

// pi_n, converted to a machine integer; InvalidArgument if it exceeds cap.
std::uint64_t pi_n_u64(std::uint32_t N, unsigned k, std::uint64_t cap = UINT64_MAX);

// Quasi-period table. Row k holds pi = pi_n(N,k), ratio = pi_k / pi_{k-1},
// whether N | ratio, and the quasi-period
//   pi'_k = ratio * pi'_{k-1}       if N | ratio
//         = N * ratio * pi'_{k-1}   otherwise,
// with pi'_0 = 1.
struct QPeriodRow {
  unsigned k = 0;
  mpz_class pi;
  mpz_class ratio;
  bool divisible = false;
  mpz_class pi_prime;
};

std::vector<QPeriodRow> qperiod_table(std::uint32_t N, unsigned kmax);
mpz_class pi_prime_n(std::uint32_t N, unsigned k);
std::uint64_t pi_prime_n_u64(std::uint32_t N, unsigned k, std::uint64_t cap = UINT64_MAX);

// Closed form for the quasi-period mod p^e:
//   pi_p(k) * p^{e-1} * (pi'_p(k) / pi_p(k))^e.
// Agrees with the recursion at e = 1 by construction; at e >= 2 the two are
// reported side by side and genuinely differ for some inputs.
mpz_class pi_prime_power_formula(std::uint64_t p, unsigned e, unsigned k);

// Smallest P >= 1 with v[i] == v[i-P] for all i >= P, provided the window
// shows at least three full repeats (3P <= v.size()); nullopt otherwise.
std::optional<std::uint64_t> minimal_period(const std::vector<std::uint32_t>& v);
std::optional<std::uint64_t> minimal_period(const ResidueSeq& s);

} // namespace qgauss
