#pragma once

#include <cstdint>

#include <gmpxx.h>

#include "qgauss/int_poly.hpp"
#include "qgauss/residue_seq.hpp"

namespace qgauss {

// One period of p_{<=k} mod N together with its verified structure:
// the last C(k+1,2)-1 entries are zero, and s_i == sign * s_{pi - C(k+1,2) - i}
// (mod N) with sign = (-1)^{k+1}. s_sequence throws StructureViolation if
// either fails; the flags record what was actually checkable.
struct SProfile {
  unsigned k = 0;
  std::uint32_t N = 2;
  ResidueSeq seq;            // one full period
  std::uint64_t zero_tail = 0; // C(k+1,2) - 1
  int sign = 1;              // (-1)^{k+1}
  bool symmetry_checked = false;
  bool tail_checked = false;
};

SProfile s_sequence(unsigned k, std::uint32_t N);

// gamma(x) = (1 - x^Q)^k / prod_{i=1..k} (1 - x^i), exact in Z[x].
// Throws NonExactDivision when the division is not exact (Q not admissible).
IntPoly gamma_poly(unsigned k, std::uint64_t Q);

// Coefficientwise congruence gamma_{r + Q(k-1)} == (-1)^{k-1} gamma_r
// (mod p^e) for 0 <= r < Q, with Q = pi_{p^e}(k). Coefficients beyond the
// degree count as zero.
struct GammaCongruence {
  unsigned k = 0;
  std::uint64_t p = 0;
  unsigned e = 0;
  std::uint64_t Q = 0;
  bool pass = false;
  long long first_bad_r = -1;
};

GammaCongruence check_gamma_congruence(unsigned k, std::uint64_t p, unsigned e);

// Sum of one period of p_{<=k} mod N, for odd N >= 3 and k >= 1.
//   strong: sum == 0 (mod N)
//   weak:   (pi_{k+1}/pi_k) * sum == 0 (mod N)
// predicted_weak_only mirrors the stated hypothesis: k odd and
// gcd(pi_{k+1}/pi_k, N) > 1.
struct ZeroSumReport {
  unsigned k = 0;
  std::uint32_t N = 3;
  mpz_class period;
  std::uint64_t sum_mod = 0;
  mpz_class ratio;           // pi_n(N, k+1) / pi_n(N, k)
  bool strong = false;
  bool weak = false;
  bool predicted_weak_only = false;
};

ZeroSumReport check_zero_sum(unsigned k, std::uint32_t N);

} // namespace qgauss
