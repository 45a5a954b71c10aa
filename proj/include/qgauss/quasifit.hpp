#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qgauss/residue_seq.hpp"

namespace qgauss {

enum class CheckStatus { pass, fail, hypothesis_not_met };
const char* check_status_name(CheckStatus s);

// f_{k,R}(n): number of coefficients of [n choose k]_q congruent to R mod N.
// Zero for n < k. Requires R < N.
std::uint64_t f_count(std::uint64_t n, unsigned k, std::uint32_t R, std::uint32_t N);

// All residue counts of [n choose k]_q mod N at once (index R).
std::vector<std::uint64_t> f_histogram(std::uint64_t n, unsigned k, std::uint32_t N);

// Coefficients of [n+k choose k]_q mod N cut into the k sections of length n
// (terms q^{in+j}, 0 <= j < n, per section i) plus the single trailing
// coefficient of q^{kn}.
struct SectionDecomp {
  std::uint64_t n = 0;
  unsigned k = 0;
  std::uint32_t N = 2;
  ResidueSeq coeffs; // length kn + 1

  std::span<const std::uint32_t> section(unsigned i) const; // i < k
  std::uint32_t trailing() const { return coeffs.values.back(); }
};

SectionDecomp decompose(std::uint64_t n, unsigned k, std::uint32_t N);

// With n = l*Q + r, Q = pi'_N(k): inside every section, consecutive
// length-Q blocks agree except for the final partial block of length r.
struct BlockReport {
  std::uint64_t n = 0;
  unsigned k = 0;
  std::uint32_t N = 2;
  std::uint64_t Q = 0;
  std::uint64_t l = 0;
  std::uint64_t r = 0;
  bool pass = false;
  long long first_bad_section = -1;
  long long first_bad_block = -1;
};

BlockReport check_block_equality(std::uint64_t n, unsigned k, std::uint32_t N);

// Number of pairs (lambda, mu): lambda a partition of (m-i)n + j + i*n ...
// jointly |lambda| + |mu| = mn + j, lambda has at most k parts each at most
// n of which at least i equal n, mu has exactly i parts. Exhaustive count.
std::uint64_t enumerate_bad(unsigned i, unsigned m, std::uint64_t j, std::uint64_t n, unsigned k);

// Exact-integer identity behind the section formula: for 1 <= m <= k-1 and
// 0 <= j < n, the coefficient of q^{mn+j} in the box polynomial of
// [n+k choose k]_q equals p_{<=k}(mn+j) minus the bad-pair counts.
struct Lemma34Report {
  std::uint64_t n = 0;
  unsigned k = 0;
  unsigned m = 0;
  std::uint64_t j = 0;
  std::uint64_t lhs = 0;      // box coefficient, exact
  std::uint64_t p_le_k = 0;   // partitions into at most k parts
  std::uint64_t bad_total = 0;
  bool pass = false;
};

Lemma34Report check_lemma34(std::uint64_t n, unsigned k, unsigned m, std::uint64_t j);

// Piecewise-linear description of n -> f_{k,R}(n) on residue classes
// mod Q = pi'_N(k): f(n) = b_i + m_i * (n - i)/Q for n ≡ i (mod Q), n >= k.
// Each class is sampled at the smallest admissible n >= Q + k and twice more
// at +Q, +2Q; non-collinear samples raise NonlinearFit.
struct QuasiFit {
  unsigned k = 0;
  std::uint32_t R = 0;
  std::uint32_t N = 2;
  std::uint64_t Q = 0;
  std::vector<std::int64_t> b;            // intercepts, index i < Q
  std::vector<std::int64_t> m;            // slopes
  std::vector<std::uint64_t> sample_base; // first sampled n per class

  std::int64_t predict(std::uint64_t n) const; // 0 for n < k
};

QuasiFit fit(unsigned k, std::uint32_t R, std::uint32_t N);
std::vector<QuasiFit> fit_all(unsigned k, std::uint32_t N); // index R

// F_{k,R}(x) = sum f(n) x^n as a rational function with denominator
// (1 - x^Q)^2: numerator sum_i [ (1-x^Q) b_i x^i + m_i x^{Q+i} ].
// expand() returns the series coefficients with terms below n = k zeroed
// (the closed form extrapolates class lines back to n = i; f vanishes there
// by convention instead).
struct GenFun {
  std::uint64_t Q = 0;
  unsigned k = 0;
  std::vector<std::int64_t> b;
  std::vector<std::int64_t> m;

  std::vector<std::int64_t> expand(std::size_t terms) const;
};

GenFun genfun(const QuasiFit& qf);

// Slope translation symmetry: m_i == m_{(i + pi'_N(k-1)) mod Q}. The check
// always runs; hypothesis_met records whether the derivation's premise held
// (N odd and the k-1 zero-sum strong). Verdict: pass when the equality
// holds, fail only when it breaks with the premise satisfied,
// hypothesis_not_met when it breaks without it.
struct SlopePeriodReport {
  unsigned k = 0;
  std::uint32_t R = 0;
  std::uint32_t N = 2;
  std::uint64_t Q = 0;       // pi'_N(k)
  std::uint64_t Q_prev = 0;  // pi'_N(k-1)
  bool n_odd = true;
  bool hypothesis_met = false;
  bool slopes_translate = false;
  long long first_bad_i = -1;
  std::uint64_t observed_min_period = 0; // least divisor d of Q with m_i == m_{i+d}
  bool slopes_reflect = false;           // m_i == m_{(-i) mod Q}, exploratory
  CheckStatus status = CheckStatus::fail;
};

SlopePeriodReport check_slope_period(unsigned k, std::uint32_t R, std::uint32_t N);
std::vector<SlopePeriodReport> check_slope_period_all(unsigned k, std::uint32_t N);

// Zero runs inside sections of [n+k choose k]_q for n = l * pi'_N(k):
// in section i, every length-Q block ends with C(k+1-i,2)-1 zeros and
// blocks after the first open with C(i+2,2)-1 zeros.
struct SectionZeroReport {
  std::uint64_t l = 0;
  unsigned k = 0;
  std::uint32_t N = 2;
  std::uint64_t Q = 0;
  bool pass = false;
  long long first_bad_section = -1;
  long long first_bad_index = -1;
};

SectionZeroReport check_section_zeros(std::uint64_t l, unsigned k, std::uint32_t N);

// Smallest Q* <= bound such that all points of every residue class mod Q*
// (n >= k) are collinear, judged over a window holding at least four points
// per class. Requires bound >= pi_N(k) so the formula period is in range.
std::optional<std::uint64_t> minimal_quasiperiod_search(unsigned k, std::uint32_t R,
                                                        std::uint32_t N, std::uint64_t bound);

} // namespace qgauss
