#include "qgauss/kernels.hpp"

#if defined(QGAUSS_HAVE_AVX2)

#include <immintrin.h>

namespace qgauss::kernels {
namespace {

// Residues stay below m <= 2^31, so an unreduced sum fits in a lane and the
// reduction is a single unsigned min against the wrapped alternative.
inline __m256i add_mod(__m256i a, __m256i b, __m256i vm) {
  __m256i s = _mm256_add_epi32(a, b);
  return _mm256_min_epu32(s, _mm256_sub_epi32(s, vm));
}

inline __m256i sub_mod(__m256i a, __m256i b, __m256i vm) {
  __m256i d = _mm256_sub_epi32(a, b);
  return _mm256_min_epu32(d, _mm256_add_epi32(d, vm));
}

void add_lag_avx2(std::uint32_t* v, std::size_t n, std::size_t lag, std::uint32_t m) {
  if (lag == 0 || lag >= n) return;
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(m));

  if (lag >= 8) {
    // Reads trail the writes by at least a full vector, so blocks are
    // independent.
    std::size_t i = lag;
    for (; i + 8 <= n; i += 8) {
      __m256i prev = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i - lag));
      __m256i cur = _mm256_loadu_si256(reinterpret_cast<__m256i*>(v + i));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(v + i), add_mod(cur, prev, vm));
    }
    for (; i < n; ++i) {
      std::uint32_t s = v[i] + v[i - lag];
      v[i] = s >= m ? s - m : s;
    }
    return;
  }

  // lag in 1..7: the recurrence y[i] = x[i] + y[i-lag] is a prefix sum along
  // each residue chain. Within a block, lane t accumulates x[t - j*lag] by
  // doubling shifts; the part of the chain below the block enters as a carry
  // holding the previous block's final values at lanes 8-lag+(t mod lag).
  __m256i step_idx[3], step_msk[3];
  int steps = 0;
  for (std::size_t s = lag; s < 8; s <<= 1, ++steps) {
    alignas(32) int ib[8], mb[8];
    for (int t = 0; t < 8; ++t) {
      ib[t] = t >= static_cast<int>(s) ? t - static_cast<int>(s) : 0;
      mb[t] = t >= static_cast<int>(s) ? -1 : 0;
    }
    step_idx[steps] = _mm256_load_si256(reinterpret_cast<const __m256i*>(ib));
    step_msk[steps] = _mm256_load_si256(reinterpret_cast<const __m256i*>(mb));
  }
  alignas(32) int cb[8];
  for (int t = 0; t < 8; ++t)
    cb[t] = 8 - static_cast<int>(lag) + (t % static_cast<int>(lag));
  const __m256i carry_idx = _mm256_load_si256(reinterpret_cast<const __m256i*>(cb));

  __m256i carry = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    for (int s = 0; s < steps; ++s) {
      __m256i shifted = _mm256_permutevar8x32_epi32(x, step_idx[s]);
      x = add_mod(x, _mm256_and_si256(shifted, step_msk[s]), vm);
    }
    x = add_mod(x, carry, vm);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(v + i), x);
    carry = _mm256_permutevar8x32_epi32(x, carry_idx);
  }
  for (std::size_t j = i < lag ? lag : i; j < n; ++j) {
    std::uint32_t s = v[j] + v[j - lag];
    v[j] = s >= m ? s - m : s;
  }
}

void sub_lag_avx2(std::uint32_t* v, std::size_t n, std::size_t lag, std::uint32_t m) {
  if (lag == 0 || lag >= n) return;
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(m));
  // Descending blocks: every load happens before the block's store, and
  // later (higher) blocks never alias earlier reads, so any lag works.
  std::size_t i = n;
  while (i >= lag + 8) {
    std::size_t base = i - 8;
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + base));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + base - lag));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(v + base), sub_mod(a, b, vm));
    i = base;
  }
  while (i-- > lag) {
    std::uint32_t a = v[i];
    std::uint32_t b = v[i - lag];
    v[i] = a >= b ? a - b : a + (m - b);
  }
}

std::size_t count_eq_avx2(const std::uint32_t* v, std::size_t n, std::uint32_t value) {
  const __m256i vv = _mm256_set1_epi32(static_cast<int>(value));
  std::size_t total = 0;
  std::size_t i = 0;
  while (i + 8 <= n) {
    // Lane counters are 32-bit; flush before they can saturate.
    std::size_t vecs = (n - i) / 8;
    if (vecs > (std::size_t{1} << 24)) vecs = std::size_t{1} << 24;
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t b = 0; b < vecs; ++b, i += 8) {
      __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
      acc = _mm256_sub_epi32(acc, _mm256_cmpeq_epi32(x, vv));
    }
    alignas(32) std::uint32_t lanes[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    for (int t = 0; t < 8; ++t) total += lanes[t];
  }
  for (; i < n; ++i) total += (v[i] == value);
  return total;
}

} // namespace

namespace detail {
const Ops avx2_ops = {add_lag_avx2, sub_lag_avx2, count_eq_avx2};
}

} // namespace qgauss::kernels

#endif // QGAUSS_HAVE_AVX2
