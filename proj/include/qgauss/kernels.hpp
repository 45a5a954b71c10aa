#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qgauss::kernels {

// Elementwise passes over arrays of residues. Contract: every v[i] < m and
// 2 <= m <= 2^31, so an unreduced sum or difference always fits in 32 bits.
// The AVX2 variants are bit-for-bit equivalent to the scalar ones; the
// active backend is picked at load time (CPU probe, overridable through
// set_backend or the QGAUSS_BACKEND environment variable).

enum class Backend { scalar, avx2 };

const char* backend_name(Backend b);
Backend active_backend();
bool set_backend(Backend b); // false (and no change) if unsupported here
std::vector<Backend> supported_backends();

// v[i] <- (v[i] + v[i-lag]) mod m for i = lag .. n-1, ascending.
// One pass multiplies a power-series window by 1/(1 - x^lag).
void add_lag_mod(std::uint32_t* v, std::size_t n, std::size_t lag, std::uint32_t m);

// v[i] <- (v[i] - v[i-lag]) mod m for i = n-1 .. lag, descending.
// One pass multiplies a power-series window by (1 - x^lag).
void sub_lag_mod(std::uint32_t* v, std::size_t n, std::size_t lag, std::uint32_t m);

std::size_t count_eq(const std::uint32_t* v, std::size_t n, std::uint32_t value);

namespace detail {

struct Ops {
  void (*add_lag)(std::uint32_t*, std::size_t, std::size_t, std::uint32_t);
  void (*sub_lag)(std::uint32_t*, std::size_t, std::size_t, std::uint32_t);
  std::size_t (*count_eq)(const std::uint32_t*, std::size_t, std::uint32_t);
};

extern const Ops scalar_ops;
#if defined(QGAUSS_HAVE_AVX2)
extern const Ops avx2_ops;
#endif

} // namespace detail

} // namespace qgauss::kernels
