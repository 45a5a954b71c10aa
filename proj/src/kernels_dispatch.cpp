#include "qgauss/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace qgauss::kernels {
namespace {

bool avx2_usable() {
#if defined(QGAUSS_HAVE_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const detail::Ops* pick_default() {
#if defined(QGAUSS_HAVE_AVX2)
  if (const char* env = std::getenv("QGAUSS_BACKEND")) {
    if (std::strcmp(env, "scalar") == 0) return &detail::scalar_ops;
    if (std::strcmp(env, "avx2") == 0 && avx2_usable()) return &detail::avx2_ops;
  }
  if (avx2_usable()) return &detail::avx2_ops;
#endif
  return &detail::scalar_ops;
}

std::atomic<const detail::Ops*> g_ops{nullptr};

const detail::Ops* ops() {
  const detail::Ops* p = g_ops.load(std::memory_order_acquire);
  if (!p) {
    p = pick_default();
    g_ops.store(p, std::memory_order_release);
  }
  return p;
}

} // namespace

const char* backend_name(Backend b) {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

Backend active_backend() {
#if defined(QGAUSS_HAVE_AVX2)
  if (ops() == &detail::avx2_ops) return Backend::avx2;
#endif
  return Backend::scalar;
}

bool set_backend(Backend b) {
  if (b == Backend::scalar) {
    g_ops.store(&detail::scalar_ops, std::memory_order_release);
    return true;
  }
#if defined(QGAUSS_HAVE_AVX2)
  if (b == Backend::avx2 && avx2_usable()) {
    g_ops.store(&detail::avx2_ops, std::memory_order_release);
    return true;
  }
#endif
  return false;
}

std::vector<Backend> supported_backends() {
  std::vector<Backend> out{Backend::scalar};
  if (avx2_usable()) out.push_back(Backend::avx2);
  return out;
}

void add_lag_mod(std::uint32_t* v, std::size_t n, std::size_t lag, std::uint32_t m) {
  ops()->add_lag(v, n, lag, m);
}

void sub_lag_mod(std::uint32_t* v, std::size_t n, std::size_t lag, std::uint32_t m) {
  ops()->sub_lag(v, n, lag, m);
}

std::size_t count_eq(const std::uint32_t* v, std::size_t n, std::uint32_t value) {
  return ops()->count_eq(v, n, value);
}

} // namespace qgauss::kernels
