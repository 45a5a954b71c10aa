#include "qgauss/kernels.hpp"

namespace qgauss::kernels {
namespace {

void add_lag_scalar(std::uint32_t* v, std::size_t n, std::size_t lag, std::uint32_t m) {
  if (lag == 0 || lag >= n) return;
  for (std::size_t i = lag; i < n; ++i) {
    std::uint32_t s = v[i] + v[i - lag];
    v[i] = s >= m ? s - m : s;
  }
}

void sub_lag_scalar(std::uint32_t* v, std::size_t n, std::size_t lag, std::uint32_t m) {
  if (lag == 0 || lag >= n) return;
  for (std::size_t i = n; i-- > lag;) {
    std::uint32_t a = v[i];
    std::uint32_t b = v[i - lag];
    v[i] = a >= b ? a - b : a + (m - b);
  }
}

std::size_t count_eq_scalar(const std::uint32_t* v, std::size_t n, std::uint32_t value) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i)
    count += (v[i] == value);
  return count;
}

} // namespace

namespace detail {
const Ops scalar_ops = {add_lag_scalar, sub_lag_scalar, count_eq_scalar};
}

} // namespace qgauss::kernels
