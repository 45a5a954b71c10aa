#include "qgauss/partitions.hpp"

#include "qgauss/errors.hpp"
#include "qgauss/kernels.hpp"

namespace qgauss {

namespace {
// Window sizes are bounded so a stray argument cannot trigger a massive
// allocation; big sweeps stay well under this.
constexpr std::size_t kMaxWindow = std::size_t{1} << 28;

void check_window(std::size_t len) {
  if (len > kMaxWindow)
    throw InvalidArgument("coefficient window too large");
}
} // namespace

ResidueSeq p_le_k_prefix(unsigned k, std::uint32_t N, std::size_t len) {
  check_modulus(N);
  check_window(len);
  ResidueSeq s{N, std::vector<std::uint32_t>(len, 0)};
  if (len == 0) return s;
  s.values[0] = 1;
  for (unsigned i = 1; i <= k; ++i)
    kernels::add_lag_mod(s.values.data(), len, i, N);
  return s;
}

ResidueSeq p_eq_k(unsigned k, std::uint32_t N, std::size_t len) {
  check_modulus(N);
  check_window(len);
  // p_{=k}(n) = p_{<=k}(n-k): prepend k zeros to the prefix.
  ResidueSeq s{N, std::vector<std::uint32_t>(len, 0)};
  if (len == 0) return s;
  if (k == 0) {
    s.values[0] = 1;
    return s;
  }
  if (len <= k) return s;
  ResidueSeq base = p_le_k_prefix(k, N, len - k);
  std::copy(base.values.begin(), base.values.end(), s.values.begin() + k);
  return s;
}

void box_coeffs_into(std::vector<std::uint32_t>& buf, std::uint64_t j, unsigned k,
                     std::uint32_t N) {
  check_modulus(N);
  if (k > 0 && j > (kMaxWindow - 1) / k)
    throw InvalidArgument("box polynomial too large");
  const std::size_t len = static_cast<std::size_t>(j) * k + 1;
  buf.assign(len, 0);
  buf[0] = 1;
  // prod_{i=1..k} (1 - q^{j+i}) / (1 - q^i), all as lag passes over the
  // window. Numerator factors with j+i >= len are no-ops (they only touch
  // degrees above the true degree jk).
  for (unsigned i = 1; i <= k; ++i)
    kernels::sub_lag_mod(buf.data(), len, static_cast<std::size_t>(j) + i, N);
  for (unsigned i = 1; i <= k; ++i)
    kernels::add_lag_mod(buf.data(), len, i, N);
}

ResidueSeq box_coeffs(std::uint64_t j, unsigned k, std::uint32_t N) {
  ResidueSeq s{N, {}};
  box_coeffs_into(s.values, j, k, N);
  return s;
}

ResidueSeq qbinom_coeffs(std::uint64_t n, unsigned k, std::uint32_t N) {
  if (n < k)
    throw InvalidArgument("qbinom_coeffs: need n >= k");
  return box_coeffs(n - k, k, N);
}

} // namespace qgauss
