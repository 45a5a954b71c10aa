#pragma once

#include <cstddef>
#include <cstdint>

#include "qgauss/residue_seq.hpp"

namespace qgauss {

// First len values of p_{<=k}(n) mod N: partitions of n into at most k parts.
ResidueSeq p_le_k_prefix(unsigned k, std::uint32_t N, std::size_t len);

// First len values of p_{=k}(n) mod N: partitions into exactly k parts,
// p_{=k}(n) = p_{<=k}(n - k).
ResidueSeq p_eq_k(unsigned k, std::uint32_t N, std::size_t len);

// All jk+1 coefficients of the box-counting polynomial mod N: coefficient i
// counts partitions of i into at most k parts, each at most j.
ResidueSeq box_coeffs(std::uint64_t j, unsigned k, std::uint32_t N);

// All coefficients of the Gaussian binomial [n choose k]_q mod N
// (box_coeffs with j = n - k; degree k(n-k)). Requires n >= k.
ResidueSeq qbinom_coeffs(std::uint64_t n, unsigned k, std::uint32_t N);

// box_coeffs into a caller-owned buffer (resized to jk+1), for loops that
// evaluate many polynomials without reallocating.
void box_coeffs_into(std::vector<std::uint32_t>& buf, std::uint64_t j, unsigned k,
                     std::uint32_t N);

} // namespace qgauss
