#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qgauss {

// Largest accepted modulus. One unreduced 32-bit add/sub must not wrap, so
// moduli stop at 2^31.
inline constexpr std::uint32_t kMaxModulus = 0x80000000u;

void check_modulus(std::uint32_t m); // throws InvalidModulus outside [2, 2^31]

// A window of residues with its modulus attached. Invariant: values[i] < modulus.
struct ResidueSeq {
  std::uint32_t modulus = 2;
  std::vector<std::uint32_t> values;

  std::size_t size() const { return values.size(); }
  std::uint32_t operator[](std::size_t i) const { return values[i]; }
  bool operator==(const ResidueSeq&) const = default;
};

// Validates the modulus and reduces the given values.
ResidueSeq make_residue_seq(std::uint32_t modulus, std::vector<std::uint32_t> values);

// Forward difference at lag q: out[i] = f[i] - f[i-q] (mod m), out[i] = f[i]
// for i < q. Length-preserving.
ResidueSeq delta_q(const ResidueSeq& f, std::size_t q);

} // namespace qgauss
