#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qgauss/residue_seq.hpp"

namespace qgauss {

// Dense polynomial over Z, coefficient i multiplies x^i. Trailing zero
// coefficients are trimmed on construction; the zero polynomial stores
// nothing and reports degree -1.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);

  static IntPoly one();

  std::size_t size() const { return c_.size(); }
  long long degree() const { return static_cast<long long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  // Coefficient of x^i; zero beyond the degree.
  const mpz_class& coeff(std::size_t i) const;
  const std::vector<mpz_class>& coeffs() const { return c_; }

  mpz_class eval_one() const;   // sum of coefficients
  bool is_palindrome() const;   // c_i == c_{deg-i} for all i

  bool operator==(const IntPoly&) const = default;

private:
  std::vector<mpz_class> c_;
};

IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);

// Exact quotient a / b in Z[x]. Throws NonExactDivision if b does not divide
// a (including non-integer intermediate quotients), InvalidArgument if b = 0.
IntPoly poly_div_exact(const IntPoly& a, const IntPoly& b);

// Exact coefficient window of 1 / prod_{i=1..k} (1 - x^i), i.e. the counts
// of partitions into at most k parts, length len.
std::vector<mpz_class> partition_series_exact(unsigned k, std::size_t len);

// Forward difference at lag q on an exact coefficient window (same
// convention as the ResidueSeq overload: length-preserving, identity on the
// first q entries).
std::vector<mpz_class> delta_q(std::vector<mpz_class> window, std::size_t q);

// --- small number-theory helpers -------------------------------------------

bool is_prime_u64(std::uint64_t n);

// p-adic valuation of n. Throws InvalidPrime if p is not prime,
// InvalidArgument if n = 0.
unsigned nu_p(const mpz_class& n, std::uint64_t p);
unsigned nu_p_u64(std::uint64_t n, std::uint64_t p);

// lcm(1..k). Throws InvalidArgument for k = 0 or k beyond the supported
// sweep range (use RunningLcm for long ascending sweeps).
mpz_class lcm_range(unsigned k);

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

// Conversions that refuse to overflow silently.
std::size_t mpz_to_size(const mpz_class& v, const char* what, std::size_t cap);
std::uint64_t mpz_to_u64(const mpz_class& v, const char* what);

// Natural log of a positive big integer, via mantissa + exponent.
double log_mpz(const mpz_class& v);

} // namespace qgauss
