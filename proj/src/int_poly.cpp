#include "qgauss/int_poly.hpp"

#include <algorithm>
#include <cmath>

#include "qgauss/errors.hpp"
#include "qgauss/kernels.hpp"

namespace qgauss {

// --- ResidueSeq -------------------------------------------------------------

void check_modulus(std::uint32_t m) {
  if (m < 2 || m > kMaxModulus)
    throw InvalidModulus("modulus must be in [2, 2^31], got " + std::to_string(m));
}

ResidueSeq make_residue_seq(std::uint32_t modulus, std::vector<std::uint32_t> values) {
  check_modulus(modulus);
  for (auto& v : values)
    if (v >= modulus) v %= modulus;
  return ResidueSeq{modulus, std::move(values)};
}

ResidueSeq delta_q(const ResidueSeq& f, std::size_t q) {
  if (q == 0) throw InvalidArgument("delta_q: lag must be positive");
  ResidueSeq out = f;
  kernels::sub_lag_mod(out.values.data(), out.values.size(), q, out.modulus);
  return out;
}

std::vector<mpz_class> delta_q(std::vector<mpz_class> window, std::size_t q) {
  if (q == 0) throw InvalidArgument("delta_q: lag must be positive");
  for (std::size_t i = window.size(); i-- > q;)
    window[i] -= window[i - q];
  return window;
}

// --- IntPoly ----------------------------------------------------------------

namespace {
const mpz_class kZero = 0;

void trim(std::vector<mpz_class>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}
} // namespace

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
  trim(c_);
}

IntPoly IntPoly::one() {
  return IntPoly(std::vector<mpz_class>{1});
}

const mpz_class& IntPoly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : kZero;
}

mpz_class IntPoly::eval_one() const {
  mpz_class s = 0;
  for (const auto& v : c_) s += v;
  return s;
}

bool IntPoly::is_palindrome() const {
  for (std::size_t i = 0, j = c_.size(); i < j; ++i)
    if (c_[i] != c_[j - 1 - i]) return false;
  return true;
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = a.coeff(i) + b.coeff(i);
  return IntPoly(std::move(c));
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = a.coeff(i) - b.coeff(i);
  return IntPoly(std::move(c));
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<mpz_class> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.coeff(i) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] += a.coeff(i) * b.coeff(j);
  }
  return IntPoly(std::move(c));
}

IntPoly poly_div_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InvalidArgument("poly_div_exact: zero divisor");
  if (a.is_zero()) return IntPoly();
  if (a.size() < b.size())
    throw NonExactDivision("poly_div_exact: divisor degree exceeds dividend");

  std::vector<mpz_class> rem(a.coeffs());
  const std::size_t db = b.size() - 1;
  const mpz_class& lead = b.coeff(db);
  std::vector<mpz_class> q(a.size() - b.size() + 1);

  for (std::size_t i = q.size(); i-- > 0;) {
    mpz_class& top = rem[i + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw NonExactDivision("poly_div_exact: leading coefficient does not divide");
    q[i] = top / lead;
    for (std::size_t j = 0; j <= db; ++j)
      rem[i + j] -= q[i] * b.coeff(j);
  }
  for (const auto& r : rem)
    if (r != 0) throw NonExactDivision("poly_div_exact: nonzero remainder");
  return IntPoly(std::move(q));
}

std::vector<mpz_class> partition_series_exact(unsigned k, std::size_t len) {
  std::vector<mpz_class> c(len);
  if (len == 0) return c;
  c[0] = 1;
  // 1 / prod (1 - x^i) as iterated lag additions, exactly as the modular
  // path does it.
  for (unsigned i = 1; i <= k; ++i)
    for (std::size_t j = i; j < len; ++j)
      c[j] += c[j - i];
  return c;
}

// --- number theory ----------------------------------------------------------

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
    if (n == d) return true;
    if (n % d == 0) return false;
  }
  for (std::uint64_t d = 29; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

unsigned nu_p_u64(std::uint64_t n, std::uint64_t p) {
  if (!is_prime_u64(p)) throw InvalidPrime("nu_p: p must be prime");
  if (n == 0) throw InvalidArgument("nu_p: valuation of zero");
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

unsigned nu_p(const mpz_class& n, std::uint64_t p) {
  if (!is_prime_u64(p)) throw InvalidPrime("nu_p: p must be prime");
  if (n == 0) throw InvalidArgument("nu_p: valuation of zero");
  mpz_class q;
  mpz_class pz = mpz_class(static_cast<unsigned long>(p));
  return static_cast<unsigned>(mpz_remove(q.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

mpz_class lcm_range(unsigned k) {
  if (k > 100000) throw InvalidArgument("lcm_range: k too large for one-shot lcm");
  mpz_class l = 1;
  for (unsigned i = 2; i <= k; ++i)
    mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), i);
  return l;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("factorize: zero");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::size_t mpz_to_size(const mpz_class& v, const char* what, std::size_t cap) {
  if (v < 0 || !v.fits_ulong_p() || v.get_ui() > cap)
    throw InvalidArgument(std::string(what) + ": value out of supported range");
  return static_cast<std::size_t>(v.get_ui());
}

std::uint64_t mpz_to_u64(const mpz_class& v, const char* what) {
  if (v < 0 || !v.fits_ulong_p())
    throw InvalidArgument(std::string(what) + ": value exceeds 64 bits");
  return static_cast<std::uint64_t>(v.get_ui());
}

double log_mpz(const mpz_class& v) {
  if (v <= 0) throw InvalidArgument("log_mpz: nonpositive");
  signed long exp;
  double d = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(d) + static_cast<double>(exp) * std::log(2.0);
}

} // namespace qgauss
