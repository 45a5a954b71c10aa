#include "qgauss/quasifit.hpp"

#include <array>
#include <cstring>
#include <string>

#include <gmpxx.h>

#include "qgauss/errors.hpp"
#include "qgauss/int_poly.hpp"
#include "qgauss/kernels.hpp"
#include "qgauss/partitions.hpp"
#include "qgauss/periods.hpp"
#include "qgauss/structure.hpp"

namespace qgauss {

const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::hypothesis_not_met: return "hypothesis_not_met";
  }
  return "?";
}

namespace {

std::uint64_t choose2(std::uint64_t a) { return a * (a - 1) / 2; }

// Keeps k * pi'_N(k) small enough that the largest scanned coefficient
// vector (about 3kQ entries) stays in tens of megabytes.
constexpr std::uint64_t kMaxFitArea = 4000000;

void histogram_into(std::vector<std::uint64_t>& hist, const std::vector<std::uint32_t>& buf,
                    std::uint32_t N) {
  hist.assign(N, 0);
  if (N <= 16) {
    for (std::uint32_t r = 0; r < N; ++r)
      hist[r] = kernels::count_eq(buf.data(), buf.size(), r);
  } else {
    for (std::uint32_t v : buf) ++hist[v];
  }
}

} // namespace

std::uint64_t f_count(std::uint64_t n, unsigned k, std::uint32_t R, std::uint32_t N) {
  check_modulus(N);
  if (R >= N) throw InvalidResidue("f_count: residue must satisfy R < N");
  if (n < k) return 0;
  std::vector<std::uint32_t> buf;
  box_coeffs_into(buf, n - k, k, N);
  return kernels::count_eq(buf.data(), buf.size(), R);
}

std::vector<std::uint64_t> f_histogram(std::uint64_t n, unsigned k, std::uint32_t N) {
  check_modulus(N);
  std::vector<std::uint64_t> hist(N, 0);
  if (n < k) return hist;
  std::vector<std::uint32_t> buf;
  box_coeffs_into(buf, n - k, k, N);
  histogram_into(hist, buf, N);
  return hist;
}

// --- sections and blocks ------------------------------------------------

std::span<const std::uint32_t> SectionDecomp::section(unsigned i) const {
  return std::span<const std::uint32_t>(coeffs.values)
      .subspan(static_cast<std::size_t>(i) * n, static_cast<std::size_t>(n));
}

SectionDecomp decompose(std::uint64_t n, unsigned k, std::uint32_t N) {
  if (k == 0 || n == 0) throw InvalidArgument("decompose: need n, k >= 1");
  SectionDecomp d;
  d.n = n;
  d.k = k;
  d.N = N;
  d.coeffs = qbinom_coeffs(n + k, k, N); // kn + 1 coefficients
  return d;
}

BlockReport check_block_equality(std::uint64_t n, unsigned k, std::uint32_t N) {
  BlockReport rep;
  rep.n = n;
  rep.k = k;
  rep.N = N;
  rep.Q = pi_prime_n_u64(N, k, kMaxFitArea);
  rep.l = n / rep.Q;
  rep.r = n % rep.Q;
  SectionDecomp d = decompose(n, k, N);
  rep.pass = true;
  for (unsigned i = 0; i < k && rep.pass; ++i) {
    auto sec = d.section(i);
    for (std::uint64_t t = 1; t < rep.l; ++t) {
      if (std::memcmp(sec.data(), sec.data() + t * rep.Q, rep.Q * sizeof(std::uint32_t)) != 0) {
        rep.pass = false;
        rep.first_bad_section = i;
        rep.first_bad_block = static_cast<long long>(t);
        break;
      }
    }
  }
  return rep;
}

SectionZeroReport check_section_zeros(std::uint64_t l, unsigned k, std::uint32_t N) {
  if (l == 0 || k == 0) throw InvalidArgument("check_section_zeros: need l, k >= 1");
  SectionZeroReport rep;
  rep.l = l;
  rep.k = k;
  rep.N = N;
  rep.Q = pi_prime_n_u64(N, k, kMaxFitArea);
  const std::uint64_t Q = rep.Q;
  const std::uint64_t n = l * Q;
  SectionDecomp d = decompose(n, k, N);

  rep.pass = true;
  for (unsigned i = 0; i < k && rep.pass; ++i) {
    auto sec = d.section(i);
    const std::uint64_t tail = choose2(static_cast<std::uint64_t>(k) + 1 - i) - 1;
    // The mirror image of the tail run of section k-1-i. The whole
    // coefficient list ends in an extra 1 past the last section, so the
    // reflection lands one slot in: offsets 1..head of each block, and the
    // block's very first entry is exempt.
    const std::uint64_t head = choose2(static_cast<std::uint64_t>(i) + 2) - 1;
    if (tail > Q || head + 1 > Q)
      throw InvalidArgument("check_section_zeros: zero runs exceed the block length");
    for (std::uint64_t t = 0; t < l && rep.pass; ++t) {
      const std::uint64_t base = t * Q;
      for (std::uint64_t u = Q - tail; u < Q; ++u) {
        if (sec[base + u] != 0) {
          rep.pass = false;
          rep.first_bad_section = i;
          rep.first_bad_index = static_cast<long long>(base + u);
          break;
        }
      }
      if (!rep.pass) continue;
      for (std::uint64_t u = 1; u <= head; ++u) {
        if (sec[base + u] != 0) {
          rep.pass = false;
          rep.first_bad_section = i;
          rep.first_bad_index = static_cast<long long>(base + u);
          break;
        }
      }
    }
  }
  return rep;
}

// --- exact coefficient identity -------------------------------------------

namespace {

// Partitions of total into at most `parts` parts, each at most `maxpart`,
// by direct descent over the largest part.
std::uint64_t count_box_enum(std::uint64_t total, unsigned parts, std::uint64_t maxpart) {
  if (total == 0) return 1;
  if (parts == 0) return 0;
  std::uint64_t count = 0;
  std::uint64_t top = maxpart < total ? maxpart : total;
  for (std::uint64_t a = 1; a <= top; ++a)
    count += count_box_enum(total - a, parts - 1, a);
  return count;
}

// Partitions of total into exactly `parts` parts (each >= 1), largest <= cap.
std::uint64_t count_exact_enum(std::uint64_t total, unsigned parts, std::uint64_t cap) {
  if (parts == 0) return total == 0 ? 1 : 0;
  if (total < parts) return 0;
  std::uint64_t count = 0;
  std::uint64_t top = cap < total ? cap : total;
  for (std::uint64_t a = 1; a <= top; ++a)
    count += count_exact_enum(total - a, parts - 1, a);
  return count;
}

} // namespace

std::uint64_t enumerate_bad(unsigned i, unsigned m, std::uint64_t j, std::uint64_t n,
                            unsigned k) {
  if (i == 0 || i > m) throw InvalidArgument("enumerate_bad: need 1 <= i <= m");
  if (k < i) return 0;
  const std::uint64_t total = static_cast<std::uint64_t>(m) * n + j;
  if (total < static_cast<std::uint64_t>(i) * n + i) return 0;
  // lambda: at least i parts equal to n <=> strip i copies of n, leaving at
  // most k-i parts each at most n. mu: exactly i parts. Split over |mu|.
  std::uint64_t count = 0;
  const std::uint64_t lam_rest_max = total - static_cast<std::uint64_t>(i) * n;
  for (std::uint64_t s = i; s <= lam_rest_max; ++s) {
    std::uint64_t mu = count_exact_enum(s, i, s);
    if (mu == 0) continue;
    count += mu * count_box_enum(lam_rest_max - s, k - i, n);
  }
  return count;
}

Lemma34Report check_lemma34(std::uint64_t n, unsigned k, unsigned m, std::uint64_t j) {
  if (k < 2) throw InvalidArgument("check_lemma34: need k >= 2");
  if (m < 1 || m > k - 1) throw InvalidArgument("check_lemma34: need 1 <= m <= k-1");
  if (n == 0 || j >= n) throw InvalidArgument("check_lemma34: need 0 <= j < n");
  const std::uint64_t idx = static_cast<std::uint64_t>(m) * n + j;
  if (idx > 100000) throw InvalidArgument("check_lemma34: index too large for exact sweep");

  Lemma34Report rep;
  rep.n = n;
  rep.k = k;
  rep.m = m;
  rep.j = j;

  // Exact box coefficient of q^{mn+j} in the same pass order as the modular
  // path, but over Z.
  const std::size_t len = static_cast<std::size_t>(idx) + 1;
  std::vector<mpz_class> c(len);
  c[0] = 1;
  for (unsigned t = 1; t <= k; ++t) {
    const std::uint64_t lag = n + t;
    for (std::size_t u = len; u-- > lag;)
      c[u] -= c[u - lag];
  }
  for (unsigned t = 1; t <= k; ++t)
    for (std::size_t u = t; u < len; ++u)
      c[u] += c[u - t];
  rep.lhs = mpz_to_u64(c[idx], "lemma box coefficient");

  rep.p_le_k = mpz_to_u64(partition_series_exact(k, len).back(), "lemma partition count");
  rep.bad_total = 0;
  for (unsigned i = 1; i <= m; ++i)
    rep.bad_total += enumerate_bad(i, m, j, n, k);
  rep.pass = rep.lhs + rep.bad_total == rep.p_le_k;
  return rep;
}

// --- piecewise-linear fit ---------------------------------------------------

std::int64_t QuasiFit::predict(std::uint64_t n) const {
  if (n < k) return 0;
  const std::uint64_t i = n % Q;
  const std::uint64_t t = (n - i) / Q;
  return b[i] + m[i] * static_cast<std::int64_t>(t);
}

std::vector<QuasiFit> fit_all(unsigned k, std::uint32_t N) {
  check_modulus(N);
  if (k == 0) throw InvalidArgument("fit: need k >= 1");
  const std::uint64_t Q = pi_prime_n_u64(N, k, kMaxFitArea);
  if (Q * k > kMaxFitArea)
    throw InvalidArgument("fit: k * pi'_N(k) beyond supported range");

  // counts[R][3*i + t] = f_{k,R}(n0_i + t*Q)
  std::vector<std::vector<std::uint64_t>> counts(
      N, std::vector<std::uint64_t>(3 * static_cast<std::size_t>(Q)));
  std::vector<std::uint64_t> base(static_cast<std::size_t>(Q));

  std::vector<std::uint32_t> buf;
  std::vector<std::uint64_t> hist;
  for (std::uint64_t i = 0; i < Q; ++i) {
    // Smallest n ≡ i (mod Q) with n >= Q + k: every sample sits at least a
    // full quasi-period into the linear regime.
    const std::uint64_t n0 = i + Q * ((Q + k - i + Q - 1) / Q);
    base[i] = n0;
    for (unsigned t = 0; t < 3; ++t) {
      const std::uint64_t n = n0 + t * Q;
      box_coeffs_into(buf, n - k, k, N);
      histogram_into(hist, buf, N);
      for (std::uint32_t R = 0; R < N; ++R)
        counts[R][3 * i + t] = hist[R];
    }
  }

  std::vector<QuasiFit> out(N);
  for (std::uint32_t R = 0; R < N; ++R) {
    QuasiFit& qf = out[R];
    qf.k = k;
    qf.R = R;
    qf.N = N;
    qf.Q = Q;
    qf.b.resize(Q);
    qf.m.resize(Q);
    qf.sample_base = base;
    for (std::uint64_t i = 0; i < Q; ++i) {
      const std::int64_t s0 = static_cast<std::int64_t>(counts[R][3 * i]);
      const std::int64_t s1 = static_cast<std::int64_t>(counts[R][3 * i + 1]);
      const std::int64_t s2 = static_cast<std::int64_t>(counts[R][3 * i + 2]);
      if (s2 - s1 != s1 - s0)
        throw NonlinearFit("fit: class " + std::to_string(i) + " not collinear for k=" +
                           std::to_string(k) + " R=" + std::to_string(R) +
                           " N=" + std::to_string(N));
      qf.m[i] = s1 - s0;
      qf.b[i] = s0 - qf.m[i] * static_cast<std::int64_t>((base[i] - i) / Q);
    }
  }
  return out;
}

QuasiFit fit(unsigned k, std::uint32_t R, std::uint32_t N) {
  check_modulus(N);
  if (R >= N) throw InvalidResidue("fit: residue must satisfy R < N");
  return std::move(fit_all(k, N)[R]);
}

GenFun genfun(const QuasiFit& qf) {
  GenFun g;
  g.Q = qf.Q;
  g.k = qf.k;
  g.b = qf.b;
  g.m = qf.m;
  return g;
}

std::vector<std::int64_t> GenFun::expand(std::size_t terms) const {
  // Series of (sum_i (1-x^Q) b_i x^i + m_i x^{Q+i}) / (1-x^Q)^2 via
  // c(n) = 2 c(n-Q) - c(n-2Q) + num(n); the closed form extrapolates every
  // class line below n = k, where f is zero by convention, so those entries
  // are masked afterwards.
  std::vector<std::int64_t> c(terms, 0);
  const std::size_t q = static_cast<std::size_t>(Q);
  for (std::size_t n = 0; n < terms; ++n) {
    std::int64_t v = 0;
    if (n < q)
      v = b[n];
    else if (n < 2 * q)
      v = m[n - q] - b[n - q];
    if (n >= q) v += 2 * c[n - q];
    if (n >= 2 * q) v -= c[n - 2 * q];
    c[n] = v;
  }
  for (std::size_t n = 0; n < terms && n < k; ++n) c[n] = 0;
  return c;
}

// --- slope translation -------------------------------------------------------

namespace {

SlopePeriodReport analyze_slopes(const QuasiFit& qf, unsigned k, std::uint32_t N) {
  SlopePeriodReport rep;
  rep.k = k;
  rep.R = qf.R;
  rep.N = N;
  rep.Q = qf.Q;
  rep.Q_prev = pi_prime_n_u64(N, k - 1, kMaxFitArea);
  rep.n_odd = (N % 2 == 1);

  rep.hypothesis_met = false;
  if (rep.n_odd && k >= 2)
    rep.hypothesis_met = check_zero_sum(k - 1, N).strong;

  const std::uint64_t Q = qf.Q;
  rep.slopes_translate = true;
  for (std::uint64_t i = 0; i < Q; ++i) {
    if (qf.m[i] != qf.m[(i + rep.Q_prev) % Q]) {
      rep.slopes_translate = false;
      rep.first_bad_i = static_cast<long long>(i);
      break;
    }
  }

  rep.observed_min_period = Q;
  for (std::uint64_t d = 1; d < Q; ++d) {
    if (Q % d != 0) continue;
    bool ok = true;
    for (std::uint64_t i = 0; i < Q; ++i) {
      if (qf.m[i] != qf.m[(i + d) % Q]) {
        ok = false;
        break;
      }
    }
    if (ok) {
      rep.observed_min_period = d;
      break;
    }
  }

  rep.slopes_reflect = true;
  for (std::uint64_t i = 0; i < Q; ++i) {
    if (qf.m[i] != qf.m[(Q - i) % Q]) {
      rep.slopes_reflect = false;
      break;
    }
  }

  if (rep.slopes_translate)
    rep.status = CheckStatus::pass;
  else if (rep.hypothesis_met)
    rep.status = CheckStatus::fail;
  else
    rep.status = CheckStatus::hypothesis_not_met;
  return rep;
}

} // namespace

SlopePeriodReport check_slope_period(unsigned k, std::uint32_t R, std::uint32_t N) {
  if (k == 0) throw InvalidArgument("check_slope_period: need k >= 1");
  return analyze_slopes(fit(k, R, N), k, N);
}

std::vector<SlopePeriodReport> check_slope_period_all(unsigned k, std::uint32_t N) {
  if (k == 0) throw InvalidArgument("check_slope_period: need k >= 1");
  std::vector<SlopePeriodReport> out;
  for (const QuasiFit& qf : fit_all(k, N))
    out.push_back(analyze_slopes(qf, k, N));
  return out;
}

// --- empiric quasi-period ----------------------------------------------------

std::optional<std::uint64_t> minimal_quasiperiod_search(unsigned k, std::uint32_t R,
                                                        std::uint32_t N, std::uint64_t bound) {
  check_modulus(N);
  if (R >= N) throw InvalidResidue("search: residue must satisfy R < N");
  if (k == 0 || bound == 0) throw InvalidArgument("search: need k, bound >= 1");
  if (mpz_class(static_cast<unsigned long>(bound)) < pi_n(N, k))
    throw InvalidArgument("search: bound below pi_N(k)");

  const std::uint64_t nmax = k + 4 * bound;
  if (static_cast<double>(k) * static_cast<double>(nmax) * static_cast<double>(nmax) > 4e10)
    throw InvalidArgument("search: window too costly");

  // Four points per residue class of every candidate, so three collinearity
  // differences are available everywhere.
  std::vector<std::int64_t> f(static_cast<std::size_t>(nmax) + 1, 0);
  std::vector<std::uint32_t> buf;
  for (std::uint64_t n = k; n <= nmax; ++n) {
    box_coeffs_into(buf, n - k, k, N);
    f[n] = static_cast<std::int64_t>(kernels::count_eq(buf.data(), buf.size(), R));
  }

  for (std::uint64_t q = 1; q <= bound; ++q) {
    bool ok = true;
    for (std::uint64_t n = k; n + 2 * q <= nmax; ++n) {
      if (f[n + 2 * q] - f[n + q] != f[n + q] - f[n]) {
        ok = false;
        break;
      }
    }
    if (ok) return q;
  }
  return std::nullopt;
}

} // namespace qgauss
