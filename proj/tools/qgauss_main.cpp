// qgauss: exact coefficient statistics of Gaussian binomials mod N.
//
// Output contract: JSON (default) is a single envelope
//   {"command": ..., "params": ..., "format_version": "1", "data": ...}
// printed compactly with a trailing newline; every integer is a decimal
// string, floats are printf %.12g. CSV carries the same data flattened.
// Identical invocations produce byte-identical output.
//
// Exit codes: 0 success, 1 verification failure (including NonlinearFit and
// StructureViolation), 2 argument/domain errors.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qgauss/asymptotics.hpp"
#include "qgauss/errors.hpp"
#include "qgauss/int_poly.hpp"
#include "qgauss/kernels.hpp"
#include "qgauss/partitions.hpp"
#include "qgauss/periods.hpp"
#include "qgauss/quasifit.hpp"
#include "qgauss/structure.hpp"

using nlohmann::ordered_json;
using namespace qgauss;

namespace {

struct Options {
  std::string format = "json";
  bool quiet = false;
  std::string out_path;
  std::string backend;
};

std::string dstr(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string zstr(const mpz_class& v) { return v.get_str(); }

template <class T>
std::string istr(T v) {
  return std::to_string(v);
}

void write_all(const Options& opt, const std::string& payload) {
  std::fwrite(payload.data(), 1, payload.size(), stdout);
  if (!opt.out_path.empty()) {
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f) throw InvalidArgument("cannot open output file: " + opt.out_path);
    f.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  }
}

void emit(const Options& opt, const char* command, const ordered_json& params,
          const ordered_json& data, const std::vector<std::string>& csv_lines) {
  std::string payload;
  if (opt.format == "json") {
    ordered_json env;
    env["command"] = command;
    env["params"] = params;
    env["format_version"] = "1";
    env["data"] = data;
    payload = env.dump();
    payload += '\n';
  } else {
    for (const auto& line : csv_lines) {
      payload += line;
      payload += '\n';
    }
  }
  write_all(opt, payload);
}

std::string join_values(const std::vector<std::uint32_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

ordered_json values_json(const std::vector<std::uint32_t>& v) {
  ordered_json arr = ordered_json::array();
  for (std::uint32_t x : v) arr.push_back(istr(x));
  return arr;
}

// --- simple commands ---------------------------------------------------------

int cmd_coeffs(const Options& opt, std::uint64_t n, unsigned k, std::uint32_t N) {
  ResidueSeq s = qbinom_coeffs(n, k, N);
  ordered_json params{{"n", istr(n)}, {"k", istr(k)}, {"mod", istr(N)}};
  ordered_json data{{"values", values_json(s.values)}};
  emit(opt, "coeffs", params, data, {join_values(s.values)});
  return 0;
}

int cmd_partitions(const Options& opt, unsigned k, std::uint32_t N, std::uint64_t len) {
  ResidueSeq s = p_le_k_prefix(k, N, static_cast<std::size_t>(len));
  ordered_json params{{"k", istr(k)}, {"mod", istr(N)}, {"len", istr(len)}};
  ordered_json data{{"values", values_json(s.values)}};
  emit(opt, "partitions", params, data, {join_values(s.values)});
  return 0;
}

int cmd_period(const Options& opt, unsigned k, std::uint32_t N, bool verify) {
  mpz_class pi = pi_n(N, k);
  ordered_json params{{"k", istr(k)}, {"mod", istr(N)}, {"verify", verify}};
  ordered_json data{{"pi", zstr(pi)}};
  std::vector<std::string> csv{"pi," + zstr(pi)};
  bool ok = true;
  if (verify) {
    const std::uint64_t p = pi_n_u64(N, k, (std::uint64_t{1} << 22));
    ResidueSeq seq = p_le_k_prefix(k, N, static_cast<std::size_t>(3 * p));
    auto emp = minimal_period(seq);
    ok = emp.has_value() && *emp == p;
    data["empirical"] = emp ? ordered_json(istr(*emp)) : ordered_json(nullptr);
    data["verified"] = ok;
    csv.push_back("empirical," + (emp ? istr(*emp) : std::string()));
    csv.push_back(std::string("verified,") + (ok ? "true" : "false"));
  }
  emit(opt, "period", params, data, csv);
  return ok ? 0 : 1;
}

int cmd_qperiod(const Options& opt, unsigned k, std::uint32_t N) {
  auto rows = qperiod_table(N, k);
  ordered_json params{{"k", istr(k)}, {"mod", istr(N)}};
  ordered_json jrows = ordered_json::array();
  std::vector<std::string> csv{"k,pi,ratio,divisible,pi_prime"};
  for (unsigned i = 1; i <= k; ++i) {
    const auto& r = rows[i];
    jrows.push_back(ordered_json{{"k", istr(r.k)},
                                 {"pi", zstr(r.pi)},
                                 {"ratio", zstr(r.ratio)},
                                 {"divisible", r.divisible},
                                 {"pi_prime", zstr(r.pi_prime)}});
    csv.push_back(istr(r.k) + "," + zstr(r.pi) + "," + zstr(r.ratio) + "," +
                  (r.divisible ? "true" : "false") + "," + zstr(r.pi_prime));
  }
  ordered_json data{{"pi_prime", zstr(rows[k].pi_prime)}, {"rows", jrows}};
  emit(opt, "qperiod", params, data, csv);
  return 0;
}

int cmd_count(const Options& opt, unsigned k, std::uint32_t R, std::uint32_t N,
              std::uint64_t from, std::uint64_t to) {
  if (to < from) throw InvalidArgument("count: need --to >= --from");
  if (to - from > 1000000) throw InvalidArgument("count: range too long");
  ordered_json params{{"k", istr(k)}, {"r", istr(R)}, {"mod", istr(N)},
                      {"from", istr(from)}, {"to", istr(to)}};
  ordered_json jrows = ordered_json::array();
  std::vector<std::string> csv{"n,f"};
  for (std::uint64_t n = from; n <= to; ++n) {
    std::uint64_t f = f_count(n, k, R, N);
    jrows.push_back(ordered_json{{"n", istr(n)}, {"f", istr(f)}});
    csv.push_back(istr(n) + "," + istr(f));
  }
  ordered_json data{{"rows", jrows}};
  emit(opt, "count", params, data, csv);
  return 0;
}

int cmd_fit(const Options& opt, unsigned k, std::uint32_t R, std::uint32_t N) {
  QuasiFit qf = fit(k, R, N);
  ordered_json params{{"k", istr(k)}, {"r", istr(R)}, {"mod", istr(N)}};
  ordered_json jrows = ordered_json::array();
  std::vector<std::string> csv{"q," + istr(qf.Q), "i,b,m,n0"};
  for (std::uint64_t i = 0; i < qf.Q; ++i) {
    jrows.push_back(ordered_json{{"i", istr(i)},
                                 {"b", istr(qf.b[i])},
                                 {"m", istr(qf.m[i])},
                                 {"n0", istr(qf.sample_base[i])}});
    csv.push_back(istr(i) + "," + istr(qf.b[i]) + "," + istr(qf.m[i]) + "," +
                  istr(qf.sample_base[i]));
  }
  ordered_json data{{"q", istr(qf.Q)}, {"pieces", jrows}};
  emit(opt, "fit", params, data, csv);
  return 0;
}

int cmd_genfun(const Options& opt, unsigned k, std::uint32_t R, std::uint32_t N,
               std::uint64_t terms) {
  QuasiFit qf = fit(k, R, N);
  GenFun g = genfun(qf);
  std::uint64_t t = terms;
  if (t == 0) t = std::min<std::uint64_t>(3 * g.Q, 1200);
  if (t > 1000000) throw InvalidArgument("genfun: too many cross-check terms");

  auto series = g.expand(static_cast<std::size_t>(t));
  bool pass = true;
  for (std::uint64_t n = 0; n < t && pass; ++n) {
    std::int64_t want = n < k ? 0 : static_cast<std::int64_t>(f_count(n, k, R, N));
    pass = series[static_cast<std::size_t>(n)] == want;
  }

  ordered_json params{{"k", istr(k)}, {"mod", istr(N)}, {"r", istr(R)}, {"terms", istr(t)}};
  ordered_json jb = ordered_json::array(), jm = ordered_json::array();
  std::string cb, cm;
  for (std::uint64_t i = 0; i < g.Q; ++i) {
    jb.push_back(istr(g.b[i]));
    jm.push_back(istr(g.m[i]));
    if (i) {
      cb += ',';
      cm += ',';
    }
    cb += istr(g.b[i]);
    cm += istr(g.m[i]);
  }
  ordered_json data{{"q", istr(g.Q)},
                    {"k", istr(g.k)},
                    {"numerator_b", jb},
                    {"numerator_m", jm},
                    {"crosscheck", ordered_json{{"terms", istr(t)}, {"pass", pass}}}};
  std::vector<std::string> csv{"q," + istr(g.Q), "k," + istr(g.k), "numerator_b," + cb,
                               "numerator_m," + cm,
                               "crosscheck," + istr(t) + "," + (pass ? "true" : "false")};
  emit(opt, "genfun", params, data, csv);
  return pass ? 0 : 1;
}

int cmd_search(const Options& opt, unsigned k, std::uint32_t R, std::uint32_t N,
               std::uint64_t bound) {
  auto q = minimal_quasiperiod_search(k, R, N, bound);
  ordered_json params{{"k", istr(k)}, {"r", istr(R)}, {"mod", istr(N)}, {"bound", istr(bound)}};
  ordered_json data{{"q_star", q ? ordered_json(istr(*q)) : ordered_json(nullptr)}};
  emit(opt, "search", params, data, {"q_star," + (q ? istr(*q) : std::string())});
  return 0;
}

// --- asymptotics ----------------------------------------------------------

int cmd_asymptotics(const Options& opt, std::uint64_t p, unsigned e,
                    const std::string& grid_text) {
  std::vector<unsigned> grid;
  {
    std::string token;
    for (char c : grid_text + ",") {
      if (c == ',') {
        if (!token.empty()) {
          unsigned long v = std::stoul(token);
          if (v == 0 || v > 100000000ul)
            throw InvalidArgument("asymptotics: grid entry out of range");
          grid.push_back(static_cast<unsigned>(v));
          token.clear();
        }
      } else if (c >= '0' && c <= '9') {
        token += c;
      } else {
        throw InvalidArgument("asymptotics: bad grid entry");
      }
    }
    if (grid.empty()) throw InvalidArgument("asymptotics: empty grid");
  }
  if (!is_prime_u64(p)) throw InvalidPrime("asymptotics: p must be prime");

  // The exact-lcm columns form lcm(1..k) directly and stay affordable only
  // for modest k; the rest of the columns hold to 1e8.
  constexpr unsigned kLcmCap = 20000;

  ordered_json params{{"p", istr(p)}, {"e", istr(e)}, {"k_grid", grid_text}};
  ordered_json jrows = ordered_json::array();
  std::vector<std::string> csv{
      "k,psi_exact,psi_sieve,nu_lcm_exact,nu_lcm_floor_log,capital_pi,capital_pi_estimate,"
      "capital_pi_rel_error,pi_log_exact,pi_log_estimate,qratio_exact,qratio_formula,"
      "qratio_estimate,combined_exact_log,combined_estimate"};

  for (unsigned k : grid) {
    ordered_json row;
    std::string line = istr(k);
    row["k"] = istr(k);

    auto put = [&](const char* key, std::optional<std::string> v) {
      row[key] = v ? ordered_json(*v) : ordered_json(nullptr);
      line += ',';
      if (v) line += *v;
    };

    if (k <= kLcmCap) {
      PsiPair psi = chebyshev_psi(k);
      NuLcmPair nu = nu_lcm(p, k);
      put("psi_exact", dstr(psi.exact));
      put("psi_sieve", dstr(psi.sieve));
      put("nu_lcm_exact", istr(nu.exact));
      put("nu_lcm_floor_log", istr(nu.floor_log));
    } else {
      put("psi_exact", std::nullopt);
      put("psi_sieve", dstr(psi_sieve(k)));
      put("nu_lcm_exact", std::nullopt);
      put("nu_lcm_floor_log", istr(floor_log(p, k)));
    }

    CapitalPiEstimate cp = capital_pi_estimate(p, k);
    put("capital_pi", zstr(cp.exact));
    put("capital_pi_estimate", dstr(cp.estimate));
    put("capital_pi_rel_error", dstr(cp.rel_error));

    if (k > p) {
      PiLogEstimate pl = pi_estimate_log(p, k);
      put("pi_log_exact", dstr(pl.exact_log));
      put("pi_log_estimate", dstr(pl.estimate));
      QRatioEstimate qr = qperiod_ratio_estimate(p, k);
      put("qratio_exact", istr(qr.exact));
      put("qratio_formula", istr(qr.formula));
      put("qratio_estimate", dstr(qr.estimate));
    } else {
      for (const char* key : {"pi_log_exact", "pi_log_estimate", "qratio_exact",
                              "qratio_formula", "qratio_estimate"})
        put(key, std::nullopt);
    }

    if (e >= 1 && k > p) {
      CombinedEstimate ce = combined_estimate(p, e, k);
      put("combined_exact_log", dstr(ce.exact_log));
      put("combined_estimate", dstr(ce.estimate));
    } else {
      put("combined_exact_log", std::nullopt);
      put("combined_estimate", std::nullopt);
    }

    jrows.push_back(row);
    csv.push_back(line);
  }
  ordered_json data{{"rows", jrows}};
  emit(opt, "asymptotics", params, data, csv);
  return 0;
}

// --- verify ------------------------------------------------------------------

struct CheckRow {
  std::string suite, name, instance, status, detail;
};

void add_row(std::vector<CheckRow>& rows, std::string suite, std::string name,
             std::string instance, std::string status, std::string detail = "") {
  rows.push_back({std::move(suite), std::move(name), std::move(instance), std::move(status),
                  std::move(detail)});
}

void run_gamma_suite(std::vector<CheckRow>& rows, unsigned kmax) {
  for (unsigned k = 1; k <= std::min(kmax, 5u); ++k) {
    for (std::uint32_t N = 2; N <= 9; ++N) {
      std::string inst = "k=" + istr(k) + " N=" + istr(N);
      try {
        s_sequence(k, N);
        add_row(rows, "gamma", "s_profile", inst, "pass");
      } catch (const StructureViolation& e) {
        add_row(rows, "gamma", "s_profile", inst, "fail", e.what());
      }
    }
  }

  const std::pair<std::uint64_t, unsigned> pe[] = {{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}};
  for (auto [p, e] : pe) {
    for (unsigned k = 1; k <= std::min(kmax, 4u); ++k) {
      std::string inst = "k=" + istr(k) + " p=" + istr(p) + " e=" + istr(e);
      std::uint64_t Q = mpz_to_u64(pi_prime_power(p, e, k).pi, "verify gamma period");
      IntPoly g;
      try {
        g = gamma_poly(k, Q);
      } catch (const NonExactDivision& ex) {
        add_row(rows, "gamma", "gamma_exact", inst, "fail", ex.what());
        continue;
      }
      const std::uint64_t want_deg = static_cast<std::uint64_t>(k) * Q - (std::uint64_t(k) * (k + 1)) / 2;
      add_row(rows, "gamma", "gamma_degree", inst,
              g.degree() == static_cast<long long>(want_deg) ? "pass" : "fail");
      add_row(rows, "gamma", "gamma_palindrome", inst, g.is_palindrome() ? "pass" : "fail");
      mpz_class qk, fact;
      mpz_ui_pow_ui(qk.get_mpz_t(), static_cast<unsigned long>(Q), k);
      mpz_fac_ui(fact.get_mpz_t(), k);
      bool ev = mpz_divisible_p(qk.get_mpz_t(), fact.get_mpz_t()) && g.eval_one() == qk / fact;
      add_row(rows, "gamma", "gamma_eval1", inst, ev ? "pass" : "fail");
      GammaCongruence gc = check_gamma_congruence(k, p, e);
      add_row(rows, "gamma", "gamma_congruence", inst, gc.pass ? "pass" : "fail",
              gc.pass ? "" : "first bad r=" + istr(gc.first_bad_r));
    }
  }
}

void run_zerosum_suite(std::vector<CheckRow>& rows, unsigned kmax) {
  for (std::uint32_t N : {3u, 5u, 7u, 9u}) {
    for (unsigned k = 1; k <= std::min(kmax, 6u); ++k) {
      ZeroSumReport rep = check_zero_sum(k, N);
      std::string inst = "k=" + istr(k) + " N=" + istr(N);
      bool ok = rep.predicted_weak_only ? rep.weak : rep.strong;
      add_row(rows, "zerosum", "zero_sum", inst, ok ? "pass" : "fail",
              ok ? "" : "sum=" + istr(rep.sum_mod));
      if (N == 9) continue;
      // Prime-modulus form: sum vanishes unless k is odd and k does not
      // divide the previous period. Observational; misses are skips.
      mpz_class prev = pi_n(N, k == 0 ? 0 : k - 1);
      bool cor_weak_only = (k % 2 == 1) && !mpz_divisible_ui_p(prev.get_mpz_t(), k);
      bool cor_ok = cor_weak_only ? rep.weak : rep.strong;
      add_row(rows, "zerosum", "zero_sum_prime_form", inst, cor_ok ? "pass" : "skip",
              cor_ok ? "" : "stated condition mispredicts; sum=" + istr(rep.sum_mod));
    }
  }
}

void run_blocks_suite(std::vector<CheckRow>& rows, unsigned kmax, unsigned lmax) {
  for (unsigned k = 1; k <= std::min(kmax, 3u); ++k) {
    for (std::uint32_t N = 2; N <= 5; ++N) {
      std::uint64_t Q;
      try {
        Q = pi_prime_n_u64(N, k, 1u << 20);
      } catch (const InvalidArgument& e) {
        add_row(rows, "blocks", "block_equality", "k=" + istr(k) + " N=" + istr(N), "skip",
                e.what());
        continue;
      }
      std::vector<std::uint64_t> rs{0, 1, Q - 1};
      for (std::uint64_t l = 1; l <= lmax; ++l) {
        for (std::uint64_t r : rs) {
          if (r >= Q) continue;
          const std::uint64_t n = l * Q + r;
          if (n < k) continue;
          BlockReport rep = check_block_equality(n, k, N);
          std::string inst =
              "k=" + istr(k) + " N=" + istr(N) + " l=" + istr(l) + " r=" + istr(r);
          add_row(rows, "blocks", "block_equality", inst, rep.pass ? "pass" : "fail",
                  rep.pass ? ""
                           : "section " + istr(rep.first_bad_section) + " block " +
                                 istr(rep.first_bad_block));
        }
      }
    }
  }
}

void run_lemma34_suite(std::vector<CheckRow>& rows, unsigned kmax, unsigned nmax) {
  for (unsigned k = 2; k <= kmax; ++k) {
    for (std::uint64_t n = 1; n <= nmax; ++n) {
      bool all = true;
      std::string bad;
      for (unsigned m = 1; m + 1 <= k && all; ++m) {
        for (std::uint64_t j = 0; j < n && all; ++j) {
          Lemma34Report rep = check_lemma34(n, k, m, j);
          if (!rep.pass) {
            all = false;
            bad = "m=" + istr(m) + " j=" + istr(j) + " lhs=" + istr(rep.lhs) + " rhs=" +
                  istr(rep.p_le_k) + "-" + istr(rep.bad_total);
          }
        }
      }
      add_row(rows, "lemma34", "coefficient_identity", "k=" + istr(k) + " n=" + istr(n),
              all ? "pass" : "fail", bad);
    }
  }
}

void run_sections_suite(std::vector<CheckRow>& rows, unsigned kmax, unsigned lmax) {
  for (unsigned k = 1; k <= std::min(kmax, 5u); ++k) {
    for (std::uint32_t N = 2; N <= 5; ++N) {
      for (std::uint64_t l = 1; l <= lmax; ++l) {
        std::string inst = "k=" + istr(k) + " N=" + istr(N) + " l=" + istr(l);
        try {
          SectionZeroReport rep = check_section_zeros(l, k, N);
          add_row(rows, "sections", "section_zeros", inst, rep.pass ? "pass" : "fail",
                  rep.pass ? ""
                           : "section " + istr(rep.first_bad_section) + " index " +
                                 istr(rep.first_bad_index));
        } catch (const InvalidArgument& e) {
          add_row(rows, "sections", "section_zeros", inst, "skip", e.what());
        }
      }
    }
  }
}

void run_slopes_suite(std::vector<CheckRow>& rows, unsigned kmax) {
  auto report_rows = [&](std::uint32_t N, bool odd) {
    for (unsigned k = 1; k <= kmax; ++k) {
      std::vector<SlopePeriodReport> reps;
      try {
        reps = check_slope_period_all(k, N);
      } catch (const InvalidArgument& e) {
        add_row(rows, "slopes", odd ? "slope_period" : "slope_period_even",
                "k=" + istr(k) + " N=" + istr(N), "skip", e.what());
        continue;
      }
      for (const auto& rep : reps) {
        std::string inst = "k=" + istr(k) + " N=" + istr(N) + " R=" + istr(rep.R);
        if (odd) {
          std::string status = rep.status == CheckStatus::pass ? "pass"
                               : rep.status == CheckStatus::fail ? "fail"
                                                                 : "skip";
          add_row(rows, "slopes", "slope_period", inst, status,
                  rep.status == CheckStatus::pass
                      ? ""
                      : "first bad i=" + istr(rep.first_bad_i) +
                            (rep.hypothesis_met ? "" : "; hypothesis not met"));
        } else {
          add_row(rows, "slopes", "slope_period_even", inst,
                  rep.slopes_translate ? "pass" : "skip",
                  rep.slopes_translate ? "" : "translation fails; even modulus logged only");
        }
      }
    }
  };
  for (std::uint32_t N : {3u, 5u}) report_rows(N, true);
  for (std::uint32_t N : {2u, 4u}) report_rows(N, false);
}

int cmd_verify(const Options& opt, const std::string& suite, unsigned kmax, unsigned nmax,
               unsigned lmax) {
  std::vector<CheckRow> rows;
  bool known = false;
  auto want = [&](const char* s) {
    bool w = suite == "all" || suite == s;
    known = known || suite == s;
    return w;
  };
  if (want("gamma")) run_gamma_suite(rows, kmax);
  if (want("zerosum")) run_zerosum_suite(rows, kmax);
  if (want("blocks")) run_blocks_suite(rows, kmax, lmax);
  if (want("lemma34")) run_lemma34_suite(rows, kmax, nmax);
  if (want("sections")) run_sections_suite(rows, kmax, lmax);
  if (want("slopes")) run_slopes_suite(rows, kmax);
  if (suite != "all" && !known) throw InvalidArgument("verify: unknown suite " + suite);

  std::uint64_t npass = 0, nfail = 0, nskip = 0;
  for (const auto& r : rows) {
    if (r.status == "pass") ++npass;
    else if (r.status == "fail") ++nfail;
    else ++nskip;
  }

  ordered_json params{{"suite", suite}, {"kmax", istr(kmax)}, {"nmax", istr(nmax)},
                      {"lmax", istr(lmax)}};
  ordered_json checks = ordered_json::array();
  std::vector<std::string> csv{"suite,name,instance,status,detail"};
  for (const auto& r : rows) {
    if (opt.quiet && r.status == "pass") continue;
    checks.push_back(ordered_json{{"suite", r.suite},
                                  {"name", r.name},
                                  {"instance", r.instance},
                                  {"status", r.status},
                                  {"detail", r.detail}});
    csv.push_back(r.suite + "," + r.name + "," + r.instance + "," + r.status + "," + r.detail);
  }
  ordered_json data{{"checks", checks},
                    {"summary", ordered_json{{"pass", istr(npass)},
                                             {"fail", istr(nfail)},
                                             {"skip", istr(nskip)}}}};
  csv.push_back("summary_pass," + istr(npass));
  csv.push_back("summary_fail," + istr(nfail));
  csv.push_back("summary_skip," + istr(nskip));
  emit(opt, "verify", params, data, csv);
  return nfail == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact coefficient statistics of Gaussian binomials mod N"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_flag("--quiet", opt.quiet, "suppress passing rows in verify output");
  app.add_option("--out", opt.out_path, "also write output to this file");
  app.add_option("--backend", opt.backend, "force a kernel backend")
      ->check(CLI::IsMember({"scalar", "avx2"}));

  std::uint64_t n = 0, from = 0, to = 0, bound = 0, terms = 0, p = 2;
  unsigned k = 1, e = 0, kmax = 4, nmax = 6, lmax = 2;
  std::uint32_t N = 2, R = 0;
  bool verify_flag = false;
  std::string suite = "all", grid = "16,64,256,1024";

  CLI::App* c_coeffs = app.add_subcommand("coeffs", "coefficients of [n choose k]_q mod N");
  c_coeffs->add_option("--n", n)->required();
  c_coeffs->add_option("--k", k)->required();
  c_coeffs->add_option("--mod", N)->required();

  CLI::App* c_part = app.add_subcommand("partitions", "prefix of p_{<=k}(n) mod N");
  c_part->add_option("--k", k)->required();
  c_part->add_option("--mod", N)->required();
  c_part->add_option("--len", to)->required();

  CLI::App* c_period = app.add_subcommand("period", "minimal period of p_{<=k} mod N");
  c_period->add_option("--k", k)->required();
  c_period->add_option("--mod", N)->required();
  c_period->add_flag("--verify", verify_flag, "cross-check against the empirical period");

  CLI::App* c_qperiod = app.add_subcommand("qperiod", "quasi-period table up to k");
  c_qperiod->add_option("--k", k)->required();
  c_qperiod->add_option("--mod", N)->required();

  CLI::App* c_count = app.add_subcommand("count", "f_{k,R}(n) over a range of n");
  c_count->add_option("--k", k)->required();
  c_count->add_option("--r", R)->required();
  c_count->add_option("--mod", N)->required();
  c_count->add_option("--from", from)->required();
  c_count->add_option("--to", to)->required();

  CLI::App* c_fit = app.add_subcommand("fit", "piecewise-linear fit of n -> f_{k,R}(n)");
  c_fit->add_option("--k", k)->required();
  c_fit->add_option("--r", R)->required();
  c_fit->add_option("--mod", N)->required();

  CLI::App* c_genfun = app.add_subcommand("genfun", "rational generating function of f_{k,R}");
  c_genfun->add_option("--k", k)->required();
  c_genfun->add_option("--r", R)->required();
  c_genfun->add_option("--mod", N)->required();
  c_genfun->add_option("--terms", terms, "cross-check terms (0 = min(3Q, 1200))");

  CLI::App* c_search = app.add_subcommand("search", "empirical minimal quasi-period");
  c_search->add_option("--k", k)->required();
  c_search->add_option("--r", R)->required();
  c_search->add_option("--mod", N)->required();
  c_search->add_option("--bound", bound)->required();

  CLI::App* c_verify = app.add_subcommand(
      "verify",
      "run structural check suites at desk scale (k <= 4 and small fixed moduli "
      "per suite by default; raise with the flags below)");
  c_verify->add_option("--suite", suite)
      ->check(CLI::IsMember({"all", "gamma", "zerosum", "blocks", "lemma34", "sections",
                             "slopes"}))
      ->capture_default_str();
  c_verify->add_option("--kmax", kmax, "largest k swept by each suite")->capture_default_str();
  c_verify->add_option("--nmax", nmax, "largest n for the box-identity sweep")
      ->capture_default_str();
  c_verify->add_option("--lmax", lmax, "largest block multiplier l")->capture_default_str();

  CLI::App* c_asym = app.add_subcommand("asymptotics", "growth estimates against exact values");
  c_asym->add_option("--p", p)->required();
  c_asym->add_option("--e", e, "prime-power exponent for the combined column");
  c_asym->add_option("--k-grid", grid)->capture_default_str();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& h) {
    return app.exit(h);
  } catch (const CLI::ParseError& pe) {
    app.exit(pe);
    return 2;
  }

  try {
    if (!opt.backend.empty()) {
      using kernels::Backend;
      Backend b = opt.backend == "avx2" ? Backend::avx2 : Backend::scalar;
      if (!kernels::set_backend(b))
        throw InvalidArgument("backend not supported on this machine: " + opt.backend);
    }
    if (c_coeffs->parsed()) return cmd_coeffs(opt, n, k, N);
    if (c_part->parsed()) return cmd_partitions(opt, k, N, to);
    if (c_period->parsed()) return cmd_period(opt, k, N, verify_flag);
    if (c_qperiod->parsed()) return cmd_qperiod(opt, k, N);
    if (c_count->parsed()) return cmd_count(opt, k, R, N, from, to);
    if (c_fit->parsed()) return cmd_fit(opt, k, R, N);
    if (c_genfun->parsed()) return cmd_genfun(opt, k, R, N, terms);
    if (c_search->parsed()) return cmd_search(opt, k, R, N, bound);
    if (c_verify->parsed()) return cmd_verify(opt, suite, kmax, nmax, lmax);
    if (c_asym->parsed()) return cmd_asymptotics(opt, p, e, grid);
  } catch (const NonlinearFit& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 1;
  } catch (const StructureViolation& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 1;
  } catch (const Error& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 2;
  } catch (const std::exception& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 2;
  }
  return 2;
}
