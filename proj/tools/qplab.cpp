// qplab: exact workbench for A-partition series, their quasi-polynomial
// structure, and Turan/Laguerre inequality analysis.
//
// Exit codes: 0 success / inequality verified within the horizon,
//             1 violations persist to the horizon or a check failed,
//             2 usage error.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qplab/asymptotics.hpp"
#include "qplab/combinatorics.hpp"
#include "qplab/inequalities.hpp"
#include "qplab/partitions.hpp"
#include "qplab/quasipoly.hpp"
#include "qplab/series_cache.hpp"
#include "verify_checks.hpp"

using namespace qplab;

namespace {

enum class Format { pretty, csv, json };

Format parse_format(const std::string& name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    return Format::pretty;
}

struct CommonOpts {
    std::string multiset;
    std::string format = "pretty";
    std::string cache_dir;
    int jobs = 1;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_multiset = true) {
    auto* a = cmd->add_option("-A,--multiset", opts.multiset,
                              "multiset of parts, e.g. 1,1,1,1,300");
    if (needs_multiset) a->required();
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"pretty", "csv", "json"}));
    cmd->add_option("--cache-dir", opts.cache_dir,
                    "series cache directory (QPLAB_CACHE_DIR is the fallback)");
    cmd->add_option("--jobs", opts.jobs, "worker threads for scans/profiles")
        ->check(CLI::PositiveNumber);
}

SeriesCache cache_of(const CommonOpts& opts) {
    return SeriesCache::resolve(opts.cache_dir.empty() ? std::nullopt
                                                       : std::optional<std::string>(opts.cache_dir));
}

QuasiPolynomial recover_qp(const Multiset& A, const SeriesCache& cache, long samples = 0) {
    long period = static_cast<long>(A.lcm().get_si());
    long degree = static_cast<long>(A.k()) - 1;
    long need = period * (degree + 2);
    if (samples < need) samples = need;
    return QuasiPolynomial::recover(cache.get(A, samples - 1), period, degree);
}

std::string approx(const Rat& q) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", q.get_d());
    return buf;
}

// ------------------------------------------------------------------ series

int cmd_series(const CommonOpts& opts, long N) {
    Multiset A = Multiset::parse(opts.multiset);
    auto values = cache_of(opts).get(A, N);
    switch (parse_format(opts.format)) {
        case Format::csv:
            std::printf("n,p\n");
            for (std::size_t n = 0; n < values.size(); ++n)
                std::printf("%zu,%s\n", n, values[n].get_str().c_str());
            break;
        case Format::json: {
            nlohmann::json out;
            out["multiset"] = A.canonical_string();
            nlohmann::json vals = nlohmann::json::array();
            for (const auto& v : values) vals.push_back(v.get_str());
            out["values"] = std::move(vals);
            std::printf("%s\n", out.dump().c_str());
            break;
        }
        case Format::pretty:
            std::printf("p_{%s}(n) for n = 0..%ld\n", A.canonical_string().c_str(), N);
            for (std::size_t n = 0; n < values.size(); ++n)
                std::printf("%6zu  %s\n", n, values[n].get_str().c_str());
            break;
    }
    return 0;
}

// ----------------------------------------------------------------- recover

int cmd_recover(const CommonOpts& opts, long samples) {
    Multiset A = Multiset::parse(opts.multiset);
    QuasiPolynomial qp = recover_qp(A, cache_of(opts), samples);
    switch (parse_format(opts.format)) {
        case Format::json:
            std::printf("%s\n", qp.to_json().c_str());
            break;
        case Format::csv: {
            std::printf("class");
            for (long j = 0; j <= qp.degree(); ++j) std::printf(",c%ld", j);
            std::printf("\n");
            for (long r = 0; r < qp.period(); ++r) {
                std::printf("%ld", r);
                const auto& piece = qp.pieces()[static_cast<std::size_t>(r)];
                for (long j = 0; j <= qp.degree(); ++j)
                    std::printf(",%s", to_string(piece.coeff(static_cast<std::size_t>(j))).c_str());
                std::printf("\n");
            }
            break;
        }
        case Format::pretty: {
            std::printf("p_{%s} is a quasi-polynomial with period %ld, degree %ld\n",
                        A.canonical_string().c_str(), qp.period(), qp.degree());
            auto table = qp.coefficient_table();
            for (long j = qp.degree(); j >= 0; --j) {
                if (table.constant[static_cast<std::size_t>(j)])
                    std::printf("  n^%ld: %s (all classes)\n", j,
                                to_string(table.rows[static_cast<std::size_t>(j)][0]).c_str());
                else
                    std::printf("  n^%ld: varies with the class mod %ld\n", j, qp.period());
            }
            long shown = std::min<long>(qp.period(), 6);
            for (long r = 0; r < shown; ++r)
                std::printf("  class %ld: %s\n", r,
                            qp.pieces()[static_cast<std::size_t>(r)].to_string("n").c_str());
            if (shown < qp.period())
                std::printf("  ... %ld more classes (use --format csv or json for all)\n",
                            qp.period() - shown);
            break;
        }
    }
    return 0;
}

// ----------------------------------------------------------------- profile

int cmd_profile(const CommonOpts& opts, const std::string& kind_arg, long d, bool raw) {
    ExprKind kind = parse_kind(kind_arg);
    if (kind == ExprKind::jensen || kind == ExprKind::rlogconcave)
        throw std::invalid_argument("profiles support turan2, turan3, turan4, laguerre");
    Multiset A = Multiset::parse(opts.multiset);
    QuasiPolynomial qp = recover_qp(A, cache_of(opts));
    InequalityProfile prof = inequality_profile(qp, kind, d, raw, opts.jobs);
    switch (parse_format(opts.format)) {
        case Format::json:
            std::printf("%s\n", prof.to_json().c_str());
            break;
        case Format::csv:
            std::fputs(prof.to_csv().c_str(), stdout);
            break;
        case Format::pretty: {
            std::printf("%s profile of p_{%s}: period %ld\n", kind_name(kind).c_str(),
                        A.canonical_string().c_str(), prof.period);
            if (kind == ExprKind::laguerre)
                std::printf("  order d=%ld, %s normalization\n", prof.order,
                            prof.laguerre_raw ? "raw" : "reduced (printed form)");
            if (prof.min_zero)
                std::printf("  minimum: identically zero, on classes");
            else
                std::printf("  min leading coefficient %s (~%s) at degree %ld, on classes",
                            to_string(prof.min_leading).c_str(), approx(prof.min_leading).c_str(),
                            prof.min_degree);
            if (static_cast<long>(prof.argmin.size()) == prof.period) {
                std::printf(" all %ld\n", prof.period);
            } else if (prof.argmin.size() > 8) {
                std::printf(" %zu of %ld; complement:", prof.argmin.size(), prof.period);
                std::size_t idx = 0;
                for (long r = 0; r < prof.period; ++r) {
                    if (idx < prof.argmin.size() && prof.argmin[idx] == r) {
                        ++idx;
                        continue;
                    }
                    std::printf(" %ld", r);
                }
                std::printf("\n");
            } else {
                for (long r : prof.argmin) std::printf(" %ld", r);
                std::printf("\n");
            }
            long shown = std::min<long>(prof.period, 10);
            for (long r = 0; r < shown; ++r) {
                const auto& cp = prof.classes[static_cast<std::size_t>(r)];
                if (cp.zero)
                    std::printf("  class %ld: identically zero\n", r);
                else
                    std::printf("  class %ld: degree %ld, leading %s (~%s)\n", r, cp.degree,
                                to_string(cp.leading).c_str(), approx(cp.leading).c_str());
            }
            if (shown < prof.period)
                std::printf("  ... %ld more classes (use --format csv or json for all)\n",
                            prof.period - shown);
            break;
        }
    }
    return 0;
}

// -------------------------------------------------------------------- scan

int cmd_scan(const CommonOpts& opts, const std::string& kind_arg, long d, long limit) {
    ExprKind kind = parse_kind(kind_arg);
    long order = kind == ExprKind::turan2   ? 2
               : kind == ExprKind::turan3   ? 3
               : kind == ExprKind::turan4   ? 4
                                            : d;
    if (kind == ExprKind::laguerre && order < 0)
        throw std::invalid_argument("laguerre scans need an order -d >= 0");
    if ((kind == ExprKind::jensen || kind == ExprKind::rlogconcave) && order < 1)
        throw std::invalid_argument("jensen/rlogconcave scans need an order -d >= 1");
    Multiset A = Multiset::parse(opts.multiset);
    auto values = cache_of(opts).get(A, limit + kind_forward_span(kind, order));
    ScanResult res = threshold_scan(values, kind, d, limit, opts.jobs);

    switch (parse_format(opts.format)) {
        case Format::csv: {
            // plot-ready rows: the exact expression value at each n (for
            // jensen/rlogconcave a 0/1 violation indicator)
            std::printf("n,value\n");
            long back = kind_backward_span(kind);
            long forward = kind_forward_span(kind, order);
            for (long n = res.first_n; n <= limit; ++n) {
                if (kind == ExprKind::jensen || kind == ExprKind::rlogconcave) {
                    bool viol =
                        std::binary_search(res.violations.begin(), res.violations.end(), n);
                    std::printf("%ld,%d\n", n, viol ? 1 : 0);
                    continue;
                }
                Window w;
                w.base = n - back;
                for (long i = -back; i <= forward; ++i)
                    w.values.emplace_back(values[static_cast<std::size_t>(n + i)]);
                Rat value = kind == ExprKind::laguerre
                                ? laguerre_expression(w, order).reduced
                                : turan_expression(w, static_cast<int>(order));
                std::printf("%ld,%s\n", n, to_string(value).c_str());
            }
            break;
        }
        case Format::json: {
            nlohmann::json out;
            out["multiset"] = A.canonical_string();
            out["kind"] = kind_name(kind);
            out["order"] = order;
            out["limit"] = limit;
            out["first_n"] = res.first_n;
            out["violations"] = res.violations;
            if (res.last_violation)
                out["last_violation"] = *res.last_violation;
            else
                out["last_violation"] = nullptr;
            out["holds_from"] = res.holds_from;
            out["persists"] = res.persists();
            out["note"] = "empirical up to the scan horizon";
            std::printf("%s\n", out.dump().c_str());
            break;
        }
        case Format::pretty:
            std::printf("%s scan of p_{%s} for n in [%ld, %ld] (empirical up to the horizon)\n",
                        kind_name(kind).c_str(), A.canonical_string().c_str(), res.first_n, limit);
            std::printf("  violations: %zu\n", res.violations.size());
            if (res.last_violation) {
                std::printf("  last violation at n = %ld\n", *res.last_violation);
                std::printf("  holds for n in (%ld, %ld]\n", *res.last_violation, limit);
            } else {
                std::printf("  no violations; holds from n = %ld\n", res.holds_from);
            }
            if (res.persists())
                std::printf("  violations reach the upper half of the horizon: not settled\n");
            break;
    }
    return res.persists() ? 1 : 0;
}

// ------------------------------------------------------------------- limit

int cmd_limit(const CommonOpts& opts, long s, long n, const std::vector<std::string>& xs_raw) {
    Multiset A = Multiset::parse(opts.multiset);
    std::vector<Rat> xs;
    for (const auto& t : xs_raw) xs.push_back(parse_rat(t));
    if (xs.empty()) xs = {make_rat(1, 2), Rat(1), Rat(2)};
    auto values = cache_of(opts).get(A, n + s);
    LimitProfile prof = limit_profile(values, static_cast<long>(A.k()) - 1, s, n, xs);
    switch (parse_format(opts.format)) {
        case Format::csv:
            std::printf("x,value,target,deviation\n");
            for (const auto& smp : prof.samples)
                std::printf("%s,%s,%s,%s\n", to_string(smp.x).c_str(),
                            to_string(smp.value).c_str(), to_string(smp.target).c_str(),
                            to_string(smp.deviation).c_str());
            break;
        case Format::json: {
            nlohmann::json out;
            out["multiset"] = A.canonical_string();
            out["s"] = s;
            out["n"] = n;
            out["target_poly"] = prof.target_poly.to_string();
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& smp : prof.samples)
                rows.push_back({{"x", to_string(smp.x)},
                                {"value", to_string(smp.value)},
                                {"target", to_string(smp.target)},
                                {"deviation", to_string(smp.deviation)}});
            out["samples"] = std::move(rows);
            std::printf("%s\n", out.dump().c_str());
            break;
        }
        case Format::pretty:
            std::printf("renormalized jensen values of p_{%s}, s=%ld, n=%ld\n",
                        A.canonical_string().c_str(), s, n);
            std::printf("  limit shape: %s\n", prof.target_poly.to_string().c_str());
            std::printf("  %-8s %-14s %-14s %s\n", "x", "value", "target", "deviation (approx)");
            for (const auto& smp : prof.samples)
                std::printf("  %-8s %-14s %-14s %s\n", to_string(smp.x).c_str(),
                            approx(smp.value).c_str(), approx(smp.target).c_str(),
                            approx(smp.deviation).c_str());
            break;
    }
    return 0;
}

// ---------------------------------------------------------------- almkvist

int cmd_almkvist(const CommonOpts& opts, long j, bool force) {
    Multiset A = Multiset::parse(opts.multiset);
    long k = static_cast<long>(A.k());
    if (j < 1 || j > k) throw std::invalid_argument("almkvist: need 1 <= j <= #A");
    bool holds = A.gcd_condition(static_cast<std::size_t>(j));
    if (!holds && !force) {
        std::fprintf(stderr,
                     "gcd condition fails: some %ld-element multisubset of {%s} has gcd > 1.\n"
                     "The truncation-error guarantee is void; pass --force to compute anyway.\n",
                     j, A.canonical_string().c_str());
        return 2;
    }
    SigmaSeries sig = sigma(A, k - j);
    Polynomial mt = almkvist_main_term(A, j, /*allow_gcd_failure=*/true);
    switch (parse_format(opts.format)) {
        case Format::json: {
            nlohmann::json out;
            out["multiset"] = A.canonical_string();
            out["j"] = j;
            out["gcd_condition"] = holds;
            nlohmann::json sigs = nlohmann::json::array();
            for (const auto& v : sig.coefficients) sigs.push_back(to_string(v));
            out["sigma"] = std::move(sigs);
            nlohmann::json coeffs = nlohmann::json::array();
            for (long i = 0; i <= mt.degree(); ++i)
                coeffs.push_back(to_string(mt.coeff(static_cast<std::size_t>(i))));
            out["main_term"] = std::move(coeffs);
            std::printf("%s\n", out.dump().c_str());
            break;
        }
        case Format::csv:
            std::printf("power,coefficient\n");
            for (long i = 0; i <= mt.degree(); ++i)
                std::printf("%ld,%s\n", i,
                            to_string(mt.coeff(static_cast<std::size_t>(i))).c_str());
            break;
        case Format::pretty:
            std::printf("sigma coefficients of {%s} up to t^%ld:\n  ",
                        A.canonical_string().c_str(), k - j);
            for (std::size_t i = 0; i < sig.coefficients.size(); ++i)
                std::printf("%s%s", i ? ", " : "", to_string(sig.coefficients[i]).c_str());
            std::printf("\nmain term (coefficients valid down to degree %ld):\n  %s\n", j - 1,
                        mt.to_string("n").c_str());
            break;
    }
    if (!holds)
        std::printf("warning: gcd condition fails at size %ld; the truncation-error guarantee is "
                    "void for this multiset\n",
                    j);
    return 0;
}

// ------------------------------------------------------------ verify-paper

int cmd_verify(const CommonOpts& opts, const std::string& only, bool list) {
    SeriesCache cache = cache_of(opts);
    auto checks = verify_checks();
    if (list) {
        for (const auto& chk : checks) std::printf("%s\n", chk.name.c_str());
        return 0;
    }
    if (!only.empty()) {
        bool known = false;
        for (const auto& chk : checks) known = known || chk.name == only;
        if (!known) {
            std::fprintf(stderr, "unknown check '%s'; --list shows the available names\n",
                         only.c_str());
            return 2;
        }
    }
    bool all_ok = true;
    for (const auto& chk : checks) {
        if (!only.empty() && chk.name != only) continue;
        auto t0 = std::chrono::steady_clock::now();
        VerifyResult res = chk.run(cache, opts.jobs);
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
        std::printf("[%s] %-34s (%6lld ms)%s%s\n", res.ok ? "PASS" : "FAIL", chk.name.c_str(),
                    static_cast<long long>(elapsed), res.message.empty() ? "" : "  ",
                    res.message.c_str());
        all_ok = all_ok && res.ok;
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact A-partition quasi-polynomial and inequality workbench"};
    app.require_subcommand(1);

    CommonOpts series_opts;
    long series_N = 20;
    auto* series_cmd = app.add_subcommand("series", "tabulate p_A(0..N)");
    add_common(series_cmd, series_opts);
    series_cmd->add_option("-N,--limit", series_N, "largest index")->check(CLI::NonNegativeNumber);

    CommonOpts recover_opts;
    recover_opts.format = "json";
    long recover_N = 0;
    auto* recover_cmd =
        app.add_subcommand("recover", "recover the quasi-polynomial structure of p_A");
    add_common(recover_cmd, recover_opts);
    recover_cmd->add_option("-N,--samples", recover_N,
                            "series samples to use (default: lcm(A) * (#A + 1))");

    CommonOpts profile_opts;
    std::string profile_kind;
    long profile_d = 2;
    bool profile_raw = false;
    auto* profile_cmd = app.add_subcommand(
        "profile", "per-class degree and leading coefficient of an inequality expression");
    add_common(profile_cmd, profile_opts);
    profile_cmd->add_option("--kind", profile_kind, "turan2, turan3, turan4 or laguerre")
        ->required();
    profile_cmd->add_option("-d,--order", profile_d, "laguerre order (ignored for turan kinds)");
    profile_cmd->add_flag("--raw", profile_raw,
                          "report the raw laguerre sum (2x the printed form)");

    CommonOpts scan_opts;
    std::string scan_kind;
    long scan_d = 2, scan_N = 1000;
    auto* scan_cmd =
        app.add_subcommand("scan", "exact sign scan of an inequality expression up to a horizon");
    add_common(scan_cmd, scan_opts);
    scan_cmd->add_option("--kind", scan_kind,
                         "turan2, turan3, turan4, laguerre, jensen or rlogconcave")
        ->required();
    scan_cmd->add_option("-d,--order", scan_d, "order for laguerre/jensen/rlogconcave");
    scan_cmd->add_option("-N,--limit", scan_N, "scan horizon")->check(CLI::PositiveNumber);

    CommonOpts limit_opts;
    long limit_s = 2, limit_n = 10000;
    std::vector<std::string> limit_xs;
    auto* limit_cmd = app.add_subcommand(
        "limit", "renormalized jensen values against the laguerre limit shape");
    add_common(limit_cmd, limit_opts);
    limit_cmd->add_option("-s,--degree", limit_s, "jensen degree s")->check(CLI::NonNegativeNumber);
    limit_cmd->add_option("-n,--at", limit_n, "evaluation index n")->check(CLI::PositiveNumber);
    limit_cmd->add_option("-x", limit_xs, "evaluation points (rationals; repeatable)");

    CommonOpts alm_opts;
    long alm_j = 1;
    bool alm_force = false;
    auto* alm_cmd =
        app.add_subcommand("almkvist", "sigma coefficients and the asymptotic main term");
    add_common(alm_cmd, alm_opts);
    alm_cmd->add_option("-j", alm_j, "truncation parameter, 1 <= j <= #A")->required();
    alm_cmd->add_flag("--force", alm_force, "compute even when the gcd condition fails");

    CommonOpts verify_opts;
    std::string verify_only;
    bool verify_list = false;
    auto* verify_cmd =
        app.add_subcommand("verify-paper", "run the published-value regression checklist");
    add_common(verify_cmd, verify_opts, /*needs_multiset=*/false);
    verify_cmd->add_option("--only", verify_only, "run a single named check");
    verify_cmd->add_flag("--list", verify_list, "list check names and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (series_cmd->parsed()) return cmd_series(series_opts, series_N);
        if (recover_cmd->parsed()) return cmd_recover(recover_opts, recover_N);
        if (profile_cmd->parsed())
            return cmd_profile(profile_opts, profile_kind, profile_d, profile_raw);
        if (scan_cmd->parsed()) return cmd_scan(scan_opts, scan_kind, scan_d, scan_N);
        if (limit_cmd->parsed()) return cmd_limit(limit_opts, limit_s, limit_n, limit_xs);
        if (alm_cmd->parsed()) return cmd_almkvist(alm_opts, alm_j, alm_force);
        if (verify_cmd->parsed()) return cmd_verify(verify_opts, verify_only, verify_list);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const recover_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
