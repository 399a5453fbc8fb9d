#include "qplab/inequalities.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qplab/combinatorics.hpp"
#include "qplab/parallel.hpp"
#include "qplab/partitions.hpp"
#include "qplab/roots.hpp"

namespace qplab {

ExprKind parse_kind(std::string_view name) {
    if (name == "turan2") return ExprKind::turan2;
    if (name == "turan3") return ExprKind::turan3;
    if (name == "turan4") return ExprKind::turan4;
    if (name == "laguerre") return ExprKind::laguerre;
    if (name == "jensen") return ExprKind::jensen;
    if (name == "rlogconcave") return ExprKind::rlogconcave;
    throw std::invalid_argument("unknown expression kind: " + std::string(name));
}

std::string kind_name(ExprKind kind) {
    switch (kind) {
        case ExprKind::turan2: return "turan2";
        case ExprKind::turan3: return "turan3";
        case ExprKind::turan4: return "turan4";
        case ExprKind::laguerre: return "laguerre";
        case ExprKind::jensen: return "jensen";
        case ExprKind::rlogconcave: return "rlogconcave";
    }
    return "?";
}

long kind_backward_span(ExprKind kind) {
    return (kind == ExprKind::turan2 || kind == ExprKind::turan3) ? 1 : 0;
}

long kind_forward_span(ExprKind kind, long d) {
    switch (kind) {
        case ExprKind::turan2: return 1;
        case ExprKind::turan3: return 2;
        case ExprKind::turan4: return 4;
        case ExprKind::laguerre: return 2 * d;
        case ExprKind::jensen: return d;
        case ExprKind::rlogconcave: return 2 * d;
    }
    return 0;
}

namespace {
void require_span(const Window& w, std::size_t span, const char* what) {
    if (w.values.size() < span)
        throw std::invalid_argument(std::string(what) + ": window too short (need " +
                                    std::to_string(span) + " values, got " +
                                    std::to_string(w.values.size()) + ")");
}
}  // namespace

Polynomial jensen_poly(const Window& w, long d) {
    if (d < 0) throw std::invalid_argument("jensen_poly: d must be >= 0");
    require_span(w, static_cast<std::size_t>(d) + 1, "jensen_poly");
    std::vector<Rat> coeffs(static_cast<std::size_t>(d) + 1);
    for (long i = 0; i <= d; ++i)
        coeffs[static_cast<std::size_t>(i)] =
            Rat(binomial(d, i)) * w.values[static_cast<std::size_t>(i)];
    return Polynomial(std::move(coeffs));
}

bool is_hyperbolic(const Polynomial& p) { return hyperbolic_by_sturm(p); }

Rat turan_expression(const Window& w, int d) {
    switch (d) {
        case 2: {
            require_span(w, 3, "turan_expression(d=2)");
            const Rat &a = w.values[0], &b = w.values[1], &c = w.values[2];
            return b * b - c * a;
        }
        case 3: {
            require_span(w, 4, "turan_expression(d=3)");
            const Rat &a = w.values[0], &b = w.values[1], &c = w.values[2], &e = w.values[3];
            Rat cross = b * c - a * e;
            return Rat(4) * (b * b - a * c) * (c * c - b * e) - cross * cross;
        }
        case 4: {
            require_span(w, 5, "turan_expression(d=4)");
            const Rat &w0 = w.values[0], &w1 = w.values[1], &w2 = w.values[2], &w3 = w.values[3],
                      &w4 = w.values[4];
            return Rat(54) * w0 * w1 * w1 * w2 * w4 * w4 + w0 * w0 * w0 * w4 * w4 * w4 +
                   Rat(108) * w1 * w1 * w1 * w2 * w3 * w4 + Rat(36) * w1 * w1 * w2 * w2 * w3 * w3 -
                   Rat(12) * w0 * w0 * w1 * w3 * w4 * w4 - Rat(54) * w1 * w1 * w2 * w2 * w2 * w4 -
                   Rat(6) * w0 * w1 * w1 * w3 * w3 * w4 - Rat(54) * w0 * w2 * w2 * w2 * w3 * w3 -
                   Rat(27) * w1 * w1 * w1 * w1 * w4 * w4 - Rat(180) * w0 * w1 * w2 * w2 * w3 * w4 -
                   Rat(27) * w0 * w0 * w3 * w3 * w3 * w3 + Rat(108) * w0 * w1 * w2 * w3 * w3 * w3 -
                   Rat(64) * w1 * w1 * w1 * w3 * w3 * w3 - Rat(18) * w0 * w0 * w2 * w2 * w4 * w4 +
                   Rat(81) * w0 * w2 * w2 * w2 * w2 * w4 + Rat(54) * w0 * w0 * w2 * w3 * w3 * w4;
        }
        default:
            throw std::invalid_argument("turan_expression: supported orders are 2, 3, 4");
    }
}

LaguerreValue laguerre_expression(const Window& w, long d) {
    if (d < 0) throw std::invalid_argument("laguerre_expression: d must be >= 0");
    require_span(w, static_cast<std::size_t>(2 * d) + 1, "laguerre_expression");
    Rat raw(0);
    for (long j = 0; j <= 2 * d; ++j) {
        Rat term = Rat(binomial(2 * d, j)) * w.values[static_cast<std::size_t>(j)] *
                   w.values[static_cast<std::size_t>(2 * d - j)];
        if ((j + d) % 2 == 0)
            raw += term;
        else
            raw -= term;
    }
    LaguerreValue out{raw, raw};
    if (d >= 1) out.reduced = raw / 2;
    return out;
}

Polynomial generalized_laguerre(long m, const Rat& alpha) {
    if (m < 0) throw std::invalid_argument("generalized_laguerre: m must be >= 0");
    std::vector<Rat> coeffs(static_cast<std::size_t>(m) + 1);
    Rat top = Rat(m) + alpha;
    for (long j = 0; j <= m; ++j) {
        Rat c = binomial_rat(top, static_cast<unsigned long>(m - j)) /
                Rat(factorial(static_cast<unsigned long>(j)));
        if (j % 2 != 0) c = -c;
        coeffs[static_cast<std::size_t>(j)] = c;
    }
    return Polynomial(std::move(coeffs));
}

LimitProfile limit_profile(const std::vector<Int>& values, long l, long s, long n,
                           const std::vector<Rat>& xs) {
    if (s < 0 || l < s) throw std::invalid_argument("limit_profile: need 0 <= s <= l");
    if (n < 1 || static_cast<std::size_t>(n + s) >= values.size())
        throw std::invalid_argument("limit_profile: sequence does not cover n..n+s");
    for (long i = 0; i <= s; ++i)
        if (values[static_cast<std::size_t>(n + i)] <= 0)
            throw std::invalid_argument("limit_profile: nonpositive window values");

    LimitProfile out;
    out.s = s;
    out.l = l;
    out.n = n;
    Polynomial target = generalized_laguerre(s, Rat(l - s)) * Rat(factorial(static_cast<unsigned long>(s)));
    if (s % 2 != 0) target = -target;
    out.target_poly = target;

    Rat n_pow_s = rat_pow(Rat(n), static_cast<unsigned long>(s));
    Rat scale = n_pow_s / Rat(values[static_cast<std::size_t>(n)]);
    for (const Rat& x : xs) {
        Rat y = x / Rat(n) - 1;
        Rat jensen(0);
        Rat ypow(1);
        for (long i = 0; i <= s; ++i) {
            jensen += Rat(binomial(s, i)) * Rat(values[static_cast<std::size_t>(n + i)]) * ypow;
            ypow *= y;
        }
        LimitSample sample;
        sample.x = x;
        sample.value = scale * jensen;
        sample.target = target(x);
        sample.deviation = abs(sample.value - sample.target);
        out.samples.push_back(std::move(sample));
    }
    return out;
}

LimitProfile limit_profile(const Multiset& A, long s, long n, const std::vector<Rat>& xs) {
    PartitionSeries ps = series(A, n + s);
    return limit_profile(ps.values, static_cast<long>(A.k()) - 1, s, n, xs);
}

bool r_log_concave_check(const std::vector<Rat>& values, long r, long from) {
    if (r < 1) throw std::invalid_argument("r_log_concave_check: r must be >= 1");
    if (from < 0) throw std::invalid_argument("r_log_concave_check: from must be >= 0");
    if (values.size() < static_cast<std::size_t>(2 * r) + 1 + static_cast<std::size_t>(from))
        throw std::invalid_argument("r_log_concave_check: input too short");
    std::vector<Rat> level = values;
    for (long k = 1; k <= r; ++k) {
        std::vector<Rat> next(level.size() - 2);
        for (std::size_t i = 0; i + 2 < level.size(); ++i)
            next[i] = level[i + 1] * level[i + 1] - level[i] * level[i + 2];
        for (std::size_t i = static_cast<std::size_t>(from); i < next.size(); ++i)
            if (next[i] <= 0) return false;
        level = std::move(next);
    }
    return true;
}

bool r_log_concave_check(const std::vector<Int>& values, long r, long from) {
    std::vector<Rat> rats;
    rats.reserve(values.size());
    for (const auto& v : values) rats.emplace_back(v);
    return r_log_concave_check(rats, r, from);
}

// Expression polynomial on class r, built from the shifted pieces of f.
Polynomial expression_on_class(const QuasiPolynomial& f, long r, ExprKind kind, long d,
                               bool laguerre_raw) {
    switch (kind) {
        case ExprKind::turan2: {
            Polynomial a = f.shifted_piece(r, -1), b = f.shifted_piece(r, 0),
                       c = f.shifted_piece(r, 1);
            return b * b - c * a;
        }
        case ExprKind::turan3: {
            Polynomial a = f.shifted_piece(r, -1), b = f.shifted_piece(r, 0),
                       c = f.shifted_piece(r, 1), e = f.shifted_piece(r, 2);
            Polynomial cross = b * c - a * e;
            return (b * b - a * c) * (c * c - b * e) * Rat(4) - cross * cross;
        }
        case ExprKind::turan4: {
            Polynomial w0 = f.shifted_piece(r, 0), w1 = f.shifted_piece(r, 1),
                       w2 = f.shifted_piece(r, 2), w3 = f.shifted_piece(r, 3),
                       w4 = f.shifted_piece(r, 4);
            Polynomial w0sq = w0 * w0, w1sq = w1 * w1, w2sq = w2 * w2, w3sq = w3 * w3,
                       w4sq = w4 * w4;
            Polynomial acc = w0 * w1sq * w2 * w4sq * Rat(54);
            acc += w0sq * w0 * w4sq * w4;
            acc += w1sq * w1 * w2 * w3 * w4 * Rat(108);
            acc += w1sq * w2sq * w3sq * Rat(36);
            acc -= w0sq * w1 * w3 * w4sq * Rat(12);
            acc -= w1sq * w2sq * w2 * w4 * Rat(54);
            acc -= w0 * w1sq * w3sq * w4 * Rat(6);
            acc -= w0 * w2sq * w2 * w3sq * Rat(54);
            acc -= w1sq * w1sq * w4sq * Rat(27);
            acc -= w0 * w1 * w2sq * w3 * w4 * Rat(180);
            acc -= w0sq * w3sq * w3sq * Rat(27);
            acc += w0 * w1 * w2 * w3sq * w3 * Rat(108);
            acc -= w1sq * w1 * w3sq * w3 * Rat(64);
            acc -= w0sq * w2sq * w4sq * Rat(18);
            acc += w0 * w2sq * w2sq * w4 * Rat(81);
            acc += w0sq * w2 * w3sq * w4 * Rat(54);
            return acc;
        }
        case ExprKind::laguerre: {
            std::vector<Polynomial> s;
            s.reserve(static_cast<std::size_t>(2 * d) + 1);
            for (long i = 0; i <= 2 * d; ++i) s.push_back(f.shifted_piece(r, i));
            Polynomial acc;
            for (long j = 0; j <= 2 * d; ++j) {
                Polynomial term = s[static_cast<std::size_t>(j)] *
                                  s[static_cast<std::size_t>(2 * d - j)] * Rat(binomial(2 * d, j));
                if ((j + d) % 2 == 0)
                    acc += term;
                else
                    acc -= term;
            }
            if (!laguerre_raw && d >= 1) acc *= make_rat(1, 2);
            return acc;
        }
        default:
            throw std::invalid_argument("inequality_profile: kind must be turan2/3/4 or laguerre");
    }
}

namespace {

// Eventual sign of a(n) - b(n) where each side is leading*n^degree
// (identically-zero classes carry degree -1, leading 0).
int asymptotic_cmp(const ClassProfile& a, const ClassProfile& b) {
    if (a.degree == b.degree) return sign(Rat(a.leading - b.leading));
    return a.degree > b.degree ? sign(a.leading) : -sign(b.leading);
}

}  // namespace

InequalityProfile inequality_profile(const QuasiPolynomial& f, ExprKind kind, long d,
                                     bool laguerre_raw, int jobs) {
    if (kind == ExprKind::laguerre && d < 0)
        throw std::invalid_argument("inequality_profile: laguerre order must be >= 0");
    for (long r = 0; r < f.period(); ++r) {
        const Polynomial& piece = f.pieces()[static_cast<std::size_t>(r)];
        if (piece.is_zero() || sign(piece.leading()) <= 0)
            throw std::invalid_argument(
                "inequality_profile: input must have positive leading behavior in every class "
                "(class " +
                std::to_string(r) + " does not)");
    }
    InequalityProfile prof;
    prof.kind = kind;
    prof.order = kind == ExprKind::laguerre ? d
               : kind == ExprKind::turan2   ? 2
               : kind == ExprKind::turan3   ? 3
                                            : 4;
    prof.laguerre_raw = laguerre_raw;
    prof.period = f.period();
    prof.classes.resize(static_cast<std::size_t>(f.period()));
    parallel_for(static_cast<std::size_t>(f.period()), jobs, [&](std::size_t r) {
        Polynomial e = expression_on_class(f, static_cast<long>(r), kind, d, laguerre_raw);
        ClassProfile& cp = prof.classes[r];
        cp.cls = static_cast<long>(r);
        if (e.is_zero()) {
            cp.zero = true;
            cp.degree = -1;
            cp.leading = 0;
        } else {
            cp.degree = e.degree();
            cp.leading = e.leading();
        }
    });
    const ClassProfile* best = &prof.classes[0];
    for (const auto& cp : prof.classes)
        if (asymptotic_cmp(cp, *best) < 0) best = &cp;
    prof.min_degree = best->degree;
    prof.min_leading = best->leading;
    prof.min_zero = best->zero;
    for (const auto& cp : prof.classes)
        if (asymptotic_cmp(cp, *best) == 0) prof.argmin.push_back(cp.cls);
    return prof;
}

std::string InequalityProfile::to_json() const {
    nlohmann::json out;
    out["kind"] = kind_name(kind);
    out["order"] = order;
    if (kind == ExprKind::laguerre) out["normalization"] = laguerre_raw ? "raw" : "reduced";
    out["period"] = period;
    nlohmann::json cls = nlohmann::json::array();
    for (const auto& cp : classes) {
        nlohmann::json entry;
        entry["class"] = cp.cls;
        if (cp.zero) {
            entry["zero"] = true;
        } else {
            entry["degree"] = cp.degree;
            entry["leading"] = to_string(cp.leading);
        }
        cls.push_back(std::move(entry));
    }
    out["classes"] = std::move(cls);
    if (min_zero) {
        out["min"] = {{"zero", true}};
    } else {
        out["min"] = {{"degree", min_degree}, {"leading", to_string(min_leading)}};
    }
    out["argmin_classes"] = argmin;
    return out.dump();
}

std::string InequalityProfile::to_csv() const {
    std::ostringstream out;
    out << "class,degree,leading_num,leading_den\n";
    for (const auto& cp : classes) {
        if (cp.zero)
            out << cp.cls << ",-1,0,1\n";
        else
            out << cp.cls << "," << cp.degree << "," << cp.leading.get_num().get_str() << ","
                << cp.leading.get_den().get_str() << "\n";
    }
    return out.str();
}

namespace {

// Integer-window evaluation used by the scanner; avoids Rat churn.
Int turan_expression_int(const std::vector<Int>& v, std::size_t at, int d) {
    const Int* w = v.data() + at;
    switch (d) {
        case 2: return w[1] * w[1] - w[2] * w[0];
        case 3: {
            Int cross = w[1] * w[2] - w[0] * w[3];
            return 4 * (w[1] * w[1] - w[0] * w[2]) * (w[2] * w[2] - w[1] * w[3]) - cross * cross;
        }
        case 4: {
            const Int &w0 = w[0], &w1 = w[1], &w2 = w[2], &w3 = w[3], &w4 = w[4];
            return 54 * w0 * w1 * w1 * w2 * w4 * w4 + w0 * w0 * w0 * w4 * w4 * w4 +
                   108 * w1 * w1 * w1 * w2 * w3 * w4 + 36 * w1 * w1 * w2 * w2 * w3 * w3 -
                   12 * w0 * w0 * w1 * w3 * w4 * w4 - 54 * w1 * w1 * w2 * w2 * w2 * w4 -
                   6 * w0 * w1 * w1 * w3 * w3 * w4 - 54 * w0 * w2 * w2 * w2 * w3 * w3 -
                   27 * w1 * w1 * w1 * w1 * w4 * w4 - 180 * w0 * w1 * w2 * w2 * w3 * w4 -
                   27 * w0 * w0 * w3 * w3 * w3 * w3 + 108 * w0 * w1 * w2 * w3 * w3 * w3 -
                   64 * w1 * w1 * w1 * w3 * w3 * w3 - 18 * w0 * w0 * w2 * w2 * w4 * w4 +
                   81 * w0 * w2 * w2 * w2 * w2 * w4 + 54 * w0 * w0 * w2 * w3 * w3 * w4;
        }
        default: throw std::invalid_argument("unsupported turan order");
    }
}

Int laguerre_raw_int(const std::vector<Int>& v, std::size_t at, long d) {
    Int acc(0);
    for (long j = 0; j <= 2 * d; ++j) {
        Int term = binomial(2 * d, j) * v[at + static_cast<std::size_t>(j)] *
                   v[at + static_cast<std::size_t>(2 * d - j)];
        if ((j + d) % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

}  // namespace

ScanResult threshold_scan(const std::vector<Int>& values, ExprKind kind, long d, long limit,
                          int jobs) {
    long order = d;
    switch (kind) {
        case ExprKind::turan2: order = 2; break;
        case ExprKind::turan3: order = 3; break;
        case ExprKind::turan4: order = 4; break;
        default:
            if (d < (kind == ExprKind::rlogconcave ? 1 : 0))
                throw std::invalid_argument("threshold_scan: bad order");
    }
    long first = kind_backward_span(kind);
    long forward = kind_forward_span(kind, order);
    if (limit < first) throw std::invalid_argument("threshold_scan: empty horizon");
    if (values.size() <= static_cast<std::size_t>(limit + forward))
        throw std::invalid_argument("threshold_scan: values do not cover the span up to the limit");

    ScanResult res;
    res.kind = kind;
    res.order = order;
    res.first_n = first;
    res.limit = limit;

    std::size_t count = static_cast<std::size_t>(limit - first + 1);
    std::vector<char> bad(count, 0);

    if (kind == ExprKind::rlogconcave) {
        // precompute operator levels once; entry n of level k needs
        // indices up to n + 2k
        std::vector<Int> level = values;
        std::vector<std::vector<char>> level_bad;
        for (long k = 1; k <= order; ++k) {
            std::vector<Int> next(level.size() - 2);
            for (std::size_t i = 0; i + 2 < level.size(); ++i)
                next[i] = level[i + 1] * level[i + 1] - level[i] * level[i + 2];
            std::vector<char> nb(next.size());
            for (std::size_t i = 0; i < next.size(); ++i) nb[i] = next[i] <= 0;
            level = std::move(next);
            level_bad.push_back(std::move(nb));
        }
        for (std::size_t i = 0; i < count; ++i) {
            std::size_t n = static_cast<std::size_t>(first) + i;
            for (const auto& nb : level_bad)
                if (n < nb.size() && nb[n]) {
                    bad[i] = 1;
                    break;
                }
        }
    } else {
        parallel_for(count, jobs, [&](std::size_t i) {
            long n = first + static_cast<long>(i);
            std::size_t at = static_cast<std::size_t>(n - kind_backward_span(kind));
            switch (kind) {
                case ExprKind::turan2:
                case ExprKind::turan3:
                case ExprKind::turan4:
                    bad[i] = sign(turan_expression_int(values, at, static_cast<int>(order))) < 0;
                    break;
                case ExprKind::laguerre:
                    bad[i] = sign(laguerre_raw_int(values, at, order)) < 0;
                    break;
                case ExprKind::jensen: {
                    Window w;
                    w.base = n;
                    for (long t = 0; t <= order; ++t)
                        w.values.emplace_back(values[static_cast<std::size_t>(n + t)]);
                    Polynomial jp = jensen_poly(w, order);
                    bad[i] = jp.is_zero() ? 0 : !is_hyperbolic(jp);
                    break;
                }
                default: break;
            }
        });
    }

    for (std::size_t i = 0; i < count; ++i)
        if (bad[i]) res.violations.push_back(first + static_cast<long>(i));
    if (!res.violations.empty()) res.last_violation = res.violations.back();
    res.holds_from = res.last_violation ? *res.last_violation + 1 : first;
    return res;
}

}  // namespace qplab
