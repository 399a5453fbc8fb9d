#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qplab/multiset.hpp"
#include "qplab/polynomial.hpp"
#include "qplab/quasipoly.hpp"

namespace qplab {

// Contiguous slice omega_base .. omega_{base+len-1} of a real sequence.
struct Window {
    Int base{0};
    std::vector<Rat> values;
};

enum class ExprKind { turan2, turan3, turan4, laguerre, jensen, rlogconcave };

ExprKind parse_kind(std::string_view name);
std::string kind_name(ExprKind kind);

// How many indices the expression at n reaches before/after n. The window
// convention follows the printed formulas: turan2/turan3 start at
// omega_{n-1}; turan4 and laguerre start at omega_n.
long kind_backward_span(ExprKind kind);
long kind_forward_span(ExprKind kind, long d);

// J^{d,n}(x) = sum_i C(d,i) omega_{n+i} x^i with omega_{n+i} = w.values[i].
Polynomial jensen_poly(const Window& w, long d);

// Ground truth is the Sturm count (hyperbolic_by_sturm); the Hankel PSD
// route stays available in roots.hpp as the cross-check.
bool is_hyperbolic(const Polynomial& p);

// d = 2: w = (omega_{n-1}, omega_n, omega_{n+1});           omega_n^2 - omega_{n+1} omega_{n-1}
// d = 3: w = (omega_{n-1} .. omega_{n+2});  4(...)(...) - (...)^2
// d = 4: w = (omega_n .. omega_{n+4});      the 16-term sextic form
// The value is >= 0 exactly when the order-d Turan inequality holds at n.
Rat turan_expression(const Window& w, int d);

struct LaguerreValue {
    Rat raw;      // sum_{j=0}^{2d} (-1)^{j+d} C(2d,j) omega_{n+j} omega_{n+2d-j}
    Rat reduced;  // raw/2 for d >= 1 (the printed forms), raw for d = 0
};

// Window spans omega_n .. omega_{n+2d}.
LaguerreValue laguerre_expression(const Window& w, long d);

// L_m^{(alpha)}(x) = sum_j C(m+alpha, m-j) (-x)^j / j!
Polynomial generalized_laguerre(long m, const Rat& alpha);

struct LimitSample {
    Rat x;
    Rat value;      // n^s / omega_n * J^{s,n}(x/n - 1), exact
    Rat target;     // (-1)^s s! L_s^{(l-s)}(x)
    Rat deviation;  // |value - target|
};

struct LimitProfile {
    long s = 0;
    long l = 0;
    Int n;
    Polynomial target_poly;  // (-1)^s s! L_s^{(l-s)}
    std::vector<LimitSample> samples;
};

// Renormalized Jensen values of p_A against the Laguerre limit shape;
// l = #A - 1. Requires p_A(n..n+s) > 0.
LimitProfile limit_profile(const Multiset& A, long s, long n, const std::vector<Rat>& xs);
// Same computation over an explicit sequence of degree-l growth.
LimitProfile limit_profile(const std::vector<Int>& values, long l, long s, long n,
                           const std::vector<Rat>& xs);

// True iff every entry with index >= from of each of Lhat w, ..., Lhat^r w
// is (strictly) positive, where (Lhat w)_i = w_{i+1}^2 - w_i w_{i+2}.
bool r_log_concave_check(const std::vector<Rat>& values, long r, long from);
bool r_log_concave_check(const std::vector<Int>& values, long r, long from);

struct ClassProfile {
    long cls = 0;
    bool zero = false;  // expression identically zero on this class
    long degree = -1;
    Rat leading;
};

// Per-residue-class degree and leading coefficient of a Turan/Laguerre
// expression built from a quasi-polynomial. Classes are compared by
// asymptotic size (degree + leading coefficient, identically-zero classes
// count as 0) to locate the minimum.
struct InequalityProfile {
    ExprKind kind = ExprKind::turan2;
    long order = 2;
    bool laguerre_raw = false;
    long period = 1;
    std::vector<ClassProfile> classes;
    long min_degree = -1;
    Rat min_leading;
    bool min_zero = false;
    std::vector<long> argmin;

    std::string to_json() const;
    std::string to_csv() const;
};

// The expression as an exact polynomial in n, valid on one residue class
// of f: every omega_{n+i} is replaced by the piece of class (cls+i) mod M
// composed with (n+i). turan2/3 reach one index back (i = -1).
Polynomial expression_on_class(const QuasiPolynomial& f, long cls, ExprKind kind, long d = 0,
                               bool laguerre_raw = false);

// Builds the expression symbolically on each residue class by substituting
// the shifted pieces of f and expanding in Q[n]; exact, no sampling. For
// kind = laguerre the printed (reduced) normalization is reported unless
// laguerre_raw is set. Requires every piece of f to have a positive
// leading coefficient.
InequalityProfile inequality_profile(const QuasiPolynomial& f, ExprKind kind, long d = 0,
                                     bool laguerre_raw = false, int jobs = 1);

struct ScanResult {
    ExprKind kind = ExprKind::turan2;
    long order = 0;
    long first_n = 0;  // smallest admissible n
    long limit = 0;    // scan horizon (inclusive)
    std::vector<long> violations;
    std::optional<long> last_violation;
    long holds_from = 0;  // first n from which no violation occurs within the horizon

    // Violations reaching into the upper half of the horizon are treated
    // as persisting (the clean tail is too short to call a threshold).
    bool persists() const {
        return last_violation.has_value() && *last_violation > limit / 2;
    }
};

// Exact sign evaluation of the chosen expression for every admissible
// n <= limit. values must cover index limit + forward span. Equality
// counts as holding for turan/laguerre/jensen; rlogconcave demands strict
// positivity.
ScanResult threshold_scan(const std::vector<Int>& values, ExprKind kind, long d, long limit,
                          int jobs = 1);

}  // namespace qplab
