#include "qplab/roots.hpp"

#include <stdexcept>

namespace qplab {

std::vector<Rat> newton_sums(const Polynomial& p, long upto) {
    long s = p.degree();
    if (s < 1) throw std::domain_error("newton_sums: polynomial must have degree >= 1");
    if (upto < 0) upto = 0;
    const Rat& cs = p.leading();
    std::vector<Rat> P;
    P.reserve(static_cast<std::size_t>(upto) + 1);
    P.emplace_back(s);
    for (long m = 1; m <= upto; ++m) {
        Rat acc(0);
        if (m <= s) {
            acc = Rat(m) * p.coeff(static_cast<std::size_t>(s - m));
            for (long i = 1; i < m; ++i)
                acc += p.coeff(static_cast<std::size_t>(s - i)) * P[static_cast<std::size_t>(m - i)];
        } else {
            for (long i = 1; i <= s; ++i)
                acc += p.coeff(static_cast<std::size_t>(s - i)) * P[static_cast<std::size_t>(m - i)];
        }
        P.push_back(-acc / cs);
    }
    return P;
}

std::vector<std::vector<Rat>> hankel_matrix(const Polynomial& p) {
    long s = p.degree();
    std::vector<Rat> P = newton_sums(p, 2 * s - 2);
    std::vector<std::vector<Rat>> H(static_cast<std::size_t>(s));
    for (long i = 0; i < s; ++i) {
        H[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(s));
        for (long j = 0; j < s; ++j)
            H[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                P[static_cast<std::size_t>(i + j)];
    }
    return H;
}

Rat det(std::vector<std::vector<Rat>> m) {
    std::size_t n = m.size();
    Rat d(1);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t piv = i;
        while (piv < n && m[piv][i] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != i) {
            std::swap(m[piv], m[i]);
            d = -d;
        }
        d *= m[i][i];
        Rat inv = Rat(1) / m[i][i];
        for (std::size_t r = i + 1; r < n; ++r) {
            if (m[r][i] == 0) continue;
            Rat f = m[r][i] * inv;
            for (std::size_t c = i; c < n; ++c) m[r][c] -= f * m[i][c];
        }
    }
    return d;
}

std::vector<Rat> hankel_minor_dets(const Polynomial& p) {
    auto H = hankel_matrix(p);
    std::vector<Rat> dets;
    dets.reserve(H.size());
    for (std::size_t k = 1; k <= H.size(); ++k) {
        std::vector<std::vector<Rat>> sub(k, std::vector<Rat>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub[i][j] = H[i][j];
        dets.push_back(det(std::move(sub)));
    }
    return dets;
}

bool hankel_psd(const Polynomial& p) {
    auto H = hankel_matrix(p);
    std::size_t s = H.size();
    if (s > 10) throw std::domain_error("hankel_psd: degree too large for exact minor scan");
    // every nonempty principal minor (not only the leading ones)
    for (unsigned mask = 1; mask < (1u << s); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < s; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        std::size_t k = idx.size();
        std::vector<std::vector<Rat>> sub(k, std::vector<Rat>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub[i][j] = H[idx[i]][idx[j]];
        if (det(std::move(sub)) < 0) return false;
    }
    return true;
}

namespace {

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    std::vector<Polynomial> chain;
    chain.push_back(p);
    Polynomial d = p.derivative();
    if (!d.is_zero()) chain.push_back(std::move(d));
    while (chain.back().degree() >= 1) {
        Polynomial rem = chain[chain.size() - 2].divmod(chain.back()).second;
        if (rem.is_zero()) break;
        chain.push_back(-rem);
    }
    return chain;
}

int sign_at(const Polynomial& p, const Rat& x) { return sign(p(x)); }

int sign_at_plus_inf(const Polynomial& p) { return p.is_zero() ? 0 : sign(p.leading()); }

int sign_at_minus_inf(const Polynomial& p) {
    if (p.is_zero()) return 0;
    int s = sign(p.leading());
    return (p.degree() % 2 == 0) ? s : -s;
}

long variations(const std::vector<int>& signs) {
    long v = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

// Distinct real roots of a square-free polynomial in (a, b], where either
// bound may be +-inf (handled by the callers below).
long distinct_roots_all(const Polynomial& squarefree) {
    if (squarefree.degree() < 1) return 0;
    auto chain = sturm_chain(squarefree);
    std::vector<int> lo, hi;
    lo.reserve(chain.size());
    hi.reserve(chain.size());
    for (const auto& q : chain) {
        lo.push_back(sign_at_minus_inf(q));
        hi.push_back(sign_at_plus_inf(q));
    }
    return variations(lo) - variations(hi);
}

long distinct_roots_positive(const Polynomial& squarefree) {
    if (squarefree.degree() < 1) return 0;
    // Sturm endpoints must not be roots: strip the (at most one, input is
    // square-free) factor of x before evaluating at 0.
    Polynomial p = squarefree;
    if (p.coeff(0) == 0) {
        std::vector<Rat> c(p.coefficients().begin() + 1, p.coefficients().end());
        p = Polynomial(std::move(c));
        if (p.degree() < 1) return 0;
    }
    auto chain = sturm_chain(p);
    std::vector<int> lo, hi;
    for (const auto& q : chain) {
        lo.push_back(sign_at(q, Rat(0)));
        hi.push_back(sign_at_plus_inf(q));
    }
    return variations(lo) - variations(hi);
}

long count_roots(const Polynomial& p, bool count_multiplicity, long (*counter)(const Polynomial&)) {
    if (p.is_zero()) throw std::domain_error("root count of zero polynomial");
    if (!count_multiplicity) return counter(p.square_free_part());
    long total = 0;
    Polynomial cur = p;
    while (cur.degree() >= 1) {
        Polynomial g = Polynomial::gcd(cur, cur.derivative());
        total += counter(cur.divmod(g).first);
        cur = std::move(g);
    }
    return total;
}

}  // namespace

long sturm_real_root_count(const Polynomial& p, bool count_multiplicity) {
    return count_roots(p, count_multiplicity, &distinct_roots_all);
}

long positive_root_count(const Polynomial& p, bool count_multiplicity) {
    return count_roots(p, count_multiplicity, &distinct_roots_positive);
}

bool hyperbolic_by_sturm(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("hyperbolicity of zero polynomial");
    if (p.degree() == 0) return true;
    return sturm_real_root_count(p, true) == p.degree();
}

bool hyperbolic_by_hankel(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("hyperbolicity of zero polynomial");
    if (p.degree() == 0) return true;
    return hankel_psd(p);
}

}  // namespace qplab
