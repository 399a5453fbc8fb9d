#include "qplab/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "qplab/combinatorics.hpp"

namespace qplab {

void Polynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::monomial(const Rat& coeff, std::size_t power) {
    if (coeff == 0) return Polynomial();
    std::vector<Rat> c(power + 1, Rat(0));
    c[power] = coeff;
    Polynomial p;
    p.c_ = std::move(c);
    return p;
}

const Rat& Polynomial::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Rat Polynomial::operator()(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& a : r.c_) a = -a;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), Rat(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), Rat(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    normalize();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            r[i + j] += a.c_[i] * b.c_[j];
        }
    }
    Polynomial p;
    p.c_ = std::move(r);
    p.normalize();
    return p;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rat& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& a : c_) a *= s;
    return *this;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Rat> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rat(static_cast<long>(i)) * c_[i];
    Polynomial p;
    p.c_ = std::move(r);
    p.normalize();
    return p;
}

Polynomial Polynomial::shifted(const Rat& t) const {
    if (t == 0 || is_zero()) return *this;
    std::vector<Rat> r(c_.size(), Rat(0));
    std::vector<Rat> tpow(c_.size(), Rat(1));
    for (std::size_t e = 1; e < c_.size(); ++e) tpow[e] = tpow[e - 1] * t;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j <= i; ++j)
            r[j] += c_[i] * Rat(binomial(static_cast<long>(i), static_cast<long>(j))) * tpow[i - j];
    }
    Polynomial p;
    p.c_ = std::move(r);
    p.normalize();
    return p;
}

Polynomial Polynomial::pow(unsigned long e) const {
    Polynomial result(Rat(1));
    Polynomial base(*this);
    while (e > 0) {
        if (e & 1UL) result *= base;
        e >>= 1UL;
        if (e > 0) base *= base;
    }
    return result;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial rem(*this);
    if (rem.degree() < divisor.degree()) return {Polynomial(), rem};
    std::vector<Rat> q(static_cast<std::size_t>(rem.degree() - divisor.degree()) + 1, Rat(0));
    const Rat& lead = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        std::size_t shift = static_cast<std::size_t>(rem.degree() - divisor.degree());
        Rat factor = rem.leading() / lead;
        q[shift] = factor;
        // rem -= factor * x^shift * divisor
        for (std::size_t i = 0; i < divisor.c_.size(); ++i)
            rem.c_[i + shift] -= factor * divisor.c_[i];
        rem.normalize();
    }
    Polynomial quot;
    quot.c_ = std::move(q);
    quot.normalize();
    return {quot, rem};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    Rat inv_lead = Rat(1) / a.leading();
    return a * inv_lead;
}

Polynomial Polynomial::square_free_part() const {
    if (is_zero()) throw std::domain_error("square-free part of zero polynomial");
    if (degree() == 0) return *this;
    Polynomial g = gcd(*this, derivative());
    if (g.degree() == 0) return *this;
    return divmod(g).first;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t idx = c_.size(); idx-- > 0;) {
        const Rat& a = c_[idx];
        if (a == 0) continue;
        Rat mag = a > 0 ? a : Rat(-a);
        if (first) {
            if (a < 0) out << "-";
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
        }
        bool unit = (mag == 1);
        if (idx == 0) {
            out << qplab::to_string(mag);
        } else {
            if (!unit) out << qplab::to_string(mag) << "*";
            out << var;
            if (idx > 1) out << "^" << idx;
        }
    }
    return out.str();
}

}  // namespace qplab
