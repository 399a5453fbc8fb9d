#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qplab/rational.hpp"

namespace qplab {

// Dense univariate polynomial over Rat, coefficient index = power.
// Invariant: the highest stored coefficient is nonzero (zero polynomial
// stores nothing, degree() == -1).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }
    explicit Polynomial(const Rat& constant) : c_{constant} { normalize(); }
    explicit Polynomial(long constant) : c_{Rat(constant)} { normalize(); }

    static Polynomial monomial(const Rat& coeff, std::size_t power);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rat>& coefficients() const { return c_; }

    // Coefficient of x^i (0 beyond the stored range).
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const Rat& leading() const;  // throws on zero polynomial

    Rat operator()(const Rat& x) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rat& s);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial p, const Rat& s) { return p *= s; }
    friend Polynomial operator*(const Rat& s, Polynomial p) { return p *= s; }
    bool operator==(const Polynomial& rhs) const { return c_ == rhs.c_; }

    Polynomial derivative() const;

    // p(x + t), exact binomial expansion.
    Polynomial shifted(const Rat& t) const;

    Polynomial pow(unsigned long e) const;

    // Euclidean division; divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

    // Monic gcd (1 for coprime inputs, 0 iff both zero).
    static Polynomial gcd(Polynomial a, Polynomial b);

    // p / gcd(p, p'): same roots, all simple.
    Polynomial square_free_part() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<Rat> c_;
};

}  // namespace qplab
