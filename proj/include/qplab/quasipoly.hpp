#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qplab/polynomial.hpp"

namespace qplab {

// Raised when sample validation shows the data is not a quasi-polynomial
// of the requested (period, degree).
struct recover_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// b_j(r) for every degree j and residue class r, with the rows that are
// constant across classes flagged.
struct CoefficientTable {
    long period = 1;
    // rows[j][r] = coefficient of n^j on the class-r piece
    std::vector<std::vector<Rat>> rows;
    std::vector<bool> constant;  // per row j

    long degree() const { return static_cast<long>(rows.size()) - 1; }
};

// Period M plus one polynomial piece per residue class; evaluate(n) applies
// pieces[n mod M] to the full argument n.
class QuasiPolynomial {
public:
    QuasiPolynomial(long period, std::vector<Polynomial> pieces);

    static QuasiPolynomial constant(const Rat& value);

    // Classwise interpolation through the first degree+1 samples of each
    // class, then exact validation of every remaining sample. values must
    // hold at least period*(degree+2) entries (one validation point per
    // class beyond the interpolation points).
    static QuasiPolynomial recover(const std::vector<Rat>& values, long period, long degree);
    static QuasiPolynomial recover(const std::vector<Int>& values, long period, long degree);

    long period() const { return period_; }
    const std::vector<Polynomial>& pieces() const { return pieces_; }
    long degree() const;

    // n may be any integer; the class index is n mod period normalized
    // into [0, period).
    Rat evaluate(const Int& n) const;
    Rat evaluate(long n) const { return evaluate(Int(n)); }

    // Piece of n -> f(n+offset) valid on the class n == cls (mod period):
    // pieces[(cls+offset) mod period] composed with (x+offset). offset may
    // be negative.
    Polynomial shifted_piece(long cls, long offset) const;

    // Same quasi-polynomial presented with a period that is a multiple of
    // the current one.
    QuasiPolynomial with_period(long new_period) const;

    QuasiPolynomial operator+(const QuasiPolynomial& rhs) const;
    QuasiPolynomial operator*(const QuasiPolynomial& rhs) const;
    bool operator==(const QuasiPolynomial& rhs) const {
        return period_ == rhs.period_ && pieces_ == rhs.pieces_;
    }

    // g with g(n) = f(n+t), t >= 0 (class rotation + composition).
    QuasiPolynomial shift(long t) const;

    CoefficientTable coefficient_table() const;

    // {"period": M, "pieces": [["c0","c1",...], ...]} with exact "p/q"
    // coefficient strings; round-trips bit-exactly.
    std::string to_json() const;
    static QuasiPolynomial from_json(const std::string& text);

private:
    long period_;
    std::vector<Polynomial> pieces_;
};

}  // namespace qplab
