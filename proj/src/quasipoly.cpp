#include "qplab/quasipoly.hpp"

#include <numeric>

#include <json.hpp>

namespace qplab {

QuasiPolynomial::QuasiPolynomial(long period, std::vector<Polynomial> pieces)
    : period_(period), pieces_(std::move(pieces)) {
    if (period_ < 1) throw std::invalid_argument("quasi-polynomial period must be >= 1");
    if (pieces_.size() != static_cast<std::size_t>(period_))
        throw std::invalid_argument("quasi-polynomial needs one piece per residue class");
}

QuasiPolynomial QuasiPolynomial::constant(const Rat& value) {
    return QuasiPolynomial(1, {Polynomial(value)});
}

long QuasiPolynomial::degree() const {
    long d = -1;
    for (const auto& p : pieces_) d = std::max(d, p.degree());
    return d;
}

namespace {
// Newton divided differences through (xs[i], ys[i]), expanded to dense form.
Polynomial interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    std::size_t n = xs.size();
    std::vector<Rat> coef = ys;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    Polynomial poly;
    for (std::size_t i = n; i-- > 0;) {
        // poly = poly*(x - xs[i]) + coef[i]
        poly = poly * Polynomial({-xs[i], Rat(1)}) + Polynomial(coef[i]);
    }
    return poly;
}

long normalized_class(const Int& n, long period) {
    Int m;
    mpz_mod(m.get_mpz_t(), n.get_mpz_t(), Int(period).get_mpz_t());  // result in [0, period)
    return static_cast<long>(m.get_si());
}
}  // namespace

QuasiPolynomial QuasiPolynomial::recover(const std::vector<Rat>& values, long period, long degree) {
    if (period < 1 || degree < 0) throw std::invalid_argument("recover: bad period/degree");
    std::size_t needed = static_cast<std::size_t>(period) * static_cast<std::size_t>(degree + 2);
    if (values.size() < needed)
        throw recover_error("recover: insufficient data (need " + std::to_string(needed) +
                            " samples, got " + std::to_string(values.size()) + ")");
    std::vector<Polynomial> pieces(static_cast<std::size_t>(period));
    for (long r = 0; r < period; ++r) {
        std::vector<Rat> xs, ys;
        for (std::size_t n = static_cast<std::size_t>(r); xs.size() <= static_cast<std::size_t>(degree);
             n += static_cast<std::size_t>(period)) {
            xs.emplace_back(static_cast<long>(n));
            ys.push_back(values[n]);
        }
        Polynomial piece = interpolate(xs, ys);
        for (std::size_t n = static_cast<std::size_t>(r) +
                             static_cast<std::size_t>(degree + 1) * static_cast<std::size_t>(period);
             n < values.size(); n += static_cast<std::size_t>(period)) {
            if (piece(Rat(static_cast<long>(n))) != values[n])
                throw recover_error("not a quasi-polynomial of this (period, degree): sample at n=" +
                                    std::to_string(n) + " deviates from the class-" + std::to_string(r) +
                                    " interpolant");
        }
        pieces[static_cast<std::size_t>(r)] = std::move(piece);
    }
    return QuasiPolynomial(period, std::move(pieces));
}

QuasiPolynomial QuasiPolynomial::recover(const std::vector<Int>& values, long period, long degree) {
    std::vector<Rat> rats;
    rats.reserve(values.size());
    for (const auto& v : values) rats.emplace_back(v);
    return recover(rats, period, degree);
}

Rat QuasiPolynomial::evaluate(const Int& n) const {
    return pieces_[static_cast<std::size_t>(normalized_class(n, period_))](Rat(n));
}

Polynomial QuasiPolynomial::shifted_piece(long cls, long offset) const {
    long idx = ((cls + offset) % period_ + period_) % period_;
    return pieces_[static_cast<std::size_t>(idx)].shifted(Rat(offset));
}

QuasiPolynomial QuasiPolynomial::with_period(long new_period) const {
    if (new_period < period_ || new_period % period_ != 0)
        throw std::invalid_argument("with_period: new period must be a positive multiple");
    std::vector<Polynomial> pieces(static_cast<std::size_t>(new_period));
    for (long r = 0; r < new_period; ++r)
        pieces[static_cast<std::size_t>(r)] = pieces_[static_cast<std::size_t>(r % period_)];
    return QuasiPolynomial(new_period, std::move(pieces));
}

QuasiPolynomial QuasiPolynomial::operator+(const QuasiPolynomial& rhs) const {
    long m = std::lcm(period_, rhs.period_);
    QuasiPolynomial a = with_period(m), b = rhs.with_period(m);
    std::vector<Polynomial> pieces(static_cast<std::size_t>(m));
    for (long r = 0; r < m; ++r)
        pieces[static_cast<std::size_t>(r)] =
            a.pieces_[static_cast<std::size_t>(r)] + b.pieces_[static_cast<std::size_t>(r)];
    return QuasiPolynomial(m, std::move(pieces));
}

QuasiPolynomial QuasiPolynomial::operator*(const QuasiPolynomial& rhs) const {
    long m = std::lcm(period_, rhs.period_);
    QuasiPolynomial a = with_period(m), b = rhs.with_period(m);
    std::vector<Polynomial> pieces(static_cast<std::size_t>(m));
    for (long r = 0; r < m; ++r)
        pieces[static_cast<std::size_t>(r)] =
            a.pieces_[static_cast<std::size_t>(r)] * b.pieces_[static_cast<std::size_t>(r)];
    return QuasiPolynomial(m, std::move(pieces));
}

QuasiPolynomial QuasiPolynomial::shift(long t) const {
    if (t < 0) throw std::invalid_argument("shift: t must be >= 0");
    std::vector<Polynomial> pieces(static_cast<std::size_t>(period_));
    for (long r = 0; r < period_; ++r)
        pieces[static_cast<std::size_t>(r)] = shifted_piece(r, t);
    return QuasiPolynomial(period_, std::move(pieces));
}

CoefficientTable QuasiPolynomial::coefficient_table() const {
    CoefficientTable table;
    table.period = period_;
    long deg = degree();
    table.rows.resize(static_cast<std::size_t>(deg + 1));
    table.constant.resize(static_cast<std::size_t>(deg + 1));
    for (long j = 0; j <= deg; ++j) {
        auto& row = table.rows[static_cast<std::size_t>(j)];
        row.resize(static_cast<std::size_t>(period_));
        for (long r = 0; r < period_; ++r)
            row[static_cast<std::size_t>(r)] =
                pieces_[static_cast<std::size_t>(r)].coeff(static_cast<std::size_t>(j));
        bool all_same = true;
        for (const auto& v : row)
            if (v != row[0]) {
                all_same = false;
                break;
            }
        table.constant[static_cast<std::size_t>(j)] = all_same;
    }
    return table;
}

std::string QuasiPolynomial::to_json() const {
    nlohmann::json out;
    out["period"] = period_;
    nlohmann::json pieces = nlohmann::json::array();
    for (const auto& piece : pieces_) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (long i = 0; i <= piece.degree(); ++i)
            coeffs.push_back(to_string(piece.coeff(static_cast<std::size_t>(i))));
        pieces.push_back(std::move(coeffs));
    }
    out["pieces"] = std::move(pieces);
    return out.dump();
}

QuasiPolynomial QuasiPolynomial::from_json(const std::string& text) {
    nlohmann::json in = nlohmann::json::parse(text);
    long period = in.at("period").get<long>();
    std::vector<Polynomial> pieces;
    for (const auto& coeffs : in.at("pieces")) {
        std::vector<Rat> c;
        for (const auto& entry : coeffs) c.push_back(parse_rat(entry.get<std::string>()));
        pieces.emplace_back(std::move(c));
    }
    return QuasiPolynomial(period, std::move(pieces));
}

}  // namespace qplab
