#include "qplab/rational.hpp"

#include <stdexcept>

namespace qplab {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Int int_pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rat rat_pow(const Rat& base, unsigned long exp) {
    Rat r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), exp);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), exp);
    return r;  // base canonical => powers of coprime num/den stay coprime
}

std::string to_string(const Int& z) { return z.get_str(); }

std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int parse_int(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    Int z;
    if (mpz_set_str(z.get_mpz_t(), std::string(text).c_str(), 10) != 0)
        throw std::invalid_argument("bad integer literal: " + std::string(text));
    return z;
}

Rat parse_rat(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    return make_rat(num, den);
}

}  // namespace qplab
