#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qplab {

// Arbitrary-precision scalars. Rat is kept canonical (lowest terms,
// positive denominator) by every constructor path below, so operator==
// is structural equality of values.
using Int = mpz_class;
using Rat = mpq_class;

// Canonicalizing constructor; throws std::domain_error on zero denominator.
Rat make_rat(const Int& num, const Int& den);

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline int sign(const Rat& q) { return sgn(q); }
inline int sign(const Int& z) { return sgn(z); }

Int int_pow(const Int& base, unsigned long exp);
Rat rat_pow(const Rat& base, unsigned long exp);

std::string to_string(const Int& z);
// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rat& q);

// Parse decimal integers / "p" / "p/q". Throw std::invalid_argument on junk.
Int parse_int(std::string_view text);
Rat parse_rat(std::string_view text);

}  // namespace qplab
