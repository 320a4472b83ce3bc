#pragma once

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mahler {

using Int = mpz_class;
using Rat = mpq_class;

// Raised when a numeric routine is asked to work below the precision its
// error analysis requires (CLI exit code 3, as opposed to domain errors).
class precision_error : public std::runtime_error {
public:
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

// Parses "a/b" or "a" with optional sign. Throws std::domain_error on junk.
Rat parse_rat(const std::string& s);

std::string rat_str(const Rat& q);

Int int_pow(const Int& base, unsigned long e);

// q^e for integer e (negative exponents allowed, q != 0 required then).
Rat rat_pow(const Rat& q, long e);

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline int sign(const Rat& q) { return sgn(q); }

} // namespace mahler
