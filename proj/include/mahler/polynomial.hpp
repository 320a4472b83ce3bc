#pragma once

#include <optional>
#include <vector>

#include "mahler/ball.hpp"
#include "mahler/int_matrix.hpp"
#include "mahler/rational.hpp"

namespace mahler {

// Dense univariate polynomial over Q, coefficients low to high.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static QPoly constant(const Rat& c) { return QPoly({c}); }
    static QPoly x() { return QPoly({Rat(0), Rat(1)}); }
    static QPoly monomial(const Rat& c, size_t deg);

    long degree() const { return static_cast<long>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Rat& coeff(size_t i) const;
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& lead() const { return c_.back(); }

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator-() const;
    bool operator==(const QPoly& o) const = default;

    QPoly derivative() const;
    Rat eval(const Rat& x) const;
    Ball eval_ball(const Ball& x) const;
    QPoly monic() const;

    // Division with remainder over Q; divisor must be nonzero.
    static void divrem(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
    // Exact division; throws std::domain_error if the remainder is nonzero.
    QPoly divexact(const QPoly& b) const;

    bool integer_coeffs() const;
    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rat> c_;
};

QPoly gcd(const QPoly& a, const QPoly& b); // monic gcd
QPoly squarefree_part(const QPoly& p);

// Characteristic polynomial det(xI - M), exact (Faddeev-LeVerrier).
QPoly char_poly(const IntMatrix& m);

// Number of real roots of a squarefree p in the half-open interval (a, b].
int sturm_count(const QPoly& p, const Rat& a, const Rat& b);

struct RootInterval {
    Rat lo, hi;        // root lies in (lo, hi], or lo == hi for an exact root
    bool exact() const { return lo == hi; }
};

// Isolates the largest real root of a squarefree polynomial; nullopt when
// there is no real root.
std::optional<RootInterval> isolate_largest_real_root(const QPoly& p);

// Shrinks an isolating interval until hi - lo <= 2^-bits.
RootInterval refine_root(const QPoly& p, RootInterval iv, long bits);

Ball root_ball(const RootInterval& iv, mpfr_prec_t prec);

QPoly cyclotomic(unsigned long m);

// Smallest m with phi(m) <= n and cyclotomic_m dividing p, if any.
std::optional<unsigned long> root_of_unity_factor(const QPoly& p, size_t n);

// Irreducible factorization over Q of a squarefree polynomial with integer
// coefficients (degree <= 7; Kronecker divisor method for the quadratic and
// cubic splits). Factors are monic with integer coefficients.
std::vector<QPoly> factor_squarefree_integer(const QPoly& p);

// The irreducible factor of squarefree p vanishing at the root isolated by iv.
QPoly minimal_polynomial_of_root(const QPoly& squarefree, const RootInterval& iv);

// Monic integer polynomial whose roots are the a-th powers of p's roots.
QPoly power_roots_poly(const QPoly& monic_int, unsigned long a);

// Exact equality of algebraic numbers given by (squarefree poly, isolating
// interval) pairs.
bool equal_algebraic(const QPoly& p1, RootInterval i1, const QPoly& p2, RootInterval i2);

} // namespace mahler
