#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mahler/rational_function.hpp"

using namespace mahler;

namespace {

FieldPtr eisenstein() {
    // x^2 + x + 1: j and its conjugate
    return NumberField::make(QPoly({Rat(1), Rat(1), Rat(1)}));
}

PuiseuxSeries random_series(std::mt19937& rng, size_t nvars, long order) {
    FieldPtr q = NumberField::rationals();
    PuiseuxSeries s = PuiseuxSeries::zero(nvars, 1, q, order);
    std::uniform_int_distribution<long> e(0, 3), c(-4, 4);
    for (int t = 0; t < 6; ++t) {
        Exponent ex(nvars);
        for (auto& x : ex) x = e(rng);
        s.set_coeff(ex, NFElem::from_rat(q, Rat(c(rng))));
    }
    return s;
}

} // namespace

TEST_CASE("number field arithmetic in Q(j)") {
    FieldPtr f = eisenstein();
    NFElem j = NFElem::generator(f);
    NFElem jbar = j.conj();
    CHECK(j * jbar == NFElem::from_rat(f, Rat(1)));
    CHECK(j + jbar == NFElem::from_rat(f, Rat(-1)));
    CHECK(j * j * j == NFElem::from_rat(f, Rat(1)));
    CHECK(j.inverse() == jbar);
    // modulus reduces to zero
    NFElem m = j * j + j + NFElem::from_rat(f, Rat(1));
    CHECK(m.is_zero());
}

TEST_CASE("substitute_monomial on monomials") {
    FieldPtr q = NumberField::rationals();
    IntMatrix t(2, 2, {Int(1), Int(1), Int(1), Int(0)});

    PuiseuxSeries z0 = poly_var(2, q, 0);
    PuiseuxSeries s = substitute_monomial(z0, t);
    // (Tz)_0 = z0 z1 under the row convention
    CHECK(s.coeff({1, 1}) == NFElem::from_rat(q, Rat(1)));
    CHECK(s.terms().size() == 1);

    PuiseuxSeries c = poly_const(2, q, make_rat(7, 3));
    CHECK(verify_identity(substitute_monomial(c, t), c, 10) == std::nullopt);

    IntMatrix three_i = IntMatrix::scalar(2, Int(3));
    PuiseuxSeries m = poly_monomial(2, q, NFElem::from_rat(q, Rat(1)), {2, 5});
    PuiseuxSeries m3 = substitute_monomial(m, three_i);
    CHECK(m3.coeff({6, 15}) == NFElem::from_rat(q, Rat(1)));
}

TEST_CASE("substitution is a ring homomorphism and composes") {
    std::mt19937 rng(5150);
    FieldPtr q = NumberField::rationals();
    IntMatrix t(2, 2, {Int(1), Int(1), Int(1), Int(0)});
    IntMatrix s(2, 2, {Int(2), Int(0), Int(1), Int(1)});
    for (int trial = 0; trial < 40; ++trial) {
        PuiseuxSeries f = random_series(rng, 2, 40);
        PuiseuxSeries g = random_series(rng, 2, 40);
        long n = 12;
        CHECK(verify_identity(substitute_monomial(f + g, t).truncated(n),
                              (substitute_monomial(f, t) + substitute_monomial(g, t)).truncated(n),
                              n) == std::nullopt);
        CHECK(verify_identity(substitute_monomial(f * g, t).truncated(n),
                              (substitute_monomial(f, t) * substitute_monomial(g, t)).truncated(n),
                              n) == std::nullopt);
        // (f o T) o S = f o (T*S)
        CHECK(verify_identity(substitute_monomial(substitute_monomial(f, t), s).truncated(n),
                              substitute_monomial(f, t * s).truncated(n), n) == std::nullopt);
    }
}

TEST_CASE("thue-morse fixed point solver matches the dfao stream") {
    FieldPtr q = NumberField::rationals();
    long n = 16;
    // h = (1 - z) h(z^2) + z/(1 - z^2)
    IntMatrix t(1, 1, {Int(2)});
    Poly one_minus_z = poly_const(1, q, Rat(1)) - poly_var(1, q, 0);
    RationalFunction forcing_rf(poly_var(1, q, 0),
                                poly_const(1, q, Rat(1)) -
                                    poly_monomial(1, q, NFElem::from_rat(q, Rat(1)), {2}));
    PuiseuxSeries forcing = forcing_rf.to_series(n);
    PuiseuxSeries h = solve_mahler_fixed_point({one_minus_z}, t, forcing, n);

    std::vector<long> expected{0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0, 1};
    for (long k = 0; k <= n; ++k)
        CHECK(h.coeff({k}) == NFElem::from_rat(q, Rat(expected[static_cast<size_t>(k)])));
}

TEST_CASE("solver reports non-contracting configurations") {
    FieldPtr q = NumberField::rationals();
    IntMatrix t(1, 1, {Int(1)}); // identity substitution never raises degree
    Poly c = poly_const(1, q, Rat(1));
    PuiseuxSeries forcing = poly_var(1, q, 0);
    CHECK_THROWS_AS(solve_mahler_fixed_point({c}, t, forcing, 8), std::domain_error);
}

TEST_CASE("solver with zero forcing returns zero") {
    FieldPtr q = NumberField::rationals();
    IntMatrix t(1, 1, {Int(2)});
    Poly c = poly_const(1, q, Rat(1));
    PuiseuxSeries zero = PuiseuxSeries::zero(1, 1, q, 20);
    PuiseuxSeries h = solve_mahler_fixed_point({c}, t, zero, 20);
    CHECK(h.is_zero());
}

TEST_CASE("fixed point residual vanishes to the requested order") {
    FieldPtr q = NumberField::rationals();
    long n = 24;
    IntMatrix t(1, 1, {Int(2)});
    Poly cpoly = poly_const(1, q, Rat(1)) - poly_var(1, q, 0);
    RationalFunction forcing_rf(poly_var(1, q, 0),
                                poly_const(1, q, Rat(1)) -
                                    poly_monomial(1, q, NFElem::from_rat(q, Rat(1)), {2}));
    PuiseuxSeries forcing = forcing_rf.to_series(n);
    PuiseuxSeries h = solve_mahler_fixed_point({cpoly}, t, forcing, n);
    PuiseuxSeries rhs = (cpoly * substitute_monomial(h, t)).truncated(n) + forcing.truncated(n);
    CHECK(verify_identity(h, rhs, n) == std::nullopt);
}

TEST_CASE("sierpinski functional equation to order 40") {
    FieldPtr q = NumberField::rationals();
    long n = 40;
    auto rule = [](unsigned long a, unsigned long b) {
        while (a > 0 || b > 0) {
            if (a % 3 == 1 && b % 3 == 1) return false;
            a /= 3;
            b /= 3;
        }
        return true;
    };
    PuiseuxSeries s = PuiseuxSeries::zero(2, 1, q, n);
    for (long i = 0; i <= n; ++i)
        for (long j = 0; i + j <= n; ++j)
            if (rule(static_cast<unsigned long>(i), static_cast<unsigned long>(j)))
                s.set_coeff({i, j}, NFElem::from_rat(q, Rat(1)));

    Poly factor = poly_zero(2, q);
    const long ex[8][2] = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {0, 2}, {2, 1}, {1, 2}, {2, 2}};
    for (const auto& e : ex) factor.set_coeff({e[0], e[1]}, NFElem::from_rat(q, Rat(1)));

    IntMatrix t = IntMatrix::scalar(2, Int(3));
    PuiseuxSeries rhs = (factor * substitute_monomial(s, t)).truncated(n);
    CHECK(verify_identity(s, rhs, n) == std::nullopt);

    // dropping the z1^2 z2^2 term must surface a mismatch at low degree
    Poly broken = factor;
    broken.set_coeff({2, 2}, NFElem::from_rat(q, Rat(0)));
    PuiseuxSeries bad = (broken * substitute_monomial(s, t)).truncated(n);
    auto mis = verify_identity(s, bad, n);
    REQUIRE(mis.has_value());
    CHECK(total_degree(mis->exponent) <= 8);
}

TEST_CASE("rational function reduction and series expansion") {
    FieldPtr q = NumberField::rationals();
    // (1 - z^2)/(1 - z) reduces to 1 + z
    Poly num = poly_const(1, q, Rat(1)) - poly_monomial(1, q, NFElem::from_rat(q, Rat(1)), {2});
    Poly den = poly_const(1, q, Rat(1)) - poly_var(1, q, 0);
    RationalFunction r(num, den);
    CHECK(r.is_polynomial());
    CHECK(r.num().coeff({0}) == NFElem::from_rat(q, Rat(1)));
    CHECK(r.num().coeff({1}) == NFElem::from_rat(q, Rat(1)));

    // geometric series of 1/(1-z)
    RationalFunction geo(poly_const(1, q, Rat(1)), den);
    PuiseuxSeries gs = geo.to_series(10);
    for (long k = 0; k <= 10; ++k) CHECK(gs.coeff({k}) == NFElem::from_rat(q, Rat(1)));

    CHECK(r.eval({make_rat(1, 2)}).rat() == make_rat(3, 2));
    CHECK(geo.den_vanishes_at({Rat(1)}));
}

TEST_CASE("ramified series and rebase") {
    FieldPtr q = NumberField::rationals();
    // z^(1/2) * z^(1/2) = z
    PuiseuxSeries half = PuiseuxSeries::monomial(1, 2, q, NFElem::from_rat(q, Rat(1)), {1});
    PuiseuxSeries prod = half * half;
    CHECK(prod.coeff({2}) == NFElem::from_rat(q, Rat(1)));

    PuiseuxSeries z = poly_var(1, q, 0);
    CHECK(verify_identity(prod, z.rebased(2), 10) == std::nullopt);
}

TEST_CASE("laurent exponents survive substitution") {
    FieldPtr q = NumberField::rationals();
    // f = 1/(z0 z1), T = [[1,1],[1,0]]: f(Tz) = 1/(z0^2 z1)
    PuiseuxSeries f = PuiseuxSeries::monomial(2, 1, q, NFElem::from_rat(q, Rat(1)), {-1, -1});
    IntMatrix t(2, 2, {Int(1), Int(1), Int(1), Int(0)});
    PuiseuxSeries g = substitute_monomial(f, t);
    CHECK(g.coeff({-2, -1}) == NFElem::from_rat(q, Rat(1)));
    CHECK(g.terms().size() == 1);
}
