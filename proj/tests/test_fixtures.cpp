#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mahler/fixtures.hpp"

using namespace mahler;

namespace {

Rat pow2_inv(long e) { return rat_pow(make_rat(1, 2), e); }

// u + v sqrt(d) with rational u, v; enough arithmetic to recombine a
// periodic continued fraction exactly.
struct Surd {
    Rat u, v;
    Int d;
    Surd add(const Surd& o) const { return {u + o.u, v + o.v, d}; }
    Surd mul_rat(const Rat& q) const { return {u * q, v * q, d}; }
    Surd div(const Surd& o) const {
        // multiply by the conjugate of o
        Rat den = o.u * o.u - o.v * o.v * Rat(d);
        Rat nu = u * o.u - v * o.v * Rat(d);
        Rat nv = v * o.u - u * o.v;
        return {nu / den, nv / den, d};
    }
};

} // namespace

TEST_CASE("all system fixtures self-verify and have small residuals") {
    long p = 128;
    Rat bound = pow2_inv(p - 32);
    for (const auto& name : fixtures::system_names()) {
        auto fx = fixtures::system_fixture(name); // construction self-checks
        size_t nv = fx.system.nvars();
        std::vector<Rat> point;
        for (size_t i = 0; i < nv; ++i) point.push_back(make_rat(1, 3 + 2 * static_cast<long>(i)));
        auto res = fixtures::system_residual(fx, point, p);
        for (const auto& b : res) CHECK(b.contains_zero());
        CHECK(residual_max_radius(res) < bound);
    }
}

TEST_CASE("differentiated thue-morse satisfies the derived system tightly") {
    auto fx = fixtures::system_fixture("tm-deriv");
    auto res = fixtures::system_residual(fx, {make_rat(1, 10)}, 320);
    for (const auto& b : res) CHECK(b.contains_zero());
    CHECK(residual_max_radius(res) < pow2_inv(256));
}

TEST_CASE("morphic prefixes are extended by the morphism") {
    for (const Morphism& m : {fixtures::fibonacci(), fixtures::tribonacci(), fixtures::w_word(),
                              fixtures::baum_sweet()}) {
        auto w = m.prefix(40);
        // apply the morphism to the prefix and compare
        std::vector<size_t> image;
        for (size_t a : w) {
            for (size_t b : m.images[a]) image.push_back(b);
            if (image.size() >= 80) break;
        }
        auto longer = m.prefix(std::min<size_t>(image.size(), 80));
        for (size_t i = 0; i < longer.size(); ++i) CHECK(image[i] == longer[i]);
    }
}

TEST_CASE("baum-sweet morphism coding agrees with the digit rule") {
    auto coded = fixtures::baum_sweet().coded_prefix(1 << 12);
    for (unsigned long n = 0; n < (1UL << 12); ++n)
        CHECK(coded[n] == fixtures::baum_sweet_term(n));
}

TEST_CASE("paperfolding rule satisfies its functional equation numerically") {
    // a_n for n >= 1 halves to itself on even n; odd positions alternate
    for (unsigned long n = 1; n < 2048; ++n) {
        if (n % 2 == 0)
            CHECK(fixtures::paperfolding_term(n) == fixtures::paperfolding_term(n / 2));
        else
            CHECK(fixtures::paperfolding_term(n) == ((n % 4 == 1) ? Rat(1) : Rat(0)));
    }
}

TEST_CASE("continued fraction recombination reproduces omega exactly") {
    for (const auto& name : {"sqrt2", "golden", "sqrt3", "1+sqrt2"}) {
        QuadraticIrrational w = fixtures::omega_fixture(name);
        auto cf = cf_expansion(w);
        REQUIRE(!cf.period.empty());

        // y = [period; y]: convergent matrix of one period
        Rat p0(0), q0(1), p1(1), q1(0); // identity Moebius map
        for (const auto& a : cf.period) {
            Rat p2 = Rat(a) * p1 + p0;
            Rat q2 = Rat(a) * q1 + q0;
            p0 = p1;
            q0 = q1;
            p1 = p2;
            q1 = q2;
        }
        // y = (p1 y + p0) / (q1 y + q0) -> q1 y^2 + (q0 - p1) y - p0 = 0
        Rat A = q1, B = q0 - p1, C = -p0;
        // y = (-B + sqrt(B^2 - 4AC)) / (2A), positive branch
        Rat disc = B * B - 4 * A * C;
        // express in Q(sqrt(d)): disc = s^2 * d for the omega's d
        Int d = w.d();
        Rat s2 = disc / Rat(d);
        // s2 must be a square of a rational
        Int sn, sd;
        mpz_sqrt(sn.get_mpz_t(), s2.get_num().get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), s2.get_den().get_mpz_t());
        REQUIRE(Rat(sn * sn, sd * sd) == s2);
        Surd y{-B / (2 * A), Rat(sn, sd) / (2 * A), d};

        // fold the preperiod back: omega = [a0; a1, ..., y]
        Surd val = y;
        for (size_t i = cf.preperiod.size(); i-- > 0;) {
            // val = a_i + 1/val
            Surd inv = Surd{Rat(1), Rat(0), d}.div(val);
            val = inv.add(Surd{Rat(cf.preperiod[i]), Rat(0), d});
        }
        Rat expect_u = Rat(w.a()) / Rat(w.c());
        Rat expect_v = Rat(w.b()) / Rat(w.c());
        CHECK(val.u == expect_u);
        CHECK(val.v == expect_v);
    }
}

TEST_CASE("positive verdicts are stable under deeper re-checks") {
    IntMatrix two_i = IntMatrix::scalar(2, Int(2));
    auto a_low = admissible_check(two_i, {make_rat(1, 2), make_rat(1, 3)}, 8);
    auto a_high = admissible_check(two_i, {make_rat(1, 2), make_rat(1, 3)}, 64);
    CHECK(a_low.verdict == AdmissibilityReport::Verdict::Admissible);
    CHECK(a_high.verdict == AdmissibilityReport::Verdict::Admissible);

    auto tm = fixtures::system_fixture("tm");
    auto r_low = regular_point_check(tm.system, {make_rat(1, 2)}, 4);
    auto r_high = regular_point_check(tm.system, {make_rat(1, 2)}, 64);
    CHECK(r_low.verdict == RegularityReport::Verdict::Regular);
    CHECK(r_high.verdict == RegularityReport::Verdict::Regular);
}

TEST_CASE("spectrum reports isolate the radius") {
    for (const auto& name : fixtures::matrix_names()) {
        SpectrumReport r = spectral_radius(fixtures::matrix_fixture(name));
        CHECK(r.min_polynomial.eval_ball(r.rho).contains_zero());
        QPoly sf = squarefree_part(r.char_polynomial);
        if (!r.rho_iv.exact())
            CHECK(sturm_count(sf, r.rho_iv.lo, r.rho_iv.hi) == 1);
        // divisibility of the characteristic polynomial
        QPoly q, rem;
        QPoly::divrem(r.char_polynomial, r.min_polynomial, q, rem);
        CHECK(rem.is_zero());
    }
}

TEST_CASE("powers-of-two stream feeds the two-variable embedding") {
    auto fx = fixtures::system_fixture("sqrtpow2");
    // residual at the admissible pair example point
    auto res = fixtures::system_residual(fx, {make_rat(1, 2), make_rat(1, 3)}, 160);
    for (const auto& b : res) CHECK(b.contains_zero());
    auto adm = admissible_check(fx.system.t, {make_rat(1, 2), make_rat(1, 3)});
    CHECK(adm.verdict == AdmissibilityReport::Verdict::Admissible);
    auto reg = regular_point_check(fx.system, {make_rat(1, 2), make_rat(1, 3)});
    CHECK(reg.verdict == RegularityReport::Verdict::Regular);
}
