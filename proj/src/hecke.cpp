#include "mahler/hecke.hpp"

#include <map>
#include <stdexcept>

#include "mahler/multiplicative.hpp"

namespace mahler {

namespace {

Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// floor((A + B sqrt(d)) / C) for C > 0 and B^2 d not a perfect square
// unless B = 0.
Int floor_quadratic(const Int& A, const Int& B, const Int& C, const Int& d) {
    if (B == 0) return floor_div(A, C);
    Int t = isqrt(B * B * d);
    if (B > 0) return floor_div(A + t, C);
    return floor_div(A - t - 1, C);
}

} // namespace

QuadraticIrrational::QuadraticIrrational(const Int& a, const Int& b, const Int& c, const Int& d)
    : a_(a), b_(b), c_(c), d_(d) {
    if (b_ == 0) throw std::domain_error("quadratic irrational needs b != 0");
    if (c_ == 0) throw std::domain_error("zero denominator");
    if (d_ <= 1) throw std::domain_error("radicand must be > 1");
    // extract square factors of d into b
    auto fac = factor_rational(Rat(d_));
    for (const auto& [p, e] : fac) {
        long half = e / 2;
        if (half > 0) {
            Int pk = int_pow(p, static_cast<unsigned long>(half));
            b_ *= pk;
            d_ /= pk * pk;
        }
    }
    if (d_ <= 1) throw std::domain_error("radicand is a perfect square: value is rational");
    if (c_ < 0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c_.get_mpz_t());
    if (g > 1) {
        a_ /= g;
        b_ /= g;
        c_ /= g;
    }
}

QuadraticIrrational QuadraticIrrational::operator-() const {
    return QuadraticIrrational(-a_, -b_, c_, d_);
}

QuadraticIrrational QuadraticIrrational::add_int(const Int& k) const {
    return QuadraticIrrational(a_ + k * c_, b_, c_, d_);
}

QuadraticIrrational QuadraticIrrational::scale(const Rat& q) const {
    if (q == 0) throw std::domain_error("scaling by zero");
    return QuadraticIrrational(a_ * q.get_num(), b_ * q.get_num(), c_ * q.get_den(), d_);
}

int QuadraticIrrational::sign() const {
    // sign of a + b sqrt(d) (c > 0)
    int sa = sgn(a_), sb = sgn(b_);
    if (sa == sb) return sa;
    if (sa == 0) return sb;
    if (sb == 0) return sa;
    // opposite signs: compare a^2 with b^2 d
    Int lhs = a_ * a_, rhs = b_ * b_ * d_;
    int cmp_abs = cmp(lhs, rhs);
    if (cmp_abs == 0) throw std::logic_error("quadratic irrational equals a rational");
    // |a| > |b| sqrt(d) ? sign of a : sign of b
    return cmp_abs > 0 ? sa : sb;
}

Int QuadraticIrrational::floor_times(const Int& n) const {
    if (n == 0) return Int(0);
    return floor_quadratic(n * a_, n * b_, c_, d_);
}

Ball QuadraticIrrational::to_ball(mpfr_prec_t prec) const {
    Ball root = Ball::from_rat(Rat(d_), prec).sqrt();
    return root.mul_rat(Rat(b_)).add_rat(Rat(a_)).mul_rat(make_rat(Int(1), c_));
}

std::string QuadraticIrrational::str() const {
    std::string s = "(" + a_.get_str() + " + " + b_.get_str() + "*sqrt(" + d_.get_str() + "))/" +
                    c_.get_str();
    return s;
}

bool same_field(const QuadraticIrrational& w1, const QuadraticIrrational& w2) {
    return w1.d() == w2.d();
}

bool equiv_pm_mod_z(const QuadraticIrrational& w1, const QuadraticIrrational& w2) {
    if (w1.d() != w2.d()) return false;
    // difference: needs equal irrational parts, i.e. b1/c1 = b2/c2
    if (w1.b() * w2.c() == w2.b() * w1.c()) {
        Int num = w1.a() * w2.c() - w2.a() * w1.c();
        if (num % (w1.c() * w2.c()) == 0) return true;
    }
    // sum
    if (w1.b() * w2.c() == -(w2.b() * w1.c())) {
        Int num = w1.a() * w2.c() + w2.a() * w1.c();
        if (num % (w1.c() * w2.c()) == 0) return true;
    }
    return false;
}

ContinuedFraction cf_expansion(const QuadraticIrrational& w) {
    if (w.sign() <= 0) throw std::domain_error("continued fraction needs omega > 0");
    // Normalize to (P + sqrt(D)) / Q with Q | D - P^2.
    Int P, D, Q;
    if (w.b() > 0) {
        P = w.a();
        D = w.b() * w.b() * w.d();
        Q = w.c();
    } else {
        P = -w.a();
        D = w.b() * w.b() * w.d();
        Q = -w.c();
    }
    if ((D - P * P) % Q != 0) {
        Int aq = abs(Q);
        P *= aq;
        D *= aq * aq;
        Q *= aq;
    }

    auto digit = [&](const Int& p, const Int& q) {
        // floor((p + sqrt(D)) / q), q of either sign
        Int t = isqrt(D);
        if (q > 0) return floor_div(p + t, q);
        return floor_div(-(p + t + 1), -q); // floor for negative denominator
    };

    ContinuedFraction out;
    std::map<std::pair<Int, Int>, size_t> seen;
    std::vector<Int> digits;
    Int p = P, q = Q;
    for (size_t step = 0; step < 100000; ++step) {
        auto key = std::make_pair(p, q);
        auto it = seen.find(key);
        if (it != seen.end()) {
            out.preperiod.assign(digits.begin(), digits.begin() + static_cast<long>(it->second));
            out.period.assign(digits.begin() + static_cast<long>(it->second), digits.end());
            return out;
        }
        seen[key] = step;
        Int a = digit(p, q);
        digits.push_back(a);
        Int p2 = a * q - p;
        Int q2 = (D - p2 * p2) / q;
        if (q2 == 0) throw std::logic_error("continued fraction hit a rational");
        p = p2;
        q = q2;
    }
    throw std::logic_error("continued fraction failed to cycle");
}

HmDecision hm_pair_decision(const HmItem& x, const HmItem& y) {
    for (const auto* it : {&x, &y})
        if (it->alpha == 0 || ::abs(it->alpha) >= 1)
            throw std::domain_error("points must satisfy 0 < |alpha| < 1");
    if (x.alpha == y.alpha && equiv_pm_mod_z(x.omega, y.omega))
        return {HmDecision::Verdict::Dependent, "Masser two-value criterion",
                "equal points with parameters agreeing mod Z up to sign", {0, 1}};
    return {HmDecision::Verdict::Independent, "Masser two-value criterion", "", {}};
}

HmDecision hm_family_decision(const std::vector<HmItem>& items) {
    for (const auto& it : items)
        if (it.alpha == 0 || ::abs(it.alpha) >= 1)
            throw std::domain_error("points must satisfy 0 < |alpha| < 1");
    if (items.empty()) return {HmDecision::Verdict::Independent, "empty family", "", {}};

    // Pairwise dependences first.
    for (size_t i = 0; i < items.size(); ++i)
        for (size_t j = i + 1; j < items.size(); ++j) {
            HmDecision d = hm_pair_decision(items[i], items[j]);
            if (d.verdict == HmDecision::Verdict::Dependent) {
                d.witness = {i, j};
                return d;
            }
        }

    // Even-odd split: f_w(a) + f_w(-a) - 2 f_{2w}(a^2) = 0.
    for (size_t i = 0; i < items.size(); ++i)
        for (size_t j = 0; j < items.size(); ++j)
            for (size_t k = 0; k < items.size(); ++k) {
                if (i == j || j == k || i == k) continue;
                if (items[j].alpha != -items[i].alpha) continue;
                if (items[k].alpha != items[i].alpha * items[i].alpha) continue;
                if (!equiv_pm_mod_z(items[j].omega, items[i].omega)) continue;
                if (!equiv_pm_mod_z(items[k].omega, items[i].omega.doubled())) continue;
                return {HmDecision::Verdict::Dependent, "even-odd split identity",
                        "f(alpha) + f(-alpha) = 2 f_2omega(alpha^2)", {i, j, k}};
            }

    // Group by field. Equal points with the same parameter were caught by
    // the pair rule, so within any single-parameter group points are
    // distinct, and within any single-point group parameters are distinct
    // mod Z up to sign.
    std::map<Int, std::vector<size_t>> by_field;
    for (size_t i = 0; i < items.size(); ++i) by_field[items[i].omega.d()].push_back(i);

    auto single_param = [&](const std::vector<size_t>& group) {
        for (size_t g : group)
            if (!(items[g].omega == items[group[0]].omega)) return false;
        return true;
    };
    auto single_point = [&](const std::vector<size_t>& group) {
        for (size_t g : group)
            if (items[g].alpha != items[group[0]].alpha) return false;
        return true;
    };

    if (by_field.size() == 1) {
        const auto& group = by_field.begin()->second;
        if (single_param(group))
            return {HmDecision::Verdict::Independent, "single parameter, distinct points", "", {}};
        if (single_point(group))
            return {HmDecision::Verdict::Independent,
                    "single point, parameters distinct mod Z up to sign", "", {}};
    } else {
        bool each_field_single_param = true;
        for (const auto& [d, group] : by_field)
            if (!single_param(group)) each_field_single_param = false;
        if (each_field_single_param)
            return {HmDecision::Verdict::Independent,
                    "distinct quadratic fields, one parameter per field with distinct points", "", {}};
    }
    return {HmDecision::Verdict::Unknown, "no applicable criterion",
            "same quadratic field with mixed parameters and points: outside the decided cases; "
            "any algebraic relation among the values must be linear",
            {}};
}

} // namespace mahler
