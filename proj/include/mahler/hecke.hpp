#pragma once

#include <string>
#include <vector>

#include "mahler/ball.hpp"
#include "mahler/rational.hpp"

namespace mahler {

// (a + b sqrt(d)) / c in canonical form: d squarefree > 1, b != 0, c > 0,
// gcd(a, b, c) = 1. Irrational by construction.
class QuadraticIrrational {
public:
    QuadraticIrrational(const Int& a, const Int& b, const Int& c, const Int& d);

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    const Int& d() const { return d_; }

    bool operator==(const QuadraticIrrational& o) const = default;

    QuadraticIrrational operator-() const;
    QuadraticIrrational add_int(const Int& k) const;
    QuadraticIrrational scale(const Rat& q) const; // q != 0
    QuadraticIrrational doubled() const { return scale(Rat(2)); }

    int sign() const;             // exact
    bool positive() const { return sign() > 0; }
    Int floor_times(const Int& n) const; // floor(n * omega), exact
    Ball to_ball(mpfr_prec_t prec) const;

    std::string str() const;

private:
    Int a_, b_, c_, d_;
};

bool same_field(const QuadraticIrrational& w1, const QuadraticIrrational& w2);

// omega1 - omega2 or omega1 + omega2 is a rational integer.
bool equiv_pm_mod_z(const QuadraticIrrational& w1, const QuadraticIrrational& w2);

struct ContinuedFraction {
    std::vector<Int> preperiod;
    std::vector<Int> period;
};

// Eventually periodic continued fraction of omega > 0, exact.
ContinuedFraction cf_expansion(const QuadraticIrrational& w);

struct HmItem {
    QuadraticIrrational omega;
    Rat alpha; // 0 < |alpha| < 1
};

struct HmDecision {
    enum class Verdict { Independent, Dependent, Unknown } verdict;
    std::string criterion;            // which published result licenses it
    std::string note;
    std::vector<size_t> witness;      // item indices participating in a dependence
};

// Two Hecke-Mahler values are dependent iff the points agree and the
// parameters agree mod Z up to sign (Masser's two-value criterion).
HmDecision hm_pair_decision(const HmItem& x, const HmItem& y);

// Family decision per the theorems on distinct fields / distinct points /
// mod-Z-distinct parameters; detects the even-odd split relation
// f(alpha) + f(-alpha) = 2 f_2omega(alpha^2); otherwise Unknown with a
// linearity note.
HmDecision hm_family_decision(const std::vector<HmItem>& items);

} // namespace mahler
