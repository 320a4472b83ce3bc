#pragma once

#include <functional>
#include <memory>
#include <string>

#include "mahler/hecke.hpp"
#include "mahler/systems.hpp"
#include "mahler/words.hpp"

namespace mahler {

// Exact coefficient source with a verified polynomial growth model
// |a_n| <= C (n+1)^d.
class CoefficientStream {
public:
    enum class Source { Dfao, Morphic, HeckeMahler, ClosedForm };

    static CoefficientStream from_dfao(const Dfao& d, std::string name);
    static CoefficientStream from_morphism(const Morphism& m, std::string name);
    static CoefficientStream hecke_mahler(const QuadraticIrrational& w, std::string name);
    static CoefficientStream closed_form(std::function<Rat(unsigned long)> f, Rat growth_c,
                                         long growth_d, std::string name);

    Rat term(unsigned long n) const { return fn_(n); }
    const std::string& name() const { return name_; }
    Source source() const { return source_; }
    const Rat& growth_c() const { return growth_c_; }
    long growth_d() const { return growth_d_; }

    // Term-by-term derivative stream: b_n = (n+1) a_{n+1}.
    CoefficientStream derivative() const;

    // Checks the growth model on an initial segment; throws on violation.
    void verify_growth(unsigned long upto = 4096) const;

private:
    CoefficientStream(Source s, std::function<Rat(unsigned long)> f, Rat c, long d, std::string n);

    Source source_;
    std::function<Rat(unsigned long)> fn_;
    Rat growth_c_;
    long growth_d_;
    std::string name_;
};

struct CertifiedValue {
    Ball value;
    unsigned long terms_used = 0;
    Rat tail_bound;
    std::string provenance;
    long precision_bits = 0;
};

// Certified sum of a_n alpha^n with an exact partial sum and a closed-form
// tail bound; resulting radius is below 2^-p. Requires |alpha| < 1.
CertifiedValue eval_series(const CoefficientStream& s, const Rat& alpha, long p);

CertifiedValue eval_hecke_mahler(const QuadraticIrrational& w, const Rat& alpha, long p);

// Value of one Cobham component series at a rational point inside the unit
// polydisk (truncated total-degree sum with a geometric tail).
CertifiedValue eval_cobham_component(const CobhamSystem& sys, size_t letter,
                                     const std::vector<Rat>& point, long p);

// Componentwise ball for f(alpha) - A(alpha) f(T alpha). The caller supplies
// certified component values at alpha and at T alpha; throws when a
// coefficient denominator vanishes at alpha.
std::vector<Ball> eval_residual(const MahlerSystem& s, const std::vector<Rat>& alpha,
                                const std::vector<Ball>& f_alpha,
                                const std::vector<Ball>& f_t_alpha);

Rat residual_max_radius(const std::vector<Ball>& residual);

} // namespace mahler
