#pragma once

#include <optional>
#include <string>
#include <variant>

#include "mahler/polynomial.hpp"
#include "mahler/rational_function.hpp"

namespace mahler {

// p_0(z) f(z) + p_1(z) f(z^q) + ... + p_n(z) f(z^{q^n}) = r(z), inhomogeneous
// part optional.
struct ScalarMahlerEq {
    long base = 2;
    std::vector<Poly> p; // p_0 .. p_n, univariate
    std::optional<RationalFunction> rhs;

    void validate() const;
};

// Vector system f(z) = A(z) f(Tz). When inhom_embedding is set, the last
// coordinate is the constant function 1.
struct MahlerSystem {
    IntMatrix t;
    RFMatrix a;
    bool inhom_embedding = false;

    size_t dim() const { return a.rows(); }
    size_t nvars() const { return t.rows(); }
    // Monomial action of T^k on a point.
    std::vector<Rat> transform_point(const std::vector<Rat>& alpha, unsigned long k = 1) const;
};

MahlerSystem companion_system(const ScalarMahlerEq& eq);

MahlerSystem iterate_system(const MahlerSystem& s, unsigned long l);

// Univariate systems only: block system for (f, f').
MahlerSystem derivative_system(const MahlerSystem& s);

struct SpectrumReport {
    QPoly char_polynomial;
    QPoly min_polynomial;   // of the spectral radius
    RootInterval rho_iv;    // isolating interval for rho (exact endpoints)
    Ball rho;               // certified enclosure
    bool singular = false;
    bool rho_gt_one = false;                      // certified strict comparison
    std::optional<unsigned long> unity_order;     // m with Phi_m | char poly
};

SpectrumReport spectral_radius(const IntMatrix& t, long bits = 128);

struct ClassMResult {
    bool in_m;
    std::string reason; // empty when in_m
};

// Operational class-M test: nonsingular, rho > 1, no root-of-unity
// eigenvalue.
ClassMResult class_m_check(const IntMatrix& t);

struct RadiusPartition {
    struct Witness {
        size_t i, j;
        unsigned long a, b; // verified rho_i^a = rho_j^b
    };
    std::vector<std::vector<size_t>> classes; // indices into the input list
    std::vector<Witness> witnesses;
    unsigned long exponent_bound;
};

// Groups spectral radii into exact multiplicative-dependence classes; pairs
// without a verified relation with exponents <= bound stay separate, with
// the separation certified by interval arithmetic on logarithms.
RadiusPartition radii_mult_classes(const std::vector<SpectrumReport>& reports,
                                   unsigned long exponent_bound);

struct GaugeInput {
    std::vector<std::vector<PuiseuxSeries>> phi;
    std::vector<std::vector<NFElem>> b;
    long order = 0;
    Exponent det_exponent; // where det Phi must have a nonzero coefficient
};

struct GaugeCertificate {
    GaugeInput data;
    NFElem det_coeff; // the certified nonzero coefficient
};

struct GaugeMismatch {
    size_t row, col;
    std::string what;
    std::optional<SeriesMismatch> detail;
};

// Checks Phi(z) B = A(z) Phi(Tz) coefficientwise to the declared order and
// the nonzero determinant coefficient.
std::variant<GaugeCertificate, GaugeMismatch> verify_gauge(const MahlerSystem& s,
                                                           const GaugeInput& in);

struct AdmissibilityReport {
    enum class Verdict { Admissible, Fails, Unknown } verdict;
    std::string reason;
    std::vector<Int> witness; // multiplicative dependence of coordinates, when found
    bool exact_criterion = false; // T = q*I: independence is equivalent, not just sufficient
};

AdmissibilityReport admissible_check(const IntMatrix& t, const std::vector<Rat>& alpha,
                                     unsigned long k_iterations = 32);

struct RegularityReport {
    enum class Verdict { Regular, Singular, Unknown } verdict;
    long singular_k = -1; // witness index for Singular
    std::string note;
};

// delta = num(det A) * prod of entry denominators; Regular needs
// delta(T^k alpha) != 0 for k <= K plus a certified tail bound.
RegularityReport regular_point_check(const MahlerSystem& s, const std::vector<Rat>& alpha,
                                     unsigned long k_iterations = 32);

} // namespace mahler
