#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mahler/int_matrix.hpp"
#include "mahler/number_field.hpp"

namespace mahler {

// Exponent vector in units of 1/ram; entries may be negative (Laurent
// directions are used by gauge matrices only).
using Exponent = std::vector<long>;

inline long total_degree(const Exponent& e) {
    long s = 0;
    for (long x : e) s += x;
    return s;
}

// Sparse truncated multivariate Puiseux series over a number field.
// `order` means: every term of the exact object with total degree <= order
// is present with its exact coefficient. ORDER_EXACT marks polynomials and
// Laurent polynomials known in full.
class PuiseuxSeries {
public:
    static constexpr long ORDER_EXACT = 1L << 40;

    PuiseuxSeries() : nvars_(1), ram_(1), order_(ORDER_EXACT), field_(NumberField::rationals()) {}
    PuiseuxSeries(size_t nvars, long ram, FieldPtr field, long order);

    static PuiseuxSeries zero(size_t nvars, long ram, FieldPtr field, long order = ORDER_EXACT);
    static PuiseuxSeries monomial(size_t nvars, long ram, FieldPtr field, const NFElem& coeff,
                                  const Exponent& expo);
    static PuiseuxSeries constant(size_t nvars, long ram, FieldPtr field, const NFElem& c);

    size_t nvars() const { return nvars_; }
    long ram() const { return ram_; }
    long order() const { return order_; }
    bool exact() const { return order_ == ORDER_EXACT; }
    const FieldPtr& field() const { return field_; }
    const std::map<Exponent, NFElem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Smallest total degree in the support (or order+1 when empty),
    // a valid lower bound for every term of the exact object.
    long valuation() const;
    // Componentwise lower bound on all exponents, declared at construction
    // and propagated; sound for the untruncated tail as well.
    const Exponent& lower_bound() const { return lb_; }

    NFElem coeff(const Exponent& e) const;
    void set_coeff(const Exponent& e, const NFElem& c);
    // Lowers the declared bound (used when a transform constrains the tail).
    void merge_lower_bound(const Exponent& lb);

    PuiseuxSeries operator+(const PuiseuxSeries& o) const;
    PuiseuxSeries operator-(const PuiseuxSeries& o) const;
    PuiseuxSeries operator*(const PuiseuxSeries& o) const;
    PuiseuxSeries operator-() const;
    PuiseuxSeries scale(const NFElem& c) const;

    PuiseuxSeries truncated(long new_order) const;
    // Re-express with a finer ramification (new_ram must be a multiple).
    PuiseuxSeries rebased(long new_ram) const;
    // Apply the field automorphism coefficientwise (degree <= 2 fields).
    PuiseuxSeries conj() const;
    // Collapse to one variable by z_i -> z for all i.
    PuiseuxSeries specialize_diagonal() const;

    std::string str() const;

private:
    void add_term(const Exponent& e, const NFElem& c);
    void recompute_lb();

    size_t nvars_;
    long ram_;
    long order_;
    FieldPtr field_;
    std::map<Exponent, NFElem> terms_;
    Exponent lb_;
};

// f(Tz) with the row convention (Tz)_i = prod_j z_j^{T_ij}; monomial
// exponents transform as v -> T^t v. T must be square of size nvars with
// nonnegative entries.
PuiseuxSeries substitute_monomial(const PuiseuxSeries& f, const IntMatrix& t);

// Solves h = sum_k c_k * h(T^k z) + forcing (k = 1..len(c)) by fixed-point
// iteration, certified to total degree `order`. Throws std::domain_error
// when the iteration fails to contract.
PuiseuxSeries solve_mahler_fixed_point(const std::vector<PuiseuxSeries>& c, const IntMatrix& t,
                                       const PuiseuxSeries& forcing, long order);

struct SeriesMismatch {
    Exponent exponent;
    NFElem lhs, rhs;
};

// Coefficientwise comparison up to total degree `order`; both inputs must
// be known at least to that order.
std::optional<SeriesMismatch> verify_identity(const PuiseuxSeries& lhs, const PuiseuxSeries& rhs,
                                              long order);

} // namespace mahler
