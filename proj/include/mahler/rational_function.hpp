#pragma once

#include "mahler/puiseux.hpp"

namespace mahler {

// Multivariate polynomials are exact PuiseuxSeries with ramification 1 and
// nonnegative integer exponents.
using Poly = PuiseuxSeries;

Poly poly_zero(size_t nvars, FieldPtr field);
Poly poly_const(size_t nvars, FieldPtr field, const Rat& c);
Poly poly_monomial(size_t nvars, FieldPtr field, const NFElem& c, const Exponent& e);
Poly poly_var(size_t nvars, FieldPtr field, size_t var); // z_var

bool is_polynomial(const PuiseuxSeries& s);

// Dense univariate view (throws unless nvars == 1).
std::vector<NFElem> poly_dense(const Poly& p);
Poly poly_from_dense(const std::vector<NFElem>& c, FieldPtr field);

NFElem poly_eval(const Poly& p, const std::vector<Rat>& point);
Poly poly_derivative(const Poly& p); // univariate

// Quotient of polynomials over a number field; reduced on construction
// (full gcd reduction in one variable, content normalization otherwise).
class RationalFunction {
public:
    RationalFunction() = default;
    RationalFunction(Poly num, Poly den);
    static RationalFunction from_poly(Poly p);
    static RationalFunction constant(size_t nvars, FieldPtr field, const Rat& c);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    size_t nvars() const { return num_.nvars(); }
    const FieldPtr& field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction operator-() const;
    bool operator==(const RationalFunction& o) const;

    RationalFunction substitute(const IntMatrix& t) const;
    RationalFunction derivative() const; // univariate
    NFElem eval(const std::vector<Rat>& point) const; // den(point) must be nonzero
    bool den_vanishes_at(const std::vector<Rat>& point) const;

    // Series expansion to total degree `order`; den constant term must be
    // invertible.
    PuiseuxSeries to_series(long order) const;

    std::string str() const;

private:
    void reduce();
    Poly num_{}, den_{};
};

class RFMatrix {
public:
    RFMatrix() : rows_(0), cols_(0) {}
    RFMatrix(size_t rows, size_t cols, size_t nvars, FieldPtr field);

    static RFMatrix identity(size_t n, size_t nvars, FieldPtr field);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    size_t nvars() const { return nvars_; }
    const FieldPtr& field() const { return field_; }

    RationalFunction& at(size_t i, size_t j);
    const RationalFunction& at(size_t i, size_t j) const;

    RFMatrix operator*(const RFMatrix& o) const;
    RFMatrix operator-(const RFMatrix& o) const;
    bool operator==(const RFMatrix& o) const;
    RFMatrix substitute(const IntMatrix& t) const;
    RFMatrix derivative() const;
    RationalFunction det() const;

    std::vector<std::vector<Rat>> eval(const std::vector<Rat>& point) const; // field Q only

private:
    size_t rows_, cols_, nvars_ = 1;
    FieldPtr field_;
    std::vector<RationalFunction> e_;
};

} // namespace mahler
