#include "mahler/rational_function.hpp"

#include <stdexcept>

namespace mahler {

Poly poly_zero(size_t nvars, FieldPtr field) {
    return PuiseuxSeries::zero(nvars, 1, std::move(field));
}

Poly poly_const(size_t nvars, FieldPtr field, const Rat& c) {
    NFElem e = NFElem::from_rat(field, c);
    return PuiseuxSeries::constant(nvars, 1, field, e);
}

Poly poly_monomial(size_t nvars, FieldPtr field, const NFElem& c, const Exponent& e) {
    return PuiseuxSeries::monomial(nvars, 1, std::move(field), c, e);
}

Poly poly_var(size_t nvars, FieldPtr field, size_t var) {
    Exponent e(nvars, 0);
    e.at(var) = 1;
    NFElem one = NFElem::from_rat(field, Rat(1));
    return PuiseuxSeries::monomial(nvars, 1, field, one, e);
}

bool is_polynomial(const PuiseuxSeries& s) {
    if (!s.exact() || s.ram() != 1) return false;
    for (const auto& [e, c] : s.terms())
        for (long x : e)
            if (x < 0) return false;
    return true;
}

std::vector<NFElem> poly_dense(const Poly& p) {
    if (p.nvars() != 1) throw std::domain_error("dense view is univariate only");
    long deg = -1;
    for (const auto& [e, c] : p.terms()) deg = std::max(deg, e[0]);
    std::vector<NFElem> out(static_cast<size_t>(deg + 1), NFElem::from_rat(p.field(), Rat(0)));
    for (const auto& [e, c] : p.terms()) out[static_cast<size_t>(e[0])] = c;
    return out;
}

Poly poly_from_dense(const std::vector<NFElem>& c, FieldPtr field) {
    Poly p = poly_zero(1, field);
    for (size_t i = 0; i < c.size(); ++i) p.set_coeff({static_cast<long>(i)}, c[i]);
    return p;
}

NFElem poly_eval(const Poly& p, const std::vector<Rat>& point) {
    if (point.size() != p.nvars()) throw std::domain_error("evaluation arity mismatch");
    NFElem acc = NFElem::from_rat(p.field(), Rat(0));
    for (const auto& [e, c] : p.terms()) {
        Rat m(1);
        for (size_t i = 0; i < point.size(); ++i) {
            if (e[i] < 0) throw std::domain_error("negative exponent in polynomial evaluation");
            m *= rat_pow(point[i], e[i]);
        }
        acc = acc + c * NFElem::from_rat(p.field(), m);
    }
    return acc;
}

Poly poly_derivative(const Poly& p) {
    if (p.nvars() != 1) throw std::domain_error("derivative is univariate only");
    Poly out = poly_zero(1, p.field());
    for (const auto& [e, c] : p.terms()) {
        if (e[0] == 0) continue;
        out.set_coeff({e[0] - 1}, c * NFElem::from_rat(p.field(), Rat(e[0])));
    }
    return out;
}

namespace {

// Monic Euclid over the coefficient field; inputs univariate.
Poly poly_gcd_1var(const Poly& a, const Poly& b) {
    std::vector<NFElem> x = poly_dense(a), y = poly_dense(b);
    auto deg = [](const std::vector<NFElem>& v) { return static_cast<long>(v.size()) - 1; };
    auto trim = [](std::vector<NFElem>& v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
    };
    trim(x);
    trim(y);
    while (!y.empty()) {
        NFElem lead_inv = y.back().inverse();
        while (deg(x) >= deg(y) && !x.empty()) {
            NFElem f = x.back() * lead_inv;
            long shift = deg(x) - deg(y);
            for (long i = 0; i <= deg(y); ++i)
                x[static_cast<size_t>(i + shift)] =
                    x[static_cast<size_t>(i + shift)] - f * y[static_cast<size_t>(i)];
            trim(x);
        }
        std::swap(x, y);
    }
    if (x.empty()) return poly_zero(1, a.field());
    NFElem inv = x.back().inverse();
    for (auto& c : x) c = c * inv;
    return poly_from_dense(x, a.field());
}

void poly_divrem_1var(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    std::vector<NFElem> x = poly_dense(a), y = poly_dense(b);
    auto deg = [](const std::vector<NFElem>& v) { return static_cast<long>(v.size()) - 1; };
    auto trim = [](std::vector<NFElem>& v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
    };
    trim(x);
    trim(y);
    if (y.empty()) throw std::domain_error("polynomial division by zero");
    std::vector<NFElem> quo(x.size(), NFElem::from_rat(a.field(), Rat(0)));
    NFElem lead_inv = y.back().inverse();
    while (deg(x) >= deg(y) && !x.empty()) {
        NFElem f = x.back() * lead_inv;
        long shift = deg(x) - deg(y);
        quo[static_cast<size_t>(shift)] = f;
        for (long i = 0; i <= deg(y); ++i)
            x[static_cast<size_t>(i + shift)] =
                x[static_cast<size_t>(i + shift)] - f * y[static_cast<size_t>(i)];
        trim(x);
    }
    q = poly_from_dense(quo, a.field());
    r = poly_from_dense(x, a.field());
}

// Scale both parts so the lexicographically largest monomial of den has
// coefficient 1.
void normalize_pair(Poly& num, Poly& den) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    NFElem lead = den.terms().rbegin()->second;
    NFElem inv = lead.inverse();
    num = num.scale(inv);
    den = den.scale(inv);
}

} // namespace

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (!mahler::is_polynomial(num_) || !mahler::is_polynomial(den_))
        throw std::domain_error("rational function parts must be polynomials");
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    reduce();
}

RationalFunction RationalFunction::from_poly(Poly p) {
    Poly one = poly_const(p.nvars(), p.field(), Rat(1));
    return RationalFunction(std::move(p), std::move(one));
}

RationalFunction RationalFunction::constant(size_t nvars, FieldPtr field, const Rat& c) {
    return from_poly(poly_const(nvars, field, c));
}

bool RationalFunction::is_polynomial() const {
    return den_.terms().size() == 1 && den_.terms().begin()->first == Exponent(den_.nvars(), 0) &&
           den_.terms().begin()->second == NFElem::from_rat(field(), Rat(1));
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = poly_const(den_.nvars(), den_.field(), Rat(1));
        return;
    }
    if (num_.nvars() == 1) {
        Poly g = poly_gcd_1var(num_, den_);
        long gdeg = -1;
        for (const auto& [e, c] : g.terms()) gdeg = std::max(gdeg, e[0]);
        if (gdeg > 0) {
            Poly q, r;
            poly_divrem_1var(num_, g, q, r);
            if (!r.is_zero()) throw std::logic_error("gcd does not divide numerator");
            num_ = q;
            poly_divrem_1var(den_, g, q, r);
            if (!r.is_zero()) throw std::logic_error("gcd does not divide denominator");
            den_ = q;
        }
    }
    normalize_pair(num_, den_);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    return (num_ * o.den_ - o.num_ * den_).is_zero();
}

RationalFunction RationalFunction::substitute(const IntMatrix& t) const {
    return RationalFunction(substitute_monomial(num_, t), substitute_monomial(den_, t));
}

RationalFunction RationalFunction::derivative() const {
    Poly n = poly_derivative(num_) * den_ - num_ * poly_derivative(den_);
    return RationalFunction(std::move(n), den_ * den_);
}

NFElem RationalFunction::eval(const std::vector<Rat>& point) const {
    NFElem d = poly_eval(den_, point);
    if (d.is_zero()) throw std::domain_error("denominator vanishes at the point");
    return poly_eval(num_, point) * d.inverse();
}

bool RationalFunction::den_vanishes_at(const std::vector<Rat>& point) const {
    return poly_eval(den_, point).is_zero();
}

PuiseuxSeries RationalFunction::to_series(long order) const {
    Exponent zero(den_.nvars(), 0);
    NFElem c0 = den_.coeff(zero);
    if (c0.is_zero()) throw std::domain_error("denominator vanishes at the origin");
    NFElem c0inv = c0.inverse();
    // u = 1 - den/c0 has positive valuation; invert geometrically.
    Poly u = -den_.scale(c0inv);
    u.set_coeff(zero, u.coeff(zero) + NFElem::from_rat(field(), Rat(1)));
    PuiseuxSeries acc = PuiseuxSeries::constant(den_.nvars(), 1, field(), NFElem::from_rat(field(), Rat(1)));
    if (!u.is_zero()) {
        if (u.valuation() <= 0) throw std::logic_error("series inversion: no valuation gain");
        long val = u.valuation();
        PuiseuxSeries upow = acc;
        for (long k = 1; k * val <= order; ++k) {
            upow = (upow * u).truncated(order);
            acc = acc + upow;
        }
    }
    return (num_ * acc.scale(c0inv)).truncated(order);
}

std::string RationalFunction::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

RFMatrix::RFMatrix(size_t rows, size_t cols, size_t nvars, FieldPtr field)
    : rows_(rows), cols_(cols), nvars_(nvars), field_(field),
      e_(rows * cols, RationalFunction::constant(nvars, field, Rat(0))) {}

RFMatrix RFMatrix::identity(size_t n, size_t nvars, FieldPtr field) {
    RFMatrix m(n, n, nvars, field);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = RationalFunction::constant(nvars, field, Rat(1));
    return m;
}

RationalFunction& RFMatrix::at(size_t i, size_t j) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
    return e_[i * cols_ + j];
}

const RationalFunction& RFMatrix::at(size_t i, size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
    return e_[i * cols_ + j];
}

RFMatrix RFMatrix::operator*(const RFMatrix& o) const {
    if (cols_ != o.rows_) throw std::domain_error("matrix product shape mismatch");
    RFMatrix m(rows_, o.cols_, nvars_, field_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < o.cols_; ++j) {
            RationalFunction acc = RationalFunction::constant(nvars_, field_, Rat(0));
            for (size_t k = 0; k < cols_; ++k) acc = acc + at(i, k) * o.at(k, j);
            m.at(i, j) = acc;
        }
    return m;
}

RFMatrix RFMatrix::operator-(const RFMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::domain_error("matrix shape mismatch");
    RFMatrix m(rows_, cols_, nvars_, field_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j) - o.at(i, j);
    return m;
}

bool RFMatrix::operator==(const RFMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!(at(i, j) == o.at(i, j))) return false;
    return true;
}

RFMatrix RFMatrix::substitute(const IntMatrix& t) const {
    RFMatrix m(rows_, cols_, nvars_, field_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).substitute(t);
    return m;
}

RFMatrix RFMatrix::derivative() const {
    RFMatrix m(rows_, cols_, nvars_, field_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).derivative();
    return m;
}

RationalFunction RFMatrix::det() const {
    if (rows_ != cols_) throw std::domain_error("determinant of non-square matrix");
    if (rows_ == 0) return RationalFunction::constant(nvars_, field_, Rat(1));
    if (rows_ == 1) return at(0, 0);
    RationalFunction acc = RationalFunction::constant(nvars_, field_, Rat(0));
    // Laplace along the first row; matrices here stay small.
    for (size_t j = 0; j < cols_; ++j) {
        if (at(0, j).is_zero()) continue;
        RFMatrix minor(rows_ - 1, cols_ - 1, nvars_, field_);
        for (size_t i = 1; i < rows_; ++i)
            for (size_t k = 0, c = 0; k < cols_; ++k) {
                if (k == j) continue;
                minor.at(i - 1, c++) = at(i, k);
            }
        RationalFunction term = at(0, j) * minor.det();
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

std::vector<std::vector<Rat>> RFMatrix::eval(const std::vector<Rat>& point) const {
    std::vector<std::vector<Rat>> out(rows_, std::vector<Rat>(cols_));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            NFElem v = at(i, j).eval(point);
            if (!v.is_rational()) throw std::domain_error("matrix entry not rational at the point");
            out[i][j] = v.rat();
        }
    return out;
}

} // namespace mahler
