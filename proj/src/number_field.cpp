#include "mahler/number_field.hpp"

#include <stdexcept>

namespace mahler {

std::shared_ptr<const NumberField> NumberField::rationals() {
    static std::shared_ptr<const NumberField> q(new NumberField(QPoly::x()));
    return q;
}

std::shared_ptr<const NumberField> NumberField::make(const QPoly& monic_modulus) {
    if (monic_modulus.degree() < 1 || monic_modulus.lead() != 1)
        throw std::domain_error("number field modulus must be monic of degree >= 1");
    if (monic_modulus.degree() == 1 && monic_modulus == QPoly::x()) return rationals();
    return std::shared_ptr<const NumberField>(new NumberField(monic_modulus));
}

namespace {

bool same_field(const FieldPtr& a, const FieldPtr& b) {
    return a == b || a->modulus() == b->modulus();
}

} // namespace

NFElem::NFElem(FieldPtr field, std::vector<Rat> coords) : field_(std::move(field)), c_(std::move(coords)) {
    if (c_.size() != field_->degree()) throw std::domain_error("coordinate count mismatch");
}

NFElem NFElem::from_rat(const FieldPtr& field, const Rat& q) {
    std::vector<Rat> c(field->degree(), Rat(0));
    c[0] = q;
    return NFElem(field, std::move(c));
}

NFElem NFElem::generator(const FieldPtr& field) {
    if (field->degree() < 2) throw std::domain_error("rationals have no generator");
    std::vector<Rat> c(field->degree(), Rat(0));
    c[1] = 1;
    return NFElem(field, std::move(c));
}

bool NFElem::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool NFElem::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat NFElem::rat() const {
    if (!is_rational()) throw std::domain_error("not a rational element");
    return c_[0];
}

NFElem NFElem::operator+(const NFElem& o) const {
    if (!same_field(field_, o.field_)) throw std::domain_error("field mismatch");
    std::vector<Rat> c(c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = c_[i] + o.c_[i];
    return NFElem(field_, std::move(c));
}

NFElem NFElem::operator-(const NFElem& o) const {
    if (!same_field(field_, o.field_)) throw std::domain_error("field mismatch");
    std::vector<Rat> c(c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = c_[i] - o.c_[i];
    return NFElem(field_, std::move(c));
}

NFElem NFElem::operator-() const {
    std::vector<Rat> c(c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = -c_[i];
    return NFElem(field_, std::move(c));
}

NFElem NFElem::operator*(const NFElem& o) const {
    if (!same_field(field_, o.field_)) throw std::domain_error("field mismatch");
    QPoly prod = QPoly(std::vector<Rat>(c_)) * QPoly(std::vector<Rat>(o.c_));
    QPoly q, r;
    QPoly::divrem(prod, field_->modulus(), q, r);
    std::vector<Rat> c(field_->degree(), Rat(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = r.coeff(i);
    return NFElem(field_, std::move(c));
}

NFElem NFElem::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (field_->is_rationals()) return from_rat(field_, 1 / c_[0]);
    // Extended Euclid in Q[x]: u*a + v*m = gcd = const.
    QPoly a{std::vector<Rat>(c_)}, m = field_->modulus();
    QPoly r0 = m, r1 = a, s0 = QPoly(), s1 = QPoly::constant(Rat(1));
    while (r1.degree() > 0) {
        QPoly q, r;
        QPoly::divrem(r0, r1, q, r);
        QPoly s = s0 - q * s1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    if (r1.is_zero()) throw std::domain_error("element not invertible (modulus not irreducible?)");
    QPoly inv = s1 * QPoly::constant(1 / r1.coeff(0));
    QPoly q, rem;
    QPoly::divrem(inv, m, q, rem);
    std::vector<Rat> c(field_->degree(), Rat(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = rem.coeff(i);
    return NFElem(field_, std::move(c));
}

bool NFElem::operator==(const NFElem& o) const {
    if (!same_field(field_, o.field_)) return false;
    return c_ == o.c_;
}

NFElem NFElem::conj() const {
    if (field_->degree() == 1) return *this;
    if (field_->degree() != 2) throw std::domain_error("conjugation only for degree <= 2");
    // For m = x^2 + p x + q the conjugate of the generator is -p - x.
    const Rat& p = field_->modulus().coeff(1);
    std::vector<Rat> c(2);
    c[0] = c_[0] - c_[1] * p;
    c[1] = -c_[1];
    return NFElem(field_, std::move(c));
}

std::string NFElem::str() const {
    if (is_rational()) return rat_str(c_[0]);
    return QPoly(std::vector<Rat>(c_)).str("j");
}

} // namespace mahler
