#pragma once

#include <memory>

#include "mahler/polynomial.hpp"
#include "mahler/rational.hpp"

namespace mahler {

// Q[x]/(m) for a monic m; degree 1 (m = x) models plain Q.
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    static std::shared_ptr<const NumberField> rationals();
    static std::shared_ptr<const NumberField> make(const QPoly& monic_modulus);

    size_t degree() const { return static_cast<size_t>(modulus_.degree()); }
    const QPoly& modulus() const { return modulus_; }
    bool is_rationals() const { return degree() == 1; }

private:
    explicit NumberField(QPoly m) : modulus_(std::move(m)) {}
    QPoly modulus_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

class NFElem {
public:
    NFElem() : field_(NumberField::rationals()), c_(1, Rat(0)) {}
    NFElem(FieldPtr field, std::vector<Rat> coords);
    static NFElem from_rat(const FieldPtr& field, const Rat& q);
    static NFElem generator(const FieldPtr& field); // the class of x

    const FieldPtr& field() const { return field_; }
    const std::vector<Rat>& coords() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    Rat rat() const; // requires is_rational

    NFElem operator+(const NFElem& o) const;
    NFElem operator-(const NFElem& o) const;
    NFElem operator*(const NFElem& o) const;
    NFElem operator-() const;
    NFElem inverse() const;
    bool operator==(const NFElem& o) const;

    // The nontrivial automorphism for degree 2; identity for degree 1.
    NFElem conj() const;

    std::string str() const;

private:
    FieldPtr field_;
    std::vector<Rat> c_;
};

} // namespace mahler
