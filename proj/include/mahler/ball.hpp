#pragma once

#include <mpfr.h>

#include <string>

#include "mahler/rational.hpp"

namespace mahler {

// Midpoint-radius interval over MPFR. Every operation returns a ball that
// contains the exact result for any members of the input balls; midpoints
// are rounded to nearest and the rounding error is absorbed into the radius
// with upward rounding.
class Ball {
public:
    Ball();
    explicit Ball(mpfr_prec_t prec);
    Ball(const Ball& other);
    Ball(Ball&& other) noexcept;
    Ball& operator=(const Ball& other);
    Ball& operator=(Ball&& other) noexcept;
    ~Ball();

    static Ball exact_int(long v, mpfr_prec_t prec);
    static Ball from_rat(const Rat& q, mpfr_prec_t prec);
    // Closed interval [lo, hi].
    static Ball from_endpoints(const Rat& lo, const Rat& hi, mpfr_prec_t prec);
    static Ball zero(mpfr_prec_t prec);

    mpfr_prec_t prec() const { return prec_; }
    mpfr_srcptr mid() const { return mid_; }
    mpfr_srcptr rad() const { return rad_; }

    Ball operator+(const Ball& o) const;
    Ball operator-(const Ball& o) const;
    Ball operator*(const Ball& o) const;
    Ball operator/(const Ball& o) const; // requires o to exclude zero
    Ball operator-() const;

    Ball add_rat(const Rat& q) const;
    Ball mul_rat(const Rat& q) const;

    Ball abs() const;
    Ball sqrt() const;  // requires lower endpoint >= 0
    Ball cbrt() const;
    Ball log() const;   // requires lower endpoint > 0
    Ball pow_ui(unsigned long e) const;

    bool contains_zero() const;
    bool contains_rat(const Rat& q) const;
    // Entire ball strictly below/above the rational.
    bool lt_rat(const Rat& q) const;
    bool gt_rat(const Rat& q) const;
    // True iff this ball is contained in o (allowing equality of endpoints).
    bool inside(const Ball& o) const;

    bool rad_lt_pow2(long e) const;     // rad < 2^e
    Rat rad_upper_rat() const;          // exact value of rad as a rational
    Rat mid_rat() const;                // exact value of mid as a rational
    Rat lower_rat() const;              // exact lower endpoint
    Rat upper_rat() const;              // exact upper endpoint

    // Decimal rendering of the midpoint with the given number of significant
    // digits, and of the radius with a few digits. Deterministic.
    std::string mid_decimal(size_t digits) const;
    std::string rad_decimal() const;

private:
    void bump_rad_ulp(int ternary);

    mpfr_t mid_;
    mpfr_t rad_;
    mpfr_prec_t prec_;
};

} // namespace mahler
