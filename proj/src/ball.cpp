#include "mahler/ball.hpp"

#include <cstdio>
#include <cstring>

namespace mahler {

namespace {

// Exact conversion mpfr -> mpq. Requires a finite input.
Rat mpfr_to_rat(mpfr_srcptr x) {
    if (mpfr_zero_p(x)) return Rat(0);
    mpq_t q;
    mpq_init(q);
    mpfr_get_q(q, x);
    Rat r(q);
    mpq_clear(q);
    return r;
}

} // namespace

Ball::Ball() : Ball(128) {}

Ball::Ball(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(mid_, prec_);
    mpfr_init2(rad_, 64);
    mpfr_set_zero(mid_, 1);
    mpfr_set_zero(rad_, 1);
}

Ball::Ball(const Ball& other) : prec_(other.prec_) {
    mpfr_init2(mid_, prec_);
    mpfr_init2(rad_, 64);
    mpfr_set(mid_, other.mid_, MPFR_RNDN);
    mpfr_set(rad_, other.rad_, MPFR_RNDU);
}

Ball::Ball(Ball&& other) noexcept : prec_(other.prec_) {
    mid_[0] = other.mid_[0];
    rad_[0] = other.rad_[0];
    mpfr_init2(other.mid_, 2);
    mpfr_init2(other.rad_, 2);
    mpfr_set_zero(other.mid_, 1);
    mpfr_set_zero(other.rad_, 1);
}

Ball& Ball::operator=(const Ball& other) {
    if (this == &other) return *this;
    mpfr_set_prec(mid_, other.prec_);
    prec_ = other.prec_;
    mpfr_set(mid_, other.mid_, MPFR_RNDN);
    mpfr_set(rad_, other.rad_, MPFR_RNDU);
    return *this;
}

Ball& Ball::operator=(Ball&& other) noexcept {
    if (this == &other) return *this;
    mpfr_swap(mid_, other.mid_);
    mpfr_swap(rad_, other.rad_);
    std::swap(prec_, other.prec_);
    return *this;
}

Ball::~Ball() {
    mpfr_clear(mid_);
    mpfr_clear(rad_);
}

// Absorb the rounding error of the last midpoint operation: at most one ulp
// when the ternary value reports an inexact result.
void Ball::bump_rad_ulp(int ternary) {
    if (ternary == 0 || mpfr_zero_p(mid_)) return;
    mpfr_t ulp;
    mpfr_init2(ulp, 32);
    mpfr_set_ui_2exp(ulp, 1, mpfr_get_exp(mid_) - prec_, MPFR_RNDU);
    mpfr_add(rad_, rad_, ulp, MPFR_RNDU);
    mpfr_clear(ulp);
}

Ball Ball::exact_int(long v, mpfr_prec_t prec) {
    Ball b(prec);
    mpfr_set_si(b.mid_, v, MPFR_RNDN);
    return b;
}

Ball Ball::from_rat(const Rat& q, mpfr_prec_t prec) {
    Ball b(prec);
    int t = mpfr_set_q(b.mid_, q.get_mpq_t(), MPFR_RNDN);
    b.bump_rad_ulp(t);
    return b;
}

Ball Ball::from_endpoints(const Rat& lo, const Rat& hi, mpfr_prec_t prec) {
    if (lo > hi) throw std::domain_error("ball endpoints out of order");
    Ball b(prec);
    Rat mid = (lo + hi) / 2, half = (hi - lo) / 2;
    int t = mpfr_set_q(b.mid_, mid.get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(b.rad_, half.get_mpq_t(), MPFR_RNDU);
    b.bump_rad_ulp(t);
    return b;
}

Ball Ball::zero(mpfr_prec_t prec) { return Ball(prec); }

Ball Ball::operator+(const Ball& o) const {
    Ball r(std::max(prec_, o.prec_));
    int t = mpfr_add(r.mid_, mid_, o.mid_, MPFR_RNDN);
    mpfr_add(r.rad_, rad_, o.rad_, MPFR_RNDU);
    r.bump_rad_ulp(t);
    return r;
}

Ball Ball::operator-(const Ball& o) const {
    Ball r(std::max(prec_, o.prec_));
    int t = mpfr_sub(r.mid_, mid_, o.mid_, MPFR_RNDN);
    mpfr_add(r.rad_, rad_, o.rad_, MPFR_RNDU);
    r.bump_rad_ulp(t);
    return r;
}

Ball Ball::operator*(const Ball& o) const {
    Ball r(std::max(prec_, o.prec_));
    int t = mpfr_mul(r.mid_, mid_, o.mid_, MPFR_RNDN);
    // |x*y - mx*my| <= |mx|*ry + |my|*rx + rx*ry
    mpfr_t a, acc;
    mpfr_init2(a, 64);
    mpfr_init2(acc, 64);
    mpfr_abs(a, mid_, MPFR_RNDU);
    mpfr_mul(acc, a, o.rad_, MPFR_RNDU);
    mpfr_abs(a, o.mid_, MPFR_RNDU);
    mpfr_mul(a, a, rad_, MPFR_RNDU);
    mpfr_add(acc, acc, a, MPFR_RNDU);
    mpfr_mul(a, rad_, o.rad_, MPFR_RNDU);
    mpfr_add(acc, acc, a, MPFR_RNDU);
    mpfr_set(r.rad_, acc, MPFR_RNDU);
    mpfr_clear(a);
    mpfr_clear(acc);
    r.bump_rad_ulp(t);
    return r;
}

Ball Ball::operator/(const Ball& o) const {
    if (mpfr_cmpabs(o.mid_, o.rad_) <= 0)
        throw std::domain_error("ball division by interval containing zero");
    Ball r(std::max(prec_, o.prec_));
    int t = mpfr_div(r.mid_, mid_, o.mid_, MPFR_RNDN);
    // |x/y - mx/my| <= (|mx/my|*ry + rx) / (|my| - ry)
    mpfr_t num, den, q;
    mpfr_init2(num, 64);
    mpfr_init2(den, 64);
    mpfr_init2(q, 64);
    mpfr_abs(q, r.mid_, MPFR_RNDU);
    mpfr_mul(num, q, o.rad_, MPFR_RNDU);
    mpfr_add(num, num, rad_, MPFR_RNDU);
    mpfr_abs(den, o.mid_, MPFR_RNDD);
    mpfr_sub(den, den, o.rad_, MPFR_RNDD);
    mpfr_div(num, num, den, MPFR_RNDU);
    mpfr_set(r.rad_, num, MPFR_RNDU);
    mpfr_clear(num);
    mpfr_clear(den);
    mpfr_clear(q);
    r.bump_rad_ulp(t);
    return r;
}

Ball Ball::operator-() const {
    Ball r(*this);
    mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);
    return r;
}

Ball Ball::add_rat(const Rat& q) const { return *this + Ball::from_rat(q, prec_); }
Ball Ball::mul_rat(const Rat& q) const { return *this * Ball::from_rat(q, prec_); }

Ball Ball::abs() const {
    if (contains_zero()) {
        // hull of [0, max(|lo|,|hi|)]
        Rat lo = -lower_rat(), hi = upper_rat();
        return from_endpoints(Rat(0), lo > hi ? lo : hi, prec_);
    }
    Ball r(*this);
    mpfr_abs(r.mid_, r.mid_, MPFR_RNDN);
    return r;
}

namespace {

// Hull of a monotone function applied to the endpoint values.
Ball monotone_hull(const Ball& x, mpfr_prec_t prec,
                   int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
    mpfr_t lo, hi, flo, fhi;
    mpfr_init2(lo, prec + 32);
    mpfr_init2(hi, prec + 32);
    mpfr_init2(flo, prec + 32);
    mpfr_init2(fhi, prec + 32);
    mpfr_sub(lo, x.mid(), x.rad(), MPFR_RNDD);
    mpfr_add(hi, x.mid(), x.rad(), MPFR_RNDU);
    op(flo, lo, MPFR_RNDD);
    op(fhi, hi, MPFR_RNDU);
    Rat rlo = mpfr_zero_p(flo) ? Rat(0) : [&] { mpq_t q; mpq_init(q); mpfr_get_q(q, flo); Rat r(q); mpq_clear(q); return r; }();
    Rat rhi = mpfr_zero_p(fhi) ? Rat(0) : [&] { mpq_t q; mpq_init(q); mpfr_get_q(q, fhi); Rat r(q); mpq_clear(q); return r; }();
    mpfr_clear(lo);
    mpfr_clear(hi);
    mpfr_clear(flo);
    mpfr_clear(fhi);
    return Ball::from_endpoints(rlo, rhi, prec);
}

} // namespace

Ball Ball::sqrt() const {
    if (lower_rat() < 0) throw std::domain_error("sqrt of interval reaching below zero");
    return monotone_hull(*this, prec_, mpfr_sqrt);
}

Ball Ball::cbrt() const { return monotone_hull(*this, prec_, mpfr_cbrt); }

Ball Ball::log() const {
    if (lower_rat() <= 0) throw std::domain_error("log of interval reaching zero");
    return monotone_hull(*this, prec_, mpfr_log);
}

Ball Ball::pow_ui(unsigned long e) const {
    Ball r = Ball::exact_int(1, prec_);
    Ball base(*this);
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

bool Ball::contains_zero() const { return mpfr_cmpabs(mid_, rad_) <= 0; }

bool Ball::contains_rat(const Rat& q) const {
    return lower_rat() <= q && q <= upper_rat();
}

bool Ball::lt_rat(const Rat& q) const { return upper_rat() < q; }
bool Ball::gt_rat(const Rat& q) const { return lower_rat() > q; }

bool Ball::inside(const Ball& o) const {
    return o.lower_rat() <= lower_rat() && upper_rat() <= o.upper_rat();
}

bool Ball::rad_lt_pow2(long e) const {
    mpfr_t t;
    mpfr_init2(t, 32);
    mpfr_set_ui_2exp(t, 1, e, MPFR_RNDD);
    bool r = mpfr_cmp(rad_, t) < 0;
    mpfr_clear(t);
    return r;
}

Rat Ball::rad_upper_rat() const { return mpfr_to_rat(rad_); }
Rat Ball::mid_rat() const { return mpfr_to_rat(mid_); }
Rat Ball::lower_rat() const { return mpfr_to_rat(mid_) - mpfr_to_rat(rad_); }
Rat Ball::upper_rat() const { return mpfr_to_rat(mid_) + mpfr_to_rat(rad_); }

std::string Ball::mid_decimal(size_t digits) const {
    char fmt[32];
    std::snprintf(fmt, sizeof fmt, "%%.%zuRNe", digits);
    char* out = nullptr;
    mpfr_asprintf(&out, fmt, mid_);
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

std::string Ball::rad_decimal() const {
    char* out = nullptr;
    mpfr_asprintf(&out, "%.3RUe", rad_);
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

} // namespace mahler
