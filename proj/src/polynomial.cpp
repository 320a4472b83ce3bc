#include "mahler/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "mahler/multiplicative.hpp"

namespace mahler {

QPoly QPoly::monomial(const Rat& c, size_t deg) {
    std::vector<Rat> v(deg + 1, Rat(0));
    v[deg] = c;
    return QPoly(std::move(v));
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& QPoly::coeff(size_t i) const {
    static const Rat zero(0);
    return i < c_.size() ? c_[i] : zero;
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
    return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const {
    std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
    return QPoly(std::move(v));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return QPoly(std::move(v));
}

QPoly QPoly::operator-() const {
    std::vector<Rat> v = c_;
    for (auto& x : v) x = -x;
    return QPoly(std::move(v));
}

QPoly QPoly::derivative() const {
    if (c_.size() <= 1) return QPoly();
    std::vector<Rat> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = Rat(static_cast<long>(i)) * c_[i];
    return QPoly(std::move(v));
}

Rat QPoly::eval(const Rat& x) const {
    Rat r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

Ball QPoly::eval_ball(const Ball& x) const {
    Ball r = Ball::zero(x.prec());
    for (size_t i = c_.size(); i-- > 0;) r = r * x + Ball::from_rat(c_[i], x.prec());
    return r;
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    std::vector<Rat> v = c_;
    Rat l = c_.back();
    for (auto& x : v) x /= l;
    return QPoly(std::move(v));
}

void QPoly::divrem(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rat> rem = a.c_;
    long db = b.degree();
    if (a.degree() < db) {
        q = QPoly();
        r = a;
        return;
    }
    std::vector<Rat> quo(a.degree() - db + 1, Rat(0));
    for (long i = a.degree(); i >= db; --i) {
        Rat f = rem[i] / b.c_.back();
        if (f == 0) continue;
        quo[i - db] = f;
        for (long j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c_[j];
    }
    q = QPoly(std::move(quo));
    r = QPoly(std::move(rem));
}

QPoly QPoly::divexact(const QPoly& b) const {
    QPoly q, r;
    divrem(*this, b, q, r);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

bool QPoly::integer_coeffs() const {
    for (const auto& x : c_)
        if (x.get_den() != 1) return false;
    return true;
}

std::string QPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += (c_[i] > 0) ? " + " : " - ";
        else if (c_[i] < 0) s += "-";
        Rat a = ::abs(c_[i]);
        bool unit = (a == 1) && i > 0;
        if (!unit) s += rat_str(a);
        if (i > 0) {
            if (!unit) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

QPoly gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a, y = b;
    while (!y.is_zero()) {
        QPoly q, r;
        QPoly::divrem(x, y, q, r);
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

QPoly squarefree_part(const QPoly& p) {
    if (p.degree() <= 0) return p;
    QPoly g = gcd(p, p.derivative());
    return p.divexact(g).monic();
}

QPoly char_poly(const IntMatrix& m) {
    if (!m.square()) throw std::domain_error("char poly of non-square matrix");
    size_t n = m.rows();
    // Faddeev-LeVerrier: all divisions are exact over Z.
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = 1;
    IntMatrix mk = IntMatrix::identity(n);
    for (size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        Int tr(0);
        for (size_t i = 0; i < n; ++i) tr += mk.at(i, i);
        Rat ck = Rat(tr) / Rat(static_cast<long>(k));
        c[n - k] = -ck;
        if (k < n) {
            Int d = -ck.get_num() / ck.get_den(); // ck is integral here
            if (Rat(d) != -ck) throw std::logic_error("char_poly: non-integral trace step");
            for (size_t i = 0; i < n; ++i) mk.at(i, i) += d;
        }
    }
    return QPoly(std::move(c));
}

namespace {

int sign_at(const QPoly& p, const Rat& x) { return sgn(p.eval(x)); }

std::vector<QPoly> sturm_chain(const QPoly& p) {
    std::vector<QPoly> s;
    s.push_back(p);
    s.push_back(p.derivative());
    while (!s.back().is_zero()) {
        QPoly q, r;
        QPoly::divrem(s[s.size() - 2], s.back(), q, r);
        s.push_back(-r);
    }
    s.pop_back();
    return s;
}

int sign_changes(const std::vector<QPoly>& chain, const Rat& x) {
    int count = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign_at(p, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

} // namespace

int sturm_count(const QPoly& p, const Rat& a, const Rat& b) {
    if (!(a < b)) return 0;
    auto chain = sturm_chain(p);
    return sign_changes(chain, a) - sign_changes(chain, b);
}

std::optional<RootInterval> isolate_largest_real_root(const QPoly& p) {
    if (p.degree() <= 0) return std::nullopt;
    // Cauchy bound on |roots|.
    Rat bound(1);
    for (long i = 0; i < p.degree(); ++i) {
        Rat t = ::abs(p.coeff(i) / p.lead());
        if (t > bound) bound = t;
    }
    bound += 1;
    Rat lo = -bound, hi = bound;
    if (sturm_count(p, lo, hi) == 0) return std::nullopt;
    // Move lo upward while keeping at least one root above it; stop once a
    // single root remains in (lo, hi].
    while (sturm_count(p, lo, hi) > 1) {
        Rat mid = (lo + hi) / 2;
        if (p.eval(mid) == 0) {
            // mid is itself a root; the largest root is >= mid
            if (sturm_count(p, mid, hi) >= 1)
                lo = mid;
            else
                return RootInterval{mid, mid};
        } else if (sturm_count(p, mid, hi) >= 1) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    RootInterval iv{lo, hi};
    if (p.eval(hi) == 0) return RootInterval{hi, hi};
    return iv;
}

RootInterval refine_root(const QPoly& p, RootInterval iv, long bits) {
    if (iv.exact()) return iv;
    Rat width_target = rat_pow(Rat(1, 2), bits);
    int s_hi = sign_at(p, iv.hi);
    if (s_hi == 0) return RootInterval{iv.hi, iv.hi};
    while (iv.hi - iv.lo > width_target) {
        Rat mid = (iv.lo + iv.hi) / 2;
        int s_mid = sign_at(p, mid);
        if (s_mid == 0) return RootInterval{mid, mid};
        if (s_mid == s_hi)
            iv.hi = mid;
        else
            iv.lo = mid;
    }
    return iv;
}

Ball root_ball(const RootInterval& iv, mpfr_prec_t prec) {
    return Ball::from_endpoints(iv.lo, iv.hi, prec);
}

QPoly cyclotomic(unsigned long m) {
    // x^m - 1 divided by all lower-order cyclotomics.
    std::vector<Rat> v(m + 1, Rat(0));
    v[0] = -1;
    v[m] = 1;
    QPoly p(std::move(v));
    for (unsigned long d = 1; d < m; ++d)
        if (m % d == 0) p = p.divexact(cyclotomic(d));
    return p;
}

namespace {

unsigned long euler_phi(unsigned long m) {
    unsigned long r = m;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        r -= r / p;
        while (m % p == 0) m /= p;
    }
    if (m > 1) r -= r / m;
    return r;
}

} // namespace

std::optional<unsigned long> root_of_unity_factor(const QPoly& p, size_t n) {
    for (unsigned long m = 1; m <= 2 * n * n + 4; ++m) {
        if (euler_phi(m) > n) continue;
        QPoly q, r;
        QPoly::divrem(p, cyclotomic(m), q, r);
        if (r.is_zero()) return m;
    }
    return std::nullopt;
}

namespace {

std::vector<Int> signed_divisors(const Int& n) {
    std::map<Int, long> f;
    std::vector<Int> divs{Int(1)};
    if (n != 0) {
        f = factor_rational(Rat(n));
        for (const auto& [p, e] : f) {
            size_t sz = divs.size();
            Int pk(1);
            for (long k = 1; k <= e; ++k) {
                pk *= p;
                for (size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
            }
        }
    }
    size_t sz = divs.size();
    for (size_t i = 0; i < sz; ++i) divs.push_back(-divs[i]);
    return divs;
}

// Strip monic linear factors (x - r) for integer roots r.
void strip_integer_roots(QPoly& p, std::vector<QPoly>& factors) {
    bool progress = true;
    while (progress && p.degree() >= 1) {
        progress = false;
        Int c0 = p.coeff(0).get_num();
        if (c0 == 0) {
            factors.push_back(QPoly::x());
            p = p.divexact(QPoly::x());
            progress = true;
            continue;
        }
        for (const Int& r : signed_divisors(c0)) {
            if (p.eval(Rat(r)) != 0) continue;
            QPoly lin({Rat(-r), Rat(1)});
            factors.push_back(lin);
            p = p.divexact(lin);
            progress = true;
            break;
        }
    }
}

// All monic integer divisors of degree k in {2, 3} by the Kronecker method:
// candidate values at 0, 1 (and -1 for cubics) must divide p there.
std::vector<QPoly> kronecker_candidates(const QPoly& p, int k) {
    std::vector<QPoly> out;
    Int p0 = p.eval(Rat(0)).get_num();
    Int p1 = p.eval(Rat(1)).get_num();
    Int pm1 = p.eval(Rat(-1)).get_num();
    if (p0 == 0 || p1 == 0 || pm1 == 0) return out; // roots stripped earlier
    auto d0 = signed_divisors(p0);
    auto d1 = signed_divisors(p1);
    if (k == 2) {
        for (const Int& c : d0)
            for (const Int& g1 : d1) {
                // g = x^2 + b x + c with g(1) = 1 + b + c = g1
                Int b = g1 - 1 - c;
                out.push_back(QPoly({Rat(c), Rat(b), Rat(1)}));
            }
    } else {
        auto dm1 = signed_divisors(pm1);
        for (const Int& e : d0)
            for (const Int& g1 : d1)
                for (const Int& gm1 : dm1) {
                    // g = x^3 + b x^2 + c x + e; g(1) = 1+b+c+e, g(-1) = -1+b-c+e
                    Int twob = g1 + gm1 - 2 * e;
                    if (mpz_odd_p(twob.get_mpz_t())) continue;
                    Int b = twob / 2;
                    Int c = g1 - 1 - b - e;
                    out.push_back(QPoly({Rat(e), Rat(c), Rat(b), Rat(1)}));
                }
    }
    return out;
}

} // namespace

std::vector<QPoly> factor_squarefree_integer(const QPoly& p) {
    if (!p.integer_coeffs() || p.is_zero())
        throw std::domain_error("factorization needs a nonzero integer polynomial");
    QPoly work = p.monic();
    if (!work.integer_coeffs())
        throw std::domain_error("factorization needs a monic-able integer polynomial");
    std::vector<QPoly> factors;
    strip_integer_roots(work, factors);

    for (int k = 2; k <= 3; ++k) {
        bool progress = true;
        while (progress && work.degree() >= 2 * k) {
            progress = false;
            for (const QPoly& cand : kronecker_candidates(work, k)) {
                QPoly q, r;
                QPoly::divrem(work, cand, q, r);
                if (!r.is_zero() || !q.integer_coeffs()) continue;
                // cand might itself be reducible only via integer roots,
                // which were already stripped; for k = 3 check quadratics.
                factors.push_back(cand);
                work = q;
                strip_integer_roots(work, factors);
                progress = true;
                break;
            }
        }
    }
    if (work.degree() > 7)
        throw std::domain_error("factorization degree beyond supported range");
    if (work.degree() >= 1) factors.push_back(work);
    std::sort(factors.begin(), factors.end(), [](const QPoly& a, const QPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (long i = a.degree(); i >= 0; --i)
            if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
        return false;
    });
    return factors;
}

QPoly minimal_polynomial_of_root(const QPoly& squarefree, const RootInterval& iv) {
    auto factors = factor_squarefree_integer(squarefree);
    if (iv.exact()) {
        for (const auto& f : factors)
            if (f.eval(iv.lo) == 0) return f;
        throw std::logic_error("no factor vanishes at the exact root");
    }
    for (const auto& f : factors)
        if (sturm_count(f, iv.lo, iv.hi) >= 1) return f;
    throw std::logic_error("no factor has a root in the isolating interval");
}

QPoly power_roots_poly(const QPoly& monic_int, unsigned long a) {
    if (!monic_int.integer_coeffs() || monic_int.lead() != 1)
        throw std::domain_error("power_roots_poly needs a monic integer polynomial");
    long d = monic_int.degree();
    if (d <= 0) throw std::domain_error("power_roots_poly needs positive degree");
    // Companion matrix power: char poly of C^a has roots r^a.
    IntMatrix c(d, d);
    for (long j = 0; j + 1 < d; ++j) c.at(j + 1, j) = 1;
    for (long i = 0; i < d; ++i) c.at(i, d - 1) = -monic_int.coeff(i).get_num();
    return char_poly(c.pow(a));
}

bool equal_algebraic(const QPoly& p1, RootInterval i1, const QPoly& p2, RootInterval i2) {
    auto shrink = [](const QPoly& p, RootInterval& iv) {
        Rat mid = (iv.lo + iv.hi) / 2;
        if (p.eval(mid) == 0)
            iv = RootInterval{mid, mid};
        else if (sturm_count(p, iv.lo, mid) >= 1)
            iv.hi = mid;
        else
            iv.lo = mid;
    };
    QPoly g = gcd(p1, p2);
    for (int iter = 0; iter < 100000; ++iter) {
        if (i1.exact() && i2.exact()) return i1.lo == i2.lo;
        if (i1.exact())
            return p2.eval(i1.lo) == 0 && i2.lo < i1.lo && i1.lo <= i2.hi;
        if (i2.exact())
            return p1.eval(i2.lo) == 0 && i1.lo < i2.lo && i2.lo <= i1.hi;
        // Roots live in half-open intervals, so touching at an endpoint
        // still separates them.
        if (i1.hi <= i2.lo || i2.hi <= i1.lo) return false;
        if (g.degree() <= 0) return false;
        if (sturm_count(g, i1.lo, i1.hi) == 0 || sturm_count(g, i2.lo, i2.hi) == 0) return false;
        Rat lo = std::min(i1.lo, i2.lo), hi = std::max(i1.hi, i2.hi);
        if (sturm_count(g, lo, hi) == 1) return true;
        shrink(p1, i1);
        shrink(p2, i2);
    }
    throw std::logic_error("equal_algebraic failed to converge");
}

} // namespace mahler
