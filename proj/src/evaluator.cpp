#include "mahler/evaluator.hpp"

#include <stdexcept>

namespace mahler {

CoefficientStream::CoefficientStream(Source s, std::function<Rat(unsigned long)> f, Rat c, long d,
                                     std::string n)
    : source_(s), fn_(std::move(f)), growth_c_(std::move(c)), growth_d_(d), name_(std::move(n)) {
    if (growth_c_ <= 0 || growth_d_ < 0 || growth_d_ > 2)
        throw std::domain_error("growth model out of supported range");
}

CoefficientStream CoefficientStream::from_dfao(const Dfao& d, std::string name) {
    d.validate();
    Rat c(0);
    for (const auto& o : d.output) {
        Rat a = ::abs(o);
        if (a > c) c = a;
    }
    if (c == 0) c = 1;
    return CoefficientStream(Source::Dfao, [d](unsigned long n) { return d.term(n); }, c, 0,
                             std::move(name));
}

CoefficientStream CoefficientStream::from_morphism(const Morphism& m, std::string name) {
    if (!m.prolongable()) throw std::domain_error("stream needs a prolongable morphism");
    if (m.coding.empty()) throw std::domain_error("stream needs a coded morphism");
    Rat c(0);
    for (const auto& o : m.coding) {
        Rat a = ::abs(o);
        if (a > c) c = a;
    }
    if (c == 0) c = 1;
    auto cache = std::make_shared<std::vector<Rat>>();
    auto fetch = [m, cache](unsigned long n) {
        if (n >= cache->size()) {
            size_t want = std::max<size_t>(2 * (n + 1), 1024);
            *cache = m.coded_prefix(want);
        }
        return (*cache)[n];
    };
    return CoefficientStream(Source::Morphic, fetch, c, 0, std::move(name));
}

CoefficientStream CoefficientStream::hecke_mahler(const QuadraticIrrational& w, std::string name) {
    // |floor(n w)| <= n |w| + 1 <= C (n+1) with C = floor(|w|) + 2
    Int t;
    mpz_sqrt(t.get_mpz_t(), w.d().get_mpz_t());
    Int c_bound = floor_div(abs(w.a()) + abs(w.b()) * (t + 1), w.c()) + 2;
    return CoefficientStream(Source::HeckeMahler,
                             [w](unsigned long n) { return Rat(w.floor_times(Int(n))); },
                             Rat(c_bound), 1, std::move(name));
}

CoefficientStream CoefficientStream::closed_form(std::function<Rat(unsigned long)> f, Rat growth_c,
                                                 long growth_d, std::string name) {
    return CoefficientStream(Source::ClosedForm, std::move(f), std::move(growth_c), growth_d,
                             std::move(name));
}

CoefficientStream CoefficientStream::derivative() const {
    auto base = fn_;
    return CoefficientStream(source_, [base](unsigned long n) -> Rat {
        return Rat(static_cast<long>(n + 1)) * base(n + 1);
    }, growth_c_ * 2, growth_d_ + 1, name_ + "'");
}

void CoefficientStream::verify_growth(unsigned long upto) const {
    for (unsigned long n = 0; n < upto; ++n) {
        Rat bound = growth_c_ * rat_pow(Rat(static_cast<long>(n + 1)), growth_d_);
        if (::abs(fn_(n)) > bound)
            throw std::logic_error("growth model violated at n = " + std::to_string(n) +
                                   " for stream " + name_);
    }
}

namespace {

// Upper bound for sum_{n > N} C (n+1)^d x^n with 0 < x < 1, exact rational.
Rat tail_bound_rat(const Rat& c, long d, const Rat& x, unsigned long n_last) {
    Rat m(static_cast<long>(n_last + 1)); // first omitted index
    Rat xm = rat_pow(x, static_cast<long>(n_last + 1));
    Rat one_minus = 1 - x;
    switch (d) {
        case 0:
            return c * xm / one_minus;
        case 1:
            // sum_{n>=m} (n+1) x^n <= (m+1) x^m / (1-x)^2
            return c * (m + 1) * xm / (one_minus * one_minus);
        case 2:
            // (n+1)^2 <= (m+1)^2 ((n-m)+1)^2 and sum (k+1)^2 x^k = (1+x)/(1-x)^3
            return c * (m + 1) * (m + 1) * xm * (1 + x) / (one_minus * one_minus * one_minus);
        default:
            throw std::domain_error("unsupported growth degree");
    }
}

CertifiedValue assemble_value(const Rat& partial, const Rat& tail, unsigned long terms, long p,
                              std::string provenance) {
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(p + 64);
    CertifiedValue out;
    out.value = Ball::from_endpoints(partial - tail, partial + tail, prec);
    out.terms_used = terms;
    out.tail_bound = tail;
    out.provenance = std::move(provenance);
    out.precision_bits = p;
    return out;
}

} // namespace

CertifiedValue eval_series(const CoefficientStream& s, const Rat& alpha, long p) {
    Rat x = ::abs(alpha);
    if (!(x < 1)) throw std::domain_error("evaluation point must satisfy |alpha| < 1");
    if (p < 8) throw std::domain_error("precision too small");
    if (alpha == 0) {
        CertifiedValue out;
        out.value = Ball::from_rat(s.term(0), static_cast<mpfr_prec_t>(p + 64));
        out.terms_used = 1;
        out.tail_bound = 0;
        out.provenance = s.name() + " @ 0";
        out.precision_bits = p;
        return out;
    }

    Rat target = make_rat(Int(1), int_pow(Int(2), static_cast<unsigned long>(p + 2)));
    unsigned long n = 16;
    while (tail_bound_rat(s.growth_c(), s.growth_d(), x, n) > target) {
        if (n > (1UL << 26)) throw precision_error("series converges too slowly at this point");
        n *= 2;
    }
    // shrink back down
    unsigned long lo = n / 2, hi = n;
    while (lo + 1 < hi) {
        unsigned long mid = lo + (hi - lo) / 2;
        if (tail_bound_rat(s.growth_c(), s.growth_d(), x, mid) > target)
            lo = mid;
        else
            hi = mid;
    }
    n = hi;

    // exact Horner over the collected coefficients
    Rat sum(0);
    for (unsigned long k = n + 1; k-- > 0;) sum = sum * alpha + s.term(k);
    Rat tail = tail_bound_rat(s.growth_c(), s.growth_d(), x, n);
    return assemble_value(sum, tail, n + 1, p, s.name() + " @ " + rat_str(alpha));
}

CertifiedValue eval_hecke_mahler(const QuadraticIrrational& w, const Rat& alpha, long p) {
    return eval_series(CoefficientStream::hecke_mahler(w, "hm(" + w.str() + ")"), alpha, p);
}

CertifiedValue eval_cobham_component(const CobhamSystem& sys, size_t letter,
                                     const std::vector<Rat>& point, long p) {
    if (letter >= sys.letters()) throw std::domain_error("letter out of range");
    if (point.size() != sys.letters()) throw std::domain_error("point arity mismatch");
    Rat r(0);
    for (const auto& c : point) {
        Rat a = ::abs(c);
        if (a > r) r = a;
    }
    if (!(r < 1)) throw std::domain_error("point must lie inside the open unit polydisk");

    // terms at position n have total degree n and coefficient 1
    Rat target = make_rat(Int(1), int_pow(Int(2), static_cast<unsigned long>(p + 2)));
    unsigned long n = 16;
    while (tail_bound_rat(Rat(1), 0, r, n) > target) {
        if (n > (1UL << 24)) throw precision_error("point too close to the boundary");
        n *= 2;
    }

    auto w = sys.morphism.prefix(n + 1);
    size_t d = sys.letters();
    std::vector<long> psi(d, 0);
    Rat sum(0);
    for (size_t k = 0; k < w.size(); ++k) {
        if (w[k] == letter) {
            Rat mono(1);
            for (size_t i = 0; i < d; ++i)
                if (psi[i] != 0) mono *= rat_pow(point[i], psi[i]);
            sum += mono;
        }
        ++psi[w[k]];
    }
    Rat tail = tail_bound_rat(Rat(1), 0, r, n);
    return assemble_value(sum, tail, n + 1, p,
                          sys.morphism.alphabet[letter] + "-component @ multivariate point");
}

std::vector<Ball> eval_residual(const MahlerSystem& s, const std::vector<Rat>& alpha,
                                const std::vector<Ball>& f_alpha,
                                const std::vector<Ball>& f_t_alpha) {
    size_t m = s.dim();
    if (f_alpha.size() != m || f_t_alpha.size() != m)
        throw std::domain_error("component count mismatch");
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            if (s.a.at(i, j).den_vanishes_at(alpha))
                throw std::domain_error("singular point: coefficient denominator vanishes");
    auto a_val = s.a.eval(alpha);
    std::vector<Ball> out;
    out.reserve(m);
    for (size_t i = 0; i < m; ++i) {
        Ball acc = f_alpha[i];
        for (size_t j = 0; j < m; ++j) {
            if (a_val[i][j] == 0) continue;
            acc = acc - f_t_alpha[j].mul_rat(a_val[i][j]);
        }
        out.push_back(acc);
    }
    return out;
}

Rat residual_max_radius(const std::vector<Ball>& residual) {
    Rat r(0);
    for (const auto& b : residual) {
        Rat x = b.rad_upper_rat();
        if (x > r) r = x;
    }
    return r;
}

} // namespace mahler
