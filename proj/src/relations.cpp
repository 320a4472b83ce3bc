#include "mahler/relations.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace mahler {

std::vector<std::vector<long>> monomials_up_to(size_t nvars, long max_degree) {
    std::vector<std::vector<long>> all;
    if (nvars == 0) return all;
    std::vector<long> cur(nvars, 0);
    std::function<void(size_t, long)> rec = [&](size_t var, long remaining) {
        if (var + 1 == nvars) {
            cur[var] = remaining;
            all.push_back(cur);
            cur[var] = 0;
            return;
        }
        for (long e = remaining; e >= 0; --e) {
            cur[var] = e;
            rec(var + 1, remaining - e);
        }
        cur[var] = 0;
    };
    for (long d = 0; d <= max_degree; ++d) rec(0, d);
    return all;
}

std::string HuntResult::polynomial_str() const {
    std::string s;
    for (const auto& t : polynomial) {
        bool neg = t.coeff < 0;
        Int a = abs(t.coeff);
        s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        std::string factors;
        for (size_t i = 0; i < t.exponents.size(); ++i) {
            if (!t.exponents[i]) continue;
            if (!factors.empty()) factors += "*";
            factors += "x" + std::to_string(i + 1);
            if (t.exponents[i] > 1) factors += "^" + std::to_string(t.exponents[i]);
        }
        if (factors.empty())
            s += a.get_str();
        else if (a == 1)
            s += factors;
        else
            s += a.get_str() + "*" + factors;
    }
    return s;
}

HuntResult hunt(const HuntRequest& r) {
    if (r.values.empty()) throw std::domain_error("hunt over empty value list");
    if (r.max_degree < 1) throw std::domain_error("degree bound must be >= 1");

    auto monomials = monomials_up_to(r.values.size(), r.max_degree);
    long needed = static_cast<long>(monomials.size()) *
                  (static_cast<long>(mpz_sizeinbase(r.height_bound.get_mpz_t(), 2)) + 16);
    if (r.precision_bits < needed)
        throw precision_error("hunt precision too low: need at least " + std::to_string(needed) +
                              " bits for " + std::to_string(monomials.size()) + " monomials");

    mpfr_prec_t prec = 0;
    for (const auto& v : r.values) prec = std::max(prec, v.value.prec());

    std::vector<Ball> mono_values;
    mono_values.reserve(monomials.size());
    for (const auto& e : monomials) {
        Ball acc = Ball::exact_int(1, prec);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            acc = acc * r.values[i].value.pow_ui(static_cast<unsigned long>(e[i]));
        }
        mono_values.push_back(acc);
    }

    RelationCertificate cert = find_integer_relation(mono_values, r.height_bound, r.precision_bits);

    HuntResult out;
    out.monomials = monomials;
    out.max_degree = r.max_degree;
    out.height_bound = r.height_bound;
    out.precision_bits = r.precision_bits;
    if (!cert.found()) return out;

    out.found = true;
    for (size_t k = 0; k < monomials.size(); ++k) {
        const Int& c = (*cert.coefficients)[k];
        if (c != 0) out.polynomial.push_back({c, monomials[k]});
    }
    // the combination was verified inside find_integer_relation; re-verify
    // end to end against the certified values
    Ball check = Ball::zero(prec);
    for (size_t k = 0; k < monomials.size(); ++k)
        check = check + mono_values[k].mul_rat(Rat((*cert.coefficients)[k]));
    if (!check.contains_zero()) throw std::logic_error("hunt: relation failed re-verification");
    return out;
}

} // namespace mahler
