#include "mahler/words.hpp"

#include <stdexcept>

namespace mahler {

void Dfao::validate() const {
    if (base < 2) throw std::domain_error("dfao base must be >= 2");
    if (states == 0 || initial >= states) throw std::domain_error("dfao state set malformed");
    if (delta.size() != states || output.size() != states)
        throw std::domain_error("dfao tables must cover all states");
    for (const auto& row : delta) {
        if (row.size() != static_cast<size_t>(base)) throw std::domain_error("dfao transition not total");
        for (size_t s : row)
            if (s >= states) throw std::domain_error("dfao transition out of range");
    }
}

Rat Dfao::term(unsigned long n) const {
    // n = 0 reads the empty word.
    std::vector<int> digits;
    while (n > 0) {
        digits.push_back(static_cast<int>(n % static_cast<unsigned long>(base)));
        n /= static_cast<unsigned long>(base);
    }
    size_t s = initial;
    for (size_t i = digits.size(); i-- > 0;) s = delta[s][static_cast<size_t>(digits[i])];
    return output[s];
}

void Morphism::validate() const {
    size_t d = alphabet.size();
    if (d == 0) throw std::domain_error("empty alphabet");
    if (images.size() != d) throw std::domain_error("image count mismatch");
    if (!coding.empty() && coding.size() != d) throw std::domain_error("coding size mismatch");
    if (seed >= d) throw std::domain_error("seed letter out of range");
    for (const auto& w : images) {
        if (w.empty()) throw std::domain_error("empty image word");
        for (size_t a : w)
            if (a >= d) throw std::domain_error("image letter out of range");
    }
}

bool Morphism::prolongable() const {
    validate();
    if (images[seed].front() != seed) return false;
    // Some letter reachable from the seed must have a growing image.
    std::vector<bool> reach(alphabet.size(), false);
    std::vector<size_t> stack{seed};
    reach[seed] = true;
    while (!stack.empty()) {
        size_t a = stack.back();
        stack.pop_back();
        for (size_t b : images[a])
            if (!reach[b]) {
                reach[b] = true;
                stack.push_back(b);
            }
    }
    for (size_t a = 0; a < alphabet.size(); ++a)
        if (reach[a] && images[a].size() >= 2) return true;
    return false;
}

std::vector<size_t> Morphism::prefix(size_t length) const {
    if (!prolongable()) throw std::domain_error("morphism is not prolongable on its seed");
    if (length == 0) return {};
    // The fixed point is phi(w_0) phi(w_1) ... ; seed it with phi(seed),
    // which starts with the seed and has length >= 2 by prolongability.
    std::vector<size_t> w = images[seed];
    for (size_t i = 1; w.size() < length; ++i)
        for (size_t b : images[w[i]]) w.push_back(b);
    w.resize(length);
    return w;
}

std::vector<Rat> Morphism::coded_prefix(size_t length) const {
    if (coding.empty()) throw std::domain_error("morphism has no coding");
    auto w = prefix(length);
    std::vector<Rat> out;
    out.reserve(w.size());
    for (size_t a : w) out.push_back(coding[a]);
    return out;
}

IntMatrix incidence_matrix(const Morphism& m) {
    m.validate();
    size_t d = m.alphabet.size();
    IntMatrix mat(d, d);
    for (size_t j = 0; j < d; ++j)
        for (size_t a : m.images[j]) mat.at(a, j) += 1;
    return mat;
}

CobhamSystem cobham_construct(const Morphism& m) {
    if (!m.prolongable()) throw std::domain_error("cobham construction needs a prolongable morphism");
    if (m.coding.empty()) throw std::domain_error("cobham construction needs a coding");
    size_t d = m.alphabet.size();
    FieldPtr q = NumberField::rationals();

    CobhamSystem sys;
    sys.morphism = m;
    sys.weights = m.coding;
    sys.t = incidence_matrix(m).transpose();
    sys.a = RFMatrix(d, d, d, q);
    for (size_t b = 0; b < d; ++b) {
        std::vector<long> psi(d, 0); // abelianization of the prefix of phi(b)
        for (size_t k = 0; k < m.images[b].size(); ++k) {
            size_t letter = m.images[b][k];
            Exponent e(psi.begin(), psi.end());
            Poly mono = poly_monomial(d, q, NFElem::from_rat(q, Rat(1)), e);
            sys.a.at(letter, b) = sys.a.at(letter, b) + RationalFunction::from_poly(mono);
            ++psi[letter];
        }
    }
    return sys;
}

PuiseuxSeries CobhamSystem::component_series(size_t letter, long order) const {
    return all_components(order)[letter];
}

std::vector<PuiseuxSeries> CobhamSystem::all_components(long order) const {
    size_t d = letters();
    FieldPtr q = NumberField::rationals();
    std::vector<PuiseuxSeries> f;
    f.reserve(d);
    for (size_t a = 0; a < d; ++a) f.push_back(PuiseuxSeries::zero(d, 1, q, order));
    // Position n of the fixed point contributes z^psi(prefix_n) to f_{w_n};
    // the total degree of that monomial is exactly n.
    auto w = morphism.prefix(static_cast<size_t>(order) + 1);
    std::vector<long> psi(d, 0);
    for (size_t n = 0; n < w.size(); ++n) {
        Exponent e(psi.begin(), psi.end());
        f[w[n]].set_coeff(e, NFElem::from_rat(q, Rat(1)));
        ++psi[w[n]];
    }
    return f;
}

std::optional<SeriesMismatch> CobhamSystem::verify_functional_equation(long order) const {
    auto f = all_components(order);
    size_t d = letters();
    for (size_t i = 0; i < d; ++i) {
        PuiseuxSeries rhs = PuiseuxSeries::zero(d, 1, f[i].field(), order);
        for (size_t j = 0; j < d; ++j) {
            if (a.at(i, j).is_zero()) continue;
            if (!a.at(i, j).is_polynomial())
                throw std::logic_error("cobham coefficients must be polynomials");
            rhs = rhs + (a.at(i, j).num() * substitute_monomial(f[j], t)).truncated(order);
        }
        auto mis = verify_identity(f[i], rhs, order);
        if (mis) return mis;
    }
    return std::nullopt;
}

} // namespace mahler
