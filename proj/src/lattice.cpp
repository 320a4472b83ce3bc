#include "mahler/lattice.hpp"

#include <stdexcept>

namespace mahler {

namespace {

// Integral LLL state over row vectors, all arithmetic exact.
struct LllState {
    std::vector<std::vector<Int>> b;
    std::vector<Int> d;                  // d[0] = 1, d[i] = Gram det of b[0..i-1]
    std::vector<std::vector<Int>> lam;   // lam[i][j], j < i
    size_t n;

    explicit LllState(const IntMatrix& basis) {
        n = basis.rows();
        size_t m = basis.cols();
        b.assign(n, std::vector<Int>(m));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < m; ++j) b[i][j] = basis.at(i, j);
        d.assign(n + 1, Int(0));
        d[0] = 1;
        lam.assign(n, std::vector<Int>());
        for (size_t i = 0; i < n; ++i) lam[i].assign(i, Int(0));
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j <= i; ++j) {
                Int u = dot(b[i], b[j]);
                for (size_t k = 0; k < j; ++k) {
                    Int t = d[k + 1] * u - lam[i][k] * lam[j][k];
                    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), d[k].get_mpz_t());
                    u = t;
                }
                if (j < i)
                    lam[i][j] = u;
                else {
                    d[i + 1] = u;
                    if (u <= 0) throw std::domain_error("lll: dependent rows");
                }
            }
        }
    }

    static Int dot(const std::vector<Int>& x, const std::vector<Int>& y) {
        Int s(0);
        for (size_t k = 0; k < x.size(); ++k) s += x[k] * y[k];
        return s;
    }

    void size_reduce(size_t k, size_t l) {
        Int two_lam = 2 * lam[k][l];
        if (cmp(abs(two_lam), d[l + 1]) <= 0) return;
        // q = nearest integer to lam[k][l] / d[l+1]
        Int q = floor_div(two_lam + d[l + 1], 2 * d[l + 1]);
        for (size_t j = 0; j < b[k].size(); ++j) b[k][j] -= q * b[l][j];
        lam[k][l] -= q * d[l + 1];
        for (size_t j = 0; j < l; ++j) lam[k][j] -= q * lam[l][j];
    }

    // Lovasz test with delta = 99/100 for the pair (k, k-1).
    bool lovasz_ok(size_t k) const {
        const Int& lam_k = lam[k][k - 1];
        Int lhs = 100 * (d[k + 1] * d[k - 1] + lam_k * lam_k);
        Int rhs = 99 * d[k] * d[k];
        return lhs >= rhs;
    }

    void swap_step(size_t k) {
        std::swap(b[k], b[k - 1]);
        for (size_t j = 0; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
        Int lambda = lam[k][k - 1];
        Int bb = d[k - 1] * d[k + 1] + lambda * lambda;
        mpz_divexact(bb.get_mpz_t(), bb.get_mpz_t(), d[k].get_mpz_t());
        for (size_t i = k + 1; i < n; ++i) {
            Int t = lam[i][k];
            Int x = d[k + 1] * lam[i][k - 1] - lambda * t;
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d[k].get_mpz_t());
            lam[i][k] = x;
            Int y = bb * t + lambda * x;
            mpz_divexact(y.get_mpz_t(), y.get_mpz_t(), d[k + 1].get_mpz_t());
            lam[i][k - 1] = y;
        }
        d[k] = bb;
    }

    void run() {
        size_t k = 1;
        while (k < n) {
            size_reduce(k, k - 1);
            if (!lovasz_ok(k)) {
                swap_step(k);
                k = (k > 1) ? k - 1 : 1;
            } else {
                for (size_t l = k - 1; l-- > 0;) size_reduce(k, l);
                ++k;
            }
        }
    }

    IntMatrix to_matrix() const {
        size_t m = b.empty() ? 0 : b[0].size();
        IntMatrix out(n, m);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < m; ++j) out.at(i, j) = b[i][j];
        return out;
    }
};

} // namespace

IntMatrix lll_reduce(const IntMatrix& basis) {
    if (basis.rows() == 0) return basis;
    LllState st(basis);
    st.run();
    return st.to_matrix();
}

RelationCertificate find_integer_relation(const std::vector<Ball>& values, const Int& height_bound,
                                          long precision_bits) {
    size_t m = values.size();
    if (m == 0) throw std::domain_error("relation search over empty value list");
    if (height_bound < 1) throw std::domain_error("height bound must be positive");

    // Radii must sit far below the value scale, else verification is moot.
    Rat min_mid(0);
    bool have_mid = false;
    for (const auto& v : values) {
        Rat a = ::abs(v.mid_rat());
        if (a == 0) continue;
        if (!have_mid || a < min_mid) min_mid = a, have_mid = true;
    }
    if (!have_mid) throw std::domain_error("relation search needs a nonzero midpoint");
    Rat scale_limit = min_mid / rat_pow(Rat(2), 64);
    for (const auto& v : values)
        if (!(v.rad_upper_rat() < scale_limit))
            throw precision_error("ball radii too large relative to midpoints");

    long needed = static_cast<long>(m) * (static_cast<long>(mpz_sizeinbase(height_bound.get_mpz_t(), 2)) + 16);
    if (precision_bits < needed)
        throw precision_error("precision too low: need at least " + std::to_string(needed) + " bits");

    long shift = precision_bits - 32;
    IntMatrix basis(m, m + 1);
    for (size_t i = 0; i < m; ++i) {
        basis.at(i, i) = 1;
        mpfr_t t;
        mpfr_init2(t, mpfr_get_prec(values[i].mid()) + 64);
        mpfr_mul_2si(t, values[i].mid(), shift, MPFR_RNDN);
        Int z;
        mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDN);
        mpfr_clear(t);
        basis.at(i, m) = z;
    }

    IntMatrix red = lll_reduce(basis);
    for (size_t i = 0; i < red.rows(); ++i) {
        std::vector<Int> e(m);
        bool nonzero = false, small = true;
        for (size_t j = 0; j < m; ++j) {
            e[j] = red.at(i, j);
            if (e[j] != 0) nonzero = true;
            if (cmp(abs(e[j]), height_bound) > 0) small = false;
        }
        if (!nonzero || !small) continue;
        mpfr_prec_t prec = values[0].prec();
        Ball acc = Ball::zero(prec);
        for (size_t j = 0; j < m; ++j) acc = acc + values[j].mul_rat(Rat(e[j]));
        if (acc.contains_zero()) {
            size_t lead = 0;
            while (lead < m && e[lead] == 0) ++lead;
            if (lead < m && e[lead] < 0)
                for (auto& c : e) c = -c;
            return RelationCertificate{std::move(e), height_bound, precision_bits};
        }
    }
    return RelationCertificate{std::nullopt, height_bound, precision_bits};
}

} // namespace mahler
