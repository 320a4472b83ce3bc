#include "mahler/multiplicative.hpp"

#include <set>
#include <stdexcept>

namespace mahler {

namespace {

void factor_int(Int n, std::map<Int, long>& out, int dir) {
    if (n < 0) n = -n;
    if (n <= 1) return;
    // Trial division, then Pollard rho for what survives.
    for (Int p(2); p * p <= n && p < 100000; p = (p == 2 ? Int(3) : Int(p + 2))) {
        while (n % p == 0) {
            out[p] += dir;
            n /= p;
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        out[n] += dir;
        return;
    }
    // Pollard rho with deterministic parameters.
    Int d = n;
    for (unsigned long c = 1; d == n || d == 1; ++c) {
        Int x(2), y(2);
        d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Int t;
            mpz_gcd(t.get_mpz_t(), Int(x - y).get_mpz_t(), n.get_mpz_t());
            d = t;
        }
    }
    factor_int(d, out, dir);
    factor_int(n / d, out, dir);
}

} // namespace

std::map<Int, long> factor_rational(const Rat& q) {
    if (q == 0) throw std::domain_error("factorization of zero");
    std::map<Int, long> out;
    factor_int(q.get_num(), out, +1);
    factor_int(q.get_den(), out, -1);
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

namespace {

// Rows = inputs, columns = primes appearing anywhere, entries = exponents.
IntMatrix exponent_matrix(const std::vector<Rat>& values, std::vector<Int>& primes_out) {
    std::vector<std::map<Int, long>> fac;
    std::set<Int> primes;
    for (const auto& v : values) {
        fac.push_back(factor_rational(v));
        for (const auto& [p, e] : fac.back()) primes.insert(p);
    }
    primes_out.assign(primes.begin(), primes.end());
    IntMatrix m(values.size(), primes_out.size());
    for (size_t i = 0; i < values.size(); ++i)
        for (size_t j = 0; j < primes_out.size(); ++j) {
            auto it = fac[i].find(primes_out[j]);
            if (it != fac[i].end()) m.at(i, j) = it->second;
        }
    return m;
}

Rat power_product(const std::vector<Rat>& values, const std::vector<Int>& e) {
    Rat r(1);
    for (size_t i = 0; i < values.size(); ++i) {
        if (e[i] == 0) continue;
        if (!e[i].fits_slong_p()) throw std::domain_error("exponent too large to verify");
        r *= rat_pow(values[i], e[i].get_si());
    }
    return r;
}

} // namespace

MultIndepResult mult_indep(const std::vector<Rat>& values) {
    for (const auto& v : values)
        if (v == 0) throw std::domain_error("multiplicative independence of zero");
    if (values.empty()) return {true, {}};

    std::vector<Int> primes;
    IntMatrix m = exponent_matrix(values, primes);
    IntMatrix ker = left_kernel(m);
    if (ker.rows() == 0) return {true, {}};

    // A kernel vector kills the absolute values; signs must also cancel.
    // Odd sign parity means the product is -1; doubling or summing two odd
    // rows lands back on +1.
    auto parity_odd = [&](size_t row) {
        Int s(0);
        for (size_t i = 0; i < values.size(); ++i)
            if (values[i] < 0) s += ker.at(row, i);
        return mpz_odd_p(s.get_mpz_t()) != 0;
    };
    std::vector<Int> witness(values.size());
    size_t first_odd = ker.rows();
    bool have = false;
    for (size_t r = 0; r < ker.rows() && !have; ++r) {
        if (parity_odd(r)) {
            if (first_odd == ker.rows())
                first_odd = r;
            else {
                for (size_t i = 0; i < values.size(); ++i)
                    witness[i] = ker.at(first_odd, i) + ker.at(r, i);
                have = true;
            }
            continue;
        }
        for (size_t i = 0; i < values.size(); ++i) witness[i] = ker.at(r, i);
        have = true;
    }
    if (!have) {
        for (size_t i = 0; i < values.size(); ++i) witness[i] = 2 * ker.at(first_odd, i);
    }

    size_t lead = 0;
    while (lead < witness.size() && witness[lead] == 0) ++lead;
    if (lead < witness.size() && witness[lead] < 0)
        for (auto& w : witness) w = -w;
    if (power_product(values, witness) != 1)
        throw std::logic_error("mult_indep: witness failed exact verification");
    return {false, witness};
}

Rat ExponentDecomposition::reconstruct(size_t i) const {
    Rat r(signs[i]);
    for (size_t j = 0; j < base.size(); ++j) {
        const Int& e = exponents.at(i, j);
        if (e == 0) continue;
        if (!e.fits_slong_p()) throw std::domain_error("exponent too large");
        r *= rat_pow(base[j], e.get_si());
    }
    return r;
}

ExponentDecomposition lvdp_decompose(const std::vector<Rat>& points) {
    for (const auto& p : points)
        if (p == 0) throw std::domain_error("decomposition of zero");

    ExponentDecomposition d;
    d.signs.reserve(points.size());
    for (const auto& p : points) d.signs.push_back(p < 0 ? -1 : +1);

    std::vector<Int> primes;
    IntMatrix m = exponent_matrix(points, primes);
    IntMatrix basis = row_lattice_basis(m);
    size_t s = basis.rows();

    // Solve row_i = sum_j E_ij * basis_j by echelon back-substitution.
    std::vector<size_t> pivot_col(s);
    for (size_t j = 0, col = 0; j < s; ++j) {
        while (basis.at(j, col) == 0) ++col;
        pivot_col[j] = col;
    }
    IntMatrix expo(points.size(), s);
    for (size_t i = 0; i < points.size(); ++i) {
        std::vector<Int> residue(m.cols());
        for (size_t c = 0; c < m.cols(); ++c) residue[c] = m.at(i, c);
        for (size_t j = 0; j < s; ++j) {
            Int q = residue[pivot_col[j]] / basis.at(j, pivot_col[j]);
            if (q * basis.at(j, pivot_col[j]) != residue[pivot_col[j]])
                throw std::logic_error("lvdp: row not in its own lattice");
            expo.at(i, j) = q;
            for (size_t c = 0; c < m.cols(); ++c) residue[c] -= q * basis.at(j, c);
        }
        for (const auto& r : residue)
            if (r != 0) throw std::logic_error("lvdp: nonzero residue");
    }

    // Orient each base element so the first nonzero exponent using it is
    // positive; this reproduces 1/2, 1/3 rather than 2, 3 for unit fractions.
    for (size_t j = 0; j < s; ++j) {
        for (size_t i = 0; i < points.size(); ++i) {
            if (expo.at(i, j) == 0) continue;
            if (expo.at(i, j) < 0) {
                for (size_t c = 0; c < m.cols(); ++c) basis.at(j, c) = -basis.at(j, c);
                for (size_t i2 = 0; i2 < points.size(); ++i2) expo.at(i2, j) = -expo.at(i2, j);
            }
            break;
        }
    }

    d.base.reserve(s);
    for (size_t j = 0; j < s; ++j) {
        Rat b(1);
        for (size_t c = 0; c < m.cols(); ++c) {
            const Int& e = basis.at(j, c);
            if (e == 0) continue;
            b *= rat_pow(Rat(primes[c]), e.get_si());
        }
        d.base.push_back(b);
    }
    d.exponents = expo;

    for (size_t i = 0; i < points.size(); ++i)
        if (d.reconstruct(i) != points[i]) throw std::logic_error("lvdp: reconstruction failed");
    return d;
}

} // namespace mahler
