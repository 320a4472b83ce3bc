#include "mahler/int_matrix.hpp"

#include <stdexcept>

namespace mahler {

IntMatrix::IntMatrix(size_t rows, size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_) throw std::domain_error("entry count mismatch");
}

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::scalar(size_t n, const Int& c) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = c;
    return m;
}

Int& IntMatrix::at(size_t i, size_t j) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
    return e_[i * cols_ + j];
}

const Int& IntMatrix::at(size_t i, size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
    return e_[i * cols_ + j];
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix m(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::domain_error("matrix product shape mismatch");
    IntMatrix m(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j) m.at(i, j) += at(i, k) * o.at(k, j);
        }
    return m;
}

IntMatrix IntMatrix::pow(unsigned long e) const {
    if (!square()) throw std::domain_error("power of non-square matrix");
    IntMatrix r = identity(rows_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

bool IntMatrix::nonnegative() const {
    for (const auto& x : e_)
        if (x < 0) return false;
    return true;
}

Int IntMatrix::det() const {
    if (!square()) throw std::domain_error("determinant of non-square matrix");
    size_t n = rows_;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    std::vector<Int> a = e_;
    auto idx = [n](size_t i, size_t j) { return i * n + j; };
    Int prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[idx(k, k)] == 0) {
            size_t p = k + 1;
            while (p < n && a[idx(p, k)] == 0) ++p;
            if (p == n) return 0;
            for (size_t j = 0; j < n; ++j) std::swap(a[idx(k, j)], a[idx(p, j)]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Int t = a[idx(i, j)] * a[idx(k, k)] - a[idx(i, k)] * a[idx(k, j)];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[idx(i, j)] = t;
            }
        prev = a[idx(k, k)];
    }
    Int d = a[idx(n - 1, n - 1)];
    return sign > 0 ? d : Int(-d);
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    if (v.size() != cols_) throw std::domain_error("vector length mismatch");
    std::vector<Int> r(rows_, Int(0));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

std::vector<Rat> IntMatrix::apply(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw std::domain_error("vector length mismatch");
    std::vector<Rat> r(rows_, Rat(0));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r[i] += Rat(at(i, j)) * v[j];
    return r;
}

Int IntMatrix::row_sum(size_t i) const {
    Int s(0);
    for (size_t j = 0; j < cols_; ++j) s += at(i, j);
    return s;
}

Int IntMatrix::col_sum(size_t j) const {
    Int s(0);
    for (size_t i = 0; i < rows_; ++i) s += at(i, j);
    return s;
}

namespace {

struct SnfWork {
    IntMatrix a, u, v;

    void row_swap(size_t i, size_t j) {
        for (size_t k = 0; k < a.cols(); ++k) std::swap(a.at(i, k), a.at(j, k));
        for (size_t k = 0; k < u.cols(); ++k) std::swap(u.at(i, k), u.at(j, k));
    }
    void col_swap(size_t i, size_t j) {
        for (size_t k = 0; k < a.rows(); ++k) std::swap(a.at(k, i), a.at(k, j));
        for (size_t k = 0; k < v.rows(); ++k) std::swap(v.at(k, i), v.at(k, j));
    }
    void row_addmul(size_t dst, size_t src, const Int& c) {
        for (size_t k = 0; k < a.cols(); ++k) a.at(dst, k) += c * a.at(src, k);
        for (size_t k = 0; k < u.cols(); ++k) u.at(dst, k) += c * u.at(src, k);
    }
    void col_addmul(size_t dst, size_t src, const Int& c) {
        for (size_t k = 0; k < a.rows(); ++k) a.at(k, dst) += c * a.at(k, src);
        for (size_t k = 0; k < v.rows(); ++k) v.at(k, dst) += c * v.at(k, src);
    }
    void row_negate(size_t i) {
        for (size_t k = 0; k < a.cols(); ++k) a.at(i, k) = -a.at(i, k);
        for (size_t k = 0; k < u.cols(); ++k) u.at(i, k) = -u.at(i, k);
    }
};

} // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
    SnfWork w{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
    size_t m = a.rows(), n = a.cols(), r = std::min(m, n);

    for (size_t t = 0; t < r; ++t) {
        // Find a nonzero pivot of minimal absolute value in the trailing block.
        size_t pi = t, pj = t;
        bool found = false;
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < n; ++j) {
                const Int& x = w.a.at(i, j);
                if (x == 0) continue;
                if (!found || cmp(abs(x), abs(w.a.at(pi, pj))) < 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        if (pi != t) w.row_swap(t, pi);
        if (pj != t) w.col_swap(t, pj);

        for (;;) {
            bool clean = true;
            for (size_t i = t + 1; i < m; ++i) {
                if (w.a.at(i, t) == 0) continue;
                Int q = floor_div(w.a.at(i, t), w.a.at(t, t));
                w.row_addmul(i, t, -q);
                if (w.a.at(i, t) != 0) {
                    w.row_swap(t, i); // remainder is smaller, continue reducing
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < n; ++j) {
                if (w.a.at(t, j) == 0) continue;
                Int q = floor_div(w.a.at(t, j), w.a.at(t, t));
                w.col_addmul(j, t, -q);
                if (w.a.at(t, j) != 0) {
                    w.col_swap(t, j);
                    clean = false;
                }
            }
            if (clean) break;
        }
        if (w.a.at(t, t) < 0) w.row_negate(t);
    }

    // Enforce the divisibility chain d_t | d_{t+1}.
    for (size_t t = 0; t + 1 < r; ++t) {
        for (size_t s = t + 1; s < r; ++s) {
            if (w.a.at(s, s) == 0 || w.a.at(t, t) == 0) continue;
            if (w.a.at(s, s) % w.a.at(t, t) == 0) continue;
            // Fold row s into row t, then rediagonalize the 2x2 block.
            w.col_addmul(t, s, Int(1));
            for (;;) {
                Int q = floor_div(w.a.at(s, t), w.a.at(t, t));
                w.row_addmul(s, t, -q);
                if (w.a.at(s, t) == 0) break;
                w.row_swap(t, s);
            }
            Int q = floor_div(w.a.at(t, s), w.a.at(t, t));
            w.col_addmul(s, t, -q);
            if (w.a.at(t, s) != 0) throw std::logic_error("snf: block not cleared");
            if (w.a.at(t, t) < 0) w.row_negate(t);
            if (w.a.at(s, s) < 0) {
                for (size_t k = 0; k < m; ++k) w.a.at(k, s) = -w.a.at(k, s);
                for (size_t k = 0; k < n; ++k) w.v.at(k, s) = -w.v.at(k, s);
            }
            s = t; // recheck the chain from here
        }
    }

    return SmithForm{w.u, w.a, w.v};
}

IntMatrix row_lattice_basis(const IntMatrix& a) {
    // Row-style Hermite reduction (no pivot normalization beyond sign).
    IntMatrix w = a;
    size_t m = w.rows(), n = w.cols();
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        // reduce all entries of this column below `row` to zero via gcd steps
        for (;;) {
            size_t p = m;
            for (size_t i = row; i < m; ++i)
                if (w.at(i, col) != 0 && (p == m || cmp(abs(w.at(i, col)), abs(w.at(p, col))) < 0)) p = i;
            if (p == m) break; // column is zero from `row` down
            if (p != row)
                for (size_t k = 0; k < n; ++k) std::swap(w.at(row, k), w.at(p, k));
            bool cleared = true;
            for (size_t i = row + 1; i < m; ++i) {
                if (w.at(i, col) == 0) continue;
                Int q = floor_div(w.at(i, col), w.at(row, col));
                for (size_t k = 0; k < n; ++k) w.at(i, k) -= q * w.at(row, k);
                if (w.at(i, col) != 0) cleared = false;
            }
            if (cleared) {
                if (w.at(row, col) < 0)
                    for (size_t k = 0; k < n; ++k) w.at(row, k) = -w.at(row, k);
                ++row;
                break;
            }
        }
    }
    // Reduce entries above each pivot for a canonical Hermite form.
    for (size_t r = 0; r < row; ++r) {
        size_t c = 0;
        while (c < n && w.at(r, c) == 0) ++c;
        for (size_t i = 0; i < r; ++i) {
            Int q = floor_div(w.at(i, c), w.at(r, c));
            if (q == 0) continue;
            for (size_t k = 0; k < n; ++k) w.at(i, k) -= q * w.at(r, k);
        }
    }
    IntMatrix basis(row, n);
    for (size_t i = 0; i < row; ++i)
        for (size_t j = 0; j < n; ++j) basis.at(i, j) = w.at(i, j);
    return basis;
}

IntMatrix left_kernel(const IntMatrix& a) {
    SmithForm s = smith_normal_form(a);
    size_t m = a.rows(), r = std::min(a.rows(), a.cols());
    std::vector<size_t> zero_rows;
    for (size_t i = 0; i < m; ++i) {
        bool z = i >= r || s.d.at(i, i) == 0;
        if (z) zero_rows.push_back(i);
    }
    IntMatrix k(zero_rows.size(), m);
    for (size_t i = 0; i < zero_rows.size(); ++i)
        for (size_t j = 0; j < m; ++j) k.at(i, j) = s.u.at(zero_rows[i], j);
    return k;
}

} // namespace mahler
