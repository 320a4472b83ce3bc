#pragma once

#include <cstddef>
#include <vector>

#include "mahler/rational.hpp"

namespace mahler {

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}
    IntMatrix(size_t rows, size_t cols, std::vector<Int> entries);
    static IntMatrix identity(size_t n);
    static IntMatrix scalar(size_t n, const Int& c);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Int& at(size_t i, size_t j);
    const Int& at(size_t i, size_t j) const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix pow(unsigned long e) const;
    bool operator==(const IntMatrix& o) const = default;

    bool nonnegative() const;
    Int det() const; // exact, fraction-free elimination

    std::vector<Int> apply(const std::vector<Int>& v) const;        // M * v
    std::vector<Rat> apply(const std::vector<Rat>& v) const;

    // Row/column sums (used for degree bookkeeping of monomial substitutions).
    Int row_sum(size_t i) const;
    Int col_sum(size_t j) const;

private:
    size_t rows_, cols_;
    std::vector<Int> e_;
};

struct SmithForm {
    IntMatrix u, d, v; // u*a*v = d, u and v unimodular, d diagonal with d1 | d2 | ...
};

SmithForm smith_normal_form(const IntMatrix& a);

// Basis of the lattice spanned by the rows of a (row-style Hermite form with
// positive pivots, zero rows dropped).
IntMatrix row_lattice_basis(const IntMatrix& a);

// Basis of the left kernel {e : e*a = 0}, one row per basis vector.
IntMatrix left_kernel(const IntMatrix& a);

} // namespace mahler
