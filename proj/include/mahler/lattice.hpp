#pragma once

#include <optional>

#include "mahler/ball.hpp"
#include "mahler/int_matrix.hpp"

namespace mahler {

// Exact integer LLL (de Weger variant) with Lovasz parameter 99/100.
// Rows are the basis vectors; throws std::domain_error on dependent rows.
IntMatrix lll_reduce(const IntMatrix& basis);

// Witness for a bounded integer relation among certified values: either an
// explicit coefficient vector whose ball combination contains zero, or a
// record that no relation of height <= H exists at precision p.
struct RelationCertificate {
    std::optional<std::vector<Int>> coefficients;
    Int height_bound;
    long precision_bits = 0;

    bool found() const { return coefficients.has_value(); }
};

// PSLQ-style detection: LLL on [I | round(2^(p-32) * mid_i)]. Deterministic
// for fixed inputs. Requires p >= m*(log2 H + 16) and radii below
// 2^-64 * min nonzero |midpoint|; throws precision_error / domain_error.
RelationCertificate find_integer_relation(const std::vector<Ball>& values, const Int& height_bound,
                                          long precision_bits);

} // namespace mahler
