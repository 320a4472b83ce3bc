#pragma once

#include "mahler/evaluator.hpp"
#include "mahler/lattice.hpp"

namespace mahler {

struct HuntRequest {
    std::vector<CertifiedValue> values;
    long max_degree = 3;
    Int height_bound = Int(10000);
    long precision_bits = 0;
};

struct HuntResult {
    struct Term {
        Int coeff;
        std::vector<long> exponents;
    };
    bool found = false;
    std::vector<Term> polynomial;              // nonzero terms, graded-lex order
    std::vector<std::vector<long>> monomials;  // full enumeration used
    long max_degree = 0;
    Int height_bound;
    long precision_bits = 0;

    std::string polynomial_str() const;
};

// Monomials of total degree <= D (constant included) in graded-lex order,
// deterministic.
std::vector<std::vector<long>> monomials_up_to(size_t nvars, long max_degree);

// Feeds the monomial values of the certified inputs to the integer-relation
// search; Found results are re-verified in ball arithmetic.
HuntResult hunt(const HuntRequest& r);

} // namespace mahler
