#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mahler/int_matrix.hpp"
#include "mahler/rational.hpp"

namespace mahler {

// Exact prime factorization of |q|; the map omits zero exponents.
// Throws std::domain_error on q = 0.
std::map<Int, long> factor_rational(const Rat& q);

struct MultIndepResult {
    bool independent;
    std::vector<Int> witness; // empty iff independent; else prod values^w = 1 exactly
};

// Decides multiplicative independence of nonzero rationals, signs included:
// dependent iff some nonzero integer vector e gives prod values_i^{e_i} = 1.
MultIndepResult mult_indep(const std::vector<Rat>& values);

// Loxton - van der Poorten style monomial splitting: writes each nonzero
// input as sign * prod base_j^{exponents_ij} with a multiplicatively
// independent positive base built from the prime-exponent lattice.
struct ExponentDecomposition {
    std::vector<int> signs;            // +1 / -1 per input
    std::vector<Rat> base;             // pairwise mult. independent, > 0, != 1
    IntMatrix exponents;               // one row per input

    Rat reconstruct(size_t i) const;   // exact reconstruction of input i
};

ExponentDecomposition lvdp_decompose(const std::vector<Rat>& points);

} // namespace mahler
