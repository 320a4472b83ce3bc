#pragma once

#include <string>
#include <vector>

#include "mahler/rational_function.hpp"

namespace mahler {

// Deterministic finite automaton with output, reading base-q digits most
// significant first.
struct Dfao {
    long base = 2;
    size_t states = 1;
    size_t initial = 0;
    std::vector<std::vector<size_t>> delta; // delta[state][digit]
    std::vector<Rat> output;                // output[state]

    void validate() const;
    Rat term(unsigned long n) const;
};

// Endomorphism of a finite ordered alphabet with an optional coding and a
// seed letter for the fixed point.
struct Morphism {
    std::vector<std::string> alphabet;
    std::vector<std::vector<size_t>> images; // image word per letter, as indices
    std::vector<Rat> coding;                 // rational value per letter
    size_t seed = 0;

    void validate() const;
    bool prolongable() const;

    // First L letters of the fixed point starting at the seed.
    std::vector<size_t> prefix(size_t length) const;
    std::vector<Rat> coded_prefix(size_t length) const;
};

IntMatrix incidence_matrix(const Morphism& m);

// Cobham's construction: one component series per letter, transformation
// T = M_phi^t, and A with A[a][b] = sum of z^psi(prefix) over positions of
// letter a inside the image of b.
struct CobhamSystem {
    IntMatrix t;
    RFMatrix a;
    std::vector<Rat> weights; // the coding
    Morphism morphism;

    size_t letters() const { return morphism.alphabet.size(); }

    // Component series f_letter to total degree `order`.
    PuiseuxSeries component_series(size_t letter, long order) const;
    std::vector<PuiseuxSeries> all_components(long order) const;

    // Checks f = A * f(Tz) coefficientwise to the given order; returns the
    // first failing component if any.
    std::optional<SeriesMismatch> verify_functional_equation(long order) const;
};

CobhamSystem cobham_construct(const Morphism& m);

} // namespace mahler
