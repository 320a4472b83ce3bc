#pragma once

#include <optional>

#include "mahler/hecke.hpp"
#include "mahler/multiplicative.hpp"
#include "mahler/relations.hpp"
#include "mahler/systems.hpp"

namespace mahler {

// One value (or derivative tower of values) entering the independence
// question, with the metadata the decomposition needs.
struct EvalItem {
    std::string label;
    enum class Kind { Mahler, Hecke } kind = Kind::Mahler;
    std::string fixture;      // evaluation fixture backing the item
    std::string function_id;  // base function identity, shared by a tower
    std::vector<Rat> point;

    bool derivative_tower = false;
    long tower_start = 0;
    long eq_order = 1;
    long eq_base = 2;
    bool inhomogeneous = false;

    std::string transcendence_citation;
    std::string function_citation;

    std::optional<SpectrumReport> spectrum; // Mahler items
    std::optional<HmItem> hecke;            // Hecke items
    bool admissibility_unknown = false;
};

struct Obligation {
    enum class Kind { Transcendence, FunctionAlgIndep, ExternalTheorem, RelationFound };
    Kind kind;
    std::string description;
    std::vector<std::string> citations;
    std::vector<std::string> item_labels;

    std::string kind_str() const;
};

struct EmbeddingInfo {
    std::vector<Rat> base;
    struct Rewrite {
        std::string label;
        int sign;
        std::vector<Int> exponents;
        std::vector<std::string> component_monomials; // one per equation order step
    };
    std::vector<Rewrite> rewrites;
};

// The Loxton - van der Poorten style rewrite of dependent points into
// monomials in an independent base, with the multivariate function set the
// lifted question needs.
EmbeddingInfo embed_dependent_points(const std::vector<EvalItem>& items);

struct PointClassNode {
    std::string label;               // canonical point rendering
    std::vector<size_t> items;       // indices into the tree's item list
    std::vector<Obligation> obligations;
    bool embedding = false;
    std::optional<EmbeddingInfo> embedding_info;
};

struct RadiusClassNode {
    std::string label;               // min poly of rho (or field label for Hecke)
    std::vector<size_t> items;
    std::vector<PointClassNode> points;
    std::optional<MultIndepResult> point_certificate; // stage-2 witness
};

struct DecompositionTree {
    std::vector<EvalItem> items;
    std::vector<RadiusClassNode> classes;
    std::optional<RadiusPartition> radius_certificates; // Mahler stage-1 data
    bool conditional = false;          // admissibility gaps present
    std::vector<Obligation> findings;  // dependences discovered during planning
};

DecompositionTree plan(const std::vector<EvalItem>& items);

struct PlannerReport {
    enum class Verdict { Independent, Dependent, Inconclusive } verdict;
    bool conditional = false;
    std::vector<Obligation> obligations;
    std::vector<std::string> skipped; // labels of leaves skipped by the caller
    std::string text;                 // human-readable rendering

    std::string verdict_str() const;
};

// Folds the tree and any hunt certificates for its relation obligations
// into a final verdict document. Leaves whose items all appear in `skipped`
// contribute nothing; a fully skipped tree is inconclusive.
PlannerReport report(const DecompositionTree& tree, const std::vector<HuntResult>& hunts,
                     const std::vector<std::string>& skipped = {});

} // namespace mahler
