#include "mahler/planner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace mahler {

std::string Obligation::kind_str() const {
    switch (kind) {
        case Kind::Transcendence: return "transcendence";
        case Kind::FunctionAlgIndep: return "function-algebraic-independence";
        case Kind::ExternalTheorem: return "external-theorem";
        case Kind::RelationFound: return "relation-found";
    }
    return "?";
}

std::string PlannerReport::verdict_str() const {
    switch (verdict) {
        case Verdict::Independent: return "independent";
        case Verdict::Dependent: return "dependent";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

std::string point_str(const std::vector<Rat>& p) {
    std::string s;
    for (const auto& c : p) {
        if (!s.empty()) s += ",";
        s += rat_str(c);
    }
    return p.size() == 1 ? s : "(" + s + ")";
}

std::string monomial_str(const std::vector<Int>& exponents, long power, int sign) {
    std::string s;
    for (size_t j = 0; j < exponents.size(); ++j) {
        Int e = exponents[j] * power;
        if (e == 0) continue;
        if (!s.empty()) s += "*";
        s += "z" + std::to_string(j + 1);
        if (e != 1) s += "^" + e.get_str();
    }
    if (s.empty()) s = "1";
    // the torsion factor of the rewritten point: sign^power
    if (sign < 0 && power % 2 != 0) s = "-" + s;
    return s;
}

} // namespace

EmbeddingInfo embed_dependent_points(const std::vector<EvalItem>& items) {
    std::vector<Rat> points;
    for (const auto& it : items) {
        if (it.point.size() != 1)
            throw std::domain_error("embedding handles scalar specialization points only");
        points.push_back(it.point[0]);
    }
    ExponentDecomposition dec = lvdp_decompose(points);

    EmbeddingInfo out;
    out.base = dec.base;
    for (size_t i = 0; i < items.size(); ++i) {
        EmbeddingInfo::Rewrite rw;
        rw.label = items[i].label;
        rw.sign = dec.signs[i];
        rw.exponents.reserve(dec.base.size());
        for (size_t j = 0; j < dec.base.size(); ++j) rw.exponents.push_back(dec.exponents.at(i, j));
        long power = 1;
        for (long k = 0; k < std::max(items[i].eq_order, 1L); ++k) {
            rw.component_monomials.push_back(monomial_str(rw.exponents, power, rw.sign));
            power *= items[i].eq_base;
        }
        out.rewrites.push_back(std::move(rw));
    }
    return out;
}

namespace {

// Build the obligations of one leaf from the items it carries.
std::vector<Obligation> leaf_obligations(const std::vector<EvalItem>& items,
                                         const std::vector<size_t>& leaf) {
    std::vector<Obligation> out;
    std::map<std::string, std::vector<size_t>> by_function;
    for (size_t idx : leaf) by_function[items[idx].function_id].push_back(idx);

    // transcendence of each plain value
    for (size_t idx : leaf) {
        const EvalItem& it = items[idx];
        if (it.derivative_tower) continue;
        Obligation ob;
        ob.kind = Obligation::Kind::Transcendence;
        ob.description = "value " + it.label + " is transcendental";
        if (!it.transcendence_citation.empty()) ob.citations.push_back(it.transcendence_citation);
        ob.item_labels.push_back(it.label);
        out.push_back(std::move(ob));
    }

    // derivative towers
    for (size_t idx : leaf) {
        const EvalItem& it = items[idx];
        if (!it.derivative_tower) continue;
        Obligation ob;
        ob.kind = Obligation::Kind::FunctionAlgIndep;
        ob.description = "derivatives of " + it.function_id + " (orders >= " +
                         std::to_string(it.tower_start) + ") are algebraically independent";
        if (it.eq_order >= 2)
            ob.description += " together with the same tower at the transformed variable";
        if (!it.function_citation.empty()) ob.citations.push_back(it.function_citation);
        ob.item_labels.push_back(it.label);
        out.push_back(std::move(ob));
        if (!it.function_citation.empty()) {
            Obligation ext;
            ext.kind = Obligation::Kind::ExternalTheorem;
            ext.description = "cited discharge of the " + it.function_id + " tower";
            ext.citations.push_back(it.function_citation);
            ext.item_labels.push_back(it.label);
            out.push_back(std::move(ext));
        }
    }

    // several distinct base functions at one point
    if (by_function.size() >= 2) {
        Obligation ob;
        ob.kind = Obligation::Kind::FunctionAlgIndep;
        std::string names;
        std::set<std::string> cites;
        for (const auto& [fid, idxs] : by_function) {
            if (!names.empty()) names += ", ";
            names += fid;
            for (size_t idx : idxs) {
                if (!items[idx].function_citation.empty()) cites.insert(items[idx].function_citation);
                ob.item_labels.push_back(items[idx].label);
            }
        }
        ob.description = "functions {" + names + "} are algebraically independent over the "
                        "rational function field";
        ob.citations.assign(cites.begin(), cites.end());
        out.push_back(ob);
        if (!ob.citations.empty()) {
            Obligation ext;
            ext.kind = Obligation::Kind::ExternalTheorem;
            ext.description = "cited discharge of the joint function independence";
            ext.citations = ob.citations;
            ext.item_labels = ob.item_labels;
            out.push_back(std::move(ext));
        }
    }
    return out;
}

} // namespace

DecompositionTree plan(const std::vector<EvalItem>& input_items) {
    if (input_items.empty()) throw std::domain_error("plan needs at least one item");
    for (const auto& it : input_items)
        if (it.kind != input_items[0].kind)
            throw std::domain_error("mixed Mahler and Hecke-Mahler plans are not supported");

    // canonicalize: the tree is a function of the item set, not its order
    std::vector<EvalItem> items = input_items;
    std::sort(items.begin(), items.end(),
              [](const EvalItem& a, const EvalItem& b) { return a.label < b.label; });
    for (size_t i = 0; i + 1 < items.size(); ++i)
        if (items[i].label == items[i + 1].label)
            throw std::domain_error("duplicate item label: " + items[i].label);

    DecompositionTree tree;
    tree.items = items;
    for (const auto& it : items)
        if (it.admissibility_unknown) tree.conditional = true;

    // ---- stage 1: spectral radius classes ----
    std::vector<std::vector<size_t>> stage1;
    std::vector<std::string> stage1_labels;
    if (items[0].kind == EvalItem::Kind::Hecke) {
        std::map<Int, std::vector<size_t>> by_field;
        for (size_t i = 0; i < items.size(); ++i) {
            if (!items[i].hecke) throw std::domain_error("hecke item without parameters");
            by_field[items[i].hecke->omega.d()].push_back(i);
        }
        for (const auto& [d, idxs] : by_field) {
            stage1.push_back(idxs);
            stage1_labels.push_back("unit group of Q(sqrt(" + d.get_str() + "))");
        }
    } else {
        std::vector<SpectrumReport> reports;
        for (const auto& it : items) {
            if (!it.spectrum) throw std::domain_error("mahler item without spectral data");
            reports.push_back(*it.spectrum);
        }
        RadiusPartition part = radii_mult_classes(reports, 20);
        tree.radius_certificates = part;
        for (const auto& cls : part.classes) {
            stage1.push_back(cls);
            stage1_labels.push_back("rho root of " + items[cls[0]].spectrum->min_polynomial.str());
        }
    }

    // canonical order: by class label, ties by first item label
    std::vector<size_t> order(stage1.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (stage1_labels[a] != stage1_labels[b]) return stage1_labels[a] < stage1_labels[b];
        return items[stage1[a][0]].label < items[stage1[b][0]].label;
    });

    // ---- stage 2: point classes inside each radius class ----
    for (size_t oi : order) {
        RadiusClassNode node;
        node.label = stage1_labels[oi];
        node.items = stage1[oi];

        std::map<std::string, std::vector<size_t>> by_point;
        std::vector<Rat> distinct_points;
        bool scalar = true;
        for (size_t idx : node.items) {
            std::string key = point_str(items[idx].point);
            if (by_point.find(key) == by_point.end() && items[idx].point.size() == 1)
                distinct_points.push_back(items[idx].point[0]);
            by_point[key].push_back(idx);
            if (items[idx].point.size() != 1) scalar = false;
        }

        bool embed = false;
        if (scalar && distinct_points.size() >= 2) {
            MultIndepResult mi = mult_indep(distinct_points);
            node.point_certificate = mi;
            embed = !mi.independent;
        }

        if (embed) {
            PointClassNode leaf;
            std::vector<EvalItem> leaf_items;
            for (size_t idx : node.items) leaf_items.push_back(items[idx]);
            leaf.label = "embedded point class";
            leaf.items = node.items;
            leaf.embedding = true;
            leaf.embedding_info = embed_dependent_points(leaf_items);
            // the lifted question covers the whole class at once
            Obligation ob;
            ob.kind = Obligation::Kind::FunctionAlgIndep;
            std::string fs;
            for (const auto& rw : leaf.embedding_info->rewrites) {
                const EvalItem* item = nullptr;
                for (size_t idx : node.items)
                    if (items[idx].label == rw.label) item = &items[idx];
                for (const auto& mono : rw.component_monomials) {
                    if (!fs.empty()) fs += ", ";
                    fs += (item ? item->function_id : rw.label) + "(" + mono + ")";
                }
                ob.item_labels.push_back(rw.label);
            }
            ob.description = "functions {" + fs + "} are algebraically independent over the "
                            "rational function field";
            for (size_t idx : node.items)
                if (!items[idx].function_citation.empty())
                    ob.citations.push_back(items[idx].function_citation);
            std::sort(ob.citations.begin(), ob.citations.end());
            ob.citations.erase(std::unique(ob.citations.begin(), ob.citations.end()),
                               ob.citations.end());
            leaf.obligations.push_back(std::move(ob));
            node.points.push_back(std::move(leaf));
        } else {
            for (const auto& [key, idxs] : by_point) {
                PointClassNode leaf;
                leaf.label = key;
                leaf.items = idxs;
                leaf.obligations = leaf_obligations(items, idxs);
                node.points.push_back(std::move(leaf));
            }
            std::sort(node.points.begin(), node.points.end(),
                      [](const PointClassNode& a, const PointClassNode& b) { return a.label < b.label; });
        }

        tree.classes.push_back(std::move(node));
    }

    // ---- known dependences for Hecke families ----
    if (items[0].kind == EvalItem::Kind::Hecke) {
        std::vector<HmItem> hm;
        for (const auto& it : items) hm.push_back(*it.hecke);
        HmDecision dec = hm_family_decision(hm);
        if (dec.verdict == HmDecision::Verdict::Dependent) {
            Obligation ob;
            ob.kind = Obligation::Kind::RelationFound;
            ob.description = dec.criterion + ": " + dec.note;
            for (size_t w : dec.witness) ob.item_labels.push_back(items[w].label);
            tree.findings.push_back(std::move(ob));
        } else if (dec.verdict == HmDecision::Verdict::Unknown) {
            tree.conditional = true;
        }
    }
    return tree;
}

PlannerReport report(const DecompositionTree& tree, const std::vector<HuntResult>& hunts,
                     const std::vector<std::string>& skipped) {
    PlannerReport rep;
    rep.conditional = tree.conditional;
    rep.skipped = skipped;

    auto leaf_skipped = [&](const PointClassNode& leaf) {
        for (size_t idx : leaf.items) {
            bool found = false;
            for (const auto& s : skipped)
                if (tree.items[idx].label == s) found = true;
            if (!found) return false;
        }
        return !leaf.items.empty();
    };

    bool any_found_relation = false;
    for (const auto& h : hunts)
        if (h.found) any_found_relation = true;

    for (const auto& f : tree.findings) rep.obligations.push_back(f);
    size_t active_leaves = 0;
    for (const auto& cls : tree.classes)
        for (const auto& leaf : cls.points) {
            if (leaf_skipped(leaf)) continue;
            ++active_leaves;
            for (const auto& ob : leaf.obligations) rep.obligations.push_back(ob);
        }

    bool any_relation_finding = !tree.findings.empty() || any_found_relation;

    if (any_relation_finding)
        rep.verdict = PlannerReport::Verdict::Dependent;
    else if (active_leaves == 0 || tree.conditional)
        rep.verdict = PlannerReport::Verdict::Inconclusive;
    else
        rep.verdict = PlannerReport::Verdict::Independent;

    // human rendering
    std::string t;
    t += "verdict: " + rep.verdict_str();
    if (rep.verdict == PlannerReport::Verdict::Independent)
        t += " (conditional on the listed obligations)";
    t += "\n";
    t += "stage 1: " + std::to_string(tree.classes.size()) + " spectral radius class(es)\n";
    for (const auto& cls : tree.classes) {
        t += "  * class [" + cls.label + "]";
        t += " with " + std::to_string(cls.items.size()) + " item(s)\n";
        for (const auto& leaf : cls.points) {
            t += "      - point class " + leaf.label;
            if (leaf.embedding) t += " (rewritten through an independent monomial base)";
            t += ": ";
            for (size_t k = 0; k < leaf.items.size(); ++k) {
                if (k) t += ", ";
                t += tree.items[leaf.items[k]].label;
            }
            t += "\n";
        }
    }
    t += "obligations:\n";
    size_t n = 1;
    for (const auto& ob : rep.obligations) {
        t += "  O" + std::to_string(n++) + " [" + ob.kind_str() + "] " + ob.description;
        if (!ob.citations.empty()) {
            t += " {";
            for (size_t k = 0; k < ob.citations.size(); ++k) {
                if (k) t += "; ";
                t += ob.citations[k];
            }
            t += "}";
        }
        t += "\n";
    }
    for (const auto& h : hunts) {
        if (h.found)
            t += "relation found: " + h.polynomial_str() + "\n";
        else
            t += "no relation up to degree " + std::to_string(h.max_degree) + ", height " +
                 h.height_bound.get_str() + ", precision " + std::to_string(h.precision_bits) +
                 " bits\n";
    }
    rep.text = t;
    return rep;
}

} // namespace mahler
