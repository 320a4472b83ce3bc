#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mahler/json_io.hpp"

using namespace mahler;

namespace {

long pow2(long e) { return 1L << e; }

} // namespace

TEST_CASE("monomial enumeration is graded-lex and stable") {
    auto m = monomials_up_to(3, 1);
    REQUIRE(m.size() == 4);
    CHECK(m[0] == std::vector<long>{0, 0, 0});
    CHECK(m[1] == std::vector<long>{1, 0, 0});
    CHECK(m[2] == std::vector<long>{0, 1, 0});
    CHECK(m[3] == std::vector<long>{0, 0, 1});

    auto m2 = monomials_up_to(2, 2);
    REQUIRE(m2.size() == 6);
    CHECK(m2[3] == std::vector<long>{2, 0});
    CHECK(m2[4] == std::vector<long>{1, 1});
    CHECK(m2[5] == std::vector<long>{0, 2});
    CHECK(monomials_up_to(3, 1) == m); // deterministic
}

TEST_CASE("hunt finds the square relation") {
    auto geo = CoefficientStream::from_dfao(fixtures::thue_morse_dfao(), "tm");
    long p = 400;
    CertifiedValue v = eval_series(geo, make_rat(1, 2), p + 64);
    CertifiedValue v2 = v;
    v2.value = v.value * v.value;

    HuntRequest req;
    req.values = {v, v2};
    req.max_degree = 2;
    req.height_bound = Int(10);
    req.precision_bits = p;
    HuntResult res = hunt(req);
    REQUIRE(res.found);
    CHECK(res.polynomial_str() == "x2 - x1^2");
}

TEST_CASE("hunt recovers the even-odd split relation at degree 1") {
    long p = 700;
    QuadraticIrrational s2 = fixtures::omega_fixture("sqrt2");
    HuntRequest req;
    req.values = {eval_hecke_mahler(s2, make_rat(1, 2), p + 64),
                  eval_hecke_mahler(s2, make_rat(-1, 2), p + 64),
                  eval_hecke_mahler(s2.doubled(), make_rat(1, 4), p + 64)};
    req.max_degree = 1;
    req.height_bound = Int(10);
    req.precision_bits = p;
    HuntResult res = hunt(req);
    REQUIRE(res.found);
    CHECK(res.polynomial_str() == "x1 + x2 - 2*x3");
}

TEST_CASE("hunt precision shortfall raises") {
    auto tm = CoefficientStream::from_dfao(fixtures::thue_morse_dfao(), "tm");
    HuntRequest req;
    req.values = {eval_series(tm, make_rat(1, 2), 128), eval_series(tm, make_rat(1, 3), 128)};
    req.max_degree = 3;
    req.height_bound = Int(10000);
    req.precision_bits = 64;
    CHECK_THROWS_AS(hunt(req), precision_error);
}

TEST_CASE("embed_dependent_points on the three-word example") {
    auto mk = [](std::string label, std::string fid, const Rat& pt, long order) {
        EvalItem it;
        it.label = std::move(label);
        it.function_id = std::move(fid);
        it.point = {pt};
        it.eq_order = order;
        it.eq_base = 2;
        return it;
    };
    std::vector<EvalItem> items{mk("tm@1/2", "tm", make_rat(1, 2), 1),
                                mk("pf@1/3", "pf", make_rat(1, 3), 1),
                                mk("bs@1/6", "bs", make_rat(1, 6), 2)};
    EmbeddingInfo info = embed_dependent_points(items);
    REQUIRE(info.base.size() == 2);
    CHECK(info.base[0] == make_rat(1, 2));
    CHECK(info.base[1] == make_rat(1, 3));
    CHECK(info.rewrites[0].component_monomials == std::vector<std::string>{"z1"});
    CHECK(info.rewrites[1].component_monomials == std::vector<std::string>{"z2"});
    CHECK(info.rewrites[2].component_monomials == std::vector<std::string>{"z1*z2", "z1^2*z2^2"});

    // single point: identity rewrite
    EmbeddingInfo single = embed_dependent_points({mk("x@1/2", "x", make_rat(1, 2), 1)});
    REQUIRE(single.base.size() == 1);
    CHECK(single.base[0] == make_rat(1, 2));
    CHECK(single.rewrites[0].component_monomials == std::vector<std::string>{"z1"});

    // sign absorbed into the monomial data
    EmbeddingInfo signs = embed_dependent_points(
        {mk("f@1/2", "f", make_rat(1, 2), 1), mk("f@-1/2", "f", make_rat(-1, 2), 1)});
    REQUIRE(signs.base.size() == 1);
    CHECK(signs.base[0] == make_rat(1, 2));
    CHECK(signs.rewrites[0].sign == 1);
    CHECK(signs.rewrites[1].sign == -1);
    CHECK(signs.rewrites[1].component_monomials == std::vector<std::string>{"-z1"});
}

TEST_CASE("plan: single item gives one leaf with a transcendence obligation") {
    EvalItem it;
    it.label = "tm@1/2";
    it.fixture = "tm";
    it.function_id = "tm";
    it.point = {make_rat(1, 2)};
    it.spectrum = spectral_radius(IntMatrix(1, 1, {Int(2)}));
    it.transcendence_citation = "[ABu07] Theorem 4";
    DecompositionTree tree = plan({it});
    REQUIRE(tree.classes.size() == 1);
    REQUIRE(tree.classes[0].points.size() == 1);
    REQUIRE(tree.classes[0].points[0].obligations.size() == 1);
    CHECK(tree.classes[0].points[0].obligations[0].kind == Obligation::Kind::Transcendence);

    PlannerReport rep = report(tree, {});
    CHECK(rep.verdict == PlannerReport::Verdict::Independent);
}

TEST_CASE("plan on the bundled final-example request") {
    auto items = fixtures::bundled_independence_items();
    DecompositionTree tree = plan(items);
    REQUIRE(tree.classes.size() == 4);

    // class of radius 2 splits into the four point classes
    const RadiusClassNode* two = nullptr;
    for (const auto& cls : tree.classes)
        if (cls.label == "rho root of x - 2") two = &cls;
    REQUIRE(two != nullptr);
    REQUIRE(two->points.size() == 4);
    CHECK(two->points[0].label == "1/10");
    CHECK(two->points[1].label == "1/2");
    CHECK(two->points[2].label == "1/3");
    CHECK(two->points[3].label == "1/7");
    CHECK(two->points[1].items.size() == 2); // tm and pf share the point

    // obligations carry the cited discharges
    std::set<std::string> cites;
    for (const auto& cls : tree.classes)
        for (const auto& leaf : cls.points)
            for (const auto& ob : leaf.obligations)
                for (const auto& c : ob.citations) cites.insert(c);
    CHECK(cites.count("[Ni84] Theorem 3") == 1);
    CHECK(cites.count("[DHR] Theorem 4.3") == 1);
    CHECK(cites.count("[Ni_Liv] Theorem 3.5") == 1);
    CHECK(cites.count("[ABu07] Theorem 4") == 1);

    // leaves partition the items
    std::multiset<std::string> seen;
    for (const auto& cls : tree.classes)
        for (const auto& leaf : cls.points)
            for (size_t idx : leaf.items) seen.insert(tree.items[idx].label);
    CHECK(seen.size() == items.size());
    for (const auto& it : items) CHECK(seen.count(it.label) == 1);

    PlannerReport rep = report(tree, {});
    CHECK(rep.verdict == PlannerReport::Verdict::Independent);
    CHECK_FALSE(rep.conditional);
}

TEST_CASE("plan output is invariant under input permutation") {
    auto items = fixtures::bundled_independence_items();
    Json base = tree_to_json(plan(items));
    std::mt19937 rng(7);
    for (int trial = 0; trial < 4; ++trial) {
        auto shuffled = items;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        Json now = tree_to_json(plan(shuffled));
        CHECK(base == now);
    }
}

TEST_CASE("stage-1 partition is stable under system iteration") {
    // rho^d classes coincide with rho classes for d <= 3
    std::vector<IntMatrix> mats{fixtures::matrix_fixture("t1"), fixtures::matrix_fixture("t3"),
                                fixtures::matrix_fixture("t2"), IntMatrix(1, 1, {Int(2)})};
    auto classes_of = [&](const std::vector<IntMatrix>& ms) {
        std::vector<SpectrumReport> reps;
        for (const auto& m : ms) reps.push_back(spectral_radius(m));
        auto part = radii_mult_classes(reps, 20);
        std::set<std::vector<size_t>> cls(part.classes.begin(), part.classes.end());
        return cls;
    };
    auto base = classes_of(mats);
    for (unsigned long d = 2; d <= 3; ++d) {
        std::vector<IntMatrix> powered;
        for (const auto& m : mats) powered.push_back(m.pow(d));
        CHECK(classes_of(powered) == base);
    }
    // mixed iteration counts keep the partition as well
    std::vector<IntMatrix> mixed{mats[0].pow(2), mats[1].pow(3), mats[2], mats[3].pow(2)};
    CHECK(classes_of(mixed) == base);
}

TEST_CASE("plan separates two points of the power-series embedding") {
    auto mk = [](std::string label, const Rat& pt) {
        EvalItem it;
        it.label = std::move(label);
        it.fixture = "sqrtpow2";
        it.function_id = "power2sum";
        it.point = {pt};
        it.spectrum = spectral_radius(IntMatrix::scalar(2, Int(2)));
        return it;
    };
    DecompositionTree tree = plan({mk("f@1/2", make_rat(1, 2)), mk("f@1/3", make_rat(1, 3))});
    REQUIRE(tree.classes.size() == 1);
    CHECK(tree.classes[0].points.size() == 2);
    REQUIRE(tree.classes[0].point_certificate.has_value());
    CHECK(tree.classes[0].point_certificate->independent);
    PlannerReport rep = report(tree, {});
    CHECK(rep.verdict == PlannerReport::Verdict::Independent);
}

TEST_CASE("plan on the dependent hecke triple reports the relation") {
    auto items = fixtures::remark_dependence_items();
    DecompositionTree tree = plan(items);
    REQUIRE(tree.findings.size() == 1);
    CHECK(tree.findings[0].kind == Obligation::Kind::RelationFound);

    PlannerReport rep = report(tree, {});
    CHECK(rep.verdict == PlannerReport::Verdict::Dependent);

    // confirm numerically through the hunt interface
    long p = 700;
    HuntRequest hr;
    for (const auto& it : items) hr.values.push_back(eval_hecke_mahler(it.hecke->omega, it.hecke->alpha, p + 64));
    hr.max_degree = 1;
    hr.height_bound = Int(10);
    hr.precision_bits = p;
    HuntResult res = hunt(hr);
    REQUIRE(res.found);
    CHECK(res.polynomial_str() == "x1 + x2 - 2*x3");
}

TEST_CASE("report handles skips and unknown-admissibility marks") {
    auto items = fixtures::bundled_independence_items();
    DecompositionTree tree = plan(items);
    std::vector<std::string> all_labels;
    for (const auto& it : items) all_labels.push_back(it.label);
    PlannerReport rep = report(tree, {}, all_labels);
    CHECK(rep.verdict == PlannerReport::Verdict::Inconclusive);

    auto marked = items;
    marked[0].admissibility_unknown = true;
    DecompositionTree cond = plan(marked);
    CHECK(cond.conditional);
    CHECK(report(cond, {}).verdict == PlannerReport::Verdict::Inconclusive);
}

TEST_CASE("plan rejects empty and mixed inputs") {
    CHECK_THROWS_AS(plan({}), std::domain_error);
    auto mah = fixtures::bundled_independence_items()[0];
    auto hec = fixtures::remark_dependence_items()[0];
    CHECK_THROWS_AS(plan({mah, hec}), std::domain_error);
    (void)pow2(1);
}
