#include "mahler/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "mahler/json_io.hpp"

namespace mahler {

namespace {

Json load_json(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw std::domain_error("cannot open " + file);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::domain_error(std::string("malformed JSON in ") + file + ": " + e.what());
    }
    return j;
}

void emit(std::ostream& out, const Json& j, bool text_format, const std::string& text) {
    if (text_format)
        out << text << "\n";
    else
        out << j.dump(2) << "\n";
}

CoefficientStream resolve_stream(const std::string& target) {
    if (fixtures::has_stream(target)) return fixtures::stream(target);
    Json j = load_json(target);
    if (j.contains("dfao")) return CoefficientStream::from_dfao(dfao_from_json(j["dfao"], "$.dfao"), target);
    if (j.contains("morphism"))
        return CoefficientStream::from_morphism(morphism_from_json(j["morphism"], "$.morphism"), target);
    if (j.contains("omega"))
        return CoefficientStream::hecke_mahler(omega_from_json(j["omega"], "$.omega"), target);
    throw std::domain_error(target + ": expected a fixture name or a file with dfao/morphism/omega");
}

int cmd_eval(const std::string& target, const std::string& at, long prec, size_t digits,
             bool text_format, std::ostream& out) {
    CoefficientStream s = resolve_stream(target);
    Rat alpha = parse_rat(at);
    CertifiedValue v = eval_series(s, alpha, prec);
    Json j = value_to_json(v, digits);
    std::ostringstream t;
    t << s.name() << "(" << rat_str(alpha) << ") = " << v.value.mid_decimal(digits) << " +/- "
      << v.value.rad_decimal() << "  (terms " << v.terms_used << ", p " << prec << ")";
    emit(out, j, text_format, t.str());
    return 0;
}

int cmd_cobham(const std::string& target, long verify_order, bool text_format, std::ostream& out) {
    Morphism m;
    if (target == "fib")
        m = fixtures::fibonacci();
    else if (target == "trib")
        m = fixtures::tribonacci();
    else if (target == "w")
        m = fixtures::w_word();
    else if (target == "tm")
        m = fixtures::thue_morse();
    else if (target == "bs")
        m = fixtures::baum_sweet();
    else {
        Json j = load_json(target);
        m = morphism_from_json(j.contains("morphism") ? j["morphism"] : j, "$");
    }
    CobhamSystem sys = cobham_construct(m);
    auto mismatch = sys.verify_functional_equation(verify_order);
    if (mismatch) throw std::domain_error("constructed system fails its functional equation");

    Json j;
    j["t"] = intmatrix_to_json(sys.t);
    Json a = Json::array();
    for (size_t i = 0; i < sys.a.rows(); ++i) {
        Json row = Json::array();
        for (size_t k = 0; k < sys.a.cols(); ++k) row.push_back(sys.a.at(i, k).str());
        a.push_back(row);
    }
    j["a"] = a;
    Json weights = Json::array();
    for (const auto& wgt : sys.weights) weights.push_back(rat_str(wgt));
    j["weights"] = weights;
    j["verified_order"] = verify_order;
    std::ostringstream t;
    t << "T = " << intmatrix_to_json(sys.t).dump() << "\nA = " << a.dump()
      << "\nfunctional equation verified to total degree " << verify_order;
    emit(out, j, text_format, t.str());
    return 0;
}

int cmd_matrix_classify(const std::string& target, bool text_format, std::ostream& out) {
    IntMatrix t = fixtures::has_matrix(target)
                      ? fixtures::matrix_fixture(target)
                      : intmatrix_from_json(load_json(target), "$");
    ClassMResult r = class_m_check(t);
    SpectrumReport spec = spectral_radius(t);
    Json j;
    j["verdict"] = r.in_m ? "InM" : "NotInM";
    if (!r.in_m) j["reason"] = r.reason;
    j["spectrum"] = spectrum_to_json(spec);
    std::ostringstream txt;
    txt << (r.in_m ? "InM" : ("NotInM: " + r.reason)) << "; rho ~ " << spec.rho.mid_decimal(12)
        << ", min poly " << spec.min_polynomial.str();
    emit(out, j, text_format, txt.str());
    return 0;
}

int cmd_indep(const std::vector<std::string>& points, bool text_format, std::ostream& out) {
    std::vector<Rat> vals;
    for (const auto& p : points) vals.push_back(parse_rat(p));
    MultIndepResult r = mult_indep(vals);
    Json j;
    j["verdict"] = r.independent ? "independent" : "dependent";
    if (!r.independent) {
        Json w = Json::array();
        for (const auto& x : r.witness) w.push_back(x.get_str());
        j["witness"] = w;
    }
    std::ostringstream t;
    t << (r.independent ? "multiplicatively independent" : "dependent; witness (");
    if (!r.independent) {
        for (size_t i = 0; i < r.witness.size(); ++i) t << (i ? ", " : "") << r.witness[i].get_str();
        t << ")";
    }
    emit(out, j, text_format, t.str());
    return 0;
}

int cmd_plan(const std::string& file, bool text_format, bool with_report, std::ostream& out) {
    std::vector<EvalItem> items;
    if (file == "final-example")
        items = fixtures::bundled_independence_items();
    else if (file == "even-odd-triple")
        items = fixtures::remark_dependence_items();
    else
        items = plan_items_from_json(load_json(file), "$");
    DecompositionTree tree = plan(items);
    Json j = tree_to_json(tree);
    if (with_report || text_format) {
        PlannerReport rep = report(tree, {});
        if (with_report) j["report"] = report_to_json(rep);
        emit(out, j, text_format, rep.text);
        return 0;
    }
    emit(out, j, false, "");
    return 0;
}

CertifiedValue eval_hunt_value(const HuntValueSpec& v, long prec) {
    if (v.omega) return eval_hecke_mahler(*v.omega, v.at, prec);
    Rat at = rat_pow(v.at, static_cast<long>(v.power));
    return eval_series(fixtures::stream(v.fixture), at, prec);
}

int cmd_hunt(const std::string& file, bool text_format, std::ostream& out) {
    HuntRequestSpec spec = hunt_request_from_json(load_json(file), "$");
    HuntRequest req;
    req.max_degree = spec.degree;
    req.height_bound = spec.height;
    req.precision_bits = spec.precision;
    long eval_prec = spec.precision + 64;
    for (const auto& v : spec.values) req.values.push_back(eval_hunt_value(v, eval_prec));
    HuntResult res = hunt(req);
    Json j = hunt_result_to_json(res);
    std::ostringstream t;
    if (res.found)
        t << "relation: " << res.polynomial_str();
    else
        t << "no relation up to degree " << res.max_degree << ", height " << res.height_bound.get_str()
          << ", p " << res.precision_bits;
    emit(out, j, text_format, t.str());
    return 0;
}

int cmd_verify_gauge(const std::string& target, bool text_format, std::ostream& out) {
    MahlerSystem sys;
    GaugeInput gauge;
    if (target == "fib") {
        sys = fixtures::fibonacci_system_q();
        gauge = fixtures::fibonacci_gauge(20);
    } else if (target == "trib") {
        sys = fixtures::tribonacci_system_eisenstein();
        gauge = fixtures::tribonacci_gauge(12);
    } else {
        Json j = load_json(target);
        sys = system_from_json(j.contains("system") ? j["system"] : j, "$.system");
        gauge = gauge_from_json(j.contains("gauge") ? j["gauge"] : j, sys.a.field(), "$.gauge");
    }
    auto res = verify_gauge(sys, gauge);
    Json j;
    if (std::holds_alternative<GaugeCertificate>(res)) {
        const auto& cert = std::get<GaugeCertificate>(res);
        j["verified"] = true;
        j["order"] = gauge.order;
        Json de = Json::array();
        for (long x : gauge.det_exponent) de.push_back(x);
        j["det_exponent"] = de;
        j["det_coeff"] = cert.det_coeff.str();
        emit(out, j, text_format,
             "gauge verified to order " + std::to_string(gauge.order) + "; det coefficient " +
                 cert.det_coeff.str());
        return 0;
    }
    const auto& mis = std::get<GaugeMismatch>(res);
    j["verified"] = false;
    j["row"] = mis.row;
    j["col"] = mis.col;
    j["what"] = mis.what;
    emit(out, j, text_format,
         "gauge mismatch at entry (" + std::to_string(mis.row) + "," + std::to_string(mis.col) +
             "): " + mis.what);
    return 2;
}

int cmd_hm_decide(const std::string& file, bool text_format, std::ostream& out) {
    Json j = load_json(file);
    const Json& arr = j.contains("items") ? j["items"] : j;
    if (!arr.is_array() || arr.empty())
        throw json_path_error("$.items", "expected a nonempty array");
    std::vector<HmItem> items;
    for (size_t i = 0; i < arr.size(); ++i) {
        std::string p = "$.items[" + std::to_string(i) + "]";
        const Json& it = arr[i];
        if (!it.is_object() || !it.contains("omega") || !it.contains("at"))
            throw json_path_error(p, "expected {omega, at}");
        QuadraticIrrational w = omega_from_json(it["omega"], p + ".omega");
        Rat at = parse_rat(it["at"].is_string() ? it["at"].get<std::string>()
                                                : std::to_string(it["at"].get<long>()));
        items.push_back(HmItem{w, at});
    }
    HmDecision dec = items.size() == 2 ? hm_pair_decision(items[0], items[1])
                                       : hm_family_decision(items);
    if (items.size() == 2 && dec.verdict == HmDecision::Verdict::Independent) {
        // the family rule may still catch a joint relation among two items
        dec = hm_family_decision(items);
    }
    Json res;
    res["verdict"] = dec.verdict == HmDecision::Verdict::Independent
                         ? "independent"
                         : (dec.verdict == HmDecision::Verdict::Dependent ? "dependent" : "unknown");
    res["criterion"] = dec.criterion;
    if (!dec.note.empty()) res["note"] = dec.note;
    if (!dec.witness.empty()) res["witness_items"] = dec.witness;

    if (dec.verdict == HmDecision::Verdict::Dependent) {
        // numeric confirmation of the dependence
        long p = 400;
        std::vector<Ball> vals;
        for (size_t idx : dec.witness)
            vals.push_back(eval_hecke_mahler(items[idx].omega, items[idx].alpha, p).value);
        vals.push_back(Ball::exact_int(1, static_cast<mpfr_prec_t>(p + 64)));
        auto cert = find_integer_relation(vals, Int(10), p);
        if (!cert.found()) throw std::logic_error("dependent verdict failed numeric confirmation");
        Json coeffs = Json::array();
        for (const auto& c : *cert.coefficients) coeffs.push_back(c.get_str());
        res["confirmation"] = Json{{"coefficients_with_1", coeffs}, {"height", 10}, {"p", p}};
    }
    std::ostringstream t;
    t << res["verdict"].get<std::string>() << " (" << dec.criterion << ")";
    if (!dec.note.empty()) t << ": " << dec.note;
    emit(out, res, text_format, t.str());
    return 0;
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"mahler workbench: systems, classification, certified evaluation, planning"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    app.add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    std::string eval_target, eval_at = "0";
    long eval_prec = 128;
    size_t eval_digits = 40;
    auto* eval = app.add_subcommand("eval", "evaluate a series fixture at a rational point");
    eval->add_option("target", eval_target)->required();
    eval->add_option("--at", eval_at)->required();
    eval->add_option("--prec", eval_prec);
    eval->add_option("--digits", eval_digits);

    std::string cobham_target;
    long cobham_order = 30;
    auto* cob = app.add_subcommand("cobham", "build the system of a morphism and verify it");
    cob->add_option("target", cobham_target)->required();
    cob->add_option("--verify-order", cobham_order);

    auto* matrix = app.add_subcommand("matrix", "transformation matrix utilities");
    std::string classify_target;
    auto* classify = matrix->add_subcommand("classify", "class-M membership and spectrum");
    classify->add_option("target", classify_target)->required();

    auto* indep = app.add_subcommand("indep", "multiplicative independence checks");
    std::vector<std::string> indep_points;
    auto* indep_pts = indep->add_subcommand("points", "decide a list of rational points");
    indep_pts->add_option("points", indep_points)->required()->expected(-1);

    std::string plan_file;
    bool plan_report = false;
    auto* planc = app.add_subcommand("plan", "decompose an independence question");
    planc->add_option("request", plan_file)->required();
    planc->add_flag("--with-report", plan_report);

    std::string hunt_file;
    auto* huntc = app.add_subcommand("hunt", "bounded integer polynomial relation search");
    huntc->add_option("request", hunt_file)->required();

    std::string gauge_target;
    auto* gaugec = app.add_subcommand("verify-gauge", "check a regular-singular gauge certificate");
    gaugec->add_option("target", gauge_target)->required();

    auto* hm = app.add_subcommand("hm", "Hecke-Mahler decisions");
    std::string hm_file;
    auto* hm_decide = hm->add_subcommand("decide", "decide a family of (omega, alpha) items");
    hm_decide->add_option("items", hm_file)->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    bool text = (format == "text");
    try {
        if (*eval) return cmd_eval(eval_target, eval_at, eval_prec, eval_digits, text, out);
        if (*cob) return cmd_cobham(cobham_target, cobham_order, text, out);
        if (*classify) return cmd_matrix_classify(classify_target, text, out);
        if (*indep_pts) return cmd_indep(indep_points, text, out);
        if (*planc) return cmd_plan(plan_file, text, plan_report, out);
        if (*huntc) return cmd_hunt(hunt_file, text, out);
        if (*gaugec) return cmd_verify_gauge(gauge_target, text, out);
        if (*hm_decide) return cmd_hm_decide(hm_file, text, out);
        err << "no subcommand selected\n";
        return 2;
    } catch (const precision_error& e) {
        err << "precision error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace mahler
