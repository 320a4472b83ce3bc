#include "mahler/json_io.hpp"

namespace mahler {

namespace {

const Json& field(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw json_path_error(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw json_path_error(path + "." + key, "missing field");
    return *it;
}

long to_long(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) throw json_path_error(path, "expected an integer");
    return j.get<long>();
}

Rat to_rat(const Json& j, const std::string& path) {
    try {
        if (j.is_number_integer()) return Rat(j.get<long>());
        if (j.is_string()) return parse_rat(j.get<std::string>());
    } catch (const std::domain_error& e) {
        throw json_path_error(path, e.what());
    }
    throw json_path_error(path, "expected a rational as integer or \"p/q\" string");
}

Int to_int(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) {
        Rat r = to_rat(j, path);
        if (r.get_den() != 1) throw json_path_error(path, "expected an integer");
        return r.get_num();
    }
    throw json_path_error(path, "expected an integer");
}

Json rat_json(const Rat& q) { return rat_str(q); }

} // namespace

Json dfao_to_json(const Dfao& d) {
    Json j;
    j["base"] = d.base;
    j["states"] = d.states;
    j["init"] = d.initial;
    j["delta"] = d.delta;
    Json out = Json::array();
    for (const auto& o : d.output) out.push_back(rat_json(o));
    j["out"] = out;
    return j;
}

Dfao dfao_from_json(const Json& j, const std::string& path) {
    Dfao d;
    d.base = to_long(field(j, "base", path), path + ".base");
    d.states = static_cast<size_t>(to_long(field(j, "states", path), path + ".states"));
    d.initial = static_cast<size_t>(to_long(field(j, "init", path), path + ".init"));
    const Json& delta = field(j, "delta", path);
    if (!delta.is_array()) throw json_path_error(path + ".delta", "expected an array");
    for (size_t i = 0; i < delta.size(); ++i) {
        std::vector<size_t> row;
        const Json& r = delta[i];
        if (!r.is_array()) throw json_path_error(path + ".delta[" + std::to_string(i) + "]", "expected an array");
        for (size_t k = 0; k < r.size(); ++k)
            row.push_back(static_cast<size_t>(
                to_long(r[k], path + ".delta[" + std::to_string(i) + "][" + std::to_string(k) + "]")));
        d.delta.push_back(std::move(row));
    }
    const Json& out = field(j, "out", path);
    if (!out.is_array()) throw json_path_error(path + ".out", "expected an array");
    for (size_t i = 0; i < out.size(); ++i)
        d.output.push_back(to_rat(out[i], path + ".out[" + std::to_string(i) + "]"));
    try {
        d.validate();
    } catch (const std::domain_error& e) {
        throw json_path_error(path, e.what());
    }
    return d;
}

Json morphism_to_json(const Morphism& m) {
    Json j;
    j["alphabet"] = m.alphabet;
    Json images = Json::array();
    for (const auto& w : m.images) {
        Json word = Json::array();
        for (size_t a : w) word.push_back(m.alphabet[a]);
        images.push_back(word);
    }
    j["images"] = images;
    Json coding = Json::array();
    for (const auto& c : m.coding) coding.push_back(rat_json(c));
    j["coding"] = coding;
    j["seed"] = m.alphabet[m.seed];
    return j;
}

Morphism morphism_from_json(const Json& j, const std::string& path) {
    Morphism m;
    const Json& alpha = field(j, "alphabet", path);
    if (!alpha.is_array() || alpha.empty()) throw json_path_error(path + ".alphabet", "expected a nonempty array");
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < alpha.size(); ++i) {
        if (!alpha[i].is_string())
            throw json_path_error(path + ".alphabet[" + std::to_string(i) + "]", "expected a string");
        m.alphabet.push_back(alpha[i].get<std::string>());
        index[m.alphabet.back()] = i;
    }
    auto letter = [&](const Json& v, const std::string& p) {
        if (!v.is_string() || index.find(v.get<std::string>()) == index.end())
            throw json_path_error(p, "unknown letter");
        return index[v.get<std::string>()];
    };
    const Json& images = field(j, "images", path);
    if (!images.is_array() || images.size() != m.alphabet.size())
        throw json_path_error(path + ".images", "expected one image per letter");
    for (size_t i = 0; i < images.size(); ++i) {
        const Json& w = images[i];
        std::string p = path + ".images[" + std::to_string(i) + "]";
        if (!w.is_array() || w.empty()) throw json_path_error(p, "expected a nonempty word");
        std::vector<size_t> word;
        for (size_t k = 0; k < w.size(); ++k) word.push_back(letter(w[k], p + "[" + std::to_string(k) + "]"));
        m.images.push_back(std::move(word));
    }
    if (j.contains("coding")) {
        const Json& coding = j["coding"];
        if (!coding.is_array() || coding.size() != m.alphabet.size())
            throw json_path_error(path + ".coding", "expected one value per letter");
        for (size_t i = 0; i < coding.size(); ++i)
            m.coding.push_back(to_rat(coding[i], path + ".coding[" + std::to_string(i) + "]"));
    }
    m.seed = letter(field(j, "seed", path), path + ".seed");
    try {
        m.validate();
    } catch (const std::domain_error& e) {
        throw json_path_error(path, e.what());
    }
    return m;
}

Json intmatrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).get_str());
        rows.push_back(row);
    }
    return rows;
}

IntMatrix intmatrix_from_json(const Json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) throw json_path_error(path, "expected a nonempty array of rows");
    size_t rows = j.size();
    size_t cols = 0;
    std::vector<Int> entries;
    for (size_t i = 0; i < rows; ++i) {
        const Json& r = j[i];
        std::string p = path + "[" + std::to_string(i) + "]";
        if (!r.is_array() || r.empty()) throw json_path_error(p, "expected a nonempty row");
        if (i == 0)
            cols = r.size();
        else if (r.size() != cols)
            throw json_path_error(p, "ragged rows");
        for (size_t k = 0; k < cols; ++k) entries.push_back(to_int(r[k], p + "[" + std::to_string(k) + "]"));
    }
    return IntMatrix(rows, cols, std::move(entries));
}

Json series_to_json(const PuiseuxSeries& s) {
    Json j;
    j["vars"] = s.nvars();
    j["ram"] = s.ram();
    j["order"] = s.exact() ? Json(nullptr) : Json(s.order());
    Json terms = Json::array();
    for (const auto& [e, c] : s.terms()) {
        Json expo = Json::array();
        for (long x : e) expo.push_back(x);
        Json coords = Json::array();
        for (const auto& q : c.coords()) coords.push_back(rat_json(q));
        terms.push_back(Json::array({expo, coords}));
    }
    j["terms"] = terms;
    return j;
}

PuiseuxSeries series_from_json(const Json& j, const FieldPtr& f, const std::string& path) {
    size_t vars = static_cast<size_t>(to_long(field(j, "vars", path), path + ".vars"));
    long ram = to_long(field(j, "ram", path), path + ".ram");
    const Json& jorder = field(j, "order", path);
    long order = jorder.is_null() ? PuiseuxSeries::ORDER_EXACT : to_long(jorder, path + ".order");
    PuiseuxSeries s(vars, ram, f, order);
    const Json& terms = field(j, "terms", path);
    if (!terms.is_array()) throw json_path_error(path + ".terms", "expected an array");
    for (size_t i = 0; i < terms.size(); ++i) {
        std::string p = path + ".terms[" + std::to_string(i) + "]";
        const Json& t = terms[i];
        if (!t.is_array() || t.size() != 2) throw json_path_error(p, "expected [exponents, coords]");
        Exponent e;
        for (size_t k = 0; k < t[0].size(); ++k)
            e.push_back(to_long(t[0][k], p + "[0][" + std::to_string(k) + "]"));
        if (e.size() != vars) throw json_path_error(p, "exponent arity mismatch");
        std::vector<Rat> coords;
        for (size_t k = 0; k < t[1].size(); ++k)
            coords.push_back(to_rat(t[1][k], p + "[1][" + std::to_string(k) + "]"));
        if (coords.size() != f->degree()) throw json_path_error(p, "coefficient arity mismatch");
        s.set_coeff(e, NFElem(f, coords));
    }
    return s;
}

namespace {

Json poly_to_json(const Poly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json expo = Json::array();
        for (long x : e) expo.push_back(x);
        Json coords = Json::array();
        for (const auto& q : c.coords()) coords.push_back(rat_json(q));
        terms.push_back(Json::array({expo, coords}));
    }
    return terms;
}

Poly poly_from_json(const Json& j, size_t nvars, const FieldPtr& f, const std::string& path) {
    Poly p = poly_zero(nvars, f);
    if (!j.is_array()) throw json_path_error(path, "expected an array of terms");
    for (size_t i = 0; i < j.size(); ++i) {
        std::string tp = path + "[" + std::to_string(i) + "]";
        const Json& t = j[i];
        if (!t.is_array() || t.size() != 2) throw json_path_error(tp, "expected [exponents, coords]");
        Exponent e;
        for (size_t k = 0; k < t[0].size(); ++k) e.push_back(to_long(t[0][k], tp));
        if (e.size() != nvars) throw json_path_error(tp, "exponent arity mismatch");
        std::vector<Rat> coords;
        for (size_t k = 0; k < t[1].size(); ++k) coords.push_back(to_rat(t[1][k], tp));
        if (coords.size() != f->degree()) throw json_path_error(tp, "coefficient arity mismatch");
        p.set_coeff(e, NFElem(f, coords));
    }
    return p;
}

} // namespace

Json system_to_json(const MahlerSystem& s) {
    Json j;
    j["t"] = intmatrix_to_json(s.t);
    Json field_coeffs = Json::array();
    const QPoly& m = s.a.field()->modulus();
    for (long i = 0; i <= m.degree(); ++i) field_coeffs.push_back(rat_json(m.coeff(static_cast<size_t>(i))));
    j["field"] = field_coeffs;
    Json entries = Json::array();
    for (size_t i = 0; i < s.a.rows(); ++i)
        for (size_t k = 0; k < s.a.cols(); ++k) {
            Json e;
            e["num"] = poly_to_json(s.a.at(i, k).num());
            e["den"] = poly_to_json(s.a.at(i, k).den());
            entries.push_back(e);
        }
    j["a"] = Json{{"rows", s.a.rows()}, {"cols", s.a.cols()}, {"entries", entries}};
    j["inhom"] = s.inhom_embedding;
    return j;
}

MahlerSystem system_from_json(const Json& j, const std::string& path) {
    MahlerSystem s;
    s.t = intmatrix_from_json(field(j, "t", path), path + ".t");
    std::vector<Rat> fc;
    const Json& fj = field(j, "field", path);
    for (size_t i = 0; i < fj.size(); ++i) fc.push_back(to_rat(fj[i], path + ".field"));
    FieldPtr f = NumberField::make(QPoly(fc));
    const Json& a = field(j, "a", path);
    size_t rows = static_cast<size_t>(to_long(field(a, "rows", path + ".a"), path + ".a.rows"));
    size_t cols = static_cast<size_t>(to_long(field(a, "cols", path + ".a"), path + ".a.cols"));
    const Json& entries = field(a, "entries", path + ".a");
    if (!entries.is_array() || entries.size() != rows * cols)
        throw json_path_error(path + ".a.entries", "expected rows*cols entries");
    size_t nv = s.t.rows();
    s.a = RFMatrix(rows, cols, nv, f);
    for (size_t i = 0; i < rows; ++i)
        for (size_t k = 0; k < cols; ++k) {
            const Json& e = entries[i * cols + k];
            std::string p = path + ".a.entries[" + std::to_string(i * cols + k) + "]";
            Poly num = poly_from_json(field(e, "num", p), nv, f, p + ".num");
            Poly den = poly_from_json(field(e, "den", p), nv, f, p + ".den");
            try {
                s.a.at(i, k) = RationalFunction(num, den);
            } catch (const std::domain_error& ex) {
                throw json_path_error(p, ex.what());
            }
        }
    if (j.contains("inhom")) s.inhom_embedding = j["inhom"].get<bool>();
    return s;
}

Json gauge_to_json(const GaugeInput& g) {
    Json j;
    Json phi = Json::array();
    for (const auto& row : g.phi) {
        Json r = Json::array();
        for (const auto& s : row) r.push_back(series_to_json(s));
        phi.push_back(r);
    }
    j["phi"] = phi;
    Json b = Json::array();
    for (const auto& row : g.b) {
        Json r = Json::array();
        for (const auto& c : row) {
            Json coords = Json::array();
            for (const auto& q : c.coords()) coords.push_back(rat_json(q));
            r.push_back(coords);
        }
        b.push_back(r);
    }
    j["b"] = b;
    j["order"] = g.order;
    Json de = Json::array();
    for (long x : g.det_exponent) de.push_back(x);
    j["det_exponent"] = de;
    return j;
}

GaugeInput gauge_from_json(const Json& j, const FieldPtr& f, const std::string& path) {
    GaugeInput g;
    const Json& phi = field(j, "phi", path);
    if (!phi.is_array()) throw json_path_error(path + ".phi", "expected an array");
    for (size_t i = 0; i < phi.size(); ++i) {
        std::vector<PuiseuxSeries> row;
        const Json& r = phi[i];
        for (size_t k = 0; k < r.size(); ++k)
            row.push_back(series_from_json(r[k], f,
                                           path + ".phi[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
        g.phi.push_back(std::move(row));
    }
    const Json& b = field(j, "b", path);
    for (size_t i = 0; i < b.size(); ++i) {
        std::vector<NFElem> row;
        const Json& r = b[i];
        for (size_t k = 0; k < r.size(); ++k) {
            std::vector<Rat> coords;
            for (size_t c = 0; c < r[k].size(); ++c)
                coords.push_back(to_rat(r[k][c], path + ".b"));
            row.push_back(NFElem(f, coords));
        }
        g.b.push_back(std::move(row));
    }
    g.order = to_long(field(j, "order", path), path + ".order");
    const Json& de = field(j, "det_exponent", path);
    for (size_t i = 0; i < de.size(); ++i) g.det_exponent.push_back(to_long(de[i], path + ".det_exponent"));
    return g;
}

Json omega_to_json(const QuadraticIrrational& w) {
    return Json{{"a", w.a().get_str()}, {"b", w.b().get_str()}, {"c", w.c().get_str()},
                {"d", w.d().get_str()}};
}

QuadraticIrrational omega_from_json(const Json& j, const std::string& path) {
    try {
        return QuadraticIrrational(to_int(field(j, "a", path), path + ".a"),
                                   to_int(field(j, "b", path), path + ".b"),
                                   to_int(field(j, "c", path), path + ".c"),
                                   to_int(field(j, "d", path), path + ".d"));
    } catch (const std::domain_error& e) {
        throw json_path_error(path, e.what());
    }
}

Json value_to_json(const CertifiedValue& v, size_t digits) {
    Json j;
    j["value"] = Json{{"mid", v.value.mid_decimal(digits)}, {"rad", v.value.rad_decimal()}};
    j["terms"] = v.terms_used;
    j["p"] = v.precision_bits;
    return j;
}

Json spectrum_to_json(const SpectrumReport& r) {
    Json j;
    j["char_poly"] = r.char_polynomial.str();
    j["min_poly"] = r.min_polynomial.str();
    j["rho"] = Json{{"mid", r.rho.mid_decimal(30)}, {"rad", r.rho.rad_decimal()}};
    j["singular"] = r.singular;
    j["rho_gt_one"] = r.rho_gt_one;
    if (r.unity_order)
        j["root_of_unity_order"] = *r.unity_order;
    else
        j["root_of_unity_order"] = nullptr;
    return j;
}

Json hunt_result_to_json(const HuntResult& h) {
    Json j;
    j["found"] = h.found;
    j["degree"] = h.max_degree;
    j["height"] = h.height_bound.get_str();
    j["p"] = h.precision_bits;
    if (h.found) {
        j["polynomial"] = h.polynomial_str();
        Json terms = Json::array();
        for (const auto& t : h.polynomial) {
            Json e = Json::array();
            for (long x : t.exponents) e.push_back(x);
            terms.push_back(Json::array({t.coeff.get_str(), e}));
        }
        j["terms"] = terms;
    } else {
        j["none_up_to"] = Json{{"degree", h.max_degree}, {"height", h.height_bound.get_str()},
                               {"p", h.precision_bits}};
    }
    return j;
}

namespace {

Json obligation_to_json(const Obligation& ob) {
    Json j;
    j["kind"] = ob.kind_str();
    j["description"] = ob.description;
    j["citations"] = ob.citations;
    j["items"] = ob.item_labels;
    return j;
}

} // namespace

Json tree_to_json(const DecompositionTree& t) {
    Json j;
    j["kind"] = (!t.items.empty() && t.items[0].kind == EvalItem::Kind::Hecke) ? "hecke" : "mahler";
    j["conditional"] = t.conditional;
    if (t.radius_certificates) {
        Json s1;
        s1["rule"] = "first purity: split by multiplicative independence of spectral radii";
        s1["exponent_bound"] = t.radius_certificates->exponent_bound;
        Json ws = Json::array();
        for (const auto& w : t.radius_certificates->witnesses)
            ws.push_back(Json{{"i", t.items[w.i].label}, {"j", t.items[w.j].label}, {"a", w.a}, {"b", w.b}});
        s1["witnesses"] = ws;
        s1["note"] = "classes without a witness are pairwise multiplicatively independent up to "
                     "the exponent bound";
        j["stage1"] = s1;
    }
    Json classes = Json::array();
    for (const auto& cls : t.classes) {
        Json c;
        c["label"] = cls.label;
        Json labels = Json::array();
        for (size_t idx : cls.items) labels.push_back(t.items[idx].label);
        c["items"] = labels;
        if (cls.point_certificate) {
            Json pc;
            pc["rule"] = cls.point_certificate->independent
                             ? "second purity: split by multiplicative independence of the points"
                             : "dependent points: rewrite through an independent monomial base, "
                               "then lift";
            pc["verdict"] = cls.point_certificate->independent ? "independent" : "dependent";
            Json w = Json::array();
            for (const auto& x : cls.point_certificate->witness) w.push_back(x.get_str());
            pc["witness"] = w;
            c["point_certificate"] = pc;
        }
        Json points = Json::array();
        for (const auto& leaf : cls.points) {
            Json l;
            l["label"] = leaf.label;
            Json items = Json::array();
            for (size_t idx : leaf.items) items.push_back(t.items[idx].label);
            l["items"] = items;
            if (leaf.embedding && leaf.embedding_info) {
                Json emb;
                Json base = Json::array();
                for (const auto& b : leaf.embedding_info->base) base.push_back(rat_json(b));
                emb["base"] = base;
                Json rw = Json::array();
                for (const auto& r : leaf.embedding_info->rewrites) {
                    Json e = Json::array();
                    for (const auto& x : r.exponents) e.push_back(x.get_str());
                    rw.push_back(Json{{"label", r.label},
                                      {"sign", r.sign},
                                      {"exponents", e},
                                      {"monomials", r.component_monomials}});
                }
                emb["rewrites"] = rw;
                l["embedding"] = emb;
            }
            l["discharge_rule"] = "lifting: algebraic relations among the values lift to "
                                  "relations among the functions";
            Json obs = Json::array();
            for (const auto& ob : leaf.obligations) obs.push_back(obligation_to_json(ob));
            l["obligations"] = obs;
            points.push_back(l);
        }
        c["points"] = points;
        classes.push_back(c);
    }
    j["classes"] = classes;
    Json findings = Json::array();
    for (const auto& f : t.findings) findings.push_back(obligation_to_json(f));
    j["findings"] = findings;
    return j;
}

Json report_to_json(const PlannerReport& r) {
    Json j;
    j["verdict"] = r.verdict_str();
    j["conditional"] = r.conditional;
    Json obs = Json::array();
    for (const auto& ob : r.obligations) obs.push_back(obligation_to_json(ob));
    j["obligations"] = obs;
    j["text"] = r.text;
    return j;
}

std::vector<EvalItem> plan_items_from_json(const Json& j, const std::string& path) {
    const Json& items = field(j, "items", path);
    if (!items.is_array() || items.empty())
        throw json_path_error(path + ".items", "expected a nonempty array");
    std::vector<EvalItem> out;
    for (size_t i = 0; i < items.size(); ++i) {
        const Json& it = items[i];
        std::string p = path + ".items[" + std::to_string(i) + "]";
        EvalItem e;
        e.label = field(it, "label", p).get<std::string>();
        std::string kind = it.contains("kind") ? it["kind"].get<std::string>() : "mahler";
        if (kind == "hecke") {
            e.kind = EvalItem::Kind::Hecke;
            QuadraticIrrational w = omega_from_json(field(it, "omega", p), p + ".omega");
            Rat at = to_rat(field(it, "at", p), p + ".at");
            e.point = {at};
            e.hecke = HmItem{w, at};
            e.function_id = it.contains("function_id") ? it["function_id"].get<std::string>()
                                                       : "hm[" + w.str() + "]";
        } else {
            e.kind = EvalItem::Kind::Mahler;
            e.fixture = it.contains("fixture") ? it["fixture"].get<std::string>() : "";
            e.function_id = it.contains("function_id") ? it["function_id"].get<std::string>() : e.fixture;
            const Json& pt = field(it, "point", p);
            if (pt.is_array())
                for (size_t k = 0; k < pt.size(); ++k)
                    e.point.push_back(to_rat(pt[k], p + ".point[" + std::to_string(k) + "]"));
            else
                e.point.push_back(to_rat(pt, p + ".point"));
            if (it.contains("matrix")) {
                const Json& mj = it["matrix"];
                IntMatrix t = mj.is_string() ? fixtures::matrix_fixture(mj.get<std::string>())
                                             : intmatrix_from_json(mj, p + ".matrix");
                e.spectrum = spectral_radius(t);
            } else if (fixtures::has_system(e.fixture)) {
                e.spectrum = spectral_radius(fixtures::system_fixture(e.fixture).system.t);
            } else {
                throw json_path_error(p, "mahler item needs a matrix or a known system fixture");
            }
        }
        if (it.contains("tower")) e.derivative_tower = it["tower"].get<bool>();
        if (it.contains("tower_start")) e.tower_start = to_long(it["tower_start"], p + ".tower_start");
        if (it.contains("eq_order")) e.eq_order = to_long(it["eq_order"], p + ".eq_order");
        if (it.contains("eq_base")) e.eq_base = to_long(it["eq_base"], p + ".eq_base");
        if (it.contains("inhomogeneous")) e.inhomogeneous = it["inhomogeneous"].get<bool>();
        if (it.contains("transcendence_citation"))
            e.transcendence_citation = it["transcendence_citation"].get<std::string>();
        if (it.contains("function_citation"))
            e.function_citation = it["function_citation"].get<std::string>();
        out.push_back(std::move(e));
    }
    return out;
}

HuntRequestSpec hunt_request_from_json(const Json& j, const std::string& path) {
    HuntRequestSpec spec;
    const Json& values = field(j, "values", path);
    if (!values.is_array() || values.empty())
        throw json_path_error(path + ".values", "expected a nonempty array");
    for (size_t i = 0; i < values.size(); ++i) {
        const Json& v = values[i];
        std::string p = path + ".values[" + std::to_string(i) + "]";
        HuntValueSpec hv;
        hv.at = to_rat(field(v, "at", p), p + ".at");
        if (v.contains("omega"))
            hv.omega = omega_from_json(v["omega"], p + ".omega");
        else {
            hv.fixture = field(v, "fixture", p).get<std::string>();
            if (!fixtures::has_stream(hv.fixture))
                throw json_path_error(p + ".fixture", "unknown stream fixture");
        }
        if (v.contains("power")) hv.power = static_cast<unsigned long>(to_long(v["power"], p + ".power"));
        spec.values.push_back(std::move(hv));
    }
    if (j.contains("degree")) spec.degree = to_long(j["degree"], path + ".degree");
    if (j.contains("height")) spec.height = to_int(j["height"], path + ".height");
    if (j.contains("prec")) spec.precision = to_long(j["prec"], path + ".prec");
    if (spec.precision == 0) throw json_path_error(path + ".prec", "missing precision");
    return spec;
}

} // namespace mahler
