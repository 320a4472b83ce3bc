#include "mahler/fixtures.hpp"

#include <map>
#include <stdexcept>

namespace mahler::fixtures {

namespace {

FieldPtr q_field() { return NumberField::rationals(); }

FieldPtr eisenstein() {
    static FieldPtr f = NumberField::make(QPoly({Rat(1), Rat(1), Rat(1)}));
    return f;
}

} // namespace

Morphism fibonacci() {
    Morphism m;
    m.alphabet = {"0", "1"};
    m.images = {{0, 1}, {0}};
    m.coding = {Rat(0), Rat(1)};
    m.seed = 0;
    return m;
}

Morphism tribonacci() {
    Morphism m;
    m.alphabet = {"0", "1", "2"};
    m.images = {{0, 1}, {0, 2}, {0}};
    m.coding = {Rat(0), Rat(1), Rat(2)};
    m.seed = 0;
    return m;
}

Morphism w_word() {
    Morphism m;
    m.alphabet = {"0", "1"};
    m.images = {{0, 1, 1, 0}, {1, 0, 1}};
    m.coding = {Rat(0), Rat(1)};
    m.seed = 0;
    return m;
}

Morphism thue_morse() {
    Morphism m;
    m.alphabet = {"0", "1"};
    m.images = {{0, 1}, {1, 0}};
    m.coding = {Rat(0), Rat(1)};
    m.seed = 0;
    return m;
}

Morphism baum_sweet() {
    // fixed point 0121 1321 ..., coded 1,1,0,0 reproduces the sequence
    Morphism m;
    m.alphabet = {"0", "1", "2", "3"};
    m.images = {{0, 1}, {2, 1}, {1, 3}, {3, 3}};
    m.coding = {Rat(1), Rat(1), Rat(0), Rat(0)};
    m.seed = 0;
    return m;
}

Dfao thue_morse_dfao() {
    Dfao d;
    d.base = 2;
    d.states = 2;
    d.initial = 0;
    d.delta = {{0, 1}, {1, 0}};
    d.output = {Rat(0), Rat(1)};
    return d;
}

Dfao powers_of_two_dfao() {
    Dfao d;
    d.base = 2;
    d.states = 3;
    d.initial = 0;
    d.delta = {{0, 1}, {1, 2}, {2, 2}};
    d.output = {Rat(0), Rat(1), Rat(0)};
    return d;
}

ScalarMahlerEq thue_morse_eq() {
    FieldPtr q = q_field();
    ScalarMahlerEq eq;
    eq.base = 2;
    eq.p = {poly_const(1, q, Rat(1)), -(poly_const(1, q, Rat(1)) - poly_var(1, q, 0))};
    Poly den = poly_const(1, q, Rat(1)) - poly_monomial(1, q, NFElem::from_rat(q, Rat(1)), {2});
    eq.rhs = RationalFunction(poly_var(1, q, 0), den);
    return eq;
}

ScalarMahlerEq paperfolding_eq() {
    FieldPtr q = q_field();
    ScalarMahlerEq eq;
    eq.base = 2;
    eq.p = {poly_const(1, q, Rat(1)), poly_const(1, q, Rat(-1))};
    Poly den = poly_const(1, q, Rat(1)) - poly_monomial(1, q, NFElem::from_rat(q, Rat(1)), {4});
    eq.rhs = RationalFunction(poly_var(1, q, 0), den);
    return eq;
}

ScalarMahlerEq baum_sweet_eq() {
    // f(z) = z f(z^2) + f(z^4)
    FieldPtr q = q_field();
    ScalarMahlerEq eq;
    eq.base = 2;
    eq.p = {poly_const(1, q, Rat(1)), -poly_var(1, q, 0), poly_const(1, q, Rat(-1))};
    return eq;
}

Rat paperfolding_term(unsigned long n) {
    if (n == 0) return Rat(0);
    while (n % 2 == 0) n /= 2;
    return (n % 4 == 1) ? Rat(1) : Rat(0);
}

Rat baum_sweet_term(unsigned long n) {
    if (n == 0) return Rat(1);
    // no block of consecutive zeros of odd length in the binary expansion
    int zeros = 0;
    while (n > 0) {
        if (n % 2 == 0)
            ++zeros;
        else {
            if (zeros % 2 == 1) return Rat(0);
            zeros = 0;
        }
        n /= 2;
    }
    return (zeros % 2 == 1) ? Rat(0) : Rat(1);
}

bool sierpinski_rule(unsigned long n1, unsigned long n2) {
    while (n1 > 0 || n2 > 0) {
        if (n1 % 3 == 1 && n2 % 3 == 1) return false;
        n1 /= 3;
        n2 /= 3;
    }
    return true;
}

namespace {

CoefficientStream specialized_morphic(const Morphism& m, std::string name) {
    return CoefficientStream::from_morphism(m, std::move(name));
}

} // namespace

std::vector<std::string> stream_names() {
    return {"tm",        "pf",       "bs",        "fib",      "trib",
            "w",         "power2",   "hm-sqrt2",  "hm-1+sqrt2", "hm-2sqrt2",
            "hm-golden", "hm-sqrt3", "geometric"};
}

bool has_stream(const std::string& name) {
    for (const auto& n : stream_names())
        if (n == name) return true;
    return false;
}

CoefficientStream stream(const std::string& name) {
    auto build = [&]() -> CoefficientStream {
        if (name == "tm") return CoefficientStream::from_dfao(thue_morse_dfao(), "tm");
        if (name == "pf") return CoefficientStream::closed_form(paperfolding_term, Rat(1), 0, "pf");
        if (name == "bs") return CoefficientStream::closed_form(baum_sweet_term, Rat(1), 0, "bs");
        if (name == "fib") return specialized_morphic(fibonacci(), "fib");
        if (name == "trib") return specialized_morphic(tribonacci(), "trib");
        if (name == "w") return specialized_morphic(w_word(), "w");
        if (name == "power2") return CoefficientStream::from_dfao(powers_of_two_dfao(), "power2");
        if (name == "geometric")
            return CoefficientStream::closed_form([](unsigned long) { return Rat(1); }, Rat(1), 0,
                                                  "geometric");
        if (name.rfind("hm-", 0) == 0)
            return CoefficientStream::hecke_mahler(omega_fixture(name.substr(3)), name);
        throw std::domain_error("unknown stream fixture: " + name);
    };
    CoefficientStream s = build();
    s.verify_growth(); // fixtures self-verify on load
    return s;
}

std::vector<std::string> matrix_names() { return {"t1", "t2", "t3", "t4", "t5", "2I2", "3I2"}; }

bool has_matrix(const std::string& name) {
    for (const auto& n : matrix_names())
        if (n == name) return true;
    return false;
}

IntMatrix matrix_fixture(const std::string& name) {
    if (name == "t1") return IntMatrix(2, 2, {Int(1), Int(1), Int(1), Int(0)});
    if (name == "t2") return IntMatrix(2, 2, {Int(2), Int(2), Int(1), Int(2)});
    if (name == "t3")
        return IntMatrix(3, 3,
                         {Int(1), Int(1), Int(0), Int(1), Int(0), Int(1), Int(1), Int(0), Int(0)});
    if (name == "t4")
        return IntMatrix(3, 3,
                         {Int(1), Int(0), Int(0), Int(1), Int(1), Int(0), Int(1), Int(1), Int(1)});
    if (name == "t5")
        return IntMatrix(3, 3,
                         {Int(1), Int(1), Int(1), Int(0), Int(2), Int(1), Int(1), Int(2), Int(2)});
    if (name == "2I2") return IntMatrix::scalar(2, Int(2));
    if (name == "3I2") return IntMatrix::scalar(2, Int(3));
    throw std::domain_error("unknown matrix fixture: " + name);
}

bool has_omega(const std::string& name) {
    return name == "sqrt2" || name == "1+sqrt2" || name == "2sqrt2" || name == "golden" ||
           name == "sqrt3";
}

QuadraticIrrational omega_fixture(const std::string& name) {
    if (name == "sqrt2") return QuadraticIrrational(Int(0), Int(1), Int(1), Int(2));
    if (name == "1+sqrt2") return QuadraticIrrational(Int(1), Int(1), Int(1), Int(2));
    if (name == "2sqrt2") return QuadraticIrrational(Int(0), Int(2), Int(1), Int(2));
    if (name == "golden") return QuadraticIrrational(Int(1), Int(1), Int(2), Int(5));
    if (name == "sqrt3") return QuadraticIrrational(Int(0), Int(1), Int(1), Int(3));
    throw std::domain_error("unknown omega fixture: " + name);
}

namespace {

std::vector<Ball> stacked_components(const std::vector<std::function<Ball(const std::vector<Rat>&, long)>>& fns,
                                     const std::vector<Rat>& point, long p) {
    std::vector<Ball> out;
    out.reserve(fns.size());
    for (const auto& f : fns) out.push_back(f(point, p));
    return out;
}

std::function<Ball(const std::vector<Rat>&, long)> comp_stream(const std::string& name,
                                                               size_t coord, unsigned long power) {
    return [name, coord, power](const std::vector<Rat>& pt, long p) {
        return eval_series(stream(name), rat_pow(pt.at(coord), static_cast<long>(power)), p).value;
    };
}

std::function<Ball(const std::vector<Rat>&, long)> comp_stream_deriv(const std::string& name) {
    return [name](const std::vector<Rat>& pt, long p) {
        return eval_series(stream(name).derivative(), pt.at(0), p).value;
    };
}

std::function<Ball(const std::vector<Rat>&, long)> comp_const(long v) {
    return [v](const std::vector<Rat>&, long p) {
        return Ball::exact_int(v, static_cast<mpfr_prec_t>(p + 64));
    };
}

Ball sierpinski_eval(const std::vector<Rat>& pt, long p) {
    Rat a0 = ::abs(pt.at(0)), a1 = ::abs(pt.at(1));
    Rat r = a0 > a1 ? a0 : a1;
    if (!(r < 1)) throw std::domain_error("point outside the unit polydisk");
    // pairs of total degree d contribute at most (d+1) r^d
    Rat target = make_rat(Int(1), int_pow(Int(2), static_cast<unsigned long>(p + 2)));
    unsigned long n = 16;
    auto tail = [&](unsigned long m) -> Rat {
        // sum_{d>m} (d+1) r^d <= (m+2) r^(m+1) / (1-r)^2
        return Rat(static_cast<long>(m + 2)) * rat_pow(r, static_cast<long>(m + 1)) /
               ((1 - r) * (1 - r));
    };
    while (tail(n) > target) {
        if (n > (1UL << 22)) throw precision_error("point too close to the boundary");
        n *= 2;
    }
    Rat sum(0);
    for (unsigned long d = 0; d <= n; ++d)
        for (unsigned long i = 0; i <= d; ++i)
            if (sierpinski_rule(i, d - i))
                sum += rat_pow(pt[0], static_cast<long>(i)) * rat_pow(pt[1], static_cast<long>(d - i));
    return Ball::from_endpoints(sum - tail(n), sum + tail(n), static_cast<mpfr_prec_t>(p + 64));
}

MahlerSystem cobham_to_system(const CobhamSystem& c) {
    MahlerSystem s;
    s.t = c.t;
    s.a = c.a;
    return s;
}

SystemFixture build_system_fixture(const std::string& name) {
    FieldPtr q = q_field();
    SystemFixture f;
    f.name = name;
    if (name == "tm" || name == "tm-deriv") {
        MahlerSystem base = companion_system(thue_morse_eq());
        f.provenance = "Thue-Morse generating series, inhomogeneous order-one equation";
        if (name == "tm") {
            f.system = base;
            f.components = [](const std::vector<Rat>& pt, long p) {
                return stacked_components({comp_stream("tm", 0, 1), comp_const(1)}, pt, p);
            };
        } else {
            f.system = derivative_system(base);
            f.components = [](const std::vector<Rat>& pt, long p) {
                return stacked_components({comp_stream("tm", 0, 1), comp_const(1),
                                           comp_stream_deriv("tm"), comp_const(0)},
                                          pt, p);
            };
        }
    } else if (name == "pf" || name == "pf-deriv") {
        MahlerSystem base = companion_system(paperfolding_eq());
        f.provenance = "regular paperfolding generating series, inhomogeneous order-one equation";
        if (name == "pf") {
            f.system = base;
            f.components = [](const std::vector<Rat>& pt, long p) {
                return stacked_components({comp_stream("pf", 0, 1), comp_const(1)}, pt, p);
            };
        } else {
            f.system = derivative_system(base);
            f.components = [](const std::vector<Rat>& pt, long p) {
                return stacked_components({comp_stream("pf", 0, 1), comp_const(1),
                                           comp_stream_deriv("pf"), comp_const(0)},
                                          pt, p);
            };
        }
    } else if (name == "bs" || name == "bs-deriv") {
        MahlerSystem base = companion_system(baum_sweet_eq());
        f.provenance = "Baum-Sweet generating series, order-two equation";
        if (name == "bs") {
            f.system = base;
            f.components = [](const std::vector<Rat>& pt, long p) {
                return stacked_components({comp_stream("bs", 0, 1), comp_stream("bs", 0, 2)}, pt, p);
            };
        } else {
            f.system = derivative_system(base);
            f.components = [](const std::vector<Rat>& pt, long p) {
                auto d2 = [](const std::vector<Rat>& q, long pp) {
                    // d/dz f(z^2) = 2 z f'(z^2)
                    Ball fp = eval_series(stream("bs").derivative(), q.at(0) * q.at(0), pp).value;
                    return fp.mul_rat(2 * q.at(0));
                };
                return stacked_components({comp_stream("bs", 0, 1), comp_stream("bs", 0, 2),
                                           comp_stream_deriv("bs"), d2},
                                          pt, p);
            };
        }
    } else if (name == "fib2" || name == "trib3" || name == "w2") {
        Morphism m = (name == "fib2") ? fibonacci() : (name == "trib3") ? tribonacci() : w_word();
        auto sys = std::make_shared<CobhamSystem>(cobham_construct(m));
        f.provenance = "Cobham system of the " +
                       std::string(name == "fib2" ? "Fibonacci" : (name == "trib3" ? "Tribonacci" : "0110/101")) +
                       " morphism";
        f.system = cobham_to_system(*sys);
        f.components = [sys](const std::vector<Rat>& pt, long p) {
            std::vector<Ball> out;
            for (size_t a = 0; a < sys->letters(); ++a)
                out.push_back(eval_cobham_component(*sys, a, pt, p).value);
            return out;
        };
    } else if (name == "sierpinski") {
        Poly factor = poly_zero(2, q);
        const long ex[8][2] = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {0, 2}, {2, 1}, {1, 2}, {2, 2}};
        for (const auto& e : ex) factor.set_coeff({e[0], e[1]}, NFElem::from_rat(q, Rat(1)));
        f.provenance = "two-dimensional ternary carpet rule";
        f.system.t = IntMatrix::scalar(2, Int(3));
        f.system.a = RFMatrix(1, 1, 2, q);
        f.system.a.at(0, 0) = RationalFunction::from_poly(factor);
        f.components = [](const std::vector<Rat>& pt, long p) {
            return std::vector<Ball>{sierpinski_eval(pt, p)};
        };
    } else if (name == "sqrtpow2") {
        f.provenance = "sum of z^(2^n) evaluated at two independent coordinates";
        f.system.t = IntMatrix::scalar(2, Int(2));
        f.system.a = RFMatrix(3, 3, 2, q);
        f.system.a.at(0, 0) = RationalFunction::constant(2, q, Rat(1));
        f.system.a.at(1, 0) = RationalFunction::from_poly(poly_var(2, q, 0));
        f.system.a.at(1, 1) = RationalFunction::constant(2, q, Rat(1));
        f.system.a.at(2, 0) = RationalFunction::from_poly(poly_var(2, q, 1));
        f.system.a.at(2, 2) = RationalFunction::constant(2, q, Rat(1));
        f.components = [](const std::vector<Rat>& pt, long p) {
            return stacked_components(
                {comp_const(1), comp_stream("power2", 0, 1), comp_stream("power2", 1, 1)}, pt, p);
        };
    } else {
        throw std::domain_error("unknown system fixture: " + name);
    }
    return f;
}

const std::map<std::string, std::vector<Rat>>& self_check_points() {
    static const std::map<std::string, std::vector<Rat>> pts{
        {"tm", {make_rat(1, 2)}},       {"pf", {make_rat(1, 2)}},
        {"bs", {make_rat(1, 2)}},       {"tm-deriv", {make_rat(1, 3)}},
        {"pf-deriv", {make_rat(1, 3)}}, {"bs-deriv", {make_rat(1, 3)}},
        {"fib2", {make_rat(1, 3), make_rat(1, 5)}},
        {"trib3", {make_rat(1, 3), make_rat(1, 5), make_rat(1, 7)}},
        {"w2", {make_rat(1, 3), make_rat(1, 5)}},
        {"sierpinski", {make_rat(1, 3), make_rat(1, 5)}},
        {"sqrtpow2", {make_rat(1, 3), make_rat(1, 5)}},
    };
    return pts;
}

} // namespace

std::vector<std::string> system_names() {
    return {"tm", "pf", "bs", "tm-deriv", "pf-deriv", "bs-deriv", "fib2", "trib3", "w2",
            "sierpinski", "sqrtpow2"};
}

bool has_system(const std::string& name) {
    for (const auto& n : system_names())
        if (n == name) return true;
    return false;
}

std::vector<Ball> system_residual(const SystemFixture& f, const std::vector<Rat>& point, long p) {
    std::vector<Rat> t_point = f.system.transform_point(point);
    return eval_residual(f.system, point, f.components(point, p), f.components(t_point, p));
}

SystemFixture system_fixture(const std::string& name) {
    SystemFixture f = build_system_fixture(name);
    // self-verification on load: the functional equation must hold at a
    // small interior point
    auto res = system_residual(f, self_check_points().at(name), 80);
    for (const auto& b : res)
        if (!b.contains_zero())
            throw std::logic_error("fixture " + name + " failed its residual self-check");
    return f;
}

MahlerSystem fibonacci_system_q() {
    return cobham_to_system(cobham_construct(fibonacci()));
}

GaugeInput fibonacci_gauge(long order, long margin) {
    FieldPtr q = q_field();
    CobhamSystem fib = cobham_construct(fibonacci());
    auto f = fib.all_components(order + margin);
    auto mono = [&](long e0, long e1, const Rat& c) {
        return PuiseuxSeries::monomial(2, 1, q, NFElem::from_rat(q, c), {e0, e1});
    };
    GaugeInput in;
    in.phi = {{f[0], mono(-1, -1, Rat(1)) - mono(-1, 0, Rat(1))},
              {f[1], mono(0, -1, Rat(1)) - mono(-1, -1, Rat(1))}};
    in.b = {{NFElem::from_rat(q, Rat(1)), NFElem::from_rat(q, Rat(0))},
            {NFElem::from_rat(q, Rat(0)), NFElem::from_rat(q, Rat(-1))}};
    in.order = order;
    in.det_exponent = {-1, -1};
    return in;
}

MahlerSystem tribonacci_system_eisenstein() {
    FieldPtr f = eisenstein();
    MahlerSystem s;
    s.t = matrix_fixture("t3");
    s.a = RFMatrix(3, 3, 3, f);
    for (size_t b = 0; b < 3; ++b) s.a.at(0, b) = RationalFunction::constant(3, f, Rat(1));
    s.a.at(1, 0) = RationalFunction::from_poly(poly_var(3, f, 0));
    s.a.at(2, 1) = RationalFunction::from_poly(poly_var(3, f, 0));
    return s;
}

GaugeInput tribonacci_gauge(long half_order, long margin) {
    FieldPtr f = eisenstein();
    NFElem one = NFElem::from_rat(f, Rat(1));
    NFElem j = NFElem::generator(f);
    NFElem jbar = j.conj();
    IntMatrix t = matrix_fixture("t3");

    long work = half_order + margin;

    auto half_mono = [&](const NFElem& c, long e0, long e1, long e2) {
        return PuiseuxSeries::monomial(3, 2, f, c, {e0, e1, e2});
    };

    // inhomogeneous equation for h: coefficients of h(T^k z) and forcing
    std::vector<PuiseuxSeries> c{half_mono(jbar, 0, 0, 0), half_mono(j, 2, 2, 0),
                                 half_mono(one, 6, 4, 2)};
    PuiseuxSeries forcing = -half_mono(one, 1, 1, 1) + half_mono(jbar, 3, 3, 1) +
                            half_mono(j, 5, 3, 1) + half_mono(one, 11, 7, 3);
    PuiseuxSeries h = solve_mahler_fixed_point(c, t, forcing, work);

    PuiseuxSeries l = half_mono(one, -1, -1, -1) + half_mono(j, -1, -1, 1) +
                      half_mono(jbar, -1, 1, -1) + half_mono(one, 1, 1, -1);
    PuiseuxSeries g = l + h;
    PuiseuxSeries gbar = g.conj();

    // column of analytic solutions from the Cobham construction, lifted to
    // the Eisenstein field at ramification 2
    CobhamSystem trib = cobham_construct(tribonacci());
    auto comps = trib.all_components(work / 2 + 2);
    auto lift = [&](const PuiseuxSeries& s) {
        PuiseuxSeries out(3, 2, f, s.exact() ? PuiseuxSeries::ORDER_EXACT : 2 * s.order());
        for (const auto& [e, cf] : s.terms()) {
            Exponent e2(3);
            for (size_t i = 0; i < 3; ++i) e2[i] = 2 * e[i];
            out.set_coeff(e2, NFElem::from_rat(f, cf.rat()));
        }
        return out;
    };

    auto g_t = substitute_monomial(g, t);
    auto g_tt = substitute_monomial(g_t, t);
    auto gbar_t = g_t.conj();
    auto gbar_tt = g_tt.conj();

    GaugeInput in;
    in.phi.resize(3);
    in.phi[0] = {lift(comps[0]), g, gbar};
    in.phi[1] = {lift(comps[1]), g_t.scale(jbar) * half_mono(one, 2, 0, 0),
                 gbar_t.scale(j) * half_mono(one, 2, 0, 0)};
    in.phi[2] = {lift(comps[2]), g_tt.scale(j) * half_mono(one, 4, 2, 0),
                 gbar_tt.scale(jbar) * half_mono(one, 4, 2, 0)};
    in.b = {{one, NFElem::from_rat(f, Rat(0)), NFElem::from_rat(f, Rat(0))},
            {NFElem::from_rat(f, Rat(0)), j, NFElem::from_rat(f, Rat(0))},
            {NFElem::from_rat(f, Rat(0)), NFElem::from_rat(f, Rat(0)), jbar}};
    in.order = half_order;
    in.det_exponent = {-2, -2, -2};
    return in;
}

std::vector<EvalItem> bundled_independence_items() {
    auto spec2 = spectral_radius(IntMatrix(1, 1, {Int(2)}));
    auto spec_fib = spectral_radius(matrix_fixture("t1"));
    auto spec_trib = spectral_radius(matrix_fixture("t3"));
    auto spec_w = spectral_radius(matrix_fixture("t2"));
    const std::string abu = "[ABu07] Theorem 4";

    auto mk = [](std::string label, std::string fixture, std::string fid, const Rat& pt,
                 SpectrumReport spec) {
        EvalItem it;
        it.label = std::move(label);
        it.kind = EvalItem::Kind::Mahler;
        it.fixture = std::move(fixture);
        it.function_id = std::move(fid);
        it.point = {pt};
        it.spectrum = std::move(spec);
        return it;
    };

    std::vector<EvalItem> items;
    for (const char* pt : {"1/2", "1/3", "1/5"}) {
        EvalItem it = mk(std::string("fib@") + pt, "fib", "fib", parse_rat(pt), spec_fib);
        it.transcendence_citation = abu;
        items.push_back(it);
    }
    for (const char* pt : {"1/2", "1/6"}) {
        EvalItem it = mk(std::string("trib@") + pt, "trib", "trib", parse_rat(pt), spec_trib);
        it.transcendence_citation = abu;
        items.push_back(it);
    }
    for (const char* pt : {"1/3", "1/7"}) {
        EvalItem it = mk(std::string("w@") + pt, "w", "w", parse_rat(pt), spec_w);
        it.transcendence_citation = abu;
        items.push_back(it);
    }
    {
        EvalItem it = mk("tm@1/2", "tm", "tm", make_rat(1, 2), spec2);
        it.transcendence_citation = abu;
        it.function_citation = "[Ni_Liv] Theorem 3.5";
        it.inhomogeneous = true;
        items.push_back(it);
    }
    {
        EvalItem it = mk("tm-tower@1/10", "tm-deriv", "tm", make_rat(1, 10), spec2);
        it.derivative_tower = true;
        it.tower_start = 1;
        it.inhomogeneous = true;
        it.function_citation = "[Ni84] Theorem 3";
        items.push_back(it);
    }
    {
        EvalItem it = mk("pf@1/2", "pf", "pf", make_rat(1, 2), spec2);
        it.transcendence_citation = abu;
        it.function_citation = "[Ni_Liv] Theorem 3.5";
        it.inhomogeneous = true;
        items.push_back(it);
    }
    {
        EvalItem it = mk("pf-tower@1/7", "pf-deriv", "pf", make_rat(1, 7), spec2);
        it.derivative_tower = true;
        it.tower_start = 1;
        it.inhomogeneous = true;
        it.function_citation = "[Ni84] Theorem 3";
        items.push_back(it);
    }
    {
        EvalItem it = mk("bs-tower@1/3", "bs-deriv", "bs", make_rat(1, 3), spec2);
        it.derivative_tower = true;
        it.tower_start = 0;
        it.eq_order = 2;
        it.function_citation = "[DHR] Theorem 4.3";
        items.push_back(it);
    }
    return items;
}

std::vector<EvalItem> remark_dependence_items() {
    std::vector<EvalItem> items;
    auto mk = [](std::string label, const std::string& omega, const Rat& pt) {
        EvalItem it;
        it.label = std::move(label);
        it.kind = EvalItem::Kind::Hecke;
        it.fixture = "hm-" + omega;
        it.function_id = "hm[" + omega + "]";
        it.point = {pt};
        it.hecke = HmItem{omega_fixture(omega), pt};
        return it;
    };
    items.push_back(mk("hm[sqrt2]@1/2", "sqrt2", make_rat(1, 2)));
    items.push_back(mk("hm[sqrt2]@-1/2", "sqrt2", make_rat(-1, 2)));
    items.push_back(mk("hm[2sqrt2]@1/4", "2sqrt2", make_rat(1, 4)));
    return items;
}

} // namespace mahler::fixtures
