#include "mahler/systems.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <variant>

#include "mahler/multiplicative.hpp"

namespace mahler {

void ScalarMahlerEq::validate() const {
    if (base < 2) throw std::domain_error("mahler base must be >= 2");
    if (p.size() < 2) throw std::domain_error("equation needs order >= 1");
    for (const auto& c : p)
        if (c.nvars() != 1) throw std::domain_error("scalar equation must be univariate");
    if (p.front().is_zero()) throw std::domain_error("p_0 = 0: shift the equation first");
    if (p.back().is_zero()) throw std::domain_error("leading coefficient p_n must be nonzero");
}

std::vector<Rat> MahlerSystem::transform_point(const std::vector<Rat>& alpha, unsigned long k) const {
    if (alpha.size() != nvars()) throw std::domain_error("point arity mismatch");
    IntMatrix tk = t.pow(k);
    std::vector<Rat> out(alpha.size(), Rat(1));
    for (size_t i = 0; i < alpha.size(); ++i)
        for (size_t j = 0; j < alpha.size(); ++j) {
            const Int& e = tk.at(i, j);
            if (e == 0) continue;
            out[i] *= rat_pow(alpha[j], e.get_si());
        }
    return out;
}

MahlerSystem companion_system(const ScalarMahlerEq& eq) {
    eq.validate();
    size_t n = eq.p.size() - 1;
    FieldPtr field = eq.p.front().field();
    bool inhom = eq.rhs.has_value() && !eq.rhs->is_zero();
    size_t m = n + (inhom ? 1 : 0);

    MahlerSystem s;
    s.t = IntMatrix(1, 1, {Int(eq.base)});
    s.a = RFMatrix(m, m, 1, field);
    s.inhom_embedding = inhom;

    RationalFunction p0 = RationalFunction::from_poly(eq.p[0]);
    for (size_t k = 1; k <= n; ++k)
        s.a.at(0, k - 1) = -(RationalFunction::from_poly(eq.p[k]) / p0);
    for (size_t i = 1; i < n; ++i)
        s.a.at(i, i - 1) = RationalFunction::constant(1, field, Rat(1));
    if (inhom) {
        s.a.at(0, m - 1) = *eq.rhs / p0;
        s.a.at(m - 1, m - 1) = RationalFunction::constant(1, field, Rat(1));
    }
    return s;
}

MahlerSystem iterate_system(const MahlerSystem& s, unsigned long l) {
    if (l < 1) throw std::domain_error("iteration count must be >= 1");
    MahlerSystem out;
    out.t = s.t.pow(l);
    out.inhom_embedding = s.inhom_embedding;
    RFMatrix acc = s.a;
    IntMatrix tk = s.t;
    for (unsigned long k = 1; k < l; ++k) {
        acc = acc * s.a.substitute(tk);
        tk = tk * s.t;
    }
    out.a = acc;
    return out;
}

MahlerSystem derivative_system(const MahlerSystem& s) {
    if (s.nvars() != 1) throw std::domain_error("derivative system is univariate only");
    size_t m = s.dim();
    FieldPtr field = s.a.field();
    long q = s.t.at(0, 0).get_si();

    RFMatrix big(2 * m, 2 * m, 1, field);
    RFMatrix da = s.a.derivative();
    // q z^{q-1}
    Poly qz = poly_monomial(1, field, NFElem::from_rat(field, Rat(q)), {q - 1});
    RationalFunction qzr = RationalFunction::from_poly(qz);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            big.at(i, j) = s.a.at(i, j);
            big.at(m + i, j) = da.at(i, j);
            big.at(m + i, m + j) = qzr * s.a.at(i, j);
        }
    MahlerSystem out;
    out.t = s.t;
    out.a = big;
    out.inhom_embedding = s.inhom_embedding;
    return out;
}

SpectrumReport spectral_radius(const IntMatrix& t, long bits) {
    if (!t.square()) throw std::domain_error("spectral radius of non-square matrix");
    if (!t.nonnegative()) throw std::domain_error("spectral radius needs nonnegative entries");
    SpectrumReport r;
    r.char_polynomial = char_poly(t);
    r.singular = (t.det() == 0);

    QPoly sf = squarefree_part(r.char_polynomial);
    auto iv = isolate_largest_real_root(sf);
    if (!iv) throw std::logic_error("nonnegative matrix without real eigenvalue");
    // A nonnegative matrix has its spectral radius among the real roots.
    RootInterval refined = refine_root(sf, *iv, bits + 16);
    r.rho_iv = refined;
    r.rho = root_ball(refined, static_cast<mpfr_prec_t>(bits + 32));
    r.min_polynomial = minimal_polynomial_of_root(sf, refined);

    // certified strict comparison with 1
    if (refined.exact())
        r.rho_gt_one = refined.lo > 1;
    else if (refined.lo >= 1)
        r.rho_gt_one = true;
    else if (refined.hi <= 1)
        r.rho_gt_one = false;
    else if (sf.eval(Rat(1)) == 0)
        r.rho_gt_one = false; // the isolated root is exactly 1
    else
        r.rho_gt_one = sturm_count(sf, Rat(1), refined.hi) >= 1;
    r.unity_order = root_of_unity_factor(r.char_polynomial, t.rows());
    return r;
}

ClassMResult class_m_check(const IntMatrix& t) {
    if (!t.square() || !t.nonnegative())
        throw std::domain_error("class M test needs a square nonnegative matrix");
    SpectrumReport r = spectral_radius(t, 64);
    if (r.singular) return {false, "singular transformation"};
    if (!r.rho_gt_one) return {false, "spectral radius is 1"};
    if (r.unity_order)
        return {false, "root-of-unity eigenvalue (order " + std::to_string(*r.unity_order) + ")"};
    return {true, ""};
}

namespace {

// Refine an isolating interval until [lo^a, hi^a] isolates one root of the
// squarefree power polynomial; returns that interval.
RootInterval power_interval(const QPoly& minpoly, RootInterval iv, unsigned long a,
                            const QPoly& pow_sf) {
    QPoly sf = minpoly; // minimal polynomials are squarefree
    for (int rounds = 0; rounds < 4096; ++rounds) {
        if (iv.exact()) return RootInterval{rat_pow(iv.lo, a), rat_pow(iv.lo, a)};
        if (iv.lo >= 1) {
            RootInterval p{rat_pow(iv.lo, a), rat_pow(iv.hi, a)};
            if (sturm_count(pow_sf, p.lo, p.hi) == 1) return p;
        }
        iv = refine_root(sf, iv, 0); // one extra bisection step
        Rat mid = (iv.lo + iv.hi) / 2;
        if (sf.eval(mid) == 0)
            iv = RootInterval{mid, mid};
        else if (sturm_count(sf, iv.lo, mid) >= 1)
            iv.hi = mid;
        else
            iv.lo = mid;
    }
    throw std::logic_error("power_interval failed to isolate");
}

bool verified_power_relation(const SpectrumReport& ri, unsigned long a, const SpectrumReport& rj,
                             unsigned long b) {
    QPoly pi = squarefree_part(power_roots_poly(ri.min_polynomial, a));
    QPoly pj = squarefree_part(power_roots_poly(rj.min_polynomial, b));
    RootInterval ii = power_interval(ri.min_polynomial, ri.rho_iv, a, pi);
    RootInterval ij = power_interval(rj.min_polynomial, rj.rho_iv, b, pj);
    return equal_algebraic(pi, ii, pj, ij);
}

} // namespace

RadiusPartition radii_mult_classes(const std::vector<SpectrumReport>& reports,
                                   unsigned long exponent_bound) {
    for (const auto& r : reports)
        if (!r.rho_gt_one) throw std::domain_error("radii classes need rho > 1");
    size_t n = reports.size();
    RadiusPartition out;
    out.exponent_bound = exponent_bound;

    std::vector<size_t> parent(n);
    for (size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    const mpfr_prec_t prec = 320;
    std::vector<Ball> logs;
    logs.reserve(n);
    for (const auto& r : reports) {
        RootInterval iv = refine_root(squarefree_part(r.char_polynomial), r.rho_iv, 360);
        logs.push_back(root_ball(iv, prec).log());
    }

    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            if (find(i) == find(j)) continue;
            bool related = false;
            for (unsigned long a = 1; a <= exponent_bound && !related; ++a)
                for (unsigned long b = 1; b <= exponent_bound && !related; ++b) {
                    Ball diff = logs[i].mul_rat(Rat(static_cast<long>(a))) -
                                logs[j].mul_rat(Rat(static_cast<long>(b)));
                    if (!diff.contains_zero()) continue; // certified non-relation
                    if (verified_power_relation(reports[i], a, reports[j], b)) {
                        out.witnesses.push_back({i, j, a, b});
                        parent[find(j)] = find(i);
                        related = true;
                    }
                }
        }

    std::vector<std::vector<size_t>> classes(n);
    for (size_t i = 0; i < n; ++i) classes[find(i)].push_back(i);
    for (auto& c : classes)
        if (!c.empty()) out.classes.push_back(std::move(c));
    return out;
}

std::variant<GaugeCertificate, GaugeMismatch> verify_gauge(const MahlerSystem& s,
                                                           const GaugeInput& in) {
    size_t m = s.dim();
    if (in.phi.size() != m || in.b.size() != m)
        throw std::domain_error("gauge dimensions disagree with the system");
    for (const auto& row : in.phi)
        if (row.size() != m) throw std::domain_error("phi is not square");
    for (const auto& row : in.b)
        if (row.size() != m) throw std::domain_error("b is not square");

    long ram = 1;
    for (const auto& row : in.phi)
        for (const auto& e : row) ram = std::lcm(ram, e.ram());

    FieldPtr field = in.phi[0][0].field();
    size_t nv = s.nvars();
    auto rebase = [&](const PuiseuxSeries& p) { return p.rebased(ram); };

    // Phi(Tz) entries and A as series, all at the common ramification.
    long order = in.order;
    std::vector<std::vector<PuiseuxSeries>> phi_t(m);
    long max_needed = order;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            phi_t[i].push_back(substitute_monomial(rebase(in.phi[i][j]), s.t));
            long val = phi_t[i][j].valuation();
            if (val < 0) max_needed = std::max(max_needed, order - val);
        }

    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            // lhs = sum_k phi[i][k] * B[k][j]; rhs = sum_k A[i][k] * phi_t[k][j]
            PuiseuxSeries lhs = PuiseuxSeries::zero(nv, ram, field, PuiseuxSeries::ORDER_EXACT);
            for (size_t k = 0; k < m; ++k)
                lhs = lhs + rebase(in.phi[i][k]).scale(in.b[k][j]);
            PuiseuxSeries rhs = PuiseuxSeries::zero(nv, ram, field, PuiseuxSeries::ORDER_EXACT);
            for (size_t k = 0; k < m; ++k) {
                const RationalFunction& aik = s.a.at(i, k);
                if (aik.is_zero()) continue;
                PuiseuxSeries a_series = rebase(aik.to_series(max_needed));
                rhs = rhs + (a_series * phi_t[k][j]).truncated(order);
            }
            auto mis = verify_identity(lhs.truncated(order), rhs.truncated(order), order);
            if (mis) return GaugeMismatch{i, j, "entry mismatch", mis};
        }

    // determinant coefficient check: Leibniz expansion over permutations
    // with parity bookkeeping (m stays small here)
    PuiseuxSeries det = PuiseuxSeries::zero(nv, ram, field, PuiseuxSeries::ORDER_EXACT);
    std::vector<std::vector<PuiseuxSeries>> phi_r(m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) phi_r[i].push_back(rebase(in.phi[i][j]));
    std::vector<size_t> idx(m);
    for (size_t i = 0; i < m; ++i) idx[i] = i;
    do {
        int parity = 1;
        std::vector<bool> seen(m, false);
        for (size_t i = 0; i < m; ++i) {
            if (seen[i]) continue;
            size_t len = 0, j = i;
            while (!seen[j]) {
                seen[j] = true;
                j = idx[j];
                ++len;
            }
            if (len % 2 == 0) parity = -parity;
        }
        PuiseuxSeries term =
            PuiseuxSeries::constant(nv, ram, field, NFElem::from_rat(field, Rat(parity)));
        for (size_t i = 0; i < m; ++i) term = term * phi_r[i][idx[i]];
        det = det + term;
    } while (std::next_permutation(idx.begin(), idx.end()));

    Exponent want = in.det_exponent;
    if (want.size() != nv) throw std::domain_error("det exponent arity mismatch");
    NFElem coeff = det.coeff(want);
    if (coeff.is_zero())
        return GaugeMismatch{0, 0, "declared determinant coefficient vanishes", std::nullopt};
    return GaugeCertificate{in, coeff};
}

AdmissibilityReport admissible_check(const IntMatrix& t, const std::vector<Rat>& alpha,
                                     unsigned long k_iterations) {
    for (const auto& a : alpha)
        if (a == 0) throw std::domain_error("admissibility needs nonzero coordinates");
    if (alpha.size() != t.rows()) throw std::domain_error("point arity mismatch");

    ClassMResult cm = class_m_check(t);
    if (!cm.in_m) return {AdmissibilityReport::Verdict::Fails, "class M: " + cm.reason, {}, false};

    for (const auto& a : alpha)
        if (::abs(a) >= 1)
            return {AdmissibilityReport::Verdict::Fails, "coordinate outside the open unit polydisk",
                    {}, false};

    // |T^k alpha| -> 0 evidence on log-absolute values
    const mpfr_prec_t prec = 128;
    std::vector<Ball> logs;
    for (const auto& a : alpha) logs.push_back(Ball::from_rat(::abs(a), prec).log());
    std::vector<Ball> cur = logs;
    Rat zero(0);
    for (unsigned long k = 1; k <= k_iterations; ++k) {
        std::vector<Ball> next;
        next.reserve(cur.size());
        for (size_t i = 0; i < cur.size(); ++i) {
            Ball acc = Ball::zero(prec);
            for (size_t j = 0; j < cur.size(); ++j) {
                const Int& e = t.at(i, j);
                if (e == 0) continue;
                acc = acc + cur[j].mul_rat(Rat(e));
            }
            next.push_back(acc);
        }
        cur = std::move(next);
        for (const auto& b : cur)
            if (!b.lt_rat(zero))
                return {AdmissibilityReport::Verdict::Unknown,
                        "norm decay not certified within " + std::to_string(k_iterations) +
                            " iterations",
                        {},
                        false};
    }

    MultIndepResult mi = mult_indep(alpha);
    if (!mi.independent)
        return {AdmissibilityReport::Verdict::Unknown,
                "coordinates multiplicatively dependent", mi.witness, false};

    bool scalar = true;
    for (size_t i = 0; i < t.rows() && scalar; ++i)
        for (size_t j = 0; j < t.cols() && scalar; ++j) {
            if (i == j && t.at(i, j) != t.at(0, 0)) scalar = false;
            if (i != j && t.at(i, j) != 0) scalar = false;
        }
    return {AdmissibilityReport::Verdict::Admissible,
            scalar ? "T = qI: multiplicative independence is equivalent to T-independence"
                   : "coordinates multiplicatively independent (sufficient criterion)",
            {},
            scalar};
}

RegularityReport regular_point_check(const MahlerSystem& s, const std::vector<Rat>& alpha,
                                     unsigned long k_iterations) {
    if (alpha.size() != s.nvars()) throw std::domain_error("point arity mismatch");
    FieldPtr field = s.a.field();

    // delta = num(det A) * product of entry denominators
    RationalFunction det = s.a.det();
    if (det.is_zero()) return {RegularityReport::Verdict::Singular, 0, "det A vanishes identically"};
    Poly delta = det.num();
    for (size_t i = 0; i < s.a.rows(); ++i)
        for (size_t j = 0; j < s.a.cols(); ++j) delta = delta * s.a.at(i, j).den();

    Exponent zero_e(s.nvars(), 0);
    NFElem d0 = delta.coeff(zero_e);
    bool tail_possible = !d0.is_zero() && d0.is_rational();
    for (size_t i = 0; i < s.t.rows() && tail_possible; ++i)
        if (s.t.row_sum(i) == 0) tail_possible = false;
    for (const auto& [e, c] : delta.terms())
        if (!c.is_rational()) tail_possible = false;

    // Once |delta| >= |delta(0)|/2 is certified on the polydisk holding the
    // orbit tail, all remaining iterates pass; check before every step so
    // the exponents of T^k alpha never get a chance to blow up.
    auto tail_certified = [&](const std::vector<Rat>& point) {
        if (!tail_possible) return false;
        Rat r(0);
        for (const auto& c : point) {
            Rat a = ::abs(c);
            if (a > r) r = a;
        }
        if (r >= 1) return false;
        Rat bound(0);
        for (const auto& [e, c] : delta.terms()) {
            long deg = total_degree(e);
            if (deg == 0) continue;
            bound += ::abs(c.rat()) * rat_pow(r, deg);
        }
        return bound < ::abs(d0.rat()) / 2;
    };

    std::vector<Rat> point = alpha;
    for (unsigned long k = 0; k <= k_iterations; ++k) {
        if (poly_eval(delta, point).is_zero())
            return {RegularityReport::Verdict::Singular, static_cast<long>(k), "delta vanishes"};
        if (tail_certified(point)) return {RegularityReport::Verdict::Regular, -1, ""};
        point = s.transform_point(point);
    }
    return {RegularityReport::Verdict::Unknown, -1,
            tail_possible ? "tail bound not reached within K iterations"
                          : "tail bound unavailable for this system"};
}

} // namespace mahler
