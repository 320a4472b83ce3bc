#include "mahler/puiseux.hpp"

#include <algorithm>
#include <stdexcept>

namespace mahler {

PuiseuxSeries::PuiseuxSeries(size_t nvars, long ram, FieldPtr field, long order)
    : nvars_(nvars), ram_(ram), order_(order), field_(std::move(field)), lb_(nvars, 0) {
    if (nvars_ == 0 || ram_ <= 0) throw std::domain_error("bad series shape");
}

PuiseuxSeries PuiseuxSeries::zero(size_t nvars, long ram, FieldPtr field, long order) {
    return PuiseuxSeries(nvars, ram, std::move(field), order);
}

PuiseuxSeries PuiseuxSeries::monomial(size_t nvars, long ram, FieldPtr field, const NFElem& coeff,
                                      const Exponent& expo) {
    PuiseuxSeries s(nvars, ram, std::move(field), ORDER_EXACT);
    if (expo.size() != nvars) throw std::domain_error("exponent arity mismatch");
    if (!coeff.is_zero()) s.terms_[expo] = coeff;
    s.recompute_lb();
    return s;
}

PuiseuxSeries PuiseuxSeries::constant(size_t nvars, long ram, FieldPtr field, const NFElem& c) {
    return monomial(nvars, ram, std::move(field), c, Exponent(nvars, 0));
}

long PuiseuxSeries::valuation() const {
    if (terms_.empty()) return (order_ == ORDER_EXACT) ? ORDER_EXACT : order_ + 1;
    long v = ORDER_EXACT;
    for (const auto& [e, c] : terms_) v = std::min(v, total_degree(e));
    return v;
}

void PuiseuxSeries::recompute_lb() {
    lb_.assign(nvars_, 0);
    for (const auto& [e, c] : terms_)
        for (size_t i = 0; i < nvars_; ++i) lb_[i] = std::min(lb_[i], e[i]);
}

NFElem PuiseuxSeries::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    if (it == terms_.end()) return NFElem::from_rat(field_, Rat(0));
    return it->second;
}

void PuiseuxSeries::set_coeff(const Exponent& e, const NFElem& c) {
    if (e.size() != nvars_) throw std::domain_error("exponent arity mismatch");
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
    for (size_t i = 0; i < nvars_; ++i) lb_[i] = std::min(lb_[i], e[i]);
}

void PuiseuxSeries::merge_lower_bound(const Exponent& lb) {
    if (lb.size() != nvars_) throw std::domain_error("bound arity mismatch");
    for (size_t i = 0; i < nvars_; ++i) lb_[i] = std::min(lb_[i], lb[i]);
}

void PuiseuxSeries::add_term(const Exponent& e, const NFElem& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(e, c);
    } else {
        NFElem s = it->second + c;
        if (s.is_zero())
            terms_.erase(it);
        else
            it->second = s;
    }
}

namespace {

void check_compatible(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    if (a.nvars() != b.nvars()) throw std::domain_error("variable count mismatch");
    if (a.ram() != b.ram()) throw std::domain_error("ramification mismatch");
}

} // namespace

PuiseuxSeries PuiseuxSeries::operator+(const PuiseuxSeries& o) const {
    check_compatible(*this, o);
    PuiseuxSeries r(nvars_, ram_, field_, std::min(order_, o.order_));
    for (const auto& [e, c] : terms_)
        if (total_degree(e) <= r.order_) r.add_term(e, c);
    for (const auto& [e, c] : o.terms_)
        if (total_degree(e) <= r.order_) r.add_term(e, c);
    for (size_t i = 0; i < nvars_; ++i) r.lb_[i] = std::min(lb_[i], o.lb_[i]);
    return r;
}

PuiseuxSeries PuiseuxSeries::operator-(const PuiseuxSeries& o) const { return *this + (-o); }

PuiseuxSeries PuiseuxSeries::operator-() const {
    PuiseuxSeries r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

PuiseuxSeries PuiseuxSeries::scale(const NFElem& c) const {
    PuiseuxSeries r(nvars_, ram_, field_, order_);
    r.lb_ = lb_;
    if (c.is_zero()) return r;
    for (const auto& [e, t] : terms_) r.terms_[e] = t * c;
    return r;
}

PuiseuxSeries PuiseuxSeries::operator*(const PuiseuxSeries& o) const {
    check_compatible(*this, o);
    long ord;
    if (exact() && o.exact())
        ord = ORDER_EXACT;
    else {
        long a = exact() ? ORDER_EXACT : order_ + o.valuation();
        long b = o.exact() ? ORDER_EXACT : o.order_ + valuation();
        ord = std::min(a, b);
        ord = std::min(ord, ORDER_EXACT - 1);
    }
    PuiseuxSeries r(nvars_, ram_, field_, ord);
    for (size_t i = 0; i < nvars_; ++i) r.lb_[i] = lb_[i] + o.lb_[i];
    Exponent e(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            long d = total_degree(e1) + total_degree(e2);
            if (d > r.order_) continue;
            for (size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

PuiseuxSeries PuiseuxSeries::truncated(long new_order) const {
    PuiseuxSeries r(nvars_, ram_, field_, std::min(order_, new_order));
    r.lb_ = lb_;
    for (const auto& [e, c] : terms_)
        if (total_degree(e) <= r.order_) r.terms_[e] = c;
    return r;
}

PuiseuxSeries PuiseuxSeries::rebased(long new_ram) const {
    if (new_ram % ram_ != 0) throw std::domain_error("new ramification must be a multiple");
    long k = new_ram / ram_;
    if (k == 1) return *this;
    PuiseuxSeries r(nvars_, new_ram, field_, exact() ? ORDER_EXACT : order_ * k);
    for (const auto& [e, c] : terms_) {
        Exponent e2(nvars_);
        for (size_t i = 0; i < nvars_; ++i) e2[i] = e[i] * k;
        r.terms_[e2] = c;
    }
    for (size_t i = 0; i < nvars_; ++i) r.lb_[i] = lb_[i] * k;
    return r;
}

PuiseuxSeries PuiseuxSeries::conj() const {
    PuiseuxSeries r(*this);
    for (auto& [e, c] : r.terms_) c = c.conj();
    return r;
}

PuiseuxSeries PuiseuxSeries::specialize_diagonal() const {
    PuiseuxSeries r(1, ram_, field_, order_);
    long lb = 0;
    for (size_t i = 0; i < nvars_; ++i) lb += lb_[i];
    r.lb_ = {lb};
    for (const auto& [e, c] : terms_) r.add_term({total_degree(e)}, c);
    return r;
}

std::string PuiseuxSeries::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")";
        for (size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            s += "*z" + std::to_string(i);
            if (e[i] != ram_) {
                s += "^";
                if (e[i] % ram_ == 0)
                    s += std::to_string(e[i] / ram_);
                else
                    s += "(" + std::to_string(e[i]) + "/" + std::to_string(ram_) + ")";
            }
        }
    }
    if (!exact()) s += " + O(deg " + std::to_string(order_ + 1) + ")";
    return s;
}

PuiseuxSeries substitute_monomial(const PuiseuxSeries& f, const IntMatrix& t) {
    if (!t.square() || t.rows() != f.nvars()) throw std::domain_error("substitution shape mismatch");
    if (!t.nonnegative()) throw std::domain_error("substitution matrix must be nonnegative");
    size_t n = f.nvars();

    std::vector<long> rowsum(n);
    long min_rs = 0;
    for (size_t i = 0; i < n; ++i) {
        rowsum[i] = t.row_sum(i).get_si();
        min_rs = (i == 0) ? rowsum[i] : std::min(min_rs, rowsum[i]);
    }

    long new_order;
    if (f.exact())
        new_order = PuiseuxSeries::ORDER_EXACT;
    else {
        // Tail terms satisfy v >= lb componentwise and deg v >= order + 1;
        // deg(T^t v) = sum_j rowsum_j v_j is minimized by loading the excess
        // on the smallest row sum.
        long lb_img = 0, lb_tot = 0;
        for (size_t j = 0; j < n; ++j) {
            lb_img += rowsum[j] * f.lower_bound()[j];
            lb_tot += f.lower_bound()[j];
        }
        new_order = lb_img + min_rs * (f.order() + 1 - lb_tot) - 1;
    }

    PuiseuxSeries r = PuiseuxSeries::zero(n, f.ram(), f.field(), new_order);
    IntMatrix tt = t.transpose();
    std::vector<Int> v(n), w(n);
    for (const auto& [e, c] : f.terms()) {
        for (size_t i = 0; i < n; ++i) v[i] = e[i];
        w = tt.apply(v);
        Exponent e2(n);
        for (size_t i = 0; i < n; ++i) e2[i] = w[i].get_si();
        if (total_degree(e2) <= r.order()) r.set_coeff(e2, r.coeff(e2) + c);
    }
    // The tail is constrained by the image of the input's bound.
    std::vector<Int> lbv(n);
    for (size_t i = 0; i < n; ++i) lbv[i] = f.lower_bound()[i];
    auto lbw = tt.apply(lbv);
    Exponent lb(n);
    for (size_t i = 0; i < n; ++i) lb[i] = lbw[i].get_si();
    r.merge_lower_bound(lb);
    return r;
}

PuiseuxSeries solve_mahler_fixed_point(const std::vector<PuiseuxSeries>& c, const IntMatrix& t,
                                       const PuiseuxSeries& forcing, long order) {
    if (c.empty()) return forcing.truncated(order);
    size_t n = forcing.nvars();
    if (!t.square() || t.rows() != n) throw std::domain_error("transformation shape mismatch");

    std::vector<IntMatrix> powers;
    IntMatrix p = t;
    for (size_t k = 0; k < c.size(); ++k) {
        powers.push_back(p);
        p = p * t;
    }

    PuiseuxSeries h = PuiseuxSeries::zero(n, forcing.ram(), forcing.field(), order);
    long last_delta_val = -(1L << 30);
    for (long iter = 0; iter <= order + 2; ++iter) {
        PuiseuxSeries next = forcing.truncated(order);
        for (size_t k = 0; k < c.size(); ++k) {
            PuiseuxSeries sub = substitute_monomial(h, powers[k]);
            next = next + (c[k] * sub).truncated(order);
        }
        if (next.order() < order)
            throw std::domain_error("fixed point iteration lost precision (inputs too short)");
        PuiseuxSeries delta = next - h;
        if (delta.is_zero()) return next.truncated(order);
        long val = delta.valuation();
        if (val <= last_delta_val)
            throw std::domain_error("mahler fixed point does not contract at degree " +
                                    std::to_string(val));
        last_delta_val = val;
        h = next;
    }
    throw std::domain_error("mahler fixed point failed to converge within order+2 iterations");
}

std::optional<SeriesMismatch> verify_identity(const PuiseuxSeries& lhs, const PuiseuxSeries& rhs,
                                              long order) {
    check_compatible(lhs, rhs);
    if (lhs.order() < order || rhs.order() < order)
        throw std::domain_error("series not known to the requested order");
    PuiseuxSeries l = lhs.truncated(order), r = rhs.truncated(order);
    auto it = l.terms().begin();
    auto jt = r.terms().begin();
    while (it != l.terms().end() || jt != r.terms().end()) {
        if (jt == r.terms().end() || (it != l.terms().end() && it->first < jt->first)) {
            return SeriesMismatch{it->first, it->second, NFElem::from_rat(l.field(), Rat(0))};
        }
        if (it == l.terms().end() || jt->first < it->first) {
            return SeriesMismatch{jt->first, NFElem::from_rat(l.field(), Rat(0)), jt->second};
        }
        if (!(it->second == jt->second)) return SeriesMismatch{it->first, it->second, jt->second};
        ++it;
        ++jt;
    }
    return std::nullopt;
}

} // namespace mahler
