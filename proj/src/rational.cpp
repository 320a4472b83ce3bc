#include "mahler/rational.hpp"

namespace mahler {

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::domain_error("empty rational literal");
    std::string num = s, den = "1";
    if (auto pos = s.find('/'); pos != std::string::npos) {
        num = s.substr(0, pos);
        den = s.substr(pos + 1);
    }
    auto check = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    if (!check(num) || !check(den)) throw std::domain_error("malformed rational: " + s);
    Int n(num), d(den);
    if (d == 0) throw std::domain_error("zero denominator: " + s);
    return make_rat(n, d);
}

std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat rat_pow(const Rat& q, long e) {
    if (e == 0) return Rat(1);
    if (q == 0) {
        if (e < 0) throw std::domain_error("0 to a negative power");
        return Rat(0);
    }
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    Rat r = make_rat(int_pow(q.get_num(), a), int_pow(q.get_den(), a));
    if (e < 0) r = 1 / r;
    return r;
}

} // namespace mahler
