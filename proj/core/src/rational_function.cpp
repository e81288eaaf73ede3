#include "kvertex/rational_function.hpp"

#include <stdexcept>

namespace kvertex {

namespace {

// c * var^n as a character.
Character with_var(const Character& c, const std::string& var, int n) { return {c.mono * Monomial::var(var, n), c.root}; }

}  // namespace

RationalFunction::RationalFunction(std::string var, LaurentPoly prefactor) : var_(std::move(var)), pre_(std::move(prefactor)) {}

RationalFunction::RationalFunction(std::string var, LaurentPoly prefactor, const std::map<std::pair<Character, int>, int>& factors)
    : var_(std::move(var)), pre_(std::move(prefactor)) {
    std::map<ZFactor, int> acc;
    for (const auto& [key, e] : factors) {
        const auto& [c, n] = key;
        check_free(c);
        if (e == 0) continue;
        if (n == 0) throw std::invalid_argument("RationalFunction: factor does not involve " + var_);
        if (n > 0) {
            acc[ZFactor{c, n}] += e;
            continue;
        }
        const int k = -n;
        Character ci = c.inverse();
        // 1/(1 - c z^{-k})^e = (-c^{-1} z^k)^e / (1 - c^{-1} z^k)^e
        Character lead = with_var(ci, var_, k).pow(e);
        CycloScalar sign = (e % 2 == 0) ? CycloScalar(1L) : CycloScalar(-1L);
        pre_ = pre_ * LaurentPoly(lead.mono, lead.scalar() * sign);
        acc[ZFactor{ci, k}] += e;
    }
    for (const auto& [f, e] : acc) {
        if (e > 0) {
            den_[f] = e;
        } else if (e < 0) {
            pre_ = pre_ * factor_poly(var_, f).pow(static_cast<unsigned>(-e));
        }
    }
    if (pre_.is_zero()) den_.clear();
}

RationalFunction RationalFunction::factor(const std::string& var, const Character& c, int n, int e) {
    return RationalFunction(var, LaurentPoly(1L), {{{c, n}, e}});
}

void RationalFunction::check_free(const Character& c) const {
    if (c.mono.contains(var_)) throw std::invalid_argument("RationalFunction: factor constant involves " + var_);
}

int RationalFunction::total_multiplicity() const {
    int m = 0;
    for (const auto& [f, e] : den_) m += f.n * e;
    return m;
}

LaurentPoly RationalFunction::factor_poly(const std::string& var, const ZFactor& f) {
    return LaurentPoly(1L) - LaurentPoly::character(with_var(f.c, var, f.n));
}

LaurentPoly RationalFunction::denominator_poly() const {
    LaurentPoly d(1L);
    for (const auto& [f, e] : den_) d = d * factor_poly(var_, f).pow(static_cast<unsigned>(e));
    return d;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.pre_ = -r.pre_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (var_ != o.var_) throw std::invalid_argument("RationalFunction: variable mismatch");
    if (o.pre_.is_zero()) return *this;
    if (pre_.is_zero()) return *this = o;
    Denominator common = den_;
    for (const auto& [f, e] : o.den_) common[f] = std::max(common[f], e);
    auto lift = [&](const LaurentPoly& p, const Denominator& d) {
        LaurentPoly r = p;
        for (const auto& [f, e] : common) {
            auto it = d.find(f);
            int have = it == d.end() ? 0 : it->second;
            if (e > have) r = r * factor_poly(var_, f).pow(static_cast<unsigned>(e - have));
        }
        return r;
    };
    pre_ = lift(pre_, den_) + lift(o.pre_, o.den_);
    den_ = pre_.is_zero() ? Denominator{} : std::move(common);
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (var_ != o.var_) throw std::invalid_argument("RationalFunction: variable mismatch");
    pre_ = pre_ * o.pre_;
    if (pre_.is_zero()) {
        den_.clear();
        return *this;
    }
    for (const auto& [f, e] : o.den_) den_[f] += e;
    return *this;
}

RationalFunction RationalFunction::times(const LaurentPoly& p) const {
    RationalFunction r = *this;
    r.pre_ = r.pre_ * p;
    if (r.pre_.is_zero()) r.den_.clear();
    return r;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
    if (a.var_ != b.var_) return false;
    if (a.den_ == b.den_) return a.pre_ == b.pre_;
    return a.pre_ * b.denominator_poly() == b.pre_ * a.denominator_poly();
}

RationalFunction RationalFunction::scale_variable(const Character& t) const {
    RationalFunction r(var_, pre_.scale_variable(var_, t));
    for (const auto& [f, e] : den_) r.den_[ZFactor{f.c * t.pow(f.n), f.n}] += e;
    return r;
}

RationalFunction RationalFunction::invert_variable() const {
    LaurentPoly p = pre_.map_terms([&](const Monomial& m) {
        auto [e, rest] = m.extract(var_);
        return std::make_pair(rest * Monomial::var(var_, -e), CycloScalar(1L));
    });
    std::map<std::pair<Character, int>, int> fs;
    for (const auto& [f, e] : den_) fs[{f.c, -f.n}] += e;
    return {var_, p, fs};
}

RationalFunction RationalFunction::rename(const std::function<std::string(const std::string&)>& f) const {
    auto g = [&](const std::string& v) { return v == var_ ? v : f(v); };
    RationalFunction r(var_, pre_.rename(g));
    for (const auto& [fac, e] : den_) r.den_[ZFactor{Character(fac.c.mono.rename(g), fac.c.root), fac.n}] += e;
    return r;
}

RationalFunction RationalFunction::simplified() const {
    RationalFunction r = *this;
    for (auto it = r.den_.begin(); it != r.den_.end();) {
        LaurentPoly q;
        const Character chi = with_var(it->first.c, var_, it->first.n);
        while (it->second > 0 && divide_one_minus(r.pre_, chi, q)) {
            r.pre_ = std::move(q);
            --it->second;
        }
        if (it->second == 0) {
            it = r.den_.erase(it);
        } else {
            ++it;
        }
    }
    return r;
}

std::string RationalFunction::to_string() const {
    if (den_.empty()) return pre_.to_string();
    std::string n = pre_.to_string();
    if (pre_.size() > 1) n = "(" + n + ")";
    std::string d;
    for (const auto& [f, e] : den_) {
        if (!d.empty()) d += "*";
        d += "(" + factor_poly(var_, f).to_string() + ")";
        if (e != 1) d += "^" + std::to_string(e);
    }
    if (den_.size() > 1 || den_.begin()->second != 1) d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace kvertex
