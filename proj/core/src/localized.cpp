#include "kvertex/localized.hpp"

#include <stdexcept>

namespace kvertex {

Character LocalizedPoly::orient(const Character& chi, bool& flipped) {
    flipped = false;
    if (chi.mono.is_one()) return chi;
    if (chi.mono.entries().front().second < Frac(0)) {
        flipped = true;
        return chi.inverse();
    }
    return chi;
}

LaurentPoly LocalizedPoly::one_minus(const Character& chi) { return LaurentPoly(1L) - LaurentPoly::character(chi); }

LocalizedPoly LocalizedPoly::inverse_one_minus(const Character& chi, int e) {
    if (e < 0) throw std::invalid_argument("inverse_one_minus: negative exponent");
    if (e == 0) return LocalizedPoly(1L);
    if (chi.mono.is_one()) {
        if (chi.root.is_zero()) throw std::domain_error("inverse_one_minus: 1 - 1 is not invertible");
        return LocalizedPoly((CycloScalar(1L) - chi.scalar()).inverse().pow(e));
    }
    bool flipped = false;
    Character psi = orient(chi, flipped);
    LocalizedPoly r;
    // 1/(1 - psi^{-1}) = -psi/(1 - psi)
    r.num_ = flipped ? (-LaurentPoly::character(psi)).pow(static_cast<unsigned>(e)) : LaurentPoly(1L);
    r.den_[psi] = e;
    return r;
}

LocalizedPoly LocalizedPoly::operator-() const {
    LocalizedPoly r = *this;
    r.num_ = -r.num_;
    return r;
}

LocalizedPoly& LocalizedPoly::operator+=(const LocalizedPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (num_.is_zero()) den_.clear();
        return *this;
    }
    Denominator common = den_;
    for (const auto& [c, e] : o.den_) common[c] = std::max(common[c], e);
    auto lift = [&](const LaurentPoly& n, const Denominator& d) {
        LaurentPoly r = n;
        for (const auto& [c, e] : common) {
            auto it = d.find(c);
            int have = it == d.end() ? 0 : it->second;
            if (e > have) r = r * one_minus(c).pow(static_cast<unsigned>(e - have));
        }
        return r;
    };
    num_ = lift(num_, den_) + lift(o.num_, o.den_);
    den_ = num_.is_zero() ? Denominator{} : std::move(common);
    return *this;
}

LocalizedPoly& LocalizedPoly::operator*=(const LocalizedPoly& o) {
    num_ = num_ * o.num_;
    if (num_.is_zero()) {
        den_.clear();
        return *this;
    }
    for (const auto& [c, e] : o.den_) den_[c] += e;
    return *this;
}

bool operator==(const LocalizedPoly& a, const LocalizedPoly& b) { return (a - b).is_zero(); }

LocalizedPoly LocalizedPoly::simplified() const {
    LocalizedPoly r = *this;
    for (auto it = r.den_.begin(); it != r.den_.end();) {
        LaurentPoly q;
        while (it->second > 0 && divide_one_minus(r.num_, it->first, q)) {
            r.num_ = std::move(q);
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

LaurentPoly LocalizedPoly::to_laurent() const {
    if (den_.empty()) return num_;
    LocalizedPoly s = simplified();
    if (!s.den_.empty()) throw std::domain_error("not a Laurent polynomial: " + s.to_string());
    return s.num_;
}

std::string LocalizedPoly::to_string() const {
    if (den_.empty()) return num_.to_string();
    std::string n = num_.to_string();
    if (num_.size() > 1) n = "(" + n + ")";
    std::string d;
    for (const auto& [c, e] : den_) {
        if (!d.empty()) d += "*";
        d += "(" + one_minus(c).to_string() + ")";
        if (e != 1) d += "^" + std::to_string(e);
    }
    if (den_.size() > 1 || den_.begin()->second != 1) d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace kvertex
