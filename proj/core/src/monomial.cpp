#include "kvertex/monomial.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <stdexcept>

namespace kvertex {

Monomial Monomial::var(const std::string& name, Frac e) {
    Monomial m;
    if (!e.is_zero()) m.e_.emplace_back(name, e);
    return m;
}

Monomial Monomial::from_entries(std::vector<Entry> entries) {
    std::map<std::string, Frac> acc;
    for (auto& [v, e] : entries) acc[v] += e;
    Monomial m;
    for (auto& [v, e] : acc) {
        if (!e.is_zero()) m.e_.emplace_back(v, e);
    }
    return m;
}

Frac Monomial::exponent(const std::string& name) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), name, [](const Entry& a, const std::string& n) { return a.first < n; });
    if (it != e_.end() && it->first == name) return it->second;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (o.e_.empty()) return *this;
    if (e_.empty()) return o;
    Monomial r;
    r.e_.reserve(e_.size() + o.e_.size());
    auto a = e_.begin(), b = o.e_.begin();
    while (a != e_.end() || b != o.e_.end()) {
        if (b == o.e_.end() || (a != e_.end() && a->first < b->first)) {
            r.e_.push_back(*a++);
        } else if (a == e_.end() || b->first < a->first) {
            r.e_.push_back(*b++);
        } else {
            Frac s = a->second + b->second;
            if (!s.is_zero()) r.e_.emplace_back(a->first, s);
            ++a;
            ++b;
        }
    }
    return r;
}

Monomial Monomial::inverse() const {
    Monomial r = *this;
    for (auto& [v, e] : r.e_) e = -e;
    return r;
}

Monomial Monomial::pow(Frac k) const {
    if (k.is_zero()) return {};
    Monomial r = *this;
    for (auto& [v, e] : r.e_) e *= k;
    return r;
}

std::pair<Frac, Monomial> Monomial::extract(const std::string& name) const {
    Monomial rest;
    Frac ex = 0;
    for (const auto& en : e_) {
        if (en.first == name) {
            ex = en.second;
        } else {
            rest.e_.push_back(en);
        }
    }
    return {ex, rest};
}

Monomial Monomial::rename(const std::function<std::string(const std::string&)>& f) const {
    std::vector<Entry> v;
    v.reserve(e_.size());
    for (const auto& [n, e] : e_) v.emplace_back(f(n), e);
    return from_entries(std::move(v));
}

Frac Monomial::degree(const std::function<bool(const std::string&)>& pred) const {
    Frac d = 0;
    for (const auto& [n, e] : e_) {
        if (pred(n)) d += e;
    }
    return d;
}

Frac Monomial::dot(const Monomial& o) const {
    Frac d = 0;
    auto a = e_.begin(), b = o.e_.begin();
    while (a != e_.end() && b != o.e_.end()) {
        if (a->first < b->first) {
            ++a;
        } else if (b->first < a->first) {
            ++b;
        } else {
            d += a->second * b->second;
            ++a;
            ++b;
        }
    }
    return d;
}

std::string Monomial::to_string() const {
    if (e_.empty()) return "1";
    std::string out;
    for (const auto& [n, e] : e_) {
        if (!out.empty()) out += "*";
        out += n;
        if (e == Frac(1)) continue;
        if (e.is_integer()) {
            out += "^" + e.to_string();
        } else {
            out += "^(" + e.to_string() + ")";
        }
    }
    return out;
}

std::string Character::to_string() const {
    if (root.is_zero()) return mono.to_string();
    std::string r = "zeta" + std::to_string(root.den());
    if (root.num() != 1) r += "^" + std::to_string(root.num());
    if (mono.is_one()) return r;
    return r + "*" + mono.to_string();
}

bool is_valid_variable_name(const std::string& name) {
    static const std::regex re("[a-zA-Z][a-zA-Z0-9]*(_\\{[0-9]+,[0-9]+\\})?");
    return std::regex_match(name, re);
}

}  // namespace kvertex
