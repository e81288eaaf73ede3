#include "kvertex/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace kvertex {

LaurentPoly::LaurentPoly(const CycloScalar& c) {
    if (!c.is_zero()) t_.emplace(Monomial(), c);
}

LaurentPoly::LaurentPoly(const Monomial& m, const CycloScalar& c) {
    if (!c.is_zero()) t_.emplace(m, c);
}

bool LaurentPoly::is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one()); }

CycloScalar LaurentPoly::constant_term() const { return coefficient(Monomial()); }

CycloScalar LaurentPoly::coefficient(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? CycloScalar() : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const CycloScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const CycloScalar& c) {
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [m, x] : t_) x *= c;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.t_.size() < b.t_.size()) return b * a;
    LaurentPoly r;
    if (b.t_.size() == 1) {
        const auto& [bm, bc] = *b.t_.begin();
        if (bm.is_one()) {
            r = a;
            return r *= bc;
        }
        for (const auto& [m, c] : a.t_) r.t_.emplace_hint(r.t_.end(), m * bm, c * bc);
        return r;
    }
    for (const auto& [mb, cb] : b.t_) {
        for (const auto& [ma, ca] : a.t_) r.add_term(ma * mb, ca * cb);
    }
    return r;
}

LaurentPoly LaurentPoly::times(const Monomial& m, const CycloScalar& c) const { return *this * LaurentPoly(m, c); }

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly r(1L), b = *this;
    while (k > 0) {
        if (k & 1U) r = r * b;
        k >>= 1U;
        if (k > 0) b = b * b;
    }
    return r;
}

LaurentPoly LaurentPoly::map_terms(const std::function<std::pair<Monomial, CycloScalar>(const Monomial&)>& f) const {
    LaurentPoly r;
    for (const auto& [m, c] : t_) {
        auto [nm, s] = f(m);
        r.add_term(nm, c * s);
    }
    return r;
}

LaurentPoly LaurentPoly::rename(const std::function<std::string(const std::string&)>& f) const {
    return map_terms([&](const Monomial& m) { return std::make_pair(m.rename(f), CycloScalar(1L)); });
}

LaurentPoly LaurentPoly::graded_scale(const std::function<bool(const std::string&)>& pred, const Monomial& factor) const {
    return map_terms([&](const Monomial& m) { return std::make_pair(m * factor.pow(m.degree(pred)), CycloScalar(1L)); });
}

LaurentPoly LaurentPoly::scale_variable(const std::string& var, const Character& c) const {
    return map_terms([&](const Monomial& m) {
        Frac e = m.exponent(var);
        if (e.is_zero()) return std::make_pair(m, CycloScalar(1L));
        if (!c.root.is_zero() && !e.is_integer()) throw std::domain_error("scale_variable: root of unity with fractional exponent");
        Character ce = c.root.is_zero() ? Character(c.mono.pow(e)) : c.pow(e.to_int());
        return std::make_pair(m * ce.mono, ce.scalar());
    });
}

std::map<Frac, LaurentPoly> LaurentPoly::split_by(const std::string& var) const {
    std::map<Frac, LaurentPoly> out;
    for (const auto& [m, c] : t_) {
        auto [e, rest] = m.extract(var);
        out[e].add_term(rest, c);
    }
    return out;
}

LaurentPoly LaurentPoly::coefficient_of(const std::string& var, Frac e) const {
    LaurentPoly r;
    for (const auto& [m, c] : t_) {
        auto [ex, rest] = m.extract(var);
        if (ex == e) r.add_term(rest, c);
    }
    return r;
}

std::vector<std::string> LaurentPoly::variables() const {
    std::set<std::string> vs;
    for (const auto& [m, c] : t_) {
        for (const auto& [v, e] : m.entries()) vs.insert(v);
    }
    return {vs.begin(), vs.end()};
}

std::string LaurentPoly::to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : t_) {
        std::string term;
        if (m.is_one()) {
            term = c.to_string();
            if (!c.is_single_term() && t_.size() > 1) term = "(" + term + ")";
        } else if (c.is_one()) {
            term = m.to_string();
        } else if (c == CycloScalar(-1L)) {
            term = "-" + m.to_string();
        } else if (c.is_single_term()) {
            term = c.to_string() + "*" + m.to_string();
        } else {
            term = "(" + c.to_string() + ")*" + m.to_string();
        }
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out;
}

bool divide_one_minus(const LaurentPoly& p, const Character& chi, LaurentPoly& quotient) {
    quotient = LaurentPoly();
    if (p.is_zero()) return true;
    if (chi.mono.is_one()) {
        if (chi.root.is_zero()) return false;
        quotient = p;
        quotient *= (CycloScalar(1L) - chi.scalar()).inverse();
        return true;
    }
    const Frac wchi = chi.mono.dot(chi.mono);
    const Monomial inv = chi.mono.inverse();
    const CycloScalar ginv = -chi.inverse().scalar();
    std::map<Frac, std::map<Monomial, CycloScalar>> buckets;
    Frac wmin;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Frac w = m.dot(chi.mono);
        if (first || w < wmin) wmin = w;
        first = false;
        buckets[w].emplace(m, c);
    }
    while (!buckets.empty()) {
        auto top = std::prev(buckets.end());
        const Frac w = top->first;
        auto terms = std::move(top->second);
        buckets.erase(top);
        const Frac wl = w - wchi;
        for (auto& [m, c] : terms) {
            if (c.is_zero()) continue;
            if (wl < wmin) return false;
            Monomial qm = m * inv;
            CycloScalar qc = c * ginv;
            quotient.add_term(qm, qc);
            auto& b = buckets[wl];
            auto [it, ins] = b.emplace(qm, -qc);
            if (!ins) {
                it->second -= qc;
                if (it->second.is_zero()) b.erase(it);
            }
            if (b.empty()) buckets.erase(wl);
        }
    }
    return true;
}

namespace {

using Blocks = std::vector<std::vector<std::string>>;

void check_blocks(const Blocks& blocks) {
    std::set<std::string> seen;
    for (const auto& b : blocks) {
        for (const auto& v : b) {
            if (!seen.insert(v).second) throw std::invalid_argument("symmetrize: overlapping blocks at " + v);
        }
    }
}

LaurentPoly apply_perm(const LaurentPoly& p, const std::unordered_map<std::string, std::string>& perm) {
    if (perm.empty()) return p;
    return p.rename([&](const std::string& v) {
        auto it = perm.find(v);
        return it == perm.end() ? v : it->second;
    });
}

}  // namespace

LaurentPoly symmetrize(const LaurentPoly& p, const Blocks& blocks, Normalization norm) {
    check_blocks(blocks);
    LaurentPoly acc = p;
    Rational count = 1;
    for (const auto& block : blocks) {
        if (block.size() < 2) continue;
        std::vector<std::size_t> idx(block.size());
        std::iota(idx.begin(), idx.end(), 0);
        LaurentPoly next;
        do {
            std::unordered_map<std::string, std::string> perm;
            for (std::size_t i = 0; i < idx.size(); ++i) {
                if (idx[i] != i) perm.emplace(block[i], block[idx[i]]);
            }
            next += apply_perm(acc, perm);
        } while (std::next_permutation(idx.begin(), idx.end()));
        acc = std::move(next);
        count *= factorial(static_cast<long>(block.size()));
    }
    if (norm == Normalization::Averaged) acc *= CycloScalar(Rational(1) / count);
    return acc;
}

bool is_block_symmetric(const LaurentPoly& p, const Blocks& blocks) {
    check_blocks(blocks);
    for (const auto& block : blocks) {
        if (block.size() < 2) continue;
        std::unordered_map<std::string, std::string> swap{{block[0], block[1]}, {block[1], block[0]}};
        if (apply_perm(p, swap) != p) return false;
        std::unordered_map<std::string, std::string> cyc;
        for (std::size_t i = 0; i < block.size(); ++i) cyc.emplace(block[i], block[(i + 1) % block.size()]);
        if (apply_perm(p, cyc) != p) return false;
    }
    return true;
}

}  // namespace kvertex
