#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <stdexcept>

namespace kvertex {

// Truncated Laurent series sum_{k < prec} c_k x^k in one uniformizer x.
// prec == kExact marks a finite exact sum.
template <class C>
class Series {
public:
    static constexpr int kExact = INT_MAX / 4;

    explicit Series(int prec = kExact) : prec_(prec) {}
    static Series monomial(int k, const C& c, int prec = kExact) {
        Series s(prec);
        s.add(k, c);
        return s;
    }

    int precision() const { return prec_; }
    bool is_exact() const { return prec_ >= kExact; }
    const std::map<int, C>& coefficients() const { return c_; }
    int valuation() const { return c_.empty() ? prec_ : c_.begin()->first; }
    C coeff(int k) const {
        if (k >= prec_) throw std::out_of_range("Series: coefficient beyond truncation");
        auto it = c_.find(k);
        return it == c_.end() ? C() : it->second;
    }

    void add(int k, const C& c) {
        if (k >= prec_ || c.is_zero()) return;
        auto [it, ins] = c_.emplace(k, c);
        if (!ins) {
            it->second += c;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    Series truncated(int p) const {
        Series s(std::min(p, prec_));
        for (const auto& [k, c] : c_) {
            if (k < s.prec_) s.c_.emplace(k, c);
        }
        return s;
    }

    Series operator-() const {
        Series s = *this;
        for (auto& [k, c] : s.c_) c = -c;
        return s;
    }
    friend Series operator+(const Series& a, const Series& b) {
        Series s = a.truncated(b.prec_);
        for (const auto& [k, c] : b.c_) s.add(k, c);
        return s;
    }
    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }

    friend Series operator*(const Series& a, const Series& b) {
        int p = kExact;
        if (!b.is_exact()) p = std::min(p, a.valuation() + b.prec_);
        if (!a.is_exact()) p = std::min(p, b.valuation() + a.prec_);
        Series s(p);
        for (const auto& [i, ci] : a.c_) {
            for (const auto& [j, cj] : b.c_) {
                if (i + j >= p) break;
                s.add(i + j, ci * cj);
            }
        }
        return s;
    }

    Series scaled(const C& f) const {
        Series s(prec_);
        for (const auto& [k, c] : c_) s.add(k, c * f);
        return s;
    }

    // Inverse given the inverse of the leading coefficient. Needs finite precision.
    Series inverse(const C& lead_inv) const {
        if (c_.empty()) throw std::domain_error("Series: inverse of zero");
        if (is_exact() && c_.size() > 1) throw std::domain_error("Series: truncate before inverting");
        const int v = valuation();
        const int rel = is_exact() ? 1 : prec_ - v;
        if (is_exact()) return monomial(-v, lead_inv);
        Series s(rel - v);
        std::map<int, C> b;
        for (int k = 0; k < rel; ++k) {
            C acc = k == 0 ? C(1L) : C();
            for (int j = 1; j <= k; ++j) {
                auto ia = c_.find(v + j);
                auto ib = b.find(k - j);
                if (ia != c_.end() && ib != b.end()) acc -= ia->second * ib->second;
            }
            C bk = acc * lead_inv;
            if (!bk.is_zero()) b.emplace(k, bk);
        }
        for (const auto& [k, c] : b) s.add(k - v, c);
        return s;
    }

    Series pow(unsigned e) const {
        Series r = monomial(0, C(1L));
        Series base = *this;
        while (e > 0) {
            if (e & 1U) r = r * base;
            e >>= 1U;
            if (e > 0) base = base * base;
        }
        return r;
    }

private:
    int prec_;
    std::map<int, C> c_;
};

}  // namespace kvertex
