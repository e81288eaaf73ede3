#include "kvertex/wallcross.hpp"

#include <algorithm>
#include <functional>

namespace kvertex {

StabilityData::StabilityData(std::vector<long> rank_, std::vector<Rational> slope_, std::vector<std::vector<long>> frames_)
    : rank(std::move(rank_)), slope(std::move(slope_)), frames(std::move(frames_)) {
    if (slope.size() != rank.size()) throw std::invalid_argument("stability: rank and slope weights differ in length");
    for (long r : rank) {
        if (r <= 0) throw std::invalid_argument("stability: rank weights must be positive");
    }
    for (const auto& f : frames) {
        if (f.size() != rank.size()) throw std::invalid_argument("stability: frame weights differ in length");
        for (long x : f) {
            if (x <= 0) throw std::invalid_argument("stability: frame weights must be positive");
        }
    }
}

StabilityData StabilityData::uniform(std::size_t nvertices, std::vector<std::vector<long>> frames) {
    return {std::vector<long>(nvertices, 1), std::vector<Rational>(nvertices, Rational(0)), std::move(frames)};
}

long StabilityData::r(const DimVector& a) const {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += rank.at(i) * a[i];
    return s;
}

Rational StabilityData::tau(const DimVector& a) const {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += slope.at(i) * a[i];
    return s / r(a);
}

long StabilityData::lambda(std::size_t k, const DimVector& a) const {
    const auto& f = frames.at(k);
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += f.at(i) * a[i];
    return s;
}

std::vector<DimVector> classes_up_to(const DimVector& bound) {
    std::vector<DimVector> out;
    DimVector cur(bound.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == bound.size()) {
            if (!is_zero(cur)) out.push_back(cur);
            return;
        }
        for (int x = 0; x <= bound[i]; ++x) {
            cur[i] = x;
            rec(i + 1);
        }
        cur[i] = 0;
    };
    rec(0);
    std::stable_sort(out.begin(), out.end(), [](const DimVector& a, const DimVector& b) {
        if (total(a) != total(b)) return total(a) < total(b);
        return a < b;
    });
    return out;
}

std::vector<DimVector> classes_of_total_at_most(std::size_t nvertices, int max_total) {
    std::vector<DimVector> out;
    for (const auto& c : classes_up_to(DimVector(nvertices, max_total))) {
        if (total(c) <= max_total) out.push_back(c);
    }
    return out;
}

std::vector<std::vector<DimVector>> ordered_partitions(const DimVector& alpha, const StabilityData& stab) {
    if (is_zero(alpha)) throw std::invalid_argument("ordered_partitions: alpha = 0");
    const Rational t = stab.tau(alpha);
    std::vector<DimVector> parts;
    for (const auto& c : classes_up_to(alpha)) {
        if (stab.tau(c) == t) parts.push_back(c);
    }
    std::vector<std::vector<DimVector>> out;
    std::vector<DimVector> cur;
    std::function<void(const DimVector&)> rec = [&](const DimVector& rest) {
        if (is_zero(rest)) {
            out.push_back(cur);
            return;
        }
        for (const auto& p : parts) {
            bool fits = true;
            for (std::size_t i = 0; i < p.size(); ++i) fits = fits && p[i] <= rest[i];
            if (!fits) continue;
            DimVector r = rest;
            for (std::size_t i = 0; i < p.size(); ++i) r[i] -= p[i];
            // The remainder must also split into equal-slope pieces; an empty remainder always does.
            if (!is_zero(r) && stab.tau(r) != t) continue;
            cur.push_back(p);
            rec(r);
            cur.pop_back();
        }
    };
    rec(alpha);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::string generator_name(const DimVector& alpha) {
    std::string s = "Z";
    for (std::size_t i = 0; i < alpha.size(); ++i) s += (i ? "_" : "") + std::to_string(alpha[i]);
    return s;
}

}  // namespace kvertex
