#pragma once

#include "kvertex/free_lie.hpp"
#include "kvertex/quiver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace kvertex {

struct StabilityData {
    std::vector<long> rank;                 // r(alpha) = sum rank_i alpha_i
    std::vector<Rational> slope;            // tau(alpha) = (sum slope_i alpha_i) / r(alpha)
    std::vector<std::vector<long>> frames;  // lambda_k(alpha) = sum frames[k][i] alpha_i

    // Validates positivity.
    StabilityData(std::vector<long> rank, std::vector<Rational> slope, std::vector<std::vector<long>> frames);
    static StabilityData uniform(std::size_t nvertices, std::vector<std::vector<long>> frames);

    std::size_t size() const { return rank.size(); }
    long r(const DimVector& a) const;
    Rational tau(const DimVector& a) const;
    long lambda(std::size_t k, const DimVector& a) const;
};

std::vector<std::vector<DimVector>> ordered_partitions(const DimVector& alpha, const StabilityData& stab);
// Nonzero classes <= bound componentwise, sorted by total dimension then lexicographically.
std::vector<DimVector> classes_up_to(const DimVector& bound);
std::vector<DimVector> classes_of_total_at_most(std::size_t nvertices, int max_total);

// Free mode: generator name for a class, "Z2", "Z1_1".
std::string generator_name(const DimVector& alpha);

template <class V>
using InvariantTable = std::map<DimVector, V>;

struct FreeAlgebra {
    using Value = FreeLie;
    Value zero(const DimVector&) const { return {}; }
    Value bracket(const Value& a, const Value& b) const { return kvertex::bracket(a, b); }
    Value scale(const Value& a, const Rational& c) const { return a.scaled(c); }
    Value add(const Value& a, const Value& b) const { return a + b; }
    bool is_zero(const Value& a) const { return a.is_zero(); }
};

class QuiverAlgebra {
public:
    using Value = GradedElement;
    explicit QuiverAlgebra(Quiver q) : q_(std::move(q)), cache_(std::make_shared<BracketCache>()) {}
    Value zero(const DimVector& a) const { return {a, LaurentPoly()}; }
    Value bracket(const Value& a, const Value& b) const { return lie_bracket(q_, a, b, cache_.get()); }
    Value scale(const Value& a, const Rational& c) const { return a.scaled(CycloScalar(c)); }
    Value add(const Value& a, const Value& b) const { return a + b; }
    bool is_zero(const Value& a) const { return a.poly().is_zero(); }
    const Quiver& quiver() const { return q_; }

private:
    Quiver q_;
    std::shared_ptr<BracketCache> cache_;
};

namespace detail {

template <class V>
const V& lookup(const InvariantTable<V>& t, const DimVector& a) {
    auto it = t.find(a);
    if (it == t.end()) throw std::out_of_range("missing table entry for class " + dim_to_string(a));
    return it->second;
}

// (lambda_k(a_1)/n!) [Z_{a_n}, [..., [Z_{a_2}, Z_{a_1}]]]
template <class A>
typename A::Value nested_term(const A& alg, const InvariantTable<typename A::Value>& z, std::size_t k, const std::vector<DimVector>& parts,
                              const StabilityData& stab) {
    typename A::Value acc = lookup(z, parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) acc = alg.bracket(lookup(z, parts[i]), acc);
    return alg.scale(acc, Rational(stab.lambda(k, parts[0])) / factorial(static_cast<long>(parts.size())));
}

}  // namespace detail

template <class A>
typename A::Value forward_transform(const A& alg, const InvariantTable<typename A::Value>& z, std::size_t k, const DimVector& alpha,
                                    const StabilityData& stab) {
    typename A::Value out = alg.zero(alpha);
    for (const auto& parts : ordered_partitions(alpha, stab)) out = alg.add(out, detail::nested_term(alg, z, k, parts, stab));
    return out;
}

template <class A>
InvariantTable<typename A::Value> forward_table(const A& alg, const InvariantTable<typename A::Value>& z, std::size_t k,
                                                const StabilityData& stab) {
    InvariantTable<typename A::Value> out;
    for (const auto& [a, v] : z) out.emplace(a, forward_transform(alg, z, k, a, stab));
    return out;
}

template <class A>
InvariantTable<typename A::Value> invert_transform(const A& alg, const InvariantTable<typename A::Value>& zt, std::size_t k,
                                                   const StabilityData& stab) {
    std::vector<DimVector> order;
    for (const auto& [a, v] : zt) order.push_back(a);
    std::stable_sort(order.begin(), order.end(), [](const DimVector& x, const DimVector& y) { return total(x) < total(y); });
    InvariantTable<typename A::Value> z;
    for (const auto& a : order) {
        if (is_zero(a)) throw std::invalid_argument("invert_transform: grade 0 entry");
        typename A::Value rest = detail::lookup(zt, a);
        for (const auto& parts : ordered_partitions(a, stab)) {
            if (parts.size() < 2) continue;
            rest = alg.add(rest, alg.scale(detail::nested_term(alg, z, k, parts, stab), Rational(-1)));
        }
        z.emplace(a, alg.scale(rest, Rational(1) / Rational(stab.lambda(k, a))));
    }
    return z;
}

// lambda_{k2}(alpha) Zt1_alpha - lambda_{k1}(alpha) Zt2_alpha + sum [Zt1_{a1}, Zt2_{a2}] over equal-slope splittings.
template <class A>
typename A::Value master_identity_residual(const A& alg, const InvariantTable<typename A::Value>& zt1,
                                           const InvariantTable<typename A::Value>& zt2, std::size_t k1, std::size_t k2,
                                           const DimVector& alpha, const StabilityData& stab) {
    typename A::Value out = alg.add(alg.scale(detail::lookup(zt1, alpha), Rational(stab.lambda(k2, alpha))),
                                    alg.scale(detail::lookup(zt2, alpha), Rational(-stab.lambda(k1, alpha))));
    for (const auto& parts : ordered_partitions(alpha, stab)) {
        if (parts.size() != 2) continue;
        out = alg.add(out, alg.bracket(detail::lookup(zt1, parts[0]), detail::lookup(zt2, parts[1])));
    }
    return out;
}

// Evaluate a free Lie element by sending each generator to a value.
template <class A>
typename A::Value evaluate_free(const A& alg, const FreeLie& x, const std::map<std::string, typename A::Value>& gens, const DimVector& grade) {
    std::function<typename A::Value(const Word&)> eval = [&](const Word& w) -> typename A::Value {
        if (w.size() == 1) {
            auto it = gens.find(w[0]);
            if (it == gens.end()) throw std::out_of_range("no value for generator " + w[0]);
            return it->second;
        }
        const std::size_t s = standard_split(w);
        return alg.bracket(eval(Word(w.begin(), w.begin() + static_cast<long>(s))), eval(Word(w.begin() + static_cast<long>(s), w.end())));
    };
    typename A::Value out = alg.zero(grade);
    for (const auto& [w, c] : x.lyndon_coordinates()) out = alg.add(out, alg.scale(eval(w), c));
    return out;
}

}  // namespace kvertex
