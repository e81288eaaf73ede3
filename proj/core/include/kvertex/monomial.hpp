#pragma once

#include "kvertex/cyclotomic.hpp"
#include "kvertex/rational.hpp"

#include <compare>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace kvertex {

// Product of variables with rational exponents, sorted by variable name.
class Monomial {
public:
    using Entry = std::pair<std::string, Frac>;

    Monomial() = default;
    static Monomial var(const std::string& name, Frac e = 1);
    static Monomial from_entries(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return e_; }
    bool is_one() const { return e_.empty(); }
    Frac exponent(const std::string& name) const;
    bool contains(const std::string& name) const { return !exponent(name).is_zero(); }

    Monomial operator*(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const { return *this * o.inverse(); }
    Monomial& operator*=(const Monomial& o) { return *this = *this * o; }
    Monomial inverse() const;
    Monomial pow(Frac k) const;

    // Split off the given variable: returns (exponent, rest).
    std::pair<Frac, Monomial> extract(const std::string& name) const;
    // Apply a renaming of variables; exponents of colliding names add.
    Monomial rename(const std::function<std::string(const std::string&)>& f) const;
    // Sum of exponents over variables accepted by pred.
    Frac degree(const std::function<bool(const std::string&)>& pred) const;
    // Weighted pairing sum_v e_v * o_v.
    Frac dot(const Monomial& o) const;

    std::string to_string() const;  // "1", "s_{1,2}^2*t^(1/2)*z^-1"

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.e_ <=> b.e_; }

private:
    std::vector<Entry> e_;
};

// A unit c = gamma * m with gamma a root of unity exp(2 pi i * root) and m a monomial.
struct Character {
    Monomial mono;
    Frac root;  // in [0, 1)

    Character() = default;
    Character(Monomial m, Frac r = 0) : mono(std::move(m)), root(r.mod_one()) {}  // NOLINT

    bool is_one() const { return mono.is_one() && root.is_zero(); }
    bool is_root_of_unity() const { return mono.is_one(); }
    Character operator*(const Character& o) const { return {mono * o.mono, root + o.root}; }
    Character inverse() const { return {mono.inverse(), -root}; }
    Character pow(long k) const { return {mono.pow(k), root * k}; }
    // One chosen n-th root.
    Character nth_root(long n) const { return {mono.pow(Frac(1, n)), root / n}; }
    CycloScalar scalar() const { return root_of_unity(static_cast<unsigned>(root.den()), root.num()); }
    std::string to_string() const;

    friend bool operator==(const Character&, const Character&) = default;
    friend auto operator<=>(const Character& a, const Character& b) {
        if (auto c = a.mono <=> b.mono; c != 0) return c;
        return a.root <=> b.root;
    }
};

bool is_valid_variable_name(const std::string& name);

}  // namespace kvertex
