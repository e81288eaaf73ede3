#pragma once

#include "kvertex/laurent.hpp"

#include <map>
#include <string>

namespace kvertex {

// The factor (1 - c * var^n) with n > 0 and c free of var.
struct ZFactor {
    Character c;
    int n = 1;
    friend bool operator==(const ZFactor&, const ZFactor&) = default;
    friend auto operator<=>(const ZFactor& a, const ZFactor& b) {
        if (auto r = a.n <=> b.n; r != 0) return r;
        return a.c <=> b.c;
    }
};

// prefactor / prod (1 - c var^n)^e.
class RationalFunction {
public:
    using Denominator = std::map<ZFactor, int>;

    explicit RationalFunction(std::string var = "z") : var_(std::move(var)) {}
    RationalFunction(std::string var, LaurentPoly prefactor);
    // Factors may have n < 0 (normalized away) and e of either sign (e < 0 multiplies into the prefactor).
    RationalFunction(std::string var, LaurentPoly prefactor, const std::map<std::pair<Character, int>, int>& factors);
    // 1 / (1 - c var^n)^e
    static RationalFunction factor(const std::string& var, const Character& c, int n, int e = 1);

    const std::string& variable() const { return var_; }
    const LaurentPoly& prefactor() const { return pre_; }
    const Denominator& denominator() const { return den_; }
    bool is_laurent() const { return den_.empty(); }
    int total_multiplicity() const;
    LaurentPoly denominator_poly() const;
    static LaurentPoly factor_poly(const std::string& var, const ZFactor& f);

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o) { return *this += -o; }
    RationalFunction& operator*=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b);
    RationalFunction times(const LaurentPoly& p) const;

    // var -> t * var
    RationalFunction scale_variable(const Character& t) const;
    // var -> var^{-1}
    RationalFunction invert_variable() const;
    // Apply a map to the coefficient ring: rename variables other than var.
    RationalFunction rename(const std::function<std::string(const std::string&)>& f) const;
    // Cancel denominator factors dividing the prefactor.
    RationalFunction simplified() const;

    std::string to_string() const;

private:
    void check_free(const Character& c) const;
    std::string var_;
    LaurentPoly pre_;
    Denominator den_;
};

}  // namespace kvertex
