#pragma once

#include "kvertex/laurent.hpp"

#include <map>
#include <string>

namespace kvertex {

// numerator / prod (1 - chi)^e over characters chi with a nontrivial monomial part.
// Each chi is oriented so that its first variable has positive exponent.
class LocalizedPoly {
public:
    using Denominator = std::map<Character, int>;

    LocalizedPoly() = default;
    LocalizedPoly(LaurentPoly num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)
    LocalizedPoly(const CycloScalar& c) : num_(c) {}          // NOLINT(google-explicit-constructor)
    LocalizedPoly(long c) : num_(c) {}                        // NOLINT(google-explicit-constructor)
    LocalizedPoly(int c) : num_(c) {}                         // NOLINT(google-explicit-constructor)

    // (1 - chi)^{-e}, e >= 0.
    static LocalizedPoly inverse_one_minus(const Character& chi, int e = 1);

    const LaurentPoly& numerator() const { return num_; }
    const Denominator& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.empty(); }

    LocalizedPoly operator-() const;
    LocalizedPoly& operator+=(const LocalizedPoly& o);
    LocalizedPoly& operator-=(const LocalizedPoly& o) { return *this += -o; }
    LocalizedPoly& operator*=(const LocalizedPoly& o);
    friend LocalizedPoly operator+(LocalizedPoly a, const LocalizedPoly& b) { return a += b; }
    friend LocalizedPoly operator-(LocalizedPoly a, const LocalizedPoly& b) { return a -= b; }
    friend LocalizedPoly operator*(LocalizedPoly a, const LocalizedPoly& b) { return a *= b; }
    friend bool operator==(const LocalizedPoly& a, const LocalizedPoly& b);

    // Cancel denominator factors that divide the numerator exactly.
    LocalizedPoly simplified() const;
    // Throws std::domain_error if a denominator survives simplification.
    LaurentPoly to_laurent() const;

    std::string to_string() const;

    // Orientation used for denominators: returns chi or chi^{-1}; flipped is set when inverted.
    static Character orient(const Character& chi, bool& flipped);
    static LaurentPoly one_minus(const Character& chi);

private:
    LaurentPoly num_;
    Denominator den_;
};

}  // namespace kvertex
