#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace kvertex {

// Arbitrary precision rational; gmpxx keeps it canonical.
using Rational = mpq_class;

std::string to_string(const Rational& q);
// n/d in canonical form.
Rational ratio(long n, long d);
Rational parse_rational(std::string_view text);

// n(n-1)...(n-k+1)/k!
Rational generalized_binomial(const Rational& n, long k);
Rational generalized_binomial(long n, long k);
Rational factorial(long n);

// Small exact rational used for monomial exponents.
class Frac {
public:
    constexpr Frac() = default;
    constexpr Frac(std::int64_t n) : n_(n) {}  // NOLINT(google-explicit-constructor)
    Frac(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return n_; }
    std::int64_t den() const { return d_; }
    bool is_integer() const { return d_ == 1; }
    bool is_zero() const { return n_ == 0; }
    std::int64_t to_int() const;  // throws unless integral

    Frac operator-() const;
    Frac& operator+=(const Frac& o);
    Frac& operator-=(const Frac& o);
    Frac& operator*=(const Frac& o);
    Frac& operator/=(const Frac& o);
    friend Frac operator+(Frac a, const Frac& b) { return a += b; }
    friend Frac operator-(Frac a, const Frac& b) { return a -= b; }
    friend Frac operator*(Frac a, const Frac& b) { return a *= b; }
    friend Frac operator/(Frac a, const Frac& b) { return a /= b; }

    friend bool operator==(const Frac&, const Frac&) = default;
    friend std::strong_ordering operator<=>(const Frac& a, const Frac& b);

    // Representative of this value modulo 1 in [0, 1).
    Frac mod_one() const;
    Rational to_rational() const { return Rational(n_, d_); }
    std::string to_string() const;

private:
    static Frac make(__int128 n, __int128 d);
    std::int64_t n_ = 0;
    std::int64_t d_ = 1;
};

}  // namespace kvertex
