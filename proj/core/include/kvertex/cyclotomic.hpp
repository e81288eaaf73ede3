#pragma once

#include "kvertex/rational.hpp"

#include <string>
#include <vector>

namespace kvertex {

// Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1}.
// Always stored at the smallest N whose field contains the value, so the
// representation is unique and operator== compares coefficient vectors.
class CycloScalar {
public:
    CycloScalar() : n_(1), c_(1) {}
    CycloScalar(const Rational& q) : n_(1), c_{q} {}  // NOLINT(google-explicit-constructor)
    CycloScalar(long v) : n_(1), c_{Rational(v)} {}   // NOLINT(google-explicit-constructor)
    CycloScalar(int v) : CycloScalar(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

    // Build from coefficients of sum c_j zeta_N^j, any length.
    static CycloScalar from_powers(unsigned order, const std::vector<Rational>& powers);

    unsigned order() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const { return n_ == 1 && c_[0] == 0; }
    bool is_one() const { return n_ == 1 && c_[0] == 1; }
    bool is_rational() const { return n_ == 1; }
    const Rational& rational() const;  // throws unless is_rational()

    CycloScalar operator-() const;
    CycloScalar& operator+=(const CycloScalar& o);
    CycloScalar& operator-=(const CycloScalar& o);
    CycloScalar& operator*=(const CycloScalar& o);
    CycloScalar& operator/=(const CycloScalar& o);
    friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
    friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
    friend CycloScalar operator*(CycloScalar a, const CycloScalar& b) { return a *= b; }
    friend CycloScalar operator/(CycloScalar a, const CycloScalar& b) { return a /= b; }
    friend bool operator==(const CycloScalar& a, const CycloScalar& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

    CycloScalar inverse() const;
    CycloScalar pow(long k) const;

    // Coefficients at a larger order M (order() must divide M), unreduced length phi(M).
    std::vector<Rational> lifted(unsigned m) const;

    // "3/2", "zeta4", "1+2*zeta3", ...
    std::string to_string() const;
    // True when to_string() is a single signed term (no parentheses needed as a factor).
    bool is_single_term() const;

private:
    void canonicalize();
    unsigned n_;
    std::vector<Rational> c_;
};

CycloScalar root_of_unity(unsigned n, long j);

unsigned euler_phi(unsigned n);
// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
const std::vector<long>& cyclotomic_polynomial(unsigned n);

}  // namespace kvertex
