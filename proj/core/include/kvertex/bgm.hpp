#pragma once

#include "kvertex/expand.hpp"
#include "kvertex/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace kvertex {

// sum c_k phi^k, with phi^k(s^n) = (-1)^k binom(n, k).
class PhiElement {
public:
    PhiElement() = default;
    static PhiElement basis(long k, const Rational& c = 1);

    const std::map<long, Rational>& coeffs() const { return c_; }
    void add(long k, const Rational& c);
    bool is_zero() const { return c_.empty(); }

    PhiElement& operator+=(const PhiElement& o);
    friend PhiElement operator+(PhiElement a, const PhiElement& b) { return a += b; }
    PhiElement scaled(const Rational& s) const;
    friend bool operator==(const PhiElement&, const PhiElement&) = default;

    std::string to_string() const;  // "-phi^1+2*phi^2"

private:
    std::map<long, Rational> c_;
};

// Polynomial in deg_s, coefficient of deg_s^j at index j.
class NumericalPoly {
public:
    NumericalPoly() = default;
    explicit NumericalPoly(std::vector<Rational> c);
    const std::vector<Rational>& coeffs() const { return c_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rational operator()(const Rational& n) const;
    NumericalPoly operator*(const NumericalPoly& o) const;
    NumericalPoly operator+(const NumericalPoly& o) const;
    friend bool operator==(const NumericalPoly&, const NumericalPoly&) = default;
    // Integer valued on all integers (forward differences at 0 are integers).
    bool is_numerical() const;
    std::string to_string(const std::string& var = "n") const;

private:
    void trim();
    std::vector<Rational> c_;
};

// sum c_k xi^k with xi^m(x^n) = delta_{mn} n!.
class XiElement {
public:
    XiElement() = default;
    const std::map<long, Rational>& coeffs() const { return c_; }
    void add(long k, const Rational& c);
    static XiElement from_divided(const std::map<long, Rational>& d);
    std::map<long, Rational> to_divided() const;
    XiElement operator*(const XiElement& o) const;
    Rational evaluate(const Rational& xi) const;
    Rational pair_monomial(long n) const;  // against x^n
    friend bool operator==(const XiElement&, const XiElement&) = default;
    std::string to_string() const;

private:
    std::map<long, Rational> c_;
};

Rational phi_pair(const PhiElement& a, long n);
PhiElement star(const PhiElement& a, const PhiElement& b);
std::vector<std::pair<PhiElement, PhiElement>> coproduct(const PhiElement& a);
// sum over pairs of left(s^m) * right(s^n)
Rational pair_tensor(const std::vector<std::pair<PhiElement, PhiElement>>& t, long m, long n);
NumericalPoly to_numerical(const PhiElement& a);
// Throws std::domain_error if p is not integer valued (unless allow_rational).
PhiElement from_numerical(const NumericalPoly& p, bool allow_rational = false);
XiElement chern_character(const PhiElement& a);
// sum_{k<order} (1-z)^k phi^k(s^n)
FormalSeries translation_pairing(long n, int order);

}  // namespace kvertex
