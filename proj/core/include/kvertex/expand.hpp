#pragma once

#include "kvertex/localized.hpp"
#include "kvertex/rational_function.hpp"
#include "kvertex/series.hpp"

#include <string>
#include <vector>

namespace kvertex {

enum class Point { Zero, Infinity, One };

// Expansion in the uniformizer z, z^{-1} or (1 - z) of the given point.
struct FormalSeries {
    Point point = Point::Zero;
    std::string var = "z";
    Series<LocalizedPoly> series;

    int truncation() const { return series.precision(); }
    LocalizedPoly coefficient(int k) const { return series.coeff(k); }
    std::string to_string() const;
};

// order is the number of coefficients kept from the leading power on.
FormalSeries expand_at(const RationalFunction& f, Point point, int order);

// Coefficients of all uniformizer powers below prec (absolute), for point zero or infinity.
Series<LaurentPoly> expand_laurent(const RationalFunction& f, Point point, int prec);
// Same for the point one; coefficients may need localization.
Series<LocalizedPoly> expand_one(const RationalFunction& f, int prec);

// Sum_{k<order} (-s z)^k (1 - t w/s)^k / (1 - s z)^{k+1}, an expansion of 1/(1 - t z w) near w = t^{-1} s.
struct EquivariantExpansion {
    Monomial t;
    Monomial pivot;
    int order = 0;
    std::string zvar = "z";
    std::string wvar = "w";
    std::vector<RationalFunction> terms;

    RationalFunction sum() const;
    // (1 - t z w) * sum() - 1, which equals -(A B)^order with A = -s z/(1-s z), B = 1 - t w/s.
    RationalFunction defect() const;
};

EquivariantExpansion expand_equivariant(const Monomial& t, const Monomial& pivot, int order, const std::string& zvar = "z",
                                        const std::string& wvar = "w");

struct PoleTerm {
    Character a;  // the pole is at var = a^{-1}
    int m = 1;
    LocalizedPoly coefficient;
};

// f = polynomial + sum coefficient / (1 - a var)^m
struct PartialFractions {
    std::string var = "z";
    LaurentPoly polynomial;
    std::vector<PoleTerm> poles;

    std::string to_string() const;
};

PartialFractions partial_fractions(const RationalFunction& f);
// Cross-multiplied comparison of the recombined decomposition with f.
bool recombines_to(const PartialFractions& pf, const RationalFunction& f);

// Linear factors (1 - a var) with multiplicities after splitting every (1 - c var^n).
std::map<Character, int> split_denominator(const RationalFunction& f);

}  // namespace kvertex
