#pragma once

#include "kvertex/cyclotomic.hpp"
#include "kvertex/monomial.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace kvertex {

class LaurentPoly {
public:
    using Terms = std::map<Monomial, CycloScalar>;

    LaurentPoly() = default;
    LaurentPoly(const CycloScalar& c);  // NOLINT(google-explicit-constructor)
    LaurentPoly(const Rational& c) : LaurentPoly(CycloScalar(c)) {}  // NOLINT
    LaurentPoly(long c) : LaurentPoly(CycloScalar(c)) {}  // NOLINT
    LaurentPoly(int c) : LaurentPoly(CycloScalar(c)) {}   // NOLINT
    LaurentPoly(const Monomial& m, const CycloScalar& c = CycloScalar(1L));
    static LaurentPoly var(const std::string& name, Frac e = 1) { return {Monomial::var(name, e)}; }
    static LaurentPoly character(const Character& c) { return {c.mono, c.scalar()}; }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    bool is_monomial() const { return t_.size() == 1; }
    bool is_constant() const;
    CycloScalar constant_term() const;
    CycloScalar coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const CycloScalar& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly& operator*=(const CycloScalar& c);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    LaurentPoly times(const Monomial& m, const CycloScalar& c = CycloScalar(1L)) const;
    LaurentPoly pow(unsigned k) const;

    // Replace each monomial m by scale(m) * image(m).
    LaurentPoly map_terms(const std::function<std::pair<Monomial, CycloScalar>(const Monomial&)>& f) const;
    LaurentPoly rename(const std::function<std::string(const std::string&)>& f) const;
    // Multiply each monomial by factor^{deg(m)} where deg counts variables accepted by pred.
    LaurentPoly graded_scale(const std::function<bool(const std::string&)>& pred, const Monomial& factor) const;
    // Substitute var -> c * var (c a character, integer exponents of var required if c has a root part).
    LaurentPoly scale_variable(const std::string& var, const Character& c) const;
    // Group terms by exponent of var (var removed from the monomials).
    std::map<Frac, LaurentPoly> split_by(const std::string& var) const;
    LaurentPoly coefficient_of(const std::string& var, Frac e) const;
    std::vector<std::string> variables() const;

    std::string to_string() const;

private:
    Terms t_;
};

// Exact division by (1 - chi). Returns false if not divisible.
bool divide_one_minus(const LaurentPoly& p, const Character& chi, LaurentPoly& quotient);

enum class Normalization { OrbitSum, Averaged };

// Sum (or average) of sigma.p over the product of symmetric groups on the blocks.
LaurentPoly symmetrize(const LaurentPoly& p, const std::vector<std::vector<std::string>>& blocks,
                       Normalization norm = Normalization::OrbitSum);
bool is_block_symmetric(const LaurentPoly& p, const std::vector<std::vector<std::string>>& blocks);

}  // namespace kvertex
