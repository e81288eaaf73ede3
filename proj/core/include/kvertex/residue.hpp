#pragma once

#include "kvertex/expand.hpp"

#include <string>
#include <vector>

namespace kvertex {

enum class ResidueKind { KTheory, Naive, Cohomological };

// z^0 term of f_+ - f_-, via partial fractions.
LaurentPoly residue_k(const RationalFunction& f);
// Same quantity read off the two expansions directly.
LaurentPoly residue_k_oracle(const RationalFunction& f, int order);
// -Res_{z=1}(z^{-1} f dz).
LocalizedPoly residue_naive(const RationalFunction& f);
// Res_{u=0}(f du) for f a Laurent polynomial in u.
LaurentPoly residue_coh(const LaurentPoly& f, const std::string& var = "u");

// rho_K(z^b / (1 - a z)^m)
LaurentPoly residue_k_pole(const Character& a, long b, int m);

// Res_{z=gamma}(z^{-1} f dz) for gamma a root of unity; f must have only root-of-unity poles.
LaurentPoly residue_at_root(const RationalFunction& f, const Character& gamma);
// Poles of f as roots of unity (deduplicated); f must have only root-of-unity factor constants.
std::vector<Character> root_poles(const RationalFunction& f);

struct ConstraintCase {
    int n = 0, k = 0, a = 0;
    std::string value;
    std::string expected;
    bool pass = false;
};

// rho(z^{nk+a} / (1 - z^n)^{k+1}) against [k = a = 0].
std::vector<ConstraintCase> constraint_suite(ResidueKind kind, int n_max, int k_max);

}  // namespace kvertex
