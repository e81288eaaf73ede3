#pragma once

#include "kvertex/localized.hpp"
#include "kvertex/rational_function.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kvertex {

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<std::pair<int, int>> edges;  // vertex indices

    // Lines "vertex <name>", "edge <src> <dst>", '#' comments.
    static Quiver parse(const std::string& text);
    static Quiver with_edges(int nvertices, std::vector<std::pair<int, int>> edges);
    int index_of(const std::string& name) const;
    std::size_t size() const { return vertices.size(); }
    std::string to_string() const;
};

using DimVector = std::vector<int>;

DimVector operator+(const DimVector& a, const DimVector& b);
int total(const DimVector& a);
bool is_zero(const DimVector& a);
std::string dim_to_string(const DimVector& a);  // "(1,2)"
DimVector parse_dim(const std::string& text);   // "(1,2)"

// Variable for vertex i (0-based) and slot a (0-based): s_{i+1,a+1}.
std::string block_var(const std::string& prefix, int i, int a);
std::vector<std::vector<std::string>> blocks(const DimVector& alpha, const std::string& prefix = "s");
bool is_state_var(const std::string& name);  // s_{i,a}

class GradedElement {
public:
    GradedElement() = default;
    // Validates block symmetry and that only in-range s-variables occur.
    GradedElement(DimVector alpha, LaurentPoly poly);
    static GradedElement vacuum(std::size_t nvertices);

    const DimVector& alpha() const { return alpha_; }
    const LaurentPoly& poly() const { return poly_; }
    bool is_degree_zero() const;
    friend bool operator==(const GradedElement&, const GradedElement&) = default;
    GradedElement operator+(const GradedElement& o) const;
    GradedElement scaled(const CycloScalar& c) const;
    std::string to_string() const;  // "poly@(1,0)"

private:
    DimVector alpha_;
    LaurentPoly poly_;
};

struct VirtualCharacter {
    std::vector<Monomial> positive;
    std::vector<Monomial> negative;

    int rank() const { return static_cast<int>(positive.size()) - static_cast<int>(negative.size()); }
    VirtualCharacter dual() const;
    Monomial determinant() const;
    std::string to_string() const;
};

using VarNamer = std::function<std::string(int vertex, int slot)>;
VarNamer prefix_namer(const std::string& prefix);

// E_{alpha,beta}: positive {b_{i,b}/a_{i,a}}, negative {b_{j,b}/a_{i,a} : i -> j}.
VirtualCharacter deformation_character(const Quiver& q, const DimVector& alpha, const DimVector& beta,
                                       const VarNamer& first = prefix_namer("s"), const VarNamer& second = prefix_namer("t"));
RationalFunction theta_kernel(const Quiver& q, const DimVector& alpha, const DimVector& beta, bool full, const std::string& z = "z",
                              const VarNamer& first = prefix_namer("s"), const VarNamer& second = prefix_namer("t"));

enum class DegreeSign { Substitution, Inverse };

// Multiply each monomial by factor^{deg_s} (Inverse: factor^{-deg_s}).
LaurentPoly translate(const LaurentPoly& p, const Monomial& factor, DegreeSign sign = DegreeSign::Substitution);
GradedElement translate_element(const GradedElement& a, const Monomial& factor, DegreeSign sign = DegreeSign::Substitution);

// Rename the s-block of g so it sits after alpha: s_{i,b} -> s_{i,alpha_i+b}.
LaurentPoly relabel_after(const LaurentPoly& g, const DimVector& alpha);
// Renamings for the coset representatives of S_{alpha+beta} / (S_alpha x S_beta).
std::vector<std::unordered_map<std::string, std::string>> coset_renamings(const DimVector& alpha, const DimVector& beta);
LaurentPoly apply_renaming(const LaurentPoly& p, const std::unordered_map<std::string, std::string>& r);

// Y(f, z) g with z any monomial (e.g. z*w); poly may carry other variables.
struct ZGraded {
    DimVector alpha;
    LaurentPoly poly;
    friend bool operator==(const ZGraded&, const ZGraded&) = default;
};
ZGraded vertex_shuffle(const ZGraded& f, const ZGraded& g, const Monomial& z);
GradedElement as_element(const ZGraded& x);
ZGraded as_zgraded(const GradedElement& x);

RationalFunction vertex_kernel(const Quiver& q, const GradedElement& f, const GradedElement& g, const std::string& z = "z");
// All denominator factors are (1 - c z^{+-1}).
bool is_reduced(const RationalFunction& f);

// Caches rho_K(z^d Theta_{alpha,beta}) per (alpha, beta, d).
class BracketCache {
public:
    LaurentPoly residue(const Quiver& q, const DimVector& alpha, const DimVector& beta, long d);

private:
    std::mutex mu_;
    std::map<std::tuple<DimVector, DimVector, long>, LaurentPoly> cache_;
};

GradedElement lie_bracket(const Quiver& q, const GradedElement& f, const GradedElement& g, BracketCache* cache = nullptr);

enum class Axiom { Vacuum, Skew, WeakAssoc, Locality };
struct AxiomResult {
    bool pass = false;
    std::string lhs;
    std::string rhs;
    std::string witness;  // first differing coefficient on failure
};
AxiomResult axiom_check(const Quiver& q, Axiom which, const GradedElement& f, const GradedElement& g, const GradedElement& h,
                        DegreeSign sign = DegreeSign::Substitution);

// wedge_{-1} E = prod_{pos}(1 - chi) / prod_{neg}(1 - chi)
LocalizedPoly wedge_minus_one(const VirtualCharacter& e);
// [(1-s)^{rank - i}] of wedge_{-s}(E^dual)
LocalizedPoly conner_floyd(const VirtualCharacter& e, int i);
// wedge_{-1}(E) * det(E)^{1/2}
LocalizedPoly symmetrized_wedge(const VirtualCharacter& e);

}  // namespace kvertex
