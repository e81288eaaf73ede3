#pragma once

#include "kvertex/quiver.hpp"
#include "kvertex/rational_function.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace kvtools {

// Raw mt19937_64 output reduced by modulo, so sequences do not depend on the
// standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    std::uint64_t next() { return g_(); }
    long uniform(long lo, long hi) { return lo + static_cast<long>(g_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    bool coin() { return (g_() & 1u) != 0; }

private:
    std::mt19937_64 g_;
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;

// KVERTEX_SUITE_SEED if set, else kDefaultSeed.
std::uint64_t suite_seed();

// prefactor / up to three factors (1 - c z^n)^e with c in {t, t^2, s/t}, n in {1, 2}, e <= 3.
kvertex::RationalFunction random_rational_function(Rng& rng);

// Block-symmetric element at grade alpha; degree_zero keeps every monomial of s-degree 0.
kvertex::GradedElement random_element(Rng& rng, const kvertex::DimVector& alpha, bool degree_zero = false);

// Positive and negative parts in t1, t2 with rank at most max_rank.
kvertex::VirtualCharacter random_virtual_character(Rng& rng, int max_rank, bool honest = false);

// All quivers with at most two vertices and two edges (edge multisets, not up to isomorphism).
std::vector<kvertex::Quiver> small_quivers();

}  // namespace kvtools
