#include "kvtools/random.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace kvtools {

using namespace kvertex;

std::uint64_t suite_seed() {
    const char* env = std::getenv("KVERTEX_SUITE_SEED");
    if (env == nullptr || *env == '\0') return kDefaultSeed;
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used, 10);
    if (used != std::string(env).size()) throw std::invalid_argument("KVERTEX_SUITE_SEED must be a decimal integer");
    return v;
}

RationalFunction random_rational_function(Rng& rng) {
    const Monomial t = Monomial::var("t"), s = Monomial::var("s");
    const Monomial chars[] = {t, t * t, s / t};
    LaurentPoly pre;
    const long nterms = rng.uniform(1, 2);
    for (long i = 0; i < nterms; ++i) {
        Monomial m = Monomial::var("z", rng.uniform(-3, 3));
        if (rng.uniform(0, 2) == 0) m *= chars[rng.uniform(0, 2)];
        pre.add_term(m, CycloScalar(ratio(rng.uniform(-3, 3) | 1, rng.uniform(1, 2))));
    }
    std::map<std::pair<Character, int>, int> factors;
    const long nf = rng.uniform(1, 3);
    for (long i = 0; i < nf; ++i) {
        const Character c(chars[rng.uniform(0, 2)]);
        const int n = static_cast<int>(rng.uniform(1, 2));
        factors[{c, n}] = static_cast<int>(rng.uniform(1, 3));
    }
    return RationalFunction("z", pre, factors);
}

GradedElement random_element(Rng& rng, const DimVector& alpha, bool degree_zero) {
    const auto bl = blocks(alpha);
    std::vector<std::string> vars;
    for (const auto& b : bl) vars.insert(vars.end(), b.begin(), b.end());
    LaurentPoly p;
    const long nterms = rng.uniform(1, 2);
    for (long i = 0; i < nterms; ++i) {
        Monomial m;
        long deg = 0;
        for (const auto& v : vars) {
            const long e = rng.uniform(-2, 2);
            m *= Monomial::var(v, e);
            deg += e;
        }
        if (degree_zero && deg != 0) {
            if (vars.empty()) {
                m = Monomial();
            } else {
                m *= Monomial::var(vars.front(), -deg);
            }
        }
        if (rng.uniform(0, 3) == 0) m *= Monomial::var("q", rng.uniform(-1, 1));
        const CycloScalar c(ratio(rng.uniform(-4, 4) | 1, rng.uniform(1, 3)));
        p += symmetrize(LaurentPoly(m, c), bl, Normalization::OrbitSum);
    }
    if (p.is_zero()) p = LaurentPoly(1L);
    return {alpha, p};
}

VirtualCharacter random_virtual_character(Rng& rng, int max_rank, bool honest) {
    VirtualCharacter e;
    auto mono = [&] {
        Monomial m = Monomial::var("t1", rng.uniform(-2, 2)) * Monomial::var("t2", rng.uniform(-2, 2));
        if (m.is_one()) m = Monomial::var("t1");
        return m;
    };
    const long npos = rng.uniform(0, max_rank);
    for (long i = 0; i < npos; ++i) e.positive.push_back(mono());
    if (!honest) {
        const long nneg = rng.uniform(0, 2);
        for (long i = 0; i < nneg; ++i) e.negative.push_back(mono());
    }
    return e;
}

std::vector<Quiver> small_quivers() {
    std::vector<Quiver> out;
    out.push_back(Quiver::with_edges(1, {}));
    out.push_back(Quiver::with_edges(1, {{0, 0}}));
    out.push_back(Quiver::with_edges(1, {{0, 0}, {0, 0}}));
    const std::vector<std::pair<int, int>> arrows{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    out.push_back(Quiver::with_edges(2, {}));
    for (std::size_t i = 0; i < arrows.size(); ++i) out.push_back(Quiver::with_edges(2, {arrows[i]}));
    for (std::size_t i = 0; i < arrows.size(); ++i)
        for (std::size_t j = i; j < arrows.size(); ++j) out.push_back(Quiver::with_edges(2, {arrows[i], arrows[j]}));
    return out;
}

}  // namespace kvtools
