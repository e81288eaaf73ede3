#include "kvtools/suites.hpp"

#include "kvertex/bgm.hpp"
#include "kvertex/quiver.hpp"
#include "kvertex/residue.hpp"
#include "kvertex/wallcross.hpp"
#include "kvtools/random.hpp"

#include <atomic>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace kvtools {

using namespace kvertex;

std::size_t SuiteReport::passed() const {
    std::size_t n = 0;
    for (const auto& c : cases) n += c.pass ? 1 : 0;
    return n;
}

std::string SuiteReport::render(bool failures_only) const {
    std::ostringstream os;
    for (const auto& c : cases) {
        if (failures_only && c.pass) continue;
        os << (c.pass ? "PASS " : "FAIL ") << c.label;
        if (!c.detail.empty()) os << ": " << c.detail;
        os << "\n";
    }
    os << (ok() ? "PASS " : "FAIL ") << passed() << "/" << cases.size() << "\n";
    return os.str();
}

long SuiteOptions::get(const std::string& key, long fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

std::vector<CaseResult> run_cases(const std::vector<CaseFn>& cases, unsigned jobs) {
    std::vector<CaseResult> out(cases.size());
    auto guarded = [&](std::size_t i) {
        try {
            out[i] = cases[i]();
        } catch (const std::exception& e) {
            out[i].pass = false;
            out[i].detail = std::string("exception: ") + e.what();
        }
    };
    if (jobs <= 1 || cases.size() < 2) {
        for (std::size_t i = 0; i < cases.size(); ++i) guarded(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>(cases.size()));
    for (unsigned t = 0; t < n; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < cases.size(); i = next++) guarded(i);
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

namespace {

CaseResult verdict(std::string label, bool pass, std::string detail = {}) { return {std::move(label), pass, std::move(detail)}; }

std::string str(const DimVector& a) { return dim_to_string(a); }

Character root(long j, long n) { return {Monomial(), Frac(j, n)}; }

// ---- residue ---------------------------------------------------------------

SuiteReport residue_constraints(const SuiteOptions& o) {
    const long kind = o.get("naive", 0);
    SuiteReport r{kind ? "residue-constraints-naive" : "residue-constraints", {}};
    const auto rows = constraint_suite(kind ? ResidueKind::Naive : ResidueKind::KTheory, static_cast<int>(o.get("nmax", 6)),
                                       static_cast<int>(o.get("kmax", 4)));
    for (const auto& c : rows) {
        std::ostringstream l;
        l << "n=" << c.n << " k=" << c.k << " a=" << c.a;
        r.cases.push_back(verdict(l.str(), c.pass, "value " + c.value + ", expected " + c.expected));
    }
    return r;
}

SuiteReport residue_comparison(const SuiteOptions& o) {
    SuiteReport r{"residue-comparison", {}};
    std::vector<CaseFn> cases;
    std::vector<Character> roots;
    for (long n = 1; n <= 6; ++n)
        for (long j = 0; j < n; ++j)
            if (std::gcd(j, n) == 1) roots.push_back(root(j, n));
    for (const auto& g : roots) {
        for (int m = 1; m <= 4; ++m) {
            cases.emplace_back([g, m] {
                const RationalFunction f = RationalFunction::factor("z", g, 1, m);
                const LaurentPoly k = residue_k(f);
                const LocalizedPoly nv = residue_naive(f);
                const LocalizedPoly expected_naive(g.is_one() ? 1L : 0L);
                const bool pass = k == LaurentPoly(1L) && nv == expected_naive;
                return verdict("gamma=" + g.to_string() + " m=" + std::to_string(m), pass,
                               "rho_K " + k.to_string() + ", naive " + nv.to_string());
            });
        }
    }
    // Residue theorem: rho_K = naive - sum_{gamma != 1} Res_{z=gamma}(z^{-1} f dz).
    std::size_t idx = 0;
    for (std::size_t a = 0; a < roots.size(); ++a) {
        for (std::size_t b = a; b < roots.size(); ++b, ++idx) {
            const int b_exp = static_cast<int>(idx % 5) - 2;
            const int m1 = 1 + static_cast<int>(idx % 3), m2 = 1 + static_cast<int>((idx / 3) % 2);
            const Character g1 = roots[a], g2 = roots[b];
            cases.emplace_back([=] {
                RationalFunction f = RationalFunction::factor("z", g1, 1, m1) * RationalFunction::factor("z", g2, 1, m2);
                f = f.times(LaurentPoly::var("z", b_exp));
                LocalizedPoly rhs = residue_naive(f);
                for (const auto& g : root_poles(f)) {
                    if (!g.is_one()) rhs -= LocalizedPoly(residue_at_root(f, g));
                }
                const LaurentPoly lhs = residue_k(f);
                return verdict("residue theorem " + f.to_string(), LocalizedPoly(lhs) == rhs, lhs.to_string() + " vs " + rhs.to_string());
            });
        }
    }
    r.cases = run_cases(cases, o.jobs);
    (void)o;
    return r;
}

int oracle_order(const RationalFunction& f) {
    int span = 0;
    for (const auto& [m, c] : f.prefactor().terms()) span = std::max<int>(span, static_cast<int>(std::abs(m.exponent(f.variable()).to_int())));
    return 2 * span + f.total_multiplicity() + 2;
}

SuiteReport residue_oracle(const SuiteOptions& o) {
    SuiteReport r{"residue-oracle", {}};
    Rng rng(o.seed);
    std::vector<CaseFn> cases;
    const long count = o.get("count", 200);
    for (long i = 0; i < count; ++i) {
        const RationalFunction f = random_rational_function(rng);
        cases.emplace_back([f, i] {
            const LaurentPoly closed = residue_k(f);
            const LaurentPoly oracle = residue_k_oracle(f, oracle_order(f));
            return verdict("#" + std::to_string(i) + " " + f.to_string(), closed == oracle, closed.to_string() + " vs " + oracle.to_string());
        });
    }
    r.cases = run_cases(cases, o.jobs);
    return r;
}

// ---- diagonal expansion ----------------------------------------------------

SuiteReport diagonal_expansion(const SuiteOptions& o) {
    SuiteReport r{"diagonal-expansion", {}};
    const int order = static_cast<int>(o.get("order", 12));
    const Monomial s = Monomial::var("s"), t = Monomial::var("t");
    const std::vector<std::pair<std::string, Monomial>> pivots{{"s", s}, {"s*t", s * t}, {"s/t", s / t}};
    // u stands for w^{-1}; X = 1 - u, and t^{-1} = 1 - Y.
    const std::vector<AdicSubst> subst{{"u", "X", false}, {"t", "Y", true}};
    std::vector<CaseFn> cases;
    for (int a = -2; a <= 2; ++a) {
        for (int n = 1; n <= 3; ++n) {
            for (const auto& [pname, p] : pivots) {
                cases.emplace_back([=] {
                    const LaurentPoly za = LaurentPoly::var("z", a);
                    const RationalFunction f = RationalFunction::factor("z", Character(s), 1, n).times(za);
                    const LaurentPoly target = residue_k(f);
                    // iota_w side: 1/(1 - s z u) = sum_k (-p z)^k (1 - s u/p)^k / (1 - p z)^{k+1}.
                    const EquivariantExpansion ew = expand_equivariant(s, p, order, "z", "u");
                    RationalFunction series = ew.sum();
                    RationalFunction prod("z", LaurentPoly(1L));
                    for (int i = 0; i < n; ++i) prod = prod * series;
                    prod = prod.times(za * LaurentPoly::var("u", a));
                    const LaurentPoly w_side = residue_k(prod);
                    const LaurentPoly diff = adic_truncate(w_side - target, subst, order);
                    // iota_z side: 1/(1 - s u z) = sum_k (-q u)^k (1 - s z/q)^k / (1 - q u)^{k+1}; every term is
                    // polynomial in z, so rho_{K,z} is applied to numerators.
                    const EquivariantExpansion ez = expand_equivariant(s, p, order, "u", "z");
                    RationalFunction zs = ez.sum();
                    RationalFunction zprod("u", LaurentPoly(1L));
                    for (int i = 0; i < n; ++i) zprod = zprod * zs;
                    const LaurentPoly num = zprod.prefactor() * za * LaurentPoly::var("u", a);
                    const LaurentPoly z_side = residue_k(RationalFunction("z", num));
                    const bool pass = diff.is_zero() && z_side.is_zero();
                    std::ostringstream l;
                    l << "a=" << a << " n=" << n << " pivot=" << pname;
                    return verdict(l.str(), pass, "w-side defect " + diff.to_string() + ", z-side " + z_side.to_string());
                });
            }
        }
    }
    r.cases = run_cases(cases, o.jobs);
    return r;
}

// ---- hopf ------------------------------------------------------------------

SuiteReport hopf(const SuiteOptions& o) {
    SuiteReport r{"hopf", {}};
    std::vector<CaseFn> cases;
    for (long a = 0; a <= 8; ++a) {
        for (long b = 0; b <= 8; ++b) {
            cases.emplace_back([a, b] {
                const PhiElement x = PhiElement::basis(a), y = PhiElement::basis(b);
                const PhiElement closed = star(x, y);
                const PhiElement oracle = from_numerical(to_numerical(x) * to_numerical(y));
                return verdict("star a=" + std::to_string(a) + " b=" + std::to_string(b), closed == oracle,
                               closed.to_string() + " vs " + oracle.to_string());
            });
        }
    }
    for (long a = 0; a <= 5; ++a) {
        for (long b = 0; b <= 5; ++b) {
            cases.emplace_back([a, b] {
                const PhiElement x = PhiElement::basis(a), y = PhiElement::basis(b);
                const auto lhs = coproduct(star(x, y));
                std::vector<std::pair<PhiElement, PhiElement>> rhs;
                for (const auto& [x1, x2] : coproduct(x))
                    for (const auto& [y1, y2] : coproduct(y)) rhs.emplace_back(star(x1, y1), star(x2, y2));
                std::string bad;
                for (long m = -6; m <= 6 && bad.empty(); ++m)
                    for (long n = -6; n <= 6 && bad.empty(); ++n)
                        if (pair_tensor(lhs, m, n) != pair_tensor(rhs, m, n)) bad = "at m=" + std::to_string(m) + " n=" + std::to_string(n);
                return verdict("coproduct a=" + std::to_string(a) + " b=" + std::to_string(b), bad.empty(), bad);
            });
        }
    }
    for (long k = 0; k <= 5; ++k) {
        cases.emplace_back([k] {
            const auto d = coproduct(PhiElement::basis(k));
            std::string bad;
            for (long m = -6; m <= 6 && bad.empty(); ++m)
                for (long n = -6; n <= 6 && bad.empty(); ++n)
                    if (pair_tensor(d, m, n) != phi_pair(PhiElement::basis(k), m + n)) bad = "at m=" + std::to_string(m) + " n=" + std::to_string(n);
            return verdict("leibniz k=" + std::to_string(k), bad.empty(), bad);
        });
    }
    for (long n = -10; n <= 10; ++n) {
        cases.emplace_back([n] {
            const int order = 25;
            const FormalSeries tp = translation_pairing(n, order);
            const FormalSeries ex = expand_at(RationalFunction("z", LaurentPoly::var("z", n)), Point::One, order);
            std::string bad;
            for (int k = 0; k < order && bad.empty(); ++k)
                if (tp.coefficient(k) != ex.coefficient(k)) bad = "coefficient " + std::to_string(k);
            return verdict("translation n=" + std::to_string(n), bad.empty(), bad);
        });
    }
    for (long k = 0; k <= 8; ++k) {
        cases.emplace_back([k] {
            const XiElement ch = chern_character(PhiElement::basis(k));
            std::string bad;
            for (long n = -10; n <= 10 && bad.empty(); ++n)
                if (ch.evaluate(Rational(n)) != phi_pair(PhiElement::basis(k), n)) bad = "at n=" + std::to_string(n);
            return verdict("ch k=" + std::to_string(k), bad.empty(), bad);
        });
    }
    r.cases = run_cases(cases, o.jobs);
    return r;
}

// ---- quiver axioms ---------------------------------------------------------

struct AxiomInstance {
    std::size_t quiver;
    GradedElement f, g, h;
};

DimVector random_grade(Rng& rng, std::size_t nv) {
    for (;;) {
        DimVector a(nv);
        for (auto& x : a) x = static_cast<int>(rng.uniform(0, 2));
        if (!is_zero(a)) return a;
    }
}

std::vector<AxiomInstance> axiom_instances(std::uint64_t seed, long per_quiver, int max_total) {
    Rng rng(seed);
    const auto qs = small_quivers();
    std::vector<AxiomInstance> out;
    for (std::size_t qi = 0; qi < qs.size(); ++qi) {
        for (long i = 0; i < per_quiver; ++i) {
            DimVector a, b, c;
            do {
                a = random_grade(rng, qs[qi].size());
                b = random_grade(rng, qs[qi].size());
                c = random_grade(rng, qs[qi].size());
            } while (total(a) + total(b) + total(c) > max_total);
            out.push_back({qi, random_element(rng, a), random_element(rng, b), random_element(rng, c)});
        }
    }
    return out;
}

std::string instance_label(const AxiomInstance& in) {
    return "Q" + std::to_string(in.quiver) + " " + str(in.f.alpha()) + str(in.g.alpha()) + str(in.h.alpha());
}

SuiteReport axioms(const SuiteOptions& o) {
    SuiteReport r{"axioms", {}};
    const auto qs = small_quivers();
    const auto inst = axiom_instances(o.seed, o.get("count", 20), static_cast<int>(o.get("max-total", 4)));
    const std::vector<std::pair<Axiom, std::string>> which{
        {Axiom::Vacuum, "vacuum"}, {Axiom::Skew, "skew"}, {Axiom::WeakAssoc, "weak-assoc"}, {Axiom::Locality, "locality"}};
    std::vector<CaseFn> cases;
    for (std::size_t i = 0; i < inst.size(); ++i) {
        for (const auto& [ax, name] : which) {
            cases.emplace_back([&, i, ax = ax, name = name] {
                const auto& in = inst[i];
                const AxiomResult res = axiom_check(qs[in.quiver], ax, in.f, in.g, in.h);
                return verdict(name + " #" + std::to_string(i) + " " + instance_label(in), res.pass, res.witness);
            });
        }
    }
    r.cases = run_cases(cases, o.jobs);
    return r;
}

SuiteReport reduced(const SuiteOptions& o) {
    SuiteReport r{"reduced", {}};
    const auto qs = small_quivers();
    const auto inst = axiom_instances(o.seed, o.get("count", 20), static_cast<int>(o.get("max-total", 4)));
    std::vector<CaseFn> cases;
    for (std::size_t i = 0; i < inst.size(); ++i) {
        cases.emplace_back([&, i] {
            const auto& in = inst[i];
            const RationalFunction k1 = vertex_kernel(qs[in.quiver], in.f, in.g);
            const RationalFunction k2 = vertex_kernel(qs[in.quiver], in.g, in.h);
            const bool pass = is_reduced(k1) && is_reduced(k2);
            return verdict("kernel #" + std::to_string(i) + " " + instance_label(in), pass, pass ? "" : k1.to_string() + " ; " + k2.to_string());
        });
    }
    r.cases = run_cases(cases, o.jobs);
    return r;
}

SuiteReport lie(const SuiteOptions& o) {
    SuiteReport r{"lie", {}};
    const Quiver a2 = Quiver::with_edges(2, {{0, 1}});
    const Quiver jordan = Quiver::with_edges(1, {{0, 0}});
    auto cache_a2 = std::make_shared<BracketCache>();
    auto cache_j = std::make_shared<BracketCache>();
    std::vector<CaseFn> cases;
    cases.emplace_back([=] {
        const GradedElement e1({1, 0}, LaurentPoly(1L)), e2({0, 1}, LaurentPoly(1L));
        const GradedElement x = lie_bracket(a2, e1, e2, cache_a2.get()), y = lie_bracket(a2, e2, e1, cache_a2.get());
        const GradedElement unit({1, 1}, LaurentPoly(1L));
        const bool pass = x == unit.scaled(CycloScalar(-1L)) && y == unit;
        return verdict("A2 [1_e1,1_e2] = -unit, [1_e2,1_e1] = unit", pass, x.to_string() + " ; " + y.to_string());
    });
    Rng rng(o.seed);
    const long count = o.get("count", 10);
    struct Q {
        std::string name;
        Quiver q;
        std::shared_ptr<BracketCache> cache;
    };
    for (const Q& qq : {Q{"A2", a2, cache_a2}, Q{"Jordan", jordan, cache_j}}) {
        auto grade = [&] {
            for (;;) {
                DimVector a = random_grade(rng, qq.q.size());
                if (total(a) <= 2) return a;
            }
        };
        for (long i = 0; i < count; ++i) {
            const GradedElement a = random_element(rng, grade(), true), b = random_element(rng, grade(), true);
            cases.emplace_back([=] {
                const GradedElement ab = lie_bracket(qq.q, a, b, qq.cache.get());
                const GradedElement ba = lie_bracket(qq.q, b, a, qq.cache.get());
                const LaurentPoly sum = ab.poly() + ba.poly();
                return verdict(qq.name + " antisymmetry #" + std::to_string(i) + " " + str(a.alpha()) + str(b.alpha()), sum.is_zero() && ab.is_degree_zero(),
                               sum.to_string());
            });
        }
        for (long i = 0; i < count; ++i) {
            const GradedElement a = random_element(rng, grade(), true), b = random_element(rng, grade(), true),
                                c = random_element(rng, grade(), true);
            cases.emplace_back([=] {
                auto br = [&](const GradedElement& x, const GradedElement& y) { return lie_bracket(qq.q, x, y, qq.cache.get()); };
                const LaurentPoly j = br(a, br(b, c)).poly() + br(b, br(c, a)).poly() + br(c, br(a, b)).poly();
                return verdict(qq.name + " Jacobi #" + std::to_string(i) + " " + str(a.alpha()) + str(b.alpha()) + str(c.alpha()), j.is_zero(),
                               j.to_string());
            });
        }
    }
    r.cases = run_cases(cases, o.jobs);
    return r;
}

// ---- Conner-Floyd ------------------------------------------------------------

SuiteReport conner_floyd_suite(const SuiteOptions& o) {
    SuiteReport r{"conner-floyd", {}};
    Rng rng(o.seed);
    const long count = o.get("count", 50);
    std::vector<CaseFn> cases;
    for (long idx = 0; idx < count; ++idx) {
        const VirtualCharacter e = random_virtual_character(rng, 5);
        cases.emplace_back([e, idx] {
            VirtualCharacter plus = e, minus = e;
            plus.positive.emplace_back();
            minus.negative.emplace_back();
            std::string bad;
            for (int i = -1; i <= e.rank() + 2 && bad.empty(); ++i) {
                const LocalizedPoly c = conner_floyd(e, i);
                if (!(conner_floyd(plus, i) == c)) bad = "E+O differs at i=" + std::to_string(i);
                if (bad.empty() && !(conner_floyd(minus, i) == c)) bad = "E-O differs at i=" + std::to_string(i);
            }
            return verdict("stability #" + std::to_string(idx) + " " + e.to_string(), bad.empty(), bad);
        });
    }
    for (long idx = 0; idx < count; ++idx) {
        const VirtualCharacter e = random_virtual_character(rng, 5, true);
        cases.emplace_back([e, idx] {
            const int n = e.rank();
            const LocalizedPoly lhs = wedge_minus_one(e.dual());
            const LocalizedPoly rhs = LocalizedPoly(LaurentPoly(e.determinant().inverse(), CycloScalar(n % 2 == 0 ? 1L : -1L))) * wedge_minus_one(e);
            return verdict("duality #" + std::to_string(idx) + " " + e.to_string(), lhs == rhs, lhs.to_string() + " vs " + rhs.to_string());
        });
    }
    r.cases = run_cases(cases, o.jobs);
    return r;
}

// ---- wall-crossing -------------------------------------------------------------

InvariantTable<FreeLie> random_free_table(Rng& rng, const std::vector<DimVector>& classes) {
    InvariantTable<FreeLie> z;
    for (const auto& a : classes) {
        FreeLie v = FreeLie::generator(generator_name(a), ratio(rng.uniform(-3, 3) | 1, rng.uniform(1, 3)));
        z.emplace(a, v);
    }
    return z;
}

SuiteReport wallcross(const SuiteOptions& o) {
    SuiteReport r{"wallcross", {}};
    Rng rng(o.seed);
    struct Setup {
        std::string name;
        StabilityData stab;
        std::vector<DimVector> classes;
    };
    const std::vector<Setup> setups{
        {"one-vertex", StabilityData::uniform(1, {{1}, {2}}), classes_of_total_at_most(1, 4)},
        {"two-vertex uniform", StabilityData::uniform(2, {{1, 1}, {1, 2}, {3, 1}}), classes_of_total_at_most(2, 3)},
        {"two-vertex theta=(1,0)", StabilityData({1, 1}, {Rational(1), Rational(0)}, {{1, 1}, {2, 1}}), classes_of_total_at_most(2, 3)},
        {"two-vertex rank=(1,2)", StabilityData({1, 2}, {Rational(1), Rational(2)}, {{1, 1}, {1, 3}}), classes_of_total_at_most(2, 3)},
    };
    std::vector<CaseFn> cases;
    const FreeAlgebra alg;
    for (const auto& su : setups) {
        for (std::size_t k = 0; k < su.stab.frames.size(); ++k) {
            const auto z = random_free_table(rng, su.classes);
            cases.emplace_back([=] {
                const auto zt = forward_table(alg, z, k, su.stab);
                const auto back = invert_transform(alg, zt, k, su.stab);
                std::string bad;
                for (const auto& [a, v] : z)
                    if (!(back.at(a) == v)) bad += " " + str(a);
                return verdict(su.name + " round trip k=" + std::to_string(k), bad.empty(), bad.empty() ? "" : "differs at" + bad);
            });
            cases.emplace_back([=] {
                std::string bad;
                std::size_t checked = 0;
                for (const auto& a : su.classes) {
                    if (ordered_partitions(a, su.stab).size() != 1) continue;
                    ++checked;
                    const FreeLie v = forward_transform(alg, z, k, a, su.stab);
                    if (!(v == z.at(a).scaled(Rational(su.stab.lambda(k, a))))) bad += " " + str(a);
                }
                return verdict(su.name + " indecomposables k=" + std::to_string(k) + " (" + std::to_string(checked) + " classes)", bad.empty(),
                               bad.empty() ? "" : "differs at" + bad);
            });
        }
    }
    r.cases = run_cases(cases, o.jobs);
    return r;
}

}  // namespace

LaurentPoly adic_truncate(const LaurentPoly& p, const std::vector<AdicSubst>& subst, int order) {
    // (1 - x)^e truncated below order.
    auto binomial_series = [&](const std::string& x, long e) {
        LaurentPoly s;
        for (long m = 0; m < order; ++m) {
            Rational c = generalized_binomial(e, m);
            if (m % 2 != 0) c = -c;
            s.add_term(Monomial::var(x, m), CycloScalar(c));
        }
        return s;
    };
    auto truncate = [&](const LaurentPoly& q) {
        LaurentPoly out;
        for (const auto& [m, c] : q.terms()) {
            Frac d = 0;
            for (const auto& s : subst) d += m.exponent(s.x);
            if (d < Frac(order)) out.add_term(m, c);
        }
        return out;
    };
    LaurentPoly out;
    for (const auto& [m, c] : p.terms()) {
        LaurentPoly term(Monomial(), c);
        Monomial rest = m;
        for (const auto& s : subst) {
            const auto [e, r] = rest.extract(s.var);
            rest = r;
            if (e.is_zero()) continue;
            const long k = e.to_int();
            term = truncate(term * binomial_series(s.x, s.inverse ? -k : k));
        }
        out += term.times(rest);
    }
    return truncate(out);
}

const std::vector<SuiteInfo>& suites() {
    static const std::vector<SuiteInfo> all{
        {"residue-constraints", "rho(z^{nk+a}/(1-z^n)^{k+1}) = [k=a=0]", {"nmax", "kmax", "naive"}, residue_constraints},
        {"residue-comparison", "rho_K and naive residues at roots of unity, residue theorem", {}, residue_comparison},
        {"residue-oracle", "closed-form residue against the two-expansion definition", {"count"}, residue_oracle},
        {"diagonal-expansion", "residues of the two expansions of f(z/w)", {"order"}, diagonal_expansion},
        {"hopf", "star, coproduct, translation pairing and Chern character", {}, hopf},
        {"axioms", "vacuum, skew symmetry, weak associativity, locality", {"count", "max-total"}, axioms},
        {"reduced", "vertex kernels have poles only at (1 - c z^{+-1})", {"count", "max-total"}, reduced},
        {"lie", "antisymmetry and Jacobi for the residue bracket", {"count"}, lie},
        {"conner-floyd", "stability under E +- O and wedge duality", {"count"}, conner_floyd_suite},
        {"wallcross", "forward/inverse transform round trip", {}, wallcross},
    };
    return all;
}

const SuiteInfo& find_suite(const std::string& name) {
    for (const auto& s : suites())
        if (s.name == name) return s;
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace kvtools
