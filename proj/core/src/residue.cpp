#include "kvertex/residue.hpp"

#include <set>
#include <stdexcept>

namespace kvertex {

LaurentPoly residue_k_pole(const Character& a, long b, int m) {
    Rational v = 0;
    if (b <= 0) v += generalized_binomial(m - 1 - b, m - 1);
    if (b >= m) v -= (m % 2 == 0 ? 1 : -1) * generalized_binomial(b - 1, m - 1);
    if (v == 0) return {};
    return LaurentPoly::character(a.pow(-b)).times(Monomial(), CycloScalar(v));
}

LaurentPoly residue_k(const RationalFunction& f) {
    if (f.is_laurent()) return {};
    const auto poles = split_denominator(f);
    if (poles.size() == 1) {
        const auto& [a, m] = *poles.begin();
        LaurentPoly r;
        for (const auto& [e, c] : f.prefactor().split_by(f.variable())) r += c * residue_k_pole(a, e.to_int(), m);
        return r;
    }
    LocalizedPoly total;
    for (const auto& t : partial_fractions(f).poles) total += t.coefficient;
    return total.to_laurent();
}

LaurentPoly residue_k_oracle(const RationalFunction& f, int order) {
    FormalSeries plus = expand_at(f, Point::Zero, order);
    FormalSeries minus = expand_at(f, Point::Infinity, order);
    if (plus.truncation() <= 0 || minus.truncation() <= 0) {
        throw std::invalid_argument("residue_k_oracle: order too small to reach the z^0 term");
    }
    return (plus.coefficient(0) - minus.coefficient(0)).to_laurent();
}

LocalizedPoly residue_naive(const RationalFunction& f) {
    RationalFunction g = f.times(LaurentPoly::var(f.variable(), -1));
    return expand_one(g, 0).coeff(-1).simplified();
}

LaurentPoly residue_coh(const LaurentPoly& f, const std::string& var) { return f.coefficient_of(var, -1); }

std::vector<Character> root_poles(const RationalFunction& f) {
    std::set<Character> out;
    for (const auto& [a, m] : split_denominator(f)) {
        if (!a.is_root_of_unity()) throw std::invalid_argument("root_poles: pole at a non-root character " + a.to_string());
        out.insert(a.inverse());
    }
    return {out.begin(), out.end()};
}

LaurentPoly residue_at_root(const RationalFunction& f, const Character& gamma) {
    using S = Series<LaurentPoly>;
    if (!gamma.is_root_of_unity()) throw std::invalid_argument("residue_at_root: not a root of unity");
    const CycloScalar g = gamma.scalar();
    const CycloScalar ginv = g.inverse();
    // Local parameter y = z - gamma. Count the pole order first.
    int pole = 0;
    for (const auto& [fac, e] : f.denominator()) {
        if (!fac.c.is_root_of_unity()) throw std::invalid_argument("residue_at_root: factor constant is not a root of unity");
        if ((fac.c * gamma.pow(fac.n)).is_one()) pole += e;
    }
    const int r = pole + 1;  // relative precision needed to reach y^{-1}
    // z^b = gamma^b (1 + y/gamma)^b
    auto zpow = [&](long b, int prec) {
        S s(prec);
        Rational bin = 1;
        CycloScalar acc = g.pow(b);
        for (int k = 0; k < prec; ++k) {
            if (k > 0) {
                bin = bin * (b - (k - 1)) / k;
                acc *= ginv;
            }
            if (bin == 0) break;
            s.add(k, LaurentPoly(acc * CycloScalar(bin)));
        }
        return s;
    };
    S total = S::monomial(0, LaurentPoly(1L));
    for (const auto& [fac, e] : f.denominator()) {
        // 1 - c z^n as a series in y
        S d = S::monomial(0, LaurentPoly(1L)) - zpow(fac.n, r + fac.n + 1).scaled(LaurentPoly(fac.c.scalar()));
        const int v = d.valuation();
        d = d.truncated(v + r);
        S inv = d.inverse(LaurentPoly(d.coeff(v).constant_term().inverse()));
        total = total * inv.pow(static_cast<unsigned>(e));
    }
    S num(r);
    for (const auto& [e, c] : f.prefactor().split_by(f.variable())) {
        num = num + zpow(e.to_int() - 1, r).scaled(c);
    }
    total = total * num;
    return total.coeff(-1);
}

std::vector<ConstraintCase> constraint_suite(ResidueKind kind, int n_max, int k_max) {
    if (n_max < 1 || k_max < 0) throw std::invalid_argument("constraint_suite: bad bounds");
    std::vector<ConstraintCase> out;
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 0; k <= k_max; ++k) {
            for (int a = 0; a < n; ++a) {
                RationalFunction f("z", LaurentPoly::var("z", n * k + a), {{{Character(), n}, k + 1}});
                ConstraintCase c;
                c.n = n;
                c.k = k;
                c.a = a;
                const LaurentPoly expected = (k == 0 && a == 0) ? LaurentPoly(1L) : LaurentPoly();
                c.expected = expected.to_string();
                if (kind == ResidueKind::KTheory) {
                    LaurentPoly v = residue_k(f);
                    c.value = v.to_string();
                    c.pass = v == expected;
                } else if (kind == ResidueKind::Naive) {
                    LocalizedPoly v = residue_naive(f);
                    c.value = v.to_string();
                    c.pass = v == LocalizedPoly(expected);
                } else {
                    throw std::invalid_argument("constraint_suite: no multiplicative constraint family for the cohomological residue");
                }
                out.push_back(c);
            }
        }
    }
    return out;
}

}  // namespace kvertex
