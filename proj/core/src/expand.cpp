#include "kvertex/expand.hpp"

#include <stdexcept>

namespace kvertex {

namespace {

template <class C>
Series<C> binomial_series(const Rational& a, int prec) {
    // (1 - x)^a
    Series<C> s(prec);
    Rational b = 1;
    for (int k = 0; k < prec; ++k) {
        if (k > 0) b = b * (a - (k - 1)) / k;
        if (b == 0) break;
        s.add(k, C(CycloScalar(k % 2 == 0 ? b : Rational(-b))));
    }
    return s;
}

std::map<long, LaurentPoly> integral_split(const LaurentPoly& p, const std::string& var) {
    std::map<long, LaurentPoly> out;
    for (auto& [e, c] : p.split_by(var)) {
        if (!e.is_integer()) throw std::domain_error("non-integral power of " + var + " in " + p.to_string());
        out.emplace(e.to_int(), std::move(c));
    }
    return out;
}

LaurentPoly char_poly(const Character& c) { return LaurentPoly::character(c); }

// prod over factors of (1 - c z^n)^{-e} at z = 0, relative precision r.
Series<LaurentPoly> units_at_zero(const RationalFunction& f, int r, bool inverted) {
    Series<LaurentPoly> u = Series<LaurentPoly>::monomial(0, LaurentPoly(1L));
    for (const auto& [fac, e] : f.denominator()) {
        Series<LaurentPoly> g(r);
        const Character c = inverted ? fac.c.inverse() : fac.c;
        Rational b = 1;
        for (int k = 0; static_cast<long>(k) * fac.n < r; ++k) {
            if (k > 0) b = b * (e + k - 1) / k;
            g.add(k * fac.n, char_poly(c.pow(k)).times(Monomial(), CycloScalar(b)));
        }
        u = u * g;
    }
    return u;
}

}  // namespace

Series<LaurentPoly> expand_laurent(const RationalFunction& f, Point point, int prec) {
    const std::string& z = f.variable();
    if (point == Point::One) throw std::invalid_argument("expand_laurent: use expand_one for the point one");
    auto pre = integral_split(f.prefactor(), z);
    if (pre.empty()) return Series<LaurentPoly>(prec);
    if (point == Point::Zero) {
        const long vp = pre.begin()->first;
        const long r = prec - vp;
        if (r <= 0) return Series<LaurentPoly>(prec);
        Series<LaurentPoly> p;
        for (const auto& [b, c] : pre) p.add(static_cast<int>(b), c);
        return (p * units_at_zero(f, static_cast<int>(r), false)).truncated(prec);
    }
    // u = z^{-1}: (1 - c z^n)^{-e} = (-c)^{-e} u^{ne} (1 - c^{-1} u^n)^{-e}
    long vf = 0;
    LaurentPoly lead(1L);
    for (const auto& [fac, e] : f.denominator()) {
        vf += static_cast<long>(fac.n) * e;
        LaurentPoly l = char_poly(fac.c.pow(-e));
        if (e % 2 != 0) l = -l;
        lead = lead * l;
    }
    const long vp = -pre.rbegin()->first;
    const long r = prec - vp - vf;
    if (r <= 0) return Series<LaurentPoly>(prec);
    Series<LaurentPoly> p;
    for (const auto& [b, c] : pre) p.add(static_cast<int>(-b + vf), c * lead);
    return (p * units_at_zero(f, static_cast<int>(r), true)).truncated(prec);
}

Series<LocalizedPoly> expand_one(const RationalFunction& f, int prec) {
    using S = Series<LocalizedPoly>;
    const std::string& z = f.variable();
    int vpole = 0;
    for (const auto& [fac, e] : f.denominator()) {
        if (fac.c.is_one()) vpole -= e;
    }
    const int r = prec - vpole;
    if (r <= 0 || f.prefactor().is_zero()) return S(prec);
    S p(r);
    for (const auto& [b, c] : f.prefactor().split_by(z)) {
        S bs = binomial_series<LocalizedPoly>(b.to_rational(), r);
        p = p + bs.scaled(LocalizedPoly(c));
    }
    S u = S::monomial(0, LocalizedPoly(1L));
    for (const auto& [fac, e] : f.denominator()) {
        // 1 - c (1 - x)^n
        S g = S::monomial(0, LocalizedPoly(LocalizedPoly::one_minus(fac.c)));
        Rational bin = 1;
        for (int j = 1; j <= fac.n; ++j) {
            bin = bin * (fac.n - j + 1) / j;
            Rational sgn = (j % 2 == 0) ? Rational(-1) : Rational(1);
            g.add(j, LocalizedPoly(char_poly(fac.c).times(Monomial(), CycloScalar(bin * sgn))));
        }
        S inv;
        if (fac.c.is_one()) {
            // x * h(x), h(0) = n
            S h;
            for (const auto& [k, c] : g.coefficients()) h.add(k - 1, c);
            inv = h.truncated(r).inverse(LocalizedPoly(CycloScalar(Rational(1, fac.n))));
        } else {
            inv = g.truncated(r).inverse(LocalizedPoly::inverse_one_minus(fac.c));
        }
        u = u * inv.pow(static_cast<unsigned>(e));
    }
    S out = p * u;
    S shifted(prec);
    for (const auto& [k, c] : out.coefficients()) shifted.add(k + vpole, c);
    return shifted;
}

FormalSeries expand_at(const RationalFunction& f, Point point, int order) {
    if (order <= 0) throw std::invalid_argument("expand_at: order must be positive");
    FormalSeries fs;
    fs.point = point;
    fs.var = f.variable();
    if (f.prefactor().is_zero()) {
        fs.series = Series<LocalizedPoly>(order);
        return fs;
    }
    auto convert = [](const Series<LaurentPoly>& s) {
        Series<LocalizedPoly> out(s.precision());
        for (const auto& [k, c] : s.coefficients()) out.add(k, LocalizedPoly(c));
        return out;
    };
    if (point == Point::Zero) {
        auto pre = integral_split(f.prefactor(), f.variable());
        const int v = static_cast<int>(pre.begin()->first);
        fs.series = convert(expand_laurent(f, point, v + order));
    } else if (point == Point::Infinity) {
        auto pre = integral_split(f.prefactor(), f.variable());
        int v = static_cast<int>(-pre.rbegin()->first);
        for (const auto& [fac, e] : f.denominator()) v += fac.n * e;
        fs.series = convert(expand_laurent(f, point, v + order));
    } else {
        int vpole = 0;
        for (const auto& [fac, e] : f.denominator()) {
            if (fac.c.is_one()) vpole -= e;
        }
        // Find the order of vanishing of the prefactor at z = 1.
        RationalFunction pre(f.variable(), f.prefactor());
        int vp = -1;
        for (int r = 8; vp < 0; r *= 2) {
            if (r > (1 << 20)) throw std::runtime_error("expand_at: prefactor valuation search failed");
            auto s = expand_one(pre, r);
            if (!s.coefficients().empty()) vp = s.valuation();
        }
        fs.series = expand_one(f, vpole + vp + order);
    }
    return fs;
}

std::string FormalSeries::to_string() const {
    auto power = [&](int k) -> std::string {
        if (point == Point::One) {
            if (k == 0) return "";
            return k == 1 ? "(1-" + var + ")" : "(1-" + var + ")^" + std::to_string(k);
        }
        const int e = point == Point::Zero ? k : -k;
        if (e == 0) return "";
        return e == 1 ? var : var + "^" + std::to_string(e);
    };
    std::string out;
    for (const auto& [k, c] : series.coefficients()) {
        std::string cs = c.to_string();
        std::string pw = power(k);
        std::string term;
        if (pw.empty()) {
            term = cs;
        } else if (cs == "1") {
            term = pw;
        } else if (cs == "-1") {
            term = "-" + pw;
        } else if (c.is_laurent() && c.numerator().size() == 1 && c.numerator().terms().begin()->second.is_single_term()) {
            term = cs + "*" + pw;
        } else {
            term = "(" + cs + ")*" + pw;
        }
        if (!out.empty()) out += term[0] == '-' ? " " : " + ";
        if (!out.empty() && term[0] == '-') term = "- " + term.substr(1);
        out += term;
    }
    std::string o = "O(" + (power(truncation()).empty() ? std::string("1") : power(truncation())) + ")";
    return out.empty() ? o : out + " + " + o;
}

RationalFunction EquivariantExpansion::sum() const {
    RationalFunction s(zvar);
    for (const auto& t : terms) s += t;
    return s;
}

RationalFunction EquivariantExpansion::defect() const {
    LaurentPoly tzw = LaurentPoly(t * Monomial::var(zvar) * Monomial::var(wvar));
    return sum().times(LaurentPoly(1L) - tzw) - RationalFunction(zvar, LaurentPoly(1L));
}

EquivariantExpansion expand_equivariant(const Monomial& t, const Monomial& pivot, int order, const std::string& zvar,
                                        const std::string& wvar) {
    if (order < 0) throw std::invalid_argument("expand_equivariant: negative order");
    EquivariantExpansion ex;
    ex.t = t;
    ex.pivot = pivot;
    ex.order = order;
    ex.zvar = zvar;
    ex.wvar = wvar;
    const LaurentPoly a = -LaurentPoly(pivot * Monomial::var(zvar));
    const LaurentPoly b = LaurentPoly(1L) - LaurentPoly(t * Monomial::var(wvar) / pivot);
    LaurentPoly ab(1L);
    for (int k = 0; k < order; ++k) {
        ex.terms.emplace_back(zvar, ab, std::map<std::pair<Character, int>, int>{{{Character(pivot), 1}, k + 1}});
        ab = ab * a * b;
    }
    return ex;
}

std::map<Character, int> split_denominator(const RationalFunction& f) {
    std::map<Character, int> poles;
    for (const auto& [fac, e] : f.denominator()) {
        const Character root = fac.c.nth_root(fac.n);
        for (int j = 0; j < fac.n; ++j) poles[root * Character(Monomial(), Frac(j, fac.n))] += e;
    }
    return poles;
}

PartialFractions partial_fractions(const RationalFunction& f) {
    using S = Series<LocalizedPoly>;
    PartialFractions pf;
    pf.var = f.variable();
    const auto pre = integral_split(f.prefactor(), f.variable());
    const auto poles = split_denominator(f);
    for (const auto& [ai, mi] : poles) {
        S g(mi);
        for (const auto& [b, c] : pre) {
            LocalizedPoly coeff(c * char_poly(ai.pow(-b)));
            g = g + binomial_series<LocalizedPoly>(Rational(b), mi).scaled(coeff);
        }
        for (const auto& [ak, mk] : poles) {
            if (ak == ai) continue;
            const Character r = ak * ai.inverse();
            // 1 - r (1 - u) = (1 - r) + r u
            S h = S::monomial(0, LocalizedPoly(LocalizedPoly::one_minus(r)));
            h.add(1, LocalizedPoly(char_poly(r)));
            g = g * h.truncated(mi).inverse(LocalizedPoly::inverse_one_minus(r)).pow(static_cast<unsigned>(mk));
        }
        for (int j = 1; j <= mi; ++j) {
            LocalizedPoly c = g.coeff(mi - j).simplified();
            if (!c.is_zero()) pf.poles.push_back({ai, j, c});
        }
    }
    if (!pre.empty()) {
        const auto at_zero = expand_laurent(f, Point::Zero, 0);
        const auto at_inf = expand_laurent(f, Point::Infinity, 1);
        for (const auto& [k, c] : at_zero.coefficients()) pf.polynomial += c.times(Monomial::var(pf.var, k));
        for (const auto& [k, c] : at_inf.coefficients()) {
            pf.polynomial += c.times(Monomial::var(pf.var, -k));
        }
    }
    return pf;
}

bool recombines_to(const PartialFractions& pf, const RationalFunction& f) {
    if (pf.var != f.variable()) return false;
    const auto poles = split_denominator(f);
    auto lin = [&](const Character& a) { return LaurentPoly(1L) - char_poly(a).times(Monomial::var(pf.var)); };
    LaurentPoly d(1L);
    for (const auto& [a, m] : poles) d = d * lin(a).pow(static_cast<unsigned>(m));
    if (d != f.denominator_poly()) return false;
    LocalizedPoly total(pf.polynomial * d);
    for (const auto& t : pf.poles) {
        auto it = poles.find(t.a);
        if (it == poles.end() || t.m > it->second) return false;
        LaurentPoly rest = lin(t.a).pow(static_cast<unsigned>(it->second - t.m));
        for (const auto& [a, m] : poles) {
            if (!(a == t.a)) rest = rest * lin(a).pow(static_cast<unsigned>(m));
        }
        total += t.coefficient * LocalizedPoly(rest);
    }
    return total == LocalizedPoly(f.prefactor());
}

std::string PartialFractions::to_string() const {
    std::string out;
    if (!polynomial.is_zero() || poles.empty()) out = polynomial.to_string();
    for (const auto& t : poles) {
        std::string c = t.coefficient.to_string();
        if (!(t.coefficient.is_laurent() && t.coefficient.numerator().size() == 1) || c.find('/') != std::string::npos) c = "(" + c + ")";
        LaurentPoly lin = LaurentPoly(1L) - char_poly(t.a).times(Monomial::var(var));
        std::string d = "(" + lin.to_string() + ")";
        if (t.m != 1) d += "^" + std::to_string(t.m);
        std::string term = c + "/" + d;
        if (!out.empty()) out += term[0] == '-' ? "" : "+";
        out += term;
    }
    return out;
}

}  // namespace kvertex
