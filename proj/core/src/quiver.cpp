#include "kvertex/quiver.hpp"

#include "kvertex/residue.hpp"
#include "kvertex/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kvertex {

namespace {

bool parse_state_var(const std::string& name, int& i, int& a) {
    if (name.rfind("s_{", 0) != 0 || name.back() != '}') return false;
    const auto comma = name.find(',');
    if (comma == std::string::npos) return false;
    i = std::stoi(name.substr(3, comma - 3));
    a = std::stoi(name.substr(comma + 1, name.size() - comma - 2));
    return true;
}

std::string diff_witness(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    LaurentPoly d = lhs - rhs;
    if (d.is_zero()) return "";
    const Monomial& m = d.terms().begin()->first;
    return "coefficient of " + m.to_string() + ": lhs=" + lhs.coefficient(m).to_string() + " rhs=" + rhs.coefficient(m).to_string();
}

void combinations(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int x = start; x < n; ++x) {
        cur.push_back(x);
        combinations(n, k, x + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

Quiver Quiver::parse(const std::string& text) {
    Quiver q;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<std::pair<std::string, std::string>> pending;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        std::string a, b, extra;
        if (kw == "vertex") {
            if (!(ls >> a) || (ls >> extra)) throw std::invalid_argument("quiver line " + std::to_string(lineno) + ": expected 'vertex <name>'");
            if (std::find(q.vertices.begin(), q.vertices.end(), a) != q.vertices.end()) {
                throw std::invalid_argument("quiver line " + std::to_string(lineno) + ": duplicate vertex " + a);
            }
            q.vertices.push_back(a);
        } else if (kw == "edge") {
            if (!(ls >> a >> b) || (ls >> extra)) throw std::invalid_argument("quiver line " + std::to_string(lineno) + ": expected 'edge <src> <dst>'");
            pending.emplace_back(a, b);
        } else {
            throw std::invalid_argument("quiver line " + std::to_string(lineno) + ": unknown record '" + kw + "'");
        }
    }
    for (const auto& [a, b] : pending) q.edges.emplace_back(q.index_of(a), q.index_of(b));
    return q;
}

Quiver Quiver::with_edges(int nvertices, std::vector<std::pair<int, int>> edges) {
    Quiver q;
    for (int i = 0; i < nvertices; ++i) q.vertices.push_back(std::to_string(i + 1));
    for (const auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= nvertices || b >= nvertices) throw std::invalid_argument("quiver: edge to undeclared vertex");
    }
    q.edges = std::move(edges);
    return q;
}

int Quiver::index_of(const std::string& name) const {
    auto it = std::find(vertices.begin(), vertices.end(), name);
    if (it == vertices.end()) throw std::invalid_argument("quiver: undeclared vertex " + name);
    return static_cast<int>(it - vertices.begin());
}

std::string Quiver::to_string() const {
    std::string out;
    for (const auto& v : vertices) out += "vertex " + v + "\n";
    for (const auto& [a, b] : edges) out += "edge " + vertices[a] + " " + vertices[b] + "\n";
    return out;
}

DimVector operator+(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension vectors of different length");
    DimVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

int total(const DimVector& a) {
    int t = 0;
    for (int x : a) t += x;
    return t;
}

bool is_zero(const DimVector& a) { return total(a) == 0; }

std::string dim_to_string(const DimVector& a) {
    std::string out = "(";
    for (std::size_t i = 0; i < a.size(); ++i) out += (i ? "," : "") + std::to_string(a[i]);
    return out + ")";
}

DimVector parse_dim(const std::string& text) {
    std::string t = text;
    if (!t.empty() && t.front() == '(') t.erase(0, 1);
    if (!t.empty() && t.back() == ')') t.pop_back();
    DimVector v;
    std::istringstream in(t);
    std::string part;
    while (std::getline(in, part, ',')) {
        std::size_t pos = 0;
        int x = 0;
        try {
            x = std::stoi(part, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad dimension vector: " + text);
        }
        if (x < 0 || part.find_first_not_of(" ", pos) != std::string::npos) throw std::invalid_argument("bad dimension vector: " + text);
        v.push_back(x);
    }
    if (v.empty()) throw std::invalid_argument("bad dimension vector: " + text);
    return v;
}

std::string block_var(const std::string& prefix, int i, int a) {
    return prefix + "_{" + std::to_string(i + 1) + "," + std::to_string(a + 1) + "}";
}

std::vector<std::vector<std::string>> blocks(const DimVector& alpha, const std::string& prefix) {
    std::vector<std::vector<std::string>> b(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        for (int a = 0; a < alpha[i]; ++a) b[i].push_back(block_var(prefix, static_cast<int>(i), a));
    }
    return b;
}

bool is_state_var(const std::string& name) { return name.rfind("s_{", 0) == 0; }

GradedElement::GradedElement(DimVector alpha, LaurentPoly poly) : alpha_(std::move(alpha)), poly_(std::move(poly)) {
    for (const auto& v : poly_.variables()) {
        int i = 0, a = 0;
        if (!parse_state_var(v, i, a)) continue;
        if (i < 1 || i > static_cast<int>(alpha_.size()) || a < 1 || a > alpha_[i - 1]) {
            throw std::invalid_argument("graded element: variable " + v + " outside the block of " + dim_to_string(alpha_));
        }
    }
    if (!is_block_symmetric(poly_, blocks(alpha_))) {
        throw std::invalid_argument("graded element: " + poly_.to_string() + " is not symmetric in the blocks of " + dim_to_string(alpha_));
    }
}

GradedElement GradedElement::vacuum(std::size_t nvertices) { return {DimVector(nvertices, 0), LaurentPoly(1L)}; }

bool GradedElement::is_degree_zero() const {
    for (const auto& [m, c] : poly_.terms()) {
        if (!m.degree(is_state_var).is_zero()) return false;
    }
    return true;
}

GradedElement GradedElement::operator+(const GradedElement& o) const {
    if (alpha_ != o.alpha_) throw std::invalid_argument("graded element: adding different grades");
    GradedElement r = *this;
    r.poly_ += o.poly_;
    return r;
}

GradedElement GradedElement::scaled(const CycloScalar& c) const {
    GradedElement r = *this;
    r.poly_ *= c;
    return r;
}

std::string GradedElement::to_string() const {
    std::string p = poly_.to_string();
    if (poly_.size() > 1) p = "(" + p + ")";
    return p + "@" + dim_to_string(alpha_);
}

VirtualCharacter VirtualCharacter::dual() const {
    VirtualCharacter d;
    for (const auto& m : positive) d.positive.push_back(m.inverse());
    for (const auto& m : negative) d.negative.push_back(m.inverse());
    return d;
}

Monomial VirtualCharacter::determinant() const {
    Monomial d;
    for (const auto& m : positive) d *= m;
    for (const auto& m : negative) d *= m.inverse();
    return d;
}

std::string VirtualCharacter::to_string() const {
    auto list = [](const std::vector<Monomial>& v) {
        std::string out = "{";
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
        return out + "}";
    };
    return "positive " + list(positive) + " negative " + list(negative);
}

VarNamer prefix_namer(const std::string& prefix) {
    return [prefix](int i, int a) { return block_var(prefix, i, a); };
}

VirtualCharacter deformation_character(const Quiver& q, const DimVector& alpha, const DimVector& beta, const VarNamer& first,
                                       const VarNamer& second) {
    if (alpha.size() != q.size() || beta.size() != q.size()) throw std::invalid_argument("dimension vector does not match quiver");
    VirtualCharacter e;
    for (std::size_t i = 0; i < q.size(); ++i) {
        for (int a = 0; a < alpha[i]; ++a) {
            for (int b = 0; b < beta[i]; ++b) {
                e.positive.push_back(Monomial::var(second(static_cast<int>(i), b)) / Monomial::var(first(static_cast<int>(i), a)));
            }
        }
    }
    for (const auto& [i, j] : q.edges) {
        for (int a = 0; a < alpha[i]; ++a) {
            for (int b = 0; b < beta[j]; ++b) e.negative.push_back(Monomial::var(second(j, b)) / Monomial::var(first(i, a)));
        }
    }
    return e;
}

RationalFunction theta_kernel(const Quiver& q, const DimVector& alpha, const DimVector& beta, bool full, const std::string& z,
                              const VarNamer& first, const VarNamer& second) {
    const VirtualCharacter ab = deformation_character(q, alpha, beta, first, second);
    const VirtualCharacter ba = deformation_character(q, beta, alpha, second, first);
    if (!full) {
        LaurentPoly p(1L);
        const LaurentPoly zi = LaurentPoly::var(z, -1), zp = LaurentPoly::var(z);
        for (const auto& chi : ab.positive) p = p * (LaurentPoly(1L) - zi * LaurentPoly(chi.inverse()));
        for (const auto& chi : ba.positive) p = p * (LaurentPoly(1L) - zp * LaurentPoly(chi.inverse()));
        return {z, p};
    }
    std::map<std::pair<Character, int>, int> fs;
    for (const auto& chi : ab.positive) fs[{Character(chi.inverse()), -1}] -= 1;
    for (const auto& chi : ba.positive) fs[{Character(chi.inverse()), 1}] -= 1;
    for (const auto& chi : ab.negative) fs[{Character(chi.inverse()), -1}] += 1;
    for (const auto& chi : ba.negative) fs[{Character(chi.inverse()), 1}] += 1;
    return {z, LaurentPoly(1L), fs};
}

LaurentPoly translate(const LaurentPoly& p, const Monomial& factor, DegreeSign sign) {
    return p.graded_scale(is_state_var, sign == DegreeSign::Substitution ? factor : factor.inverse());
}

GradedElement translate_element(const GradedElement& a, const Monomial& factor, DegreeSign sign) {
    return GradedElement(a.alpha(), translate(a.poly(), factor, sign));
}

LaurentPoly relabel_after(const LaurentPoly& g, const DimVector& alpha) {
    return g.rename([&](const std::string& v) {
        int i = 0, a = 0;
        if (!parse_state_var(v, i, a)) return v;
        return block_var("s", i - 1, alpha.at(i - 1) + a - 1);
    });
}

std::vector<std::unordered_map<std::string, std::string>> coset_renamings(const DimVector& alpha, const DimVector& beta) {
    std::vector<std::unordered_map<std::string, std::string>> out{{}};
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        const int n = alpha[i] + beta[i];
        std::vector<std::vector<int>> subsets;
        std::vector<int> cur;
        combinations(n, alpha[i], 0, cur, subsets);
        std::vector<std::unordered_map<std::string, std::string>> next;
        for (const auto& base : out) {
            for (const auto& sub : subsets) {
                auto r = base;
                std::vector<int> img = sub;
                for (int x = 0; x < n; ++x) {
                    if (!std::binary_search(sub.begin(), sub.end(), x)) img.push_back(x);
                }
                for (int x = 0; x < n; ++x) {
                    if (img[x] != x) r.emplace(block_var("s", static_cast<int>(i), x), block_var("s", static_cast<int>(i), img[x]));
                }
                next.push_back(std::move(r));
            }
        }
        out = std::move(next);
    }
    return out;
}

LaurentPoly apply_renaming(const LaurentPoly& p, const std::unordered_map<std::string, std::string>& r) {
    if (r.empty()) return p;
    return p.rename([&](const std::string& v) {
        auto it = r.find(v);
        return it == r.end() ? v : it->second;
    });
}

ZGraded vertex_shuffle(const ZGraded& f, const ZGraded& g, const Monomial& z) {
    const LaurentPoly integrand = translate(f.poly, z) * relabel_after(g.poly, f.alpha);
    ZGraded out{f.alpha + g.alpha, {}};
    for (const auto& r : coset_renamings(f.alpha, g.alpha)) out.poly += apply_renaming(integrand, r);
    return out;
}

GradedElement as_element(const ZGraded& x) { return {x.alpha, x.poly}; }
ZGraded as_zgraded(const GradedElement& x) { return {x.alpha(), x.poly()}; }

RationalFunction vertex_kernel(const Quiver& q, const GradedElement& f, const GradedElement& g, const std::string& z) {
    const DimVector& alpha = f.alpha();
    VarNamer second = [&](int i, int b) { return block_var("s", i, alpha[i] + b); };
    RationalFunction theta = theta_kernel(q, alpha, g.alpha(), true, z, prefix_namer("s"), second);
    RationalFunction integrand = theta.times(translate(f.poly(), Monomial::var(z)) * relabel_after(g.poly(), alpha));
    RationalFunction out(z);
    for (const auto& r : coset_renamings(alpha, g.alpha())) {
        out += integrand.rename([&](const std::string& v) {
            auto it = r.find(v);
            return it == r.end() ? v : it->second;
        });
    }
    return out;
}

bool is_reduced(const RationalFunction& f) {
    for (const auto& [fac, e] : f.denominator()) {
        if (fac.n != 1) return false;
    }
    return true;
}

LaurentPoly BracketCache::residue(const Quiver& q, const DimVector& alpha, const DimVector& beta, long d) {
    auto key = std::make_tuple(alpha, beta, d);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    VarNamer second = [&](int i, int b) { return block_var("s", i, alpha[i] + b); };
    RationalFunction theta = theta_kernel(q, alpha, beta, true, "z", prefix_namer("s"), second);
    LaurentPoly r = residue_k(theta.times(LaurentPoly::var("z", d)));
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.emplace(key, r).first->second;
}

GradedElement lie_bracket(const Quiver& q, const GradedElement& f, const GradedElement& g, BracketCache* cache) {
    if (!f.is_degree_zero() || !g.is_degree_zero()) throw std::invalid_argument("lie_bracket: inputs must have s-degree 0");
    BracketCache local;
    BracketCache& c = cache ? *cache : local;
    const LaurentPoly gl = relabel_after(g.poly(), f.alpha());
    LaurentPoly integrand;
    for (const auto& [d, fd] : translate(f.poly(), Monomial::var("z")).split_by("z")) {
        integrand += fd * gl * c.residue(q, f.alpha(), g.alpha(), d.to_int());
    }
    LaurentPoly out;
    for (const auto& r : coset_renamings(f.alpha(), g.alpha())) out += apply_renaming(integrand, r);
    return {f.alpha() + g.alpha(), out};
}

AxiomResult axiom_check(const Quiver& q, Axiom which, const GradedElement& f, const GradedElement& g, const GradedElement& h,
                        DegreeSign sign) {
    const Monomial z = Monomial::var("z"), w = Monomial::var("w");
    AxiomResult res;
    LaurentPoly lhs, rhs;
    auto Y = [](const ZGraded& a, const Monomial& x, const ZGraded& b) { return vertex_shuffle(a, b, x); };
    const ZGraded F = as_zgraded(f), G = as_zgraded(g), H = as_zgraded(h);
    switch (which) {
        case Axiom::Vacuum: {
            const ZGraded one = as_zgraded(GradedElement::vacuum(q.size()));
            // Y(1,z)g = g, Y(g,z)1 = D(z)g, and the kernel operation fixes g too.
            lhs = Y(one, z, G).poly;
            rhs = g.poly();
            LaurentPoly creation = Y(G, z, one).poly;
            LaurentPoly dg = translate(g.poly(), z, sign);
            RationalFunction kern = vertex_kernel(q, GradedElement::vacuum(q.size()), g);
            bool kern_ok = kern == RationalFunction("z", g.poly());
            res.pass = lhs == rhs && creation == dg && kern_ok;
            if (!res.pass) {
                if (lhs != rhs) {
                    res.witness = diff_witness(lhs, rhs);
                } else if (creation != dg) {
                    res.witness = "creation: " + diff_witness(creation, dg);
                } else {
                    res.witness = "kernel: " + kern.to_string();
                }
            }
            res.lhs = lhs.to_string();
            res.rhs = rhs.to_string();
            return res;
        }
        case Axiom::Skew:
            lhs = Y(F, z, G).poly;
            rhs = translate(Y(G, z.inverse(), F).poly, z, sign);
            break;
        case Axiom::WeakAssoc:
            lhs = Y(Y(F, z, G), w, H).poly;
            rhs = Y(F, z * w, Y(G, w, H)).poly;
            break;
        case Axiom::Locality:
            lhs = Y(F, z, Y(G, w, H)).poly;
            rhs = Y(G, w, Y(F, z, H)).poly;
            break;
    }
    res.pass = lhs == rhs;
    res.lhs = lhs.to_string();
    res.rhs = rhs.to_string();
    if (!res.pass) res.witness = diff_witness(lhs, rhs);
    return res;
}

LocalizedPoly wedge_minus_one(const VirtualCharacter& e) {
    LocalizedPoly r(1L);
    for (const auto& m : e.positive) r *= LocalizedPoly(LocalizedPoly::one_minus(Character(m)));
    for (const auto& m : e.negative) r *= LocalizedPoly::inverse_one_minus(Character(m));
    return r;
}

LocalizedPoly conner_floyd(const VirtualCharacter& e, int i) {
    using S = Series<LocalizedPoly>;
    // x = 1 - s; 1 - s/chi = (1 - chi^{-1}) + chi^{-1} x
    const int n = e.rank();
    const int target = n - i;
    int trivial_neg = 0;
    for (const auto& m : e.negative) trivial_neg += m.is_one();
    const int rel = std::max(1, target + trivial_neg + 1);
    auto linear = [](const Monomial& chi) {
        const Character ci(chi.inverse());
        S s = S::monomial(0, LocalizedPoly(LocalizedPoly::one_minus(ci)));
        s.add(1, LocalizedPoly(LaurentPoly::character(ci)));
        return s;
    };
    S num = S::monomial(0, LocalizedPoly(1L));
    for (const auto& m : e.positive) num = num * linear(m);
    S den = S::monomial(0, LocalizedPoly(1L));
    for (const auto& m : e.negative) {
        if (m.is_one()) {
            den = den * S::monomial(-1, LocalizedPoly(1L));
        } else {
            den = den * linear(m).truncated(rel).inverse(LocalizedPoly::inverse_one_minus(Character(m.inverse())));
        }
    }
    S total = num * den;
    if (target < total.valuation()) return {};
    return total.coeff(target).simplified();
}

LocalizedPoly symmetrized_wedge(const VirtualCharacter& e) {
    return wedge_minus_one(e) * LocalizedPoly(LaurentPoly(e.determinant().pow(Frac(1, 2))));
}

}  // namespace kvertex
