#include "kvertex/expr.hpp"

#include <cctype>
#include <regex>

namespace kvertex {

ParseError::ParseError(std::size_t column, const std::string& what)
    : std::runtime_error("parse error at column " + std::to_string(column + 1) + ": " + what), column_(column + 1) {}

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Expr parse() {
        Expr e = sum();
        skip();
        if (p_ != s_.size()) throw ParseError(p_, std::string("unexpected '") + s_[p_] + "'");
        return e;
    }

private:
    void skip() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }
    bool eat(char c) {
        skip();
        if (p_ < s_.size() && s_[p_] == c) {
            ++p_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(p_, std::string("expected '") + c + "'");
    }
    static Expr node(ExprNode::Kind k, std::size_t col, Expr l = nullptr, Expr r = nullptr) {
        auto n = std::make_unique<ExprNode>();
        n->kind = k;
        n->column = col;
        n->lhs = std::move(l);
        n->rhs = std::move(r);
        return n;
    }

    Expr sum() {
        Expr e = product();
        for (;;) {
            skip();
            const std::size_t col = p_;
            if (eat('+')) {
                e = node(ExprNode::Kind::Add, col, std::move(e), product());
            } else if (eat('-')) {
                e = node(ExprNode::Kind::Sub, col, std::move(e), product());
            } else {
                return e;
            }
        }
    }

    Expr product() {
        Expr e = unary();
        for (;;) {
            skip();
            const std::size_t col = p_;
            if (eat('*')) {
                e = node(ExprNode::Kind::Mul, col, std::move(e), unary());
            } else if (eat('/')) {
                e = node(ExprNode::Kind::Div, col, std::move(e), unary());
            } else {
                skip();
                if (p_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p_])) || s_[p_] == '('))
                    throw ParseError(p_, "implicit multiplication is not allowed");
                return e;
            }
        }
    }

    Expr unary() {
        skip();
        const std::size_t col = p_;
        if (eat('-')) return node(ExprNode::Kind::Neg, col, unary());
        return power();
    }

    Expr power() {
        Expr base = atom();
        skip();
        const std::size_t col = p_;
        if (!eat('^')) return base;
        Expr e = node(ExprNode::Kind::Pow, col, std::move(base));
        e->exponent = exponent();
        skip();
        if (p_ < s_.size() && s_[p_] == '^') throw ParseError(p_, "chained '^' needs parentheses");
        return e;
    }

    Frac exponent() {
        skip();
        const std::size_t col = p_;
        if (eat('(')) {
            Expr inner = sum();
            expect(')');
            Factored v = evaluate(*inner);
            if (!v.factors.empty() || !v.num.is_constant() || !v.num.constant_term().is_rational())
                throw ParseError(col, "exponent must be a rational number");
            const Rational q = v.num.constant_term().rational();
            if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p()) throw ParseError(col, "exponent too large");
            return {q.get_num().get_si(), q.get_den().get_si()};
        }
        bool neg = false;
        if (eat('-')) {
            neg = true;
        } else {
            eat('+');
        }
        skip();
        const std::size_t start = p_;
        while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
        if (start == p_) throw ParseError(start, "expected exponent");
        const std::string digits(s_.substr(start, p_ - start));
        if (digits.size() > 15) throw ParseError(start, "exponent too large");
        const auto v = static_cast<std::int64_t>(std::stoll(digits));
        return neg ? Frac(-v) : Frac(v);
    }

    Expr atom() {
        skip();
        const std::size_t col = p_;
        if (p_ >= s_.size()) throw ParseError(p_, "unexpected end of input");
        const char c = s_[p_];
        if (c == '(') {
            ++p_;
            Expr e = sum();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
            if (p_ < s_.size() && s_[p_] == '.') throw ParseError(p_, "decimal numbers are not allowed");
            if (p_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[p_])))
                throw ParseError(p_, "implicit multiplication is not allowed");
            Expr e = node(ExprNode::Kind::Number, col);
            e->number = Rational(std::string(s_.substr(col, p_ - col)));
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (p_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[p_]))) ++p_;
            if (p_ < s_.size() && s_[p_] == '_') {
                static const std::regex sub(R"(_\{\d+,\d+\})");
                std::match_results<std::string_view::const_iterator> m;
                if (!std::regex_search(s_.begin() + static_cast<long>(p_), s_.end(), m, sub, std::regex_constants::match_continuous))
                    throw ParseError(p_, "malformed subscript, expected _{i,j}");
                p_ += static_cast<std::size_t>(m.length(0));
            }
            Expr e = node(ExprNode::Kind::Variable, col);
            e->name = std::string(s_.substr(col, p_ - col));
            return e;
        }
        throw ParseError(p_, std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    std::size_t p_ = 0;
};

// A root of unity c: returns its angle in [0,1).
bool root_angle(const CycloScalar& c, Frac& angle) {
    const unsigned n = 2 * c.order();
    for (unsigned j = 0; j < n; ++j) {
        if (root_of_unity(n, j) == c) {
            angle = Frac(j, n);
            return true;
        }
    }
    return false;
}

Factored lift(LaurentPoly p) { return {std::move(p), {}}; }

LaurentPoly one_minus(const Character& chi) { return LaurentPoly(1L) - LaurentPoly::character(chi); }

void normalize(Factored& v) {
    if (v.num.is_zero()) {
        v.factors.clear();
        return;
    }
    if (v.num.size() == 2) {
        auto it = v.num.terms().begin();
        const auto [m1, c1] = *it++;
        const auto [m2, c2] = *it;
        Frac angle;
        if (root_angle(-c2 / c1, angle)) {
            v.factors[Character(m2 / m1, angle)] += 1;
            v.num = LaurentPoly(m1, c1);
        }
    }
    std::map<Character, int> out;
    for (const auto& [chi, e] : v.factors) {
        if (e == 0) continue;
        if (chi.is_root_of_unity()) {
            const CycloScalar s = CycloScalar(1L) - chi.scalar();
            if (s.is_zero()) {
                if (e < 0) throw std::domain_error("division by zero");
                v.num = LaurentPoly();
                v.factors.clear();
                return;
            }
            v.num *= s.pow(e);
            continue;
        }
        bool flipped = false;
        const Character psi = LocalizedPoly::orient(chi, flipped);
        if (flipped) {
            // 1 - chi = -chi (1 - chi^{-1})
            const Character lead = chi.pow(e);
            v.num = v.num.times(lead.mono, lead.scalar() * CycloScalar(e % 2 == 0 ? 1L : -1L));
        }
        out[psi] += e;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    v.factors = std::move(out);
}

LaurentPoly expand_positive(const std::map<Character, int>& f) {
    LaurentPoly p(1L);
    for (const auto& [chi, e] : f) p = p * one_minus(chi).pow(static_cast<unsigned>(e));
    return p;
}

Factored add(const Factored& a, const Factored& b) {
    if (a.num.is_zero()) return b;
    if (b.num.is_zero()) return a;
    std::map<Character, int> common, ra, rb;
    for (const auto& [chi, e] : a.factors) common[chi] = std::min(e, 0);
    for (const auto& [chi, e] : b.factors) common[chi] = std::min(common.count(chi) ? common[chi] : 0, std::min(e, 0));
    for (const auto& [chi, m] : common) {
        auto get = [&](const Factored& x) {
            auto it = x.factors.find(chi);
            return it == x.factors.end() ? 0 : it->second;
        };
        if (get(a) - m) ra[chi] = get(a) - m;
        if (get(b) - m) rb[chi] = get(b) - m;
    }
    for (const auto& [chi, e] : a.factors) {
        if (!common.count(chi)) ra[chi] = e;
    }
    for (const auto& [chi, e] : b.factors) {
        if (!common.count(chi)) rb[chi] = e;
    }
    Factored r;
    r.num = a.num * expand_positive(ra) + b.num * expand_positive(rb);
    std::erase_if(common, [](const auto& kv) { return kv.second == 0; });
    r.factors = common;
    normalize(r);
    return r;
}

Factored mul(const Factored& a, const Factored& b) {
    Factored r{a.num * b.num, a.factors};
    for (const auto& [chi, e] : b.factors) r.factors[chi] += e;
    normalize(r);
    return r;
}

Factored inverse(const Factored& a, std::size_t col) {
    if (a.num.is_zero()) throw std::domain_error("division by zero at column " + std::to_string(col + 1));
    if (!a.num.is_monomial())
        throw std::domain_error("column " + std::to_string(col + 1) +
                                ": denominator is not a product of monomials and factors (1 - c*z^n)");
    const auto& [m, c] = *a.num.terms().begin();
    Factored r{LaurentPoly(m.inverse(), c.inverse()), {}};
    for (const auto& [chi, e] : a.factors) r.factors[chi] = -e;
    return r;
}

Factored power(const Factored& a, Frac k, std::size_t col) {
    if (k.is_integer()) {
        const long n = k.to_int();
        Factored base = n < 0 ? inverse(a, col) : a;
        const unsigned u = static_cast<unsigned>(n < 0 ? -n : n);
        Factored r{base.num.pow(u), {}};
        for (const auto& [chi, e] : base.factors) r.factors[chi] = e * static_cast<int>(u);
        normalize(r);
        return r;
    }
    if (!a.factors.empty() || !a.num.is_monomial() || !a.num.terms().begin()->second.is_one())
        throw std::domain_error("column " + std::to_string(col + 1) + ": fractional powers apply to monomials only");
    return lift(LaurentPoly(a.num.terms().begin()->first.pow(k)));
}

const std::regex& zeta_name() {
    static const std::regex r("zeta([0-9]+)");
    return r;
}

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

Factored evaluate(const ExprNode& e) {
    using K = ExprNode::Kind;
    switch (e.kind) {
        case K::Number:
            return lift(LaurentPoly(CycloScalar(e.number)));
        case K::Variable: {
            std::smatch m;
            if (std::regex_match(e.name, m, zeta_name())) {
                const unsigned long n = std::stoul(m[1].str());
                if (n == 0 || n > 100000) throw ParseError(e.column, "root of unity order out of range");
                return lift(LaurentPoly(root_of_unity(static_cast<unsigned>(n), 1)));
            }
            return lift(LaurentPoly::var(e.name));
        }
        case K::Neg: {
            Factored v = evaluate(*e.lhs);
            v.num = -v.num;
            normalize(v);
            return v;
        }
        case K::Add:
            return add(evaluate(*e.lhs), evaluate(*e.rhs));
        case K::Sub: {
            Factored b = evaluate(*e.rhs);
            b.num = -b.num;
            return add(evaluate(*e.lhs), b);
        }
        case K::Mul:
            return mul(evaluate(*e.lhs), evaluate(*e.rhs));
        case K::Div:
            return mul(evaluate(*e.lhs), inverse(evaluate(*e.rhs), e.rhs->column));
        case K::Pow:
            return power(evaluate(*e.lhs), e.exponent, e.column);
    }
    throw std::logic_error("evaluate: unknown node");
}

RationalFunction to_rational_function(const Factored& v, const std::string& var) {
    LaurentPoly pre = v.num;
    std::map<std::pair<Character, int>, int> zf;
    for (const auto& [chi, e] : v.factors) {
        const auto [n, rest] = chi.mono.extract(var);
        if (n.is_zero()) {
            if (e < 0) throw std::domain_error("factor (" + one_minus(chi).to_string() + ") in a denominator does not involve " + var);
            pre = pre * one_minus(chi).pow(static_cast<unsigned>(e));
            continue;
        }
        if (!n.is_integer()) throw std::domain_error("factor (" + one_minus(chi).to_string() + ") has a fractional power of " + var);
        zf[{Character(rest, chi.root), static_cast<int>(n.to_int())}] -= e;
    }
    return RationalFunction(var, pre, zf).simplified();
}

LocalizedPoly to_localized(const Factored& v) {
    LocalizedPoly r(v.num);
    for (const auto& [chi, e] : v.factors) {
        r *= e > 0 ? LocalizedPoly(one_minus(chi).pow(static_cast<unsigned>(e))) : LocalizedPoly::inverse_one_minus(chi, -e);
    }
    return r.simplified();
}

LaurentPoly to_laurent(const Factored& v) { return to_localized(v).to_laurent(); }

RationalFunction parse_rational_function(std::string_view text, const std::string& var) {
    return to_rational_function(evaluate(*parse_expr(text)), var);
}

LocalizedPoly parse_localized(std::string_view text) { return to_localized(evaluate(*parse_expr(text))); }

LaurentPoly parse_laurent(std::string_view text) { return to_laurent(evaluate(*parse_expr(text))); }

}  // namespace kvertex
