#include "kvertex/bgm.hpp"

#include <stdexcept>

namespace kvertex {

namespace {

void add_to(std::map<long, Rational>& m, long k, const Rational& c) {
    if (c == 0) return;
    auto [it, ins] = m.emplace(k, c);
    if (!ins) {
        it->second += c;
        if (it->second == 0) m.erase(it);
    }
}

// Coefficients of binom(x, k) in powers of x.
std::vector<Rational> binomial_poly(long k) {
    std::vector<Rational> p{Rational(1)};
    for (long i = 0; i < k; ++i) {
        // multiply by (x - i)
        std::vector<Rational> q(p.size() + 1, Rational(0));
        for (std::size_t j = 0; j < p.size(); ++j) {
            q[j + 1] += p[j];
            q[j] -= p[j] * i;
        }
        p = std::move(q);
    }
    const Rational f = factorial(k);
    for (auto& c : p) c /= f;
    return p;
}

std::string coeff_term(const Rational& c, const std::string& basis, bool first) {
    std::string out;
    Rational a = abs(c);
    if (c < 0) {
        out = "-";
    } else if (!first) {
        out = "+";
    }
    if (basis.empty()) return out + to_string(a);
    if (a != 1) out += to_string(a) + "*";
    return out + basis;
}

}  // namespace

PhiElement PhiElement::basis(long k, const Rational& c) {
    if (k < 0) throw std::invalid_argument("PhiElement: negative index");
    PhiElement p;
    p.add(k, c);
    return p;
}

void PhiElement::add(long k, const Rational& c) { add_to(c_, k, c); }

PhiElement& PhiElement::operator+=(const PhiElement& o) {
    for (const auto& [k, c] : o.c_) add(k, c);
    return *this;
}

PhiElement PhiElement::scaled(const Rational& s) const {
    PhiElement r;
    for (const auto& [k, c] : c_) r.add(k, c * s);
    return r;
}

std::string PhiElement::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : c_) out += coeff_term(c, "phi^" + std::to_string(k), out.empty());
    return out;
}

NumericalPoly::NumericalPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

void NumericalPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational NumericalPoly::operator()(const Rational& n) const {
    Rational r = 0;
    for (std::size_t j = c_.size(); j-- > 0;) r = r * n + c_[j];
    return r;
}

NumericalPoly NumericalPoly::operator*(const NumericalPoly& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return NumericalPoly(std::move(r));
}

NumericalPoly NumericalPoly::operator+(const NumericalPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return NumericalPoly(std::move(r));
}

bool NumericalPoly::is_numerical() const {
    try {
        from_numerical(*this);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

std::string NumericalPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        std::string b = j == 0 ? "" : (j == 1 ? var : var + "^" + std::to_string(j));
        out += coeff_term(c_[j], b, out.empty());
    }
    return out;
}

void XiElement::add(long k, const Rational& c) { add_to(c_, k, c); }

XiElement XiElement::from_divided(const std::map<long, Rational>& d) {
    XiElement x;
    for (const auto& [k, c] : d) x.add(k, c / factorial(k));
    return x;
}

std::map<long, Rational> XiElement::to_divided() const {
    std::map<long, Rational> d;
    for (const auto& [k, c] : c_) add_to(d, k, c * factorial(k));
    return d;
}

XiElement XiElement::operator*(const XiElement& o) const {
    XiElement r;
    for (const auto& [a, ca] : c_) {
        for (const auto& [b, cb] : o.c_) r.add(a + b, ca * cb);
    }
    return r;
}

Rational XiElement::evaluate(const Rational& xi) const {
    Rational r = 0;
    for (const auto& [k, c] : c_) {
        Rational p = 1;
        for (long i = 0; i < k; ++i) p *= xi;
        r += c * p;
    }
    return r;
}

Rational XiElement::pair_monomial(long n) const {
    auto it = c_.find(n);
    return it == c_.end() ? Rational(0) : it->second * factorial(n);
}

std::string XiElement::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : c_) {
        std::string b = k == 0 ? "" : (k == 1 ? "xi" : "xi^" + std::to_string(k));
        out += coeff_term(c, b, out.empty());
    }
    return out;
}

Rational phi_pair(const PhiElement& a, long n) {
    Rational r = 0;
    for (const auto& [k, c] : a.coeffs()) {
        Rational b = generalized_binomial(n, k);
        r += (k % 2 == 0) ? Rational(c * b) : Rational(-c * b);
    }
    return r;
}

PhiElement star(const PhiElement& a, const PhiElement& b) {
    PhiElement r;
    for (const auto& [p, cp] : a.coeffs()) {
        for (const auto& [q, cq] : b.coeffs()) {
            for (long k = 0; k <= std::min(p, q); ++k) {
                Rational c = generalized_binomial(p + q - k, p) * generalized_binomial(p, k);
                if (k % 2 != 0) c = -c;
                r.add(p + q - k, c * cp * cq);
            }
        }
    }
    return r;
}

std::vector<std::pair<PhiElement, PhiElement>> coproduct(const PhiElement& a) {
    std::map<std::pair<long, long>, Rational> t;
    for (const auto& [k, c] : a.coeffs()) {
        for (long i = 0; i <= k; ++i) t[{i, k - i}] += c;
    }
    std::vector<std::pair<PhiElement, PhiElement>> out;
    for (const auto& [ij, c] : t) {
        if (c != 0) out.emplace_back(PhiElement::basis(ij.first, c), PhiElement::basis(ij.second));
    }
    return out;
}

Rational pair_tensor(const std::vector<std::pair<PhiElement, PhiElement>>& t, long m, long n) {
    Rational r = 0;
    for (const auto& [l, rt] : t) r += phi_pair(l, m) * phi_pair(rt, n);
    return r;
}

NumericalPoly to_numerical(const PhiElement& a) {
    NumericalPoly p;
    for (const auto& [k, c] : a.coeffs()) {
        auto b = binomial_poly(k);
        for (auto& x : b) x *= (k % 2 == 0) ? c : Rational(-c);
        p = p + NumericalPoly(std::move(b));
    }
    return p;
}

PhiElement from_numerical(const NumericalPoly& p, bool allow_rational) {
    // coefficient of phi^k is (-1)^k (Delta^k p)(0)
    const long d = std::max<long>(p.degree(), 0);
    std::vector<Rational> vals;
    for (long i = 0; i <= d; ++i) vals.push_back(p(Rational(i)));
    PhiElement r;
    for (long k = 0; k <= d; ++k) {
        const Rational& v = vals[0];
        if (!allow_rational && v.get_den() != 1) {
            throw std::domain_error("from_numerical: " + p.to_string() + " is not integer valued");
        }
        r.add(k, (k % 2 == 0) ? v : Rational(-v));
        for (std::size_t i = 0; i + 1 < vals.size(); ++i) vals[i] = vals[i + 1] - vals[i];
        vals.pop_back();
    }
    return r;
}

XiElement chern_character(const PhiElement& a) {
    XiElement x;
    for (const auto& [k, c] : a.coeffs()) {
        auto b = binomial_poly(k);
        for (std::size_t j = 0; j < b.size(); ++j) x.add(static_cast<long>(j), (k % 2 == 0) ? Rational(c * b[j]) : Rational(-c * b[j]));
    }
    return x;
}

FormalSeries translation_pairing(long n, int order) {
    if (order < 1) throw std::invalid_argument("translation_pairing: order must be positive");
    FormalSeries fs;
    fs.point = Point::One;
    fs.series = Series<LocalizedPoly>(order);
    for (long k = 0; k < order; ++k) {
        Rational v = phi_pair(PhiElement::basis(k), n);
        if (v != 0) fs.series.add(static_cast<int>(k), LocalizedPoly(CycloScalar(v)));
    }
    return fs;
}

}  // namespace kvertex
