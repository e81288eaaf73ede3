#include "kvertex/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace kvertex {

namespace {

std::vector<unsigned> prime_factors(unsigned n) {
    std::vector<unsigned> ps;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// v mod Phi_n, result has length phi(n).
std::vector<Rational> reduce(std::vector<Rational> v, unsigned n) {
    const auto& phi = cyclotomic_polynomial(n);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = v.size(); i-- > deg;) {
        if (v[i] == 0) continue;
        Rational c = v[i];
        for (std::size_t k = 0; k <= deg; ++k) {
            if (phi[k] != 0) v[i - deg + k] -= c * phi[k];
        }
    }
    v.resize(deg);
    return v;
}

// Solve A x = b exactly; A is rows x cols. Returns false if inconsistent.
bool solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<Rational>& x) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivcol;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        Rational inv = 1 / a[r][c];
        for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
            b[i] -= f * b[r];
        }
        pivcol.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i) {
        if (b[i] != 0) return false;
    }
    x.assign(cols, Rational(0));
    for (std::size_t i = 0; i < r; ++i) x[pivcol[i]] = b[i];
    return true;
}

}  // namespace

unsigned euler_phi(unsigned n) {
    unsigned r = n;
    for (unsigned p : prime_factors(n)) r = r / p * (p - 1);
    return r;
}

const std::vector<long>& cyclotomic_polynomial(unsigned n) {
    static std::mutex mu;
    static std::map<unsigned, std::vector<long>> cache;
    if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n = 0");
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    // x^n - 1 divided by Phi_d for every proper divisor d.
    std::vector<long> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const auto& den = cyclotomic_polynomial(d);
        const std::size_t dd = den.size() - 1;
        std::vector<long> q(num.size() - dd, 0);
        for (std::size_t i = num.size(); i-- > dd;) {
            long c = num[i];
            q[i - dd] = c;
            if (c == 0) continue;
            for (std::size_t k = 0; k <= dd; ++k) num[i - dd + k] -= c * den[k];
        }
        num = q;
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(n, std::move(num)).first->second;
}

CycloScalar CycloScalar::from_powers(unsigned order, const std::vector<Rational>& powers) {
    if (order == 0) throw std::invalid_argument("CycloScalar: order 0");
    std::vector<Rational> v(std::max<std::size_t>(powers.size(), euler_phi(order)), Rational(0));
    for (std::size_t j = 0; j < powers.size(); ++j) v[j % order] += powers[j];
    CycloScalar r;
    r.n_ = order;
    r.c_ = reduce(std::move(v), order);
    r.canonicalize();
    return r;
}

CycloScalar root_of_unity(unsigned n, long j) {
    if (n == 0) throw std::invalid_argument("root_of_unity: N = 0");
    long k = j % static_cast<long>(n);
    if (k < 0) k += n;
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
    v[k] = 1;
    return CycloScalar::from_powers(n, v);
}

const Rational& CycloScalar::rational() const {
    if (n_ != 1) throw std::domain_error("CycloScalar: not rational: " + to_string());
    return c_[0];
}

std::vector<Rational> CycloScalar::lifted(unsigned m) const {
    if (m % n_ != 0) throw std::invalid_argument("CycloScalar::lifted: order does not divide target");
    if (m == n_) return c_;
    const unsigned step = m / n_;
    std::vector<Rational> v(std::max<std::size_t>((c_.size() - 1) * step + 1, euler_phi(m)), Rational(0));
    for (std::size_t j = 0; j < c_.size(); ++j) v[j * step] = c_[j];
    return reduce(std::move(v), m);
}

void CycloScalar::canonicalize() {
    bool rational = true;
    for (std::size_t j = 1; j < c_.size(); ++j) {
        if (c_[j] != 0) {
            rational = false;
            break;
        }
    }
    if (rational) {
        c_.resize(1);
        n_ = 1;
        return;
    }
    bool changed = true;
    while (changed && n_ > 1) {
        changed = false;
        for (unsigned p : prime_factors(n_)) {
            const unsigned d = n_ / p;
            const unsigned fd = euler_phi(d);
            std::vector<Rational> sol;
            if (d % p == 0) {
                // Phi_n(x) = Phi_d(x^p): subfield elements are supported on multiples of p.
                bool ok = true;
                for (std::size_t j = 0; j < c_.size() && ok; ++j) {
                    if (j % p != 0 && c_[j] != 0) ok = false;
                }
                if (!ok) continue;
                sol.assign(fd, Rational(0));
                for (std::size_t j = 0; j < c_.size(); j += p) sol[j / p] = c_[j];
            } else {
                const std::size_t fn = c_.size();
                std::vector<std::vector<Rational>> a(fn, std::vector<Rational>(fd, Rational(0)));
                for (unsigned k = 0; k < fd; ++k) {
                    std::vector<Rational> e(static_cast<std::size_t>(k) * p + 1, Rational(0));
                    e.back() = 1;
                    auto col = reduce(std::move(e), n_);
                    for (std::size_t i = 0; i < fn; ++i) a[i][k] = col[i];
                }
                if (!solve_linear(std::move(a), c_, sol)) continue;
            }
            c_ = std::move(sol);
            n_ = d;
            changed = true;
            break;
        }
    }
}

CycloScalar CycloScalar::operator-() const {
    CycloScalar r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
    if (n_ == 1 && o.n_ == 1) {
        c_[0] += o.c_[0];
        return *this;
    }
    const unsigned m = std::lcm(n_, o.n_);
    auto a = lifted(m);
    auto b = o.lifted(m);
    for (std::size_t j = 0; j < a.size(); ++j) a[j] += b[j];
    n_ = m;
    c_ = std::move(a);
    canonicalize();
    return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o) { return *this += -o; }

CycloScalar& CycloScalar::operator*=(const CycloScalar& o) {
    if (n_ == 1 && o.n_ == 1) {
        c_[0] *= o.c_[0];
        return *this;
    }
    if (o.n_ == 1) {
        for (auto& x : c_) x *= o.c_[0];
        if (o.c_[0] == 0) *this = CycloScalar();
        return *this;
    }
    if (n_ == 1) {
        Rational s = c_[0];
        *this = o;
        for (auto& x : c_) x *= s;
        if (s == 0) *this = CycloScalar();
        return *this;
    }
    const unsigned m = std::lcm(n_, o.n_);
    auto a = lifted(m);
    auto b = o.lifted(m);
    std::vector<Rational> p(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] != 0) p[i + j] += a[i] * b[j];
        }
    }
    n_ = m;
    c_ = reduce(std::move(p), m);
    canonicalize();
    return *this;
}

CycloScalar CycloScalar::inverse() const {
    if (is_zero()) throw std::domain_error("CycloScalar: division by zero");
    if (n_ == 1) return CycloScalar(Rational(1) / c_[0]);
    // Solve (multiplication by this) y = 1.
    const std::size_t f = c_.size();
    std::vector<std::vector<Rational>> a(f, std::vector<Rational>(f, Rational(0)));
    for (std::size_t j = 0; j < f; ++j) {
        std::vector<Rational> shifted(j + f, Rational(0));
        for (std::size_t i = 0; i < f; ++i) shifted[i + j] = c_[i];
        auto col = reduce(std::move(shifted), n_);
        for (std::size_t i = 0; i < f; ++i) a[i][j] = col[i];
    }
    std::vector<Rational> e(f, Rational(0));
    e[0] = 1;
    std::vector<Rational> y;
    solve_linear(std::move(a), std::move(e), y);
    CycloScalar r;
    r.n_ = n_;
    r.c_ = std::move(y);
    r.canonicalize();
    return r;
}

CycloScalar& CycloScalar::operator/=(const CycloScalar& o) { return *this *= o.inverse(); }

CycloScalar CycloScalar::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    CycloScalar r(1L), b = *this;
    while (k > 0) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

bool CycloScalar::is_single_term() const {
    int nz = 0;
    for (const auto& x : c_) nz += (x != 0);
    return nz <= 1;
}

std::string CycloScalar::to_string() const {
    if (n_ == 1) return kvertex::to_string(c_[0]);
    std::string out;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        const Rational& c = c_[j];
        if (c == 0) continue;
        std::string mag;
        const Rational a = abs(c);
        std::string root = "zeta" + std::to_string(n_);
        if (j > 1) root += "^" + std::to_string(j);
        if (j == 0) {
            mag = kvertex::to_string(a);
        } else if (a == 1) {
            mag = root;
        } else {
            mag = kvertex::to_string(a) + "*" + root;
        }
        if (out.empty()) {
            out = (c < 0 ? "-" : "") + mag;
        } else {
            out += (c < 0 ? "-" : "+") + mag;
        }
    }
    return out;
}

}  // namespace kvertex
