#include "kvertex/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace kvertex {

Rational ratio(long n, long d) {
    if (d == 0) throw std::domain_error("ratio: zero denominator");
    Rational q(n);
    q /= d;
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
    Rational q;
    if (q.set_str(std::string(text), 10) != 0) throw std::invalid_argument("bad rational: " + std::string(text));
    q.canonicalize();
    return q;
}

Rational generalized_binomial(const Rational& n, long k) {
    if (k < 0) throw std::invalid_argument("generalized_binomial: k < 0");
    Rational r = 1;
    for (long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

Rational generalized_binomial(long n, long k) { return generalized_binomial(Rational(n), k); }

Rational factorial(long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(r);
}

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Frac::Frac(std::int64_t n, std::int64_t d) { *this = make(n, d); }

Frac Frac::make(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("Frac: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    constexpr __int128 lim = INT64_MAX;
    if (n > lim || n < -lim || d > lim) throw std::overflow_error("Frac: exponent overflow");
    Frac f;
    f.n_ = static_cast<std::int64_t>(n);
    f.d_ = static_cast<std::int64_t>(d);
    return f;
}

std::int64_t Frac::to_int() const {
    if (d_ != 1) throw std::domain_error("Frac: not an integer: " + to_string());
    return n_;
}

Frac Frac::operator-() const { return make(-static_cast<__int128>(n_), d_); }

Frac& Frac::operator+=(const Frac& o) {
    if (d_ == 1 && o.d_ == 1) return *this = make(static_cast<__int128>(n_) + o.n_, 1);
    return *this = make(static_cast<__int128>(n_) * o.d_ + static_cast<__int128>(o.n_) * d_,
                        static_cast<__int128>(d_) * o.d_);
}

Frac& Frac::operator-=(const Frac& o) { return *this += -o; }

Frac& Frac::operator*=(const Frac& o) {
    return *this = make(static_cast<__int128>(n_) * o.n_, static_cast<__int128>(d_) * o.d_);
}

Frac& Frac::operator/=(const Frac& o) {
    return *this = make(static_cast<__int128>(n_) * o.d_, static_cast<__int128>(d_) * o.n_);
}

std::strong_ordering operator<=>(const Frac& a, const Frac& b) {
    __int128 l = static_cast<__int128>(a.n_) * b.d_;
    __int128 r = static_cast<__int128>(b.n_) * a.d_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Frac Frac::mod_one() const {
    std::int64_t r = n_ % d_;
    if (r < 0) r += d_;
    return Frac(r, d_);
}

std::string Frac::to_string() const {
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
}

}  // namespace kvertex
