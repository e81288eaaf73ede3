#include "kvertex/free_lie.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

namespace kvertex {

bool is_lyndon(const Word& w) {
    if (w.empty()) return false;
    // Strictly smaller than every proper rotation.
    for (std::size_t i = 1; i < w.size(); ++i) {
        Word rot(w.begin() + static_cast<long>(i), w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(i));
        if (!(w < rot)) return false;
    }
    return true;
}

std::size_t standard_split(const Word& w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (is_lyndon(Word(w.begin() + static_cast<long>(i), w.end()))) return i;
    }
    throw std::invalid_argument("standard_split: word of length < 2");
}

FreeLie FreeLie::generator(const std::string& name, const Rational& c) {
    FreeLie x;
    x.add({name}, c);
    return x;
}

FreeLie FreeLie::lyndon(const Word& w) {
    if (!is_lyndon(w)) throw std::invalid_argument("FreeLie::lyndon: not a Lyndon word");
    if (w.size() == 1) return generator(w[0]);
    const std::size_t k = standard_split(w);
    return bracket(lyndon(Word(w.begin(), w.begin() + static_cast<long>(k))), lyndon(Word(w.begin() + static_cast<long>(k), w.end())));
}

void FreeLie::add(const Word& w, const Rational& c) {
    if (c == 0) return;
    auto [it, ins] = t_.emplace(w, c);
    if (!ins) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

FreeLie& FreeLie::operator+=(const FreeLie& o) {
    for (const auto& [w, c] : o.t_) add(w, c);
    return *this;
}

FreeLie& FreeLie::operator-=(const FreeLie& o) {
    for (const auto& [w, c] : o.t_) add(w, -c);
    return *this;
}

FreeLie FreeLie::scaled(const Rational& c) const {
    FreeLie r;
    for (const auto& [w, x] : t_) r.add(w, x * c);
    return r;
}

FreeLie bracket(const FreeLie& a, const FreeLie& b) {
    FreeLie r;
    for (const auto& [u, cu] : a.t_) {
        for (const auto& [v, cv] : b.t_) {
            Word uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            Word vu = v;
            vu.insert(vu.end(), u.begin(), u.end());
            r.add(uv, cu * cv);
            r.add(vu, -cu * cv);
        }
    }
    return r;
}

std::map<Word, Rational> FreeLie::lyndon_coordinates() const {
    // The smallest word of a Lie element is Lyndon; its bracketing has that word with coefficient 1.
    std::map<Word, Rational> out;
    FreeLie rest = *this;
    while (!rest.is_zero()) {
        const auto& [w, c] = *rest.t_.begin();
        if (!is_lyndon(w)) throw std::logic_error("FreeLie: tensor image is not a Lie element");
        Word word = w;
        Rational coeff = c;
        out.emplace(word, coeff);
        rest -= lyndon(word).scaled(coeff);
    }
    return out;
}

std::string bracket_string(const Word& w) {
    if (w.size() == 1) return w[0];
    const std::size_t k = standard_split(w);
    return "[" + bracket_string(Word(w.begin(), w.begin() + static_cast<long>(k))) + "," +
           bracket_string(Word(w.begin() + static_cast<long>(k), w.end())) + "]";
}

std::string FreeLie::to_string() const {
    auto coords = lyndon_coordinates();
    if (coords.empty()) return "0";
    // Shorter words first for readability.
    std::map<std::pair<std::size_t, Word>, Rational> ordered;
    for (const auto& [w, c] : coords) ordered.emplace(std::make_pair(w.size(), w), c);
    std::string out;
    for (const auto& [key, c] : ordered) {
        const std::string b = bracket_string(key.second);
        const Rational a = abs(c);
        std::string term = a == 1 ? b : kvertex::to_string(a) + "*" + b;
        if (c < 0) {
            out += "-" + term;
        } else {
            out += (out.empty() ? "" : "+") + term;
        }
    }
    return out;
}

std::vector<std::string> FreeLie::generators() const {
    std::set<std::string> g;
    for (const auto& [w, c] : t_) g.insert(w.begin(), w.end());
    return {g.begin(), g.end()};
}

namespace {

class LieParser {
public:
    explicit LieParser(std::string_view s) : s_(s) {}

    FreeLie parse() {
        FreeLie v = sum();
        skip();
        if (p_ != s_.size()) fail("unexpected '" + std::string(1, s_[p_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("bracket expression, column " + std::to_string(p_ + 1) + ": " + what);
    }
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

    FreeLie sum() {
        FreeLie v = eat('-') ? term().scaled(Rational(-1)) : term();
        for (;;) {
            if (eat('+')) {
                v += term();
            } else if (eat('-')) {
                v -= term();
            } else {
                return v;
            }
        }
    }

    FreeLie term() {
        skip();
        if (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) {
            const std::size_t start = p_;
            while (p_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[p_])) || s_[p_] == '/')) ++p_;
            const Rational c = parse_rational(s_.substr(start, p_ - start));
            if (eat('*')) return atom().scaled(c);
            if (c != 0) fail("a scalar must multiply a generator or bracket");
            return {};
        }
        return atom();
    }

    FreeLie atom() {
        if (eat('[')) {
            FreeLie a = sum();
            if (!eat(',')) fail("expected ','");
            FreeLie b = sum();
            if (!eat(']')) fail("expected ']'");
            return bracket(a, b);
        }
        if (eat('(')) {
            FreeLie a = sum();
            if (!eat(')')) fail("expected ')'");
            return a;
        }
        skip();
        const std::size_t start = p_;
        while (p_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_')) ++p_;
        if (start == p_ || !std::isalpha(static_cast<unsigned char>(s_[start]))) fail("expected a generator");
        return FreeLie::generator(std::string(s_.substr(start, p_ - start)));
    }

    std::string_view s_;
    std::size_t p_ = 0;
};

}  // namespace

FreeLie parse_free_lie(std::string_view text) {
    if (text.find_first_not_of(" \t") == std::string_view::npos) return {};
    return LieParser(text).parse();
}

}  // namespace kvertex
