#pragma once

#include "kvertex/rational.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace kvertex {

using Word = std::vector<std::string>;

bool is_lyndon(const Word& w);
// Standard bracketing split w = u v with v the longest proper Lyndon suffix.
std::size_t standard_split(const Word& w);

// Element of the free Lie algebra over Q, stored through its image in the tensor algebra.
class FreeLie {
public:
    FreeLie() = default;
    static FreeLie generator(const std::string& name, const Rational& c = 1);
    // Bracketing of a Lyndon word.
    static FreeLie lyndon(const Word& w);

    const std::map<Word, Rational>& tensor() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    FreeLie& operator+=(const FreeLie& o);
    FreeLie& operator-=(const FreeLie& o);
    friend FreeLie operator+(FreeLie a, const FreeLie& b) { return a += b; }
    friend FreeLie operator-(FreeLie a, const FreeLie& b) { return a -= b; }
    FreeLie scaled(const Rational& c) const;
    friend bool operator==(const FreeLie&, const FreeLie&) = default;

    friend FreeLie bracket(const FreeLie& a, const FreeLie& b);

    // Coordinates in the Lyndon basis.
    std::map<Word, Rational> lyndon_coordinates() const;
    // "2*[Z1,[Z1,Z2]]-Z3"
    std::string to_string() const;
    std::vector<std::string> generators() const;

private:
    void add(const Word& w, const Rational& c);
    std::map<Word, Rational> t_;
};

FreeLie bracket(const FreeLie& a, const FreeLie& b);
std::string bracket_string(const Word& lyndon_word);

// Inverse of FreeLie::to_string: sums of [rational*] generators and [x,y] brackets.
FreeLie parse_free_lie(std::string_view text);

}  // namespace kvertex
