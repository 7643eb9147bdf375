#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rqa {

/// A letter of the alphabet {1, ..., r}. The bound r lives in an Alphabet,
/// not in the letter itself.
using Letter = std::uint16_t;

/// Alphabet size carried as configuration. Letters are validated against it
/// at parse/construction sites that know the context.
struct Alphabet {
    int r = 1;

    bool contains(long value) const noexcept { return value >= 1 && value <= r; }
};

/// A finite word over the alphabet. Words order by (length, lexicographic).
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    std::span<const Letter> letters() const noexcept { return letters_; }

    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    Letter max_letter() const noexcept;

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
    std::vector<Letter> letters_;
};

/// Thrown when a biword is built from words of unequal length.
class LengthMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A 2 x n matrix of letters, read as a word of biletters (top_i over
/// bottom_i). Multiplication is concatenation; the empty biword is the unit.
class Biword {
public:
    Biword() = default;
    Biword(Word top, Word bottom);

    const Word& top() const noexcept { return top_; }
    const Word& bottom() const noexcept { return bottom_; }
    std::size_t length() const noexcept { return top_.size(); }
    bool empty() const noexcept { return top_.empty(); }

    /// Sub-biword of columns [first, first + count).
    Biword slice(std::size_t first, std::size_t count) const;

    friend bool operator==(const Biword&, const Biword&) = default;
    /// Canonical term order: length, then top word, then bottom word.
    friend std::strong_ordering operator<=>(const Biword& a, const Biword& b);

private:
    Word top_;
    Word bottom_;
};

// Word statistics.

/// Number of pairs i < j with w_i > w_j.
long inv(const Word& w);
/// Number of pairs i < j with w_i >= w_j ("large" inversions).
long imv(const Word& w);
/// Number of position pairs (x in u, y in v) with x > y.
long cross_inversions(const Word& u, const Word& v);
/// Nondecreasing rearrangement.
Word sorted_rearrangement(const Word& w);
Word concat(const Word& u, const Word& v);

// Biword statistics.

/// inv(bottom) - inv(top); may be negative. Exponent of the weight map.
long inv_minus(const Biword& b);
/// imv(bottom) + inv(top); strictly decreases under every rewrite.
long inv_plus(const Biword& b);

/// 1-based positions i with top_i > top_{i+1} and bottom_i >= bottom_{i+1}.
std::vector<std::size_t> double_descents(const Biword& b);
/// First double descent (1-based), or 0 when the biword is irreducible.
std::size_t first_double_descent(const Biword& b);
bool is_irreducible(const Biword& b);
/// Top word is a rearrangement of the bottom word.
bool is_circuit(const Biword& b);

Biword concat(const Biword& a, const Biword& b);
Biword concat(const Biword& a, const Biword& b, const Biword& c);

/// All words of length n over {1..r}, in lexicographic order.
std::vector<Word> all_words(int r, std::size_t n);
/// All biwords of length n over {1..r}: (top, bottom) in lexicographic order
/// of the concatenated index top * r^n + bottom.
std::vector<Biword> all_biwords(int r, std::size_t n);

}  // namespace rqa

template <>
struct std::hash<rqa::Word> {
    std::size_t operator()(const rqa::Word& w) const noexcept;
};

template <>
struct std::hash<rqa::Biword> {
    std::size_t operator()(const rqa::Biword& b) const noexcept;
};
