#include "rqa/biword.hpp"

#include <algorithm>
#include <array>

namespace rqa {

Letter Word::max_letter() const noexcept {
    Letter m = 0;
    for (Letter x : letters_) m = std::max(m, x);
    return m;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                  b.letters_.begin(), b.letters_.end());
}

Biword::Biword(Word top, Word bottom) : top_(std::move(top)), bottom_(std::move(bottom)) {
    if (top_.size() != bottom_.size()) {
        throw LengthMismatch("biword rows differ in length: " + std::to_string(top_.size()) +
                             " vs " + std::to_string(bottom_.size()));
    }
}

Biword Biword::slice(std::size_t first, std::size_t count) const {
    auto t = top_.letters().subspan(first, count);
    auto b = bottom_.letters().subspan(first, count);
    return Biword(Word({t.begin(), t.end()}), Word({b.begin(), b.end()}));
}

std::strong_ordering operator<=>(const Biword& a, const Biword& b) {
    if (auto c = a.top_ <=> b.top_; c != 0) return c;
    return a.bottom_ <=> b.bottom_;
}

long inv(const Word& w) {
    long count = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++count;
    return count;
}

long imv(const Word& w) {
    long count = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] >= w[j]) ++count;
    return count;
}

long cross_inversions(const Word& u, const Word& v) {
    long count = 0;
    for (Letter x : u)
        for (Letter y : v)
            if (x > y) ++count;
    return count;
}

Word sorted_rearrangement(const Word& w) {
    std::vector<Letter> letters(w.begin(), w.end());
    std::sort(letters.begin(), letters.end());
    return Word(std::move(letters));
}

Word concat(const Word& u, const Word& v) {
    std::vector<Letter> letters;
    letters.reserve(u.size() + v.size());
    letters.insert(letters.end(), u.begin(), u.end());
    letters.insert(letters.end(), v.begin(), v.end());
    return Word(std::move(letters));
}

long inv_minus(const Biword& b) { return inv(b.bottom()) - inv(b.top()); }

long inv_plus(const Biword& b) { return imv(b.bottom()) + inv(b.top()); }

namespace {

bool descends_at(const Biword& b, std::size_t i) {
    return b.top()[i] > b.top()[i + 1] && b.bottom()[i] >= b.bottom()[i + 1];
}

}  // namespace

std::vector<std::size_t> double_descents(const Biword& b) {
    std::vector<std::size_t> positions;
    for (std::size_t i = 0; i + 1 < b.length(); ++i)
        if (descends_at(b, i)) positions.push_back(i + 1);
    return positions;
}

std::size_t first_double_descent(const Biword& b) {
    for (std::size_t i = 0; i + 1 < b.length(); ++i)
        if (descends_at(b, i)) return i + 1;
    return 0;
}

bool is_irreducible(const Biword& b) { return first_double_descent(b) == 0; }

bool is_circuit(const Biword& b) {
    return sorted_rearrangement(b.top()) == sorted_rearrangement(b.bottom());
}

Biword concat(const Biword& a, const Biword& b) {
    return Biword(concat(a.top(), b.top()), concat(a.bottom(), b.bottom()));
}

Biword concat(const Biword& a, const Biword& b, const Biword& c) {
    return Biword(concat(concat(a.top(), b.top()), c.top()),
                  concat(concat(a.bottom(), b.bottom()), c.bottom()));
}

std::vector<Word> all_words(int r, std::size_t n) {
    std::vector<Word> out;
    std::vector<Letter> cur(n, 1);
    while (true) {
        out.emplace_back(cur);
        // odometer increment, last position fastest
        std::size_t i = n;
        while (i > 0 && cur[i - 1] == r) cur[--i] = 1;
        if (i == 0) break;
        ++cur[i - 1];
    }
    return out;
}

std::vector<Biword> all_biwords(int r, std::size_t n) {
    auto words = all_words(r, n);
    std::vector<Biword> out;
    out.reserve(words.size() * words.size());
    for (const auto& t : words)
        for (const auto& b : words) out.emplace_back(t, b);
    return out;
}

}  // namespace rqa

std::size_t std::hash<rqa::Word>::operator()(const rqa::Word& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull ^ w.size();
    for (rqa::Letter x : w) h = (h ^ x) * 0x100000001b3ull;
    return h;
}

std::size_t std::hash<rqa::Biword>::operator()(const rqa::Biword& b) const noexcept {
    std::size_t h = std::hash<rqa::Word>{}(b.top());
    return h ^ (std::hash<rqa::Word>{}(b.bottom()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}
