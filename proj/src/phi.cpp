#include "rqa/phi.hpp"

#include "rqa/rewrite.hpp"

namespace rqa {

namespace {

Expression weigh(const Expression& e, int sign) {
    Expression out;
    for (const auto& [b, c] : e) {
        LaurentCoeff weighted = c;
        out.add_term(b, weighted.shift(sign * inv_minus(b)));
    }
    return out;
}

}  // namespace

Expression phi(const Expression& e) { return weigh(e, +1); }

Expression phi_inv(const Expression& e) { return weigh(e, -1); }

bool check_principle(const Expression& e) {
    return in_ideal(e, System::One) == in_ideal(phi(e), System::Q);
}

bool check_circuit_multiplicativity(const Expression& e, const Expression& f) {
    if (!is_circular(e) || !is_circular(f)) {
        throw NotCircular("weight map is only multiplicative on circular expressions");
    }
    return phi(product(e, f)) == product(phi(e), phi(f));
}

namespace {

Biword random_biword(int r, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> letter(1, r);
    std::vector<Letter> top(n), bottom(n);
    for (auto& x : top) x = static_cast<Letter>(letter(rng));
    for (auto& x : bottom) x = static_cast<Letter>(letter(rng));
    return Biword(Word(std::move(top)), Word(std::move(bottom)));
}

Biword random_reducible_pair(int r, std::mt19937_64& rng) {
    while (true) {
        Biword b = random_biword(r, 2, rng);
        if (!is_irreducible(b)) return b;
    }
}

LaurentCoeff random_monomial(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> magnitude(1, 3);
    std::uniform_int_distribution<int> exponent(-2, 2);
    std::bernoulli_distribution negative(0.5);
    const int c = magnitude(rng);
    return LaurentCoeff::monomial(negative(rng) ? -c : c, exponent(rng));
}

}  // namespace

Expression random_ideal_element(int r, std::size_t max_len, std::mt19937_64& rng) {
    if (r < 2 || max_len < 2) throw std::invalid_argument("ideal sampling needs r >= 2 and max_len >= 2");
    std::uniform_int_distribution<int> count(1, 3);
    std::uniform_int_distribution<std::size_t> context_len(0, max_len - 2);
    Expression out;
    const int terms = count(rng);
    for (int k = 0; k < terms; ++k) {
        const Biword g = random_reducible_pair(r, rng);
        const std::size_t total = context_len(rng);
        std::uniform_int_distribution<std::size_t> split(0, total);
        const std::size_t left = split(rng);
        const Expression beta(random_biword(r, left, rng));
        const Expression gamma(random_biword(r, total - left, rng));
        const Expression generator = Expression(g) - rule(g, System::One);
        out += scale(random_monomial(rng), product(product(beta, generator), gamma));
    }
    return out;
}

Expression random_non_member(int r, std::size_t max_len, std::mt19937_64& rng) {
    Expression out = random_ideal_element(r, max_len, rng);
    std::uniform_int_distribution<std::size_t> length(0, max_len);
    Biword b;
    do {
        b = random_biword(r, length(rng), rng);
    } while (!is_irreducible(b));
    // an irreducible remainder survives reduction, so the sum is never in the ideal
    out += Expression(b, random_monomial(rng));
    return out;
}

PrincipleResult check_principle_fuzz(int r, std::size_t max_len, std::size_t trials, std::uint64_t seed) {
    PrincipleResult result;
    std::mt19937_64 rng(seed);
    const Reducer one(System::One);
    const Reducer deformed(System::Q);
    auto run = [&](const Expression& e, bool member) {
        const bool in_one = one.in_ideal(e);
        const bool in_q = deformed.in_ideal(phi(e));
        if (in_one != in_q || in_one != member) {
            result.ok = false;
            result.counterexamples.push_back(e);
        }
    };
    for (std::size_t t = 0; t < trials; ++t) {
        run(random_ideal_element(r, max_len, rng), true);
        ++result.members;
        run(random_non_member(r, max_len, rng), false);
        ++result.non_members;
    }
    return result;
}

}  // namespace rqa
