#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "rqa/io.hpp"
#include "rqa/macmahon.hpp"
#include "rqa/phi.hpp"
#include "rqa/rewrite.hpp"

namespace rqa {
namespace {

Expression E(const char* text) { return parse_expression(text); }

Biword random_biword(std::mt19937_64& rng, int r, std::size_t n) {
    std::uniform_int_distribution<int> letter(1, r);
    std::vector<Letter> top(n), bottom(n);
    for (auto& x : top) x = static_cast<Letter>(letter(rng));
    for (auto& x : bottom) x = static_cast<Letter>(letter(rng));
    return Biword(Word(top), Word(bottom));
}

Expression random_expression(std::mt19937_64& rng, int r, std::size_t max_len, int terms) {
    std::uniform_int_distribution<int> coeff(-3, 3), exponent(-2, 2);
    std::uniform_int_distribution<std::size_t> length(0, max_len);
    Expression out;
    for (int i = 0; i < terms; ++i)
        out.add_term(random_biword(rng, r, length(rng)), LaurentCoeff::monomial(coeff(rng), exponent(rng)));
    return out;
}

Expression random_circular(std::mt19937_64& rng, int r, std::size_t max_len, int terms) {
    std::uniform_int_distribution<int> coeff(-3, 3), exponent(-2, 2);
    std::uniform_int_distribution<std::size_t> length(0, max_len);
    Expression out;
    for (int i = 0; i < terms; ++i) {
        const Biword b = random_biword(rng, r, length(rng));
        std::vector<Letter> top(b.bottom().begin(), b.bottom().end());
        std::shuffle(top.begin(), top.end(), rng);
        out.add_term(Biword(Word(top), b.bottom()), LaurentCoeff::monomial(coeff(rng), exponent(rng)));
    }
    return out;
}

TEST(Phi, Examples) {
    EXPECT_TRUE(phi(Expression{}).is_zero());
    // inv(bottom 12) = 0, inv(top 21) = 1, so inv- = -1
    EXPECT_EQ(phi(E("21/12")), E("q^-1*21/12"));
    EXPECT_EQ(phi(E("12/21")), E("q*12/21"));
    EXPECT_EQ(phi_inv(E("q*12/21")), E("12/21"));
    EXPECT_TRUE(phi_inv(Expression{}).is_zero());
}

TEST(Phi, InverseAndSupport) {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 200; ++t) {
        const auto e = random_expression(rng, 3, 5, 4);
        EXPECT_EQ(phi_inv(phi(e)), e);
        EXPECT_EQ(phi(phi_inv(e)), e);
        const auto w = phi(e);
        ASSERT_EQ(w.size(), e.size());
        auto it = w.begin();
        for (const auto& [b, c] : e) EXPECT_EQ((it++)->first, b);
    }
}

TEST(Phi, Linear) {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 100; ++t) {
        const auto e = random_expression(rng, 3, 4, 3), f = random_expression(rng, 3, 4, 3);
        const LaurentCoeff c = LaurentCoeff::monomial(5, -2) + 1;
        EXPECT_EQ(phi(scale(c, e) + f), scale(c, phi(e)) + phi(f));
    }
}

TEST(Principle, GeneratorExamples) {
    EXPECT_TRUE(check_principle(E("21/21 - 12/12 - 12/21 + 21/12")));
    EXPECT_TRUE(in_ideal(E("21/21 - 12/12 - 12/21 + 21/12"), System::One));
    EXPECT_TRUE(in_ideal(phi(E("21/21 - 12/12 - 12/21 + 21/12")), System::Q));
    EXPECT_TRUE(check_principle(E("21/11 - 12/11")));
    EXPECT_TRUE(in_ideal(phi(E("21/11 - 12/11")), System::Q));
    EXPECT_TRUE(check_principle(E("12/12")));
    EXPECT_FALSE(in_ideal(E("12/12"), System::One));
}

TEST(Principle, GeneratorsInRandomContexts) {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 100; ++t) {
        const auto e = random_ideal_element(3, 5, rng);
        EXPECT_TRUE(in_ideal(e, System::One));
        EXPECT_TRUE(check_principle(e));
        const auto n = random_non_member(3, 5, rng);
        EXPECT_FALSE(in_ideal(n, System::One));
        EXPECT_TRUE(check_principle(n));
    }
}

TEST(Principle, ConverseDirectionFromQIdeal) {
    // Elements of the q-ideal pulled back by the inverse weight land in the q = 1 ideal.
    std::mt19937_64 rng(59);
    for (int t = 0; t < 50; ++t) {
        const auto e = random_ideal_element(3, 5, rng);
        const auto eq = phi(e);
        EXPECT_TRUE(in_ideal(eq, System::Q));
        EXPECT_TRUE(in_ideal(phi_inv(eq), System::One));
    }
}

TEST(Principle, FuzzDriver) {
    const auto result = check_principle_fuzz(3, 5, 40, 61);
    EXPECT_TRUE(result.ok);
    EXPECT_EQ(result.members, 40u);
    EXPECT_EQ(result.non_members, 40u);
}

TEST(Conjugation, QNormalFormIsWeightedOneNormalForm) {
    std::mt19937_64 rng(67);
    for (int t = 0; t < 100; ++t) {
        const auto e = random_expression(rng, 3, 5, 3);
        EXPECT_EQ(reduce(e, System::Q).normal_form, phi(reduce(phi_inv(e), System::One).normal_form));
    }
}

TEST(Multiplicativity, CircularPairs) {
    EXPECT_TRUE(check_circuit_multiplicativity(Expression::unit(), Expression::unit()));
    EXPECT_TRUE(check_circuit_multiplicativity(E("21/12"), E("12/21")));
    std::mt19937_64 rng(71);
    for (int t = 0; t < 100; ++t)
        EXPECT_TRUE(check_circuit_multiplicativity(random_circular(rng, 3, 3, 3), random_circular(rng, 3, 3, 3)));
    EXPECT_THROW(check_circuit_multiplicativity(E("1/2"), E("2/1")), NotCircular);
}

TEST(Multiplicativity, FailsOffCircuits) {
    // Search length-1 biwords over {1,2} for a pair the weight map does not multiply.
    bool found = false;
    for (const auto& a : all_biwords(2, 1))
        for (const auto& b : all_biwords(2, 1)) {
            const Expression e(a), f(b);
            if (phi(product(e, f)) != product(phi(e), phi(f))) found = true;
        }
    EXPECT_TRUE(found);
    EXPECT_NE(phi(product(E("1/2"), E("2/1"))), product(phi(E("1/2")), phi(E("2/1"))));
}

TEST(Weights, FermionAndBosonTransport) {
    for (int r : {1, 2, 3}) {
        EXPECT_EQ(phi(ferm(r, Variant::One)), ferm(r, Variant::Q));
        EXPECT_EQ(phi(bos(r, 4, Variant::One)), bos(r, 4, Variant::Q));
    }
}

}  // namespace
}  // namespace rqa
