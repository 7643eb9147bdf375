#include <gtest/gtest.h>

#include <random>

#include "rqa/io.hpp"
#include "rqa/rewrite.hpp"

namespace rqa {
namespace {

Expression E(const char* text) { return parse_expression(text); }
Biword B(const char* text) { return parse_biword(text); }

constexpr const char* kGolden321 =
    "-231/312 - 312/231 + 123/123 + 123/213 - 213/123 + 123/132 + 123/312 - 213/132"
    " + 123/231 + 123/321 - 132/123 - 132/213 + 312/123 + 231/123 - 321/123";

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

TEST(Rule, TablesAtBothSystems) {
    EXPECT_EQ(rule(B("21/11"), System::One), E("12/11"));
    EXPECT_EQ(rule(B("32/21"), System::One), E("23/12 + 23/21 - 32/12"));
    EXPECT_EQ(rule(B("21/11"), System::Q), E("q*12/11"));
    EXPECT_EQ(rule(B("32/21"), System::Q), E("23/12 + q*23/21 - q^-1*32/12"));
    EXPECT_THROW(rule(B("12/11"), System::One), NotADoubleDescent);
    EXPECT_THROW(rule(B("321/321"), System::One), NotADoubleDescent);
}

TEST(Rule, QRulesSpecializeToOneRules) {
    for (const auto& pair : all_biwords(4, 2)) {
        if (is_irreducible(pair)) continue;
        EXPECT_EQ(eval_at_one(rule(pair, System::Q)), rule(pair, System::One)) << print_biword(pair);
    }
}

TEST(Rule, MeasureDropsPerOutputTerm) {
    for (const auto& pair : all_biwords(4, 2)) {
        if (is_irreducible(pair)) continue;
        const long before = inv_plus(pair);
        const Letter x = pair.top()[0], y = pair.top()[1], a = pair.bottom()[0], b = pair.bottom()[1];
        if (a == b) {
            EXPECT_EQ(before - inv_plus(Biword({y, x}, {a, a})), 1);
        } else {
            EXPECT_EQ(before - inv_plus(Biword({y, x}, {b, a})), 2);
            EXPECT_EQ(before - inv_plus(Biword({y, x}, {a, b})), 1);
            EXPECT_EQ(before - inv_plus(Biword({x, y}, {b, a})), 1);
        }
    }
}

TEST(RewriteAt, SingleContextualSteps) {
    EXPECT_EQ(rewrite_at(B("21/11"), 1, System::One), E("12/11"));
    EXPECT_EQ(rewrite_at(B("32/21"), 1, System::One), E("23/12 + 23/21 - 32/12"));
    EXPECT_EQ(rewrite_at(B("21/11"), 1, System::Q), E("q*12/11"));
    EXPECT_EQ(rewrite_at(B("4321/3321"), 2, System::One), E("4231/3231 + 4231/3321 - 4321/3231"));
}

TEST(RewriteAt, RejectsNonDescents) {
    EXPECT_THROW(rewrite_at(B("21/12"), 1, System::One), NotADoubleDescent);
    EXPECT_THROW(rewrite_at(B("321/321"), 3, System::One), NotADoubleDescent);
    EXPECT_THROW(rewrite_at(B("321/321"), 0, System::One), NotADoubleDescent);
}

TEST(RewriteAt, EveryOutputHasSmallerMeasure) {
    std::mt19937_64 rng(29);
    const auto before = measure_counters().checks.load();
    for (int t = 0; t < 300; ++t) {
        const Biword b = random_biword(rng, 3, 2 + rng() % 5);
        for (std::size_t pos : double_descents(b))
            for (System sys : {System::One, System::Q})
                for (const auto& [nb, c] : rewrite_at(b, pos, sys)) EXPECT_LT(inv_plus(nb), inv_plus(b));
    }
    EXPECT_GT(measure_counters().checks.load(), before);
    EXPECT_EQ(measure_counters().violations.load(), 0u);
}

TEST(ReduceBiword, IrreducibleIsFixed) {
    EXPECT_EQ(reduce_biword(B("231/312"), System::One), E("231/312"));
    EXPECT_EQ(reduce_biword(Biword{}, System::Q), Expression::unit());
}

TEST(ReduceBiword, GoldenNormalForms) {
    EXPECT_EQ(reduce_biword(B("321/321"), System::One), E(kGolden321));
    EXPECT_EQ(reduce_biword(B("321/321"), System::One).size(), 15u);
    EXPECT_EQ(reduce_biword(B("321/221"), System::One),
              E("123/122 + 123/212 - 213/122 + 123/221 - 231/212"));
    EXPECT_EQ(reduce_biword(B("321/211"), System::One),
              E("123/112 + 123/121 + 123/211 - 132/112 - 312/121"));
}

TEST(ReduceBiword, CacheReturnsSameValue) {
    const Reducer reducer(System::Q);
    const auto first = reducer.reduce_biword(B("4321/4321"));
    EXPECT_GE(reducer.cache_size(), 1u);
    EXPECT_EQ(reducer.reduce_biword(B("4321/4321")), first);
    EXPECT_EQ(reducer.reduce(E("4321/4321")).normal_form, first);
}

TEST(Reduce, Basics) {
    EXPECT_TRUE(reduce(Expression{}, System::One).normal_form.is_zero());
    EXPECT_TRUE(reduce(E("21/21 - 12/12 - 12/21 + 21/12"), System::One).normal_form.is_zero());
    const auto irreducible = E("3*231/312 - q*12/12 + e");
    const auto report = reduce(irreducible, System::Q);
    EXPECT_EQ(report.normal_form, irreducible);
    EXPECT_EQ(report.rewrite_steps, 0u);
}

TEST(Reduce, StepsWithinLooseBound) {
    const auto report = reduce(E("321/321"), System::One);
    EXPECT_GT(report.rewrite_steps, 0u);
    EXPECT_LE(report.rewrite_steps, 729u);  // 3^inv+(321/321)
    EXPECT_TRUE(is_irreducible_expr(report.normal_form));
}

TEST(InIdeal, Generators) {
    EXPECT_TRUE(in_ideal(Expression{}, System::One));
    EXPECT_TRUE(in_ideal(E("21/11 - 12/11"), System::One));
    EXPECT_FALSE(in_ideal(E("12/12"), System::One));
    EXPECT_TRUE(in_ideal(E("21/11 - q*12/11"), System::Q));
    EXPECT_FALSE(in_ideal(E("21/11 - 12/11"), System::Q));
}

TEST(Ambiguity, PaperOverlaps) {
    for (System sys : {System::One, System::Q}) {
        EXPECT_TRUE(check_ambiguity(3, 2, 1, 3, 2, 1, sys));
        EXPECT_TRUE(check_ambiguity(3, 2, 1, 2, 2, 1, sys));
        EXPECT_TRUE(check_ambiguity(3, 2, 1, 2, 1, 1, sys));
        EXPECT_TRUE(check_ambiguity(3, 2, 1, 1, 1, 1, sys));
    }
    EXPECT_THROW(check_ambiguity(3, 2, 2, 1, 1, 1, System::One), PreconditionViolation);
    EXPECT_THROW(check_ambiguity(3, 2, 1, 1, 2, 1, System::One), PreconditionViolation);
}

TEST(Ambiguity, AllOverlapsOverFourLetters) {
    for (System sys : {System::One, System::Q})
        for (int x = 3; x <= 4; ++x)
            for (int y = 2; y < x; ++y)
                for (int z = 1; z < y; ++z)
                    for (int a = 1; a <= 4; ++a)
                        for (int b = 1; b <= a; ++b)
                            for (int c = 1; c <= b; ++c)
                                EXPECT_TRUE(check_ambiguity(x, y, z, a, b, c, sys));
}

TEST(Confluence, TrivialAlphabet) {
    const auto result = check_confluence_fuzz(1, 6, 50, 1, System::One);
    EXPECT_TRUE(result.ok);
    EXPECT_EQ(result.trials, 50u);
}

TEST(Confluence, SmallFuzzBothSystems) {
    EXPECT_TRUE(check_confluence_fuzz(3, 5, 200, 42, System::One).ok);
    EXPECT_TRUE(check_confluence_fuzz(2, 5, 200, 43, System::Q).ok);
}

TEST(Strategies, AllAgreeOnRandomBiwords) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 100; ++t) {
        const Biword b = random_biword(rng, 3, rng() % 6);
        for (System sys : {System::One, System::Q}) {
            const Reducer reducer(sys);
            const auto canonical = reducer.reduce_biword(b);
            EXPECT_EQ(reducer.reduce(Expression(b), Strategy::rightmost()).normal_form, canonical);
            EXPECT_EQ(reducer.reduce(Expression(b), Strategy::random(rng())).normal_form, canonical);
        }
    }
}

TEST(Strategies, RandomIsDeterministicPerSeed) {
    const Reducer reducer(System::One, ReduceOptions{.record_trace = true});
    const auto a = reducer.reduce(E("4321/4321"), Strategy::random(99));
    const auto b = reducer.reduce(E("4321/4321"), Strategy::random(99));
    ASSERT_EQ(a.trace->size(), b.trace->size());
    for (std::size_t i = 0; i < a.trace->size(); ++i) {
        EXPECT_EQ((*a.trace)[i].biword, (*b.trace)[i].biword);
        EXPECT_EQ((*a.trace)[i].position, (*b.trace)[i].position);
    }
}

TEST(ReduceProperties, IdempotentLinearHomogeneous) {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 60; ++t) {
        const auto e1 = random_expression(rng, 3, 4, 3);
        const auto e2 = random_expression(rng, 3, 4, 3);
        const LaurentCoeff c1 = LaurentCoeff::monomial(2, 1), c2 = LaurentCoeff::monomial(-3, -1);
        for (System sys : {System::One, System::Q}) {
            const Reducer reducer(sys);
            const auto n1 = reducer.reduce(e1).normal_form;
            const auto n2 = reducer.reduce(e2).normal_form;
            EXPECT_TRUE(is_irreducible_expr(n1));

            const auto again = reducer.reduce(n1);
            EXPECT_EQ(again.normal_form, n1);
            EXPECT_EQ(again.rewrite_steps, 0u);

            EXPECT_EQ(reducer.reduce(scale(c1, e1) + scale(c2, e2)).normal_form,
                      scale(c1, n1) + scale(c2, n2));

            for (std::size_t n = 0; n <= 4; ++n) {
                const auto component = reducer.reduce(homogeneous_component(e1, n)).normal_form;
                EXPECT_EQ(homogeneous_component(component, n), component);
                EXPECT_EQ(component, homogeneous_component(n1, n));
            }
        }
    }
}

TEST(ReduceProperties, QReductionSpecializesToOne) {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 100; ++t) {
        const auto e = random_expression(rng, 3, 5, 3);
        EXPECT_EQ(eval_at_one(reduce(e, System::Q).normal_form), reduce(eval_at_one(e), System::One).normal_form);
    }
}

TEST(Reduce, TraceRecordsEveryStep) {
    const Reducer reducer(System::One, ReduceOptions{.record_trace = true});
    const auto report = reducer.reduce(E("321/221"));
    ASSERT_TRUE(report.trace.has_value());
    EXPECT_EQ(report.trace->size(), report.rewrite_steps);
    EXPECT_EQ(format_step(report.trace->front()), "STEP 321/221 @ 1 -> 231/221");
    EXPECT_EQ(report.trace->front().rule, RuleKind::OneTerm);
}

TEST(Reduce, TermCapRaisesResourceError) {
    const Reducer reducer(System::One, ReduceOptions{.max_terms = 4});
    EXPECT_THROW(reducer.reduce(E("4321/4321")), ResourceExhausted);
}

}  // namespace
}  // namespace rqa
