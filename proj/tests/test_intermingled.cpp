#include "oracles.hpp"

#include "zerr/generator_set.hpp"
#include "zerr/intermingled.hpp"
#include "zerr/word_text.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

using namespace zerr;

namespace {

GeneratorSet code_c() { return GeneratorSet(named_graph("C5+1"), parse_word_list("0,11,23,35,42,54")); }

// Oracle rules written directly from their definitions.
std::vector<std::size_t> hub_rule(const std::vector<std::size_t>& z) {
    bool idle = true;
    for (std::size_t i = 1; i < z.size(); ++i) idle = idle && z[i] == 0;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < z.size(); ++i)
        if (idle || i == 0 || z[i] != 0) out.push_back(i);
    return out;
}

std::vector<std::size_t> concat_rule(const std::vector<std::size_t>& z) {
    bool idle = true;
    for (std::size_t v : z) idle = idle && v == 0;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < z.size(); ++i)
        if (idle || z[i] != 0) out.push_back(i);
    return out;
}

} // namespace

TEST(TransitionGraph, HubCodeHasSixStates) {
    auto t = build_transition_graph(code_c(), SuccessionRule::single_open(0));
    ASSERT_EQ(t.state_count(), 6u);
    EXPECT_EQ(t.states[0], StateVector(6, 0));
    auto m = t.adjacency_matrix();
    EXPECT_EQ(m(0, 0), 1u);
    for (std::size_t s = 1; s < 6; ++s) {
        EXPECT_EQ(m(0, s), 1u);
        EXPECT_EQ(m(s, 0), 1u);
        EXPECT_EQ(m(s, s), 1u);  // hub letter while a word is open
    }
}

TEST(TransitionGraph, SingleWordSelfLoop) {
    GeneratorSet c(named_graph("C5"), {Word{0}});
    auto t = build_transition_graph(c, SuccessionRule::varlen());
    EXPECT_EQ(t.state_count(), 1u);
    EXPECT_EQ(t.edges.size(), 1u);
    EXPECT_EQ(count_sequences(t, 5), (CountSequence{1, 1, 1, 1, 1, 1}));
    EXPECT_NEAR(rate(t).nu, 1.0, 1e-12);
    EXPECT_NEAR(rate(t).r_bits, 0.0, 1e-12);
}

TEST(TransitionGraph, EdgesAdvanceOneComponent) {
    auto c = code_c();
    for (bool reachable : {true, false}) {
        auto t = build_transition_graph(c, SuccessionRule::single_open(0), reachable);
        for (const auto& e : t.edges) {
            const auto& from = t.states[e.from];
            const auto& to = t.states[e.to];
            for (std::size_t i = 0; i < from.size(); ++i) {
                std::size_t expect = i == e.word ? (from[i] + 1) % c.words()[i].size() : from[i];
                EXPECT_EQ(to[i], expect);
            }
            EXPECT_EQ(e.letter, c.words()[e.word][from[e.word]]);
        }
        for (std::size_t s = 0; s < t.state_count(); ++s)
            EXPECT_EQ(t.outgoing[s].size(), SuccessionRule::single_open(0).allowed(c, t.states[s]).size());
    }
}

TEST(TransitionGraph, FullStateSpace) {
    auto t = build_transition_graph(code_c(), SuccessionRule::single_open(0), false);
    EXPECT_EQ(t.state_count(), 32u);  // 1 * 2^5
    EXPECT_THROW(build_transition_graph(code_c(), SuccessionRule::single_open(0), false, 10), resource_limit);
}

TEST(CountSequences, HubCodeMatchesMatrixPowers) {
    auto t = build_transition_graph(code_c(), SuccessionRule::single_open(0));
    auto counts = count_sequences(t, 12);
    auto m = t.adjacency_matrix();
    std::vector<std::vector<BigInt>> dense(6, std::vector<BigInt>(6));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) dense[i][j] = m(i, j);
    for (std::size_t l = 0; l <= 12; ++l) EXPECT_EQ(counts[l], oracle::matrix_power_entry(dense, l, 0, 0)) << l;
    EXPECT_EQ(counts[0], 1);
    EXPECT_EQ(counts[1], 1);
    EXPECT_EQ(counts[2], 6);
}

TEST(CountSequences, HubCodeMatchesDirectEncoder) {
    auto c = code_c();
    auto counts = count_sequences(build_transition_graph(c, SuccessionRule::single_open(0)), 7);
    for (std::size_t l = 0; l <= 7; ++l) {
        auto seqs = oracle::intermingled_sequences(c.words(), hub_rule, l);
        EXPECT_EQ(counts[l], BigInt(seqs.size())) << l;
        // distinct walks give distinct strings
        EXPECT_EQ(std::set<Word>(seqs.begin(), seqs.end()).size(), seqs.size());
    }
}

TEST(CountSequences, ConcatenationRuleEqualsVariableLengthCounts) {
    auto g = named_graph("C5+1");
    for (const auto& words : {"0,11,23,35,42,54", "11,23,35,42,54,001,003", "11,23,35,42,54"}) {
        GeneratorSet c(g, parse_word_list(words));
        auto t = build_transition_graph(c, SuccessionRule::varlen());
        EXPECT_EQ(count_sequences(t, 12), count_concatenations(c, 12)) << words;
        for (std::size_t l = 0; l <= 6; ++l)
            EXPECT_EQ(BigInt(oracle::intermingled_sequences(c.words(), concat_rule, l).size()), count_concatenations(c, l)[l]);
    }
}

TEST(CountSequences, Superadditive) {
    auto counts = count_sequences(build_transition_graph(code_c(), SuccessionRule::single_open(0)), 24);
    for (std::size_t a = 1; a <= 12; ++a)
        for (std::size_t b = 1; a + b <= 24; ++b) EXPECT_GE(counts[a + b], counts[a] * counts[b]);
}

TEST(Rate, HubCodeReachesOnePlusSqrtFive) {
    auto r = rate(build_transition_graph(code_c(), SuccessionRule::single_open(0)));
    EXPECT_NEAR(r.nu, 1 + std::sqrt(5.0), 1e-9);
    EXPECT_NEAR(r.r_bits, std::log2(1 + std::sqrt(5.0)), 1e-9);
}

TEST(Rate, ConcatenationRuleMatchesCharacteristicRoot) {
    auto c = code_c();
    auto r = rate(build_transition_graph(c, SuccessionRule::varlen()));
    EXPECT_NEAR(r.nu, (1 + std::sqrt(21.0)) / 2, 1e-9);
    EXPECT_NEAR(r.nu, rate(c).nu, 1e-9);
}

TEST(SuccessionRule, TableRequiresCoverage) {
    GeneratorSet c(named_graph("C5+1"), parse_word_list("11,23"));
    SuccessionRule::Table partial{{{0, 0}, {0}}};
    EXPECT_THROW(build_transition_graph(c, SuccessionRule::table(partial)), invalid_input);
    EXPECT_THROW(SuccessionRule::table({{{0, 0}, {}}}), invalid_input);
    EXPECT_THROW(build_transition_graph(c, SuccessionRule::single_open(5)), invalid_input);
}

TEST(VerifyIntermingled, HubCodeIsZeroError) {
    auto r = verify_zero_error(code_c(), SuccessionRule::single_open(0), 12);
    EXPECT_TRUE(r.ok);
    EXPECT_TRUE(r.all_lengths);
    EXPECT_FALSE(r.bounded);
}

TEST(VerifyIntermingled, SingleWordIsZeroError) {
    GeneratorSet c(named_graph("C5+1"), parse_word_list("23"));
    EXPECT_TRUE(verify_zero_error(c, SuccessionRule::varlen(), 8).ok);
}

TEST(VerifyIntermingled, FreeInterleavingOfAdjacentWordsFails) {
    GeneratorSet c(named_graph("C5+1"), parse_word_list("11,23"));
    SuccessionRule::Table free;
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) free[{a, b}] = {0, 1};
    auto rho = SuccessionRule::table(free);
    auto r = verify_zero_error(c, rho, 8);
    ASSERT_FALSE(r.ok);
    ASSERT_TRUE(r.violation);
    EXPECT_EQ(r.violation->kind, SequenceViolation::Kind::confusable);
    const auto& x = r.violation->first;
    const auto& y = r.violation->second;
    ASSERT_EQ(x.size(), 4u);  // nothing closes at odd lengths and length 2 is safe
    EXPECT_NE(x, y);
    for (std::size_t i = 0; i < x.size(); ++i) EXPECT_TRUE(c.graph().confusable(x[i], y[i]));

    // brute force: both are generated sequences
    auto free_rule = [](const std::vector<std::size_t>&) { return std::vector<std::size_t>{0, 1}; };
    auto seqs = oracle::intermingled_sequences(c.words(), free_rule, 4);
    std::set<Word> all(seqs.begin(), seqs.end());
    EXPECT_TRUE(all.count(x));
    EXPECT_TRUE(all.count(y));
}

TEST(VerifyIntermingled, BruteForceFallbackAgrees) {
    GeneratorSet c(named_graph("C5+1"), parse_word_list("11,23"));
    SuccessionRule::Table free;
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) free[{a, b}] = {0, 1};
    auto r = verify_zero_error(c, SuccessionRule::table(free), 6, /*product_budget=*/2);
    EXPECT_TRUE(r.bounded);
    EXPECT_FALSE(r.ok);

    auto ok = verify_zero_error(code_c(), SuccessionRule::single_open(0), 8, 2);
    EXPECT_TRUE(ok.bounded);
    EXPECT_TRUE(ok.ok);
    EXPECT_FALSE(ok.all_lengths);
}

TEST(VerifyIntermingled, IdenticalOutputsFromDifferentWalksAreAmbiguous) {
    // "0" then "00" and "00" then "0" emit the same string
    GeneratorSet c(named_graph("C5+1"), parse_word_list("0,00"));
    auto r = verify_zero_error(c, SuccessionRule::varlen(), 6);
    ASSERT_FALSE(r.ok);
    EXPECT_EQ(r.violation->kind, SequenceViolation::Kind::ambiguous);
    EXPECT_EQ(r.violation->first, r.violation->second);
}

TEST(VerifyIntermingled, HorizonBelowShortestViolation) {
    GeneratorSet c(named_graph("C5+1"), parse_word_list("11,23"));
    SuccessionRule::Table free;
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) free[{a, b}] = {0, 1};
    auto r = verify_zero_error(c, SuccessionRule::table(free), 3);
    EXPECT_TRUE(r.ok);
    EXPECT_FALSE(r.all_lengths);
}
