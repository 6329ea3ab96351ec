#include "oracles.hpp"

#include "zerr/generator_set.hpp"
#include "zerr/word_text.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

using namespace zerr;

namespace {

GeneratorSet code_c() { return GeneratorSet(named_graph("C5+1"), parse_word_list("0,11,23,35,42,54")); }
GeneratorSet code_c_prime() { return GeneratorSet(named_graph("C5+1"), parse_word_list("11,23,35,42,54,001,003")); }
GeneratorSet code_c7() { return GeneratorSet(named_graph("C7"), parse_word_list("0,20,22,24,40,42,44")); }

std::vector<BigInt> oracle_distinct_counts(const GeneratorSet& c, std::size_t up_to) {
    std::vector<BigInt> out;
    for (std::size_t l = 0; l <= up_to; ++l) {
        auto all = oracle::factorisations(c.words(), l);
        out.push_back(BigInt(std::set<Word>(all.begin(), all.end()).size()));
    }
    return out;
}

} // namespace

TEST(GeneratorSet, DerivedHistogramAndPeriod) {
    auto c = code_c_prime();
    EXPECT_EQ(c.length_counts(), (std::vector<BigInt>{0, 5, 2}));
    EXPECT_EQ(c.min_length(), 2u);
    EXPECT_EQ(c.max_length(), 3u);
    EXPECT_EQ(c.period(), 1u);
    GeneratorSet even(named_graph("C5+1"), parse_word_list("11,23,35,42,54"));
    EXPECT_EQ(even.period(), 2u);
}

TEST(GeneratorSet, RejectsBadWords) {
    auto g = named_graph("C5+1");
    EXPECT_THROW(GeneratorSet(g, {Word{}}), invalid_input);
    EXPECT_THROW(GeneratorSet(g, {Word{1, 1}, Word{1, 1}}), invalid_input);
    EXPECT_THROW(GeneratorSet(g, {Word{6}}), invalid_input);
}

TEST(VerifyZeroError, ReferenceGeneratorSets) {
    EXPECT_TRUE(verify_zero_error(code_c()).ok);
    EXPECT_TRUE(verify_zero_error(code_c_prime()).ok);
    EXPECT_TRUE(verify_zero_error(code_c7()).ok);
}

TEST(VerifyZeroError, AdjacentSecondLetters) {
    auto r = verify_zero_error(GeneratorSet(named_graph("C5+1"), parse_word_list("11,12")));
    EXPECT_FALSE(r.ok);
    ASSERT_TRUE(r.violation.has_value());
    EXPECT_EQ(r.violation->a, parse_word("11"));
    EXPECT_EQ(r.violation->b, parse_word("12"));
}

TEST(VerifyZeroError, PrefixOfLongerWord) {
    // "1" is confusable with the prefix of "13"
    auto r = verify_zero_error(GeneratorSet(named_graph("C5+1"), parse_word_list("1,13")));
    EXPECT_FALSE(r.ok);
}

TEST(CountConcatenations, CodeCTable) {
    EXPECT_EQ(count_concatenations(code_c(), 5), (CountSequence{1, 1, 6, 11, 41, 96}));
}

TEST(CountConcatenations, CodeCPrimeTable) {
    EXPECT_EQ(count_concatenations(code_c_prime(), 5), (CountSequence{1, 0, 5, 2, 25, 20}));
}

TEST(CountConcatenations, EqualLengthWordsArePowers) {
    GeneratorSet even(named_graph("C5+1"), parse_word_list("11,23,35,42,54"));
    auto t = count_concatenations(even, 12);
    for (std::size_t l = 0; l <= 12; ++l) {
        if (l % 2) {
            EXPECT_EQ(t[l], 0);
        } else {
            EXPECT_EQ(t[l], boost::multiprecision::pow(BigInt(5), static_cast<unsigned>(l / 2)));
        }
    }
}

TEST(CountConcatenations, MatchesFactorisationOracle) {
    for (const auto& c : {code_c(), code_c_prime(), code_c7()}) {
        auto t = count_concatenations(c, 9);
        for (std::size_t l = 0; l <= 9; ++l) EXPECT_EQ(t[l], BigInt(oracle::factorisations(c.words(), l).size()));
    }
}

TEST(EnumerateCodewords, LengthTwoAndThree) {
    auto c = code_c();
    EXPECT_EQ(enumerate_codewords(c, 2), parse_word_list("00,11,23,35,42,54"));
    auto three = enumerate_codewords(c, 3);
    EXPECT_EQ(three.size(), 11u);
    EXPECT_EQ(three.front(), parse_word("000"));
    EXPECT_TRUE(std::is_sorted(three.begin(), three.end()));
    auto zero = enumerate_codewords(c, 0);
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_TRUE(zero.front().empty());
}

TEST(EnumerateCodewords, CapIsEnforced) { EXPECT_THROW(enumerate_codewords(code_c(), 12, 1000), resource_limit); }

TEST(EnumerateCodewords, CountsAgreeWithRecurrence) {
    for (const auto& c : {code_c(), code_c_prime(), code_c7()}) {
        auto t = count_concatenations(c, 8);
        auto distinct = oracle_distinct_counts(c, 8);
        for (std::size_t l = 0; l <= 8; ++l) {
            EXPECT_EQ(BigInt(enumerate_codewords(c, l).size()), t[l]);
            EXPECT_EQ(distinct[l], t[l]);
        }
        EXPECT_TRUE(uniquely_decodable_up_to(c));
    }
}

TEST(EnumerateCodewords, ZeroErrorExtendsToConcatenations) {
    for (const auto& c : {code_c(), code_c_prime(), code_c7()}) {
        const auto& g = c.graph();
        for (std::size_t l = 1; l <= 6; ++l) {
            auto words = enumerate_codewords(c, l);
            for (std::size_t i = 0; i < words.size(); ++i)
                for (std::size_t j = i + 1; j < words.size(); ++j)
                    ASSERT_TRUE(distinguishable(g, {words[i], words[j]})) << format_word(words[i]) << " " << format_word(words[j]);
        }
    }
}

TEST(UniquelyDecodable, DetectsDoubleFactorisation) {
    // 0.00 and 00.0 are the same string
    GeneratorSet c(named_graph("C5+1"), parse_word_list("0,00"));
    EXPECT_FALSE(uniquely_decodable_up_to(c));
}

TEST(Rate, ClosedFormRoots) {
    auto r = rate(code_c());
    EXPECT_NEAR(r.nu, (1 + std::sqrt(21.0)) / 2, 1e-9);
    EXPECT_NEAR(r.r_bits, std::log2((1 + std::sqrt(21.0)) / 2), 1e-12);
    EXPECT_EQ(r.char_poly, (IntPolynomial{-5, -1, 1}));
    auto r2 = rate(code_c_prime());
    EXPECT_NEAR(r2.nu, 1 + std::sqrt(2.0), 1e-9);
    EXPECT_EQ(r2.char_poly, (IntPolynomial{-2, -5, 0, 1}));
}

TEST(Rate, EvenLengthsHavePeriodTwo) {
    GeneratorSet even(named_graph("C5+1"), parse_word_list("11,23,35,42,54"));
    auto r = rate(even);
    EXPECT_NEAR(r.nu, std::sqrt(5.0), 1e-12);
    EXPECT_EQ(r.period, 2u);
}

TEST(Rate, SevenCycleCode) {
    auto r = rate(code_c7());
    EXPECT_NEAR(r.nu, 3.0, 1e-12);
    EXPECT_EQ(r.char_poly, (IntPolynomial{-6, -1, 1}));
}

TEST(Rate, Invariants) {
    for (const auto& c : {code_c(), code_c_prime(), code_c7()}) {
        auto r = rate(c);
        EXPECT_LE(r.nu, static_cast<double>(c.graph().vertex_count()));
        EXPECT_NEAR(r.char_poly.evaluate(static_cast<long double>(r.nu)), 0.0L, 1e-9L);
        auto t = count_concatenations(c, 40);
        for (std::size_t l = 1; l <= 40; ++l)
            if (auto root = t.root(l)) {
                EXPECT_LE(*root, r.nu + 1e-9) << l;
            }
    }
    EXPECT_THROW(rate(GeneratorSet(named_graph("C5"), {})), invalid_input);
}

TEST(CountConcatenations, EmptySetCountsOnlyTheEmptyWord) {
    auto t = count_concatenations(GeneratorSet(named_graph("C5"), {}), 4);
    EXPECT_EQ(t, (CountSequence{1, 0, 0, 0, 0}));
}
