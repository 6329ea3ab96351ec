#pragma once

#include "zerr/bigint.hpp"
#include "zerr/channel_graph.hpp"
#include "zerr/error.hpp"
#include "zerr/polynomial.hpp"
#include "zerr/recurrence.hpp"
#include "zerr/roots.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace zerr {

/// Finite set of variable-length words over a channel graph's vertices.
class GeneratorSet {
public:
    GeneratorSet(std::shared_ptr<const ChannelGraph> graph, std::vector<Word> words)
        : graph_(std::move(graph)), words_(std::move(words)) {
        if (!graph_) throw invalid_input("generator set without a graph");
        std::set<Word> seen;
        for (const auto& w : words_) {
            if (w.empty()) throw invalid_input("generator sets cannot contain the empty word");
            graph_->check_word(w);
            if (!seen.insert(w).second) throw invalid_input("duplicate word in generator set");
        }
        for (const auto& w : words_) {
            if (counts_.size() < w.size()) counts_.resize(w.size());
            counts_[w.size() - 1] += 1;
        }
    }
    GeneratorSet(const ChannelGraph& graph, std::vector<Word> words)
        : GeneratorSet(std::make_shared<const ChannelGraph>(graph), std::move(words)) {}

    const ChannelGraph& graph() const noexcept { return *graph_; }
    const std::shared_ptr<const ChannelGraph>& graph_ptr() const noexcept { return graph_; }
    const std::vector<Word>& words() const noexcept { return words_; }
    std::size_t size() const noexcept { return words_.size(); }
    bool empty() const noexcept { return words_.empty(); }

    std::size_t max_length() const noexcept { return counts_.size(); }
    std::size_t min_length() const noexcept {
        for (std::size_t l = 0; l < counts_.size(); ++l)
            if (counts_[l] != 0) return l + 1;
        return 0;
    }
    /// Number of words of each length; index l - 1 holds length l.
    const std::vector<BigInt>& length_counts() const noexcept { return counts_; }

    /// gcd of the word lengths (0 for the empty set).
    std::size_t period() const {
        std::size_t d = 0;
        for (const auto& w : words_) d = std::gcd(d, w.size());
        return d;
    }

    /// X^lmax - sum_l #C_[l] X^(lmax - l).
    IntPolynomial characteristic_polynomial() const { return zerr::characteristic_polynomial(counts_); }

private:
    std::shared_ptr<const ChannelGraph> graph_;
    std::vector<Word> words_;
    std::vector<BigInt> counts_;
};

struct ZeroErrorReport {
    bool ok = true;
    /// A violating pair (a, b) with |a| <= |b| when ok is false.
    std::optional<WordPair> violation;
};

/// Every ordered pair c != c' with |c| <= |c'| must be distinguishable
/// within the first |c| letters.
inline ZeroErrorReport verify_zero_error(const GeneratorSet& c) {
    const auto& w = c.words();
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) {
            if (i == j || w[i].size() > w[j].size()) continue;
            if (w[i].size() == w[j].size() && i > j) continue;
            WordPair p{w[i], w[j]};
            if (!distinguishable(c.graph(), p)) return {false, p};
        }
    return {};
}

/// Number of concatenations of each length 0..up_to, counted as
/// factorisations through the length recurrence (term 0 is the empty
/// concatenation).
inline CountSequence count_concatenations(const GeneratorSet& c, std::size_t up_to) {
    const auto& counts = c.length_counts();
    const std::size_t order = counts.size();
    std::vector<BigInt> seed{1};
    for (std::size_t l = 1; l < std::max<std::size_t>(order, 1) && l <= up_to; ++l) {
        BigInt acc = 0;
        for (std::size_t k = 1; k <= std::min(l, order); ++k) acc += counts[k - 1] * seed[l - k];
        seed.push_back(acc);
    }
    if (seed.size() > up_to) return CountSequence(std::move(seed));
    return linear_recurrence_extend(counts, CountSequence(std::move(seed)), up_to);
}

/// Default cap on enumerated codebooks.
inline constexpr std::size_t default_enumeration_cap = 1'000'000;

/// All distinct concatenations of length exactly `length`, sorted.
inline std::vector<Word> enumerate_codewords(const GeneratorSet& c, std::size_t length,
                                             std::size_t cap = default_enumeration_cap) {
    auto counts = count_concatenations(c, length);
    if (counts[length] > cap) throw resource_limit("codebook larger than the enumeration cap");
    std::vector<std::set<Word>> by_length(length + 1);
    by_length[0].insert(Word{});
    for (std::size_t l = 1; l <= length; ++l)
        for (const auto& w : c.words()) {
            if (w.size() > l) continue;
            for (const auto& prefix : by_length[l - w.size()]) {
                Word x = prefix;
                x.insert(x.end(), w.begin(), w.end());
                by_length[l].insert(std::move(x));
            }
        }
    return {by_length[length].begin(), by_length[length].end()};
}

/// Compares factorisation counts with distinct enumerated strings up to
/// `up_to`; false means some string factors in two ways, so the recurrence
/// over-counts the codebook.
inline bool uniquely_decodable_up_to(const GeneratorSet& c, std::size_t up_to = 8,
                                     std::size_t cap = default_enumeration_cap) {
    auto counts = count_concatenations(c, up_to);
    for (std::size_t l = 0; l <= up_to; ++l)
        if (counts[l] != BigInt(enumerate_codewords(c, l, cap).size())) return false;
    return true;
}

struct VariableLengthRate {
    double nu = 0;
    double r_bits = 0;
    IntPolynomial char_poly;
    /// gcd of word lengths; when > 1 counts vanish off multiples of it and
    /// the rate is taken along multiples.
    std::size_t period = 1;
};

/// Asymptotic rate: nu is the unique positive root of the characteristic
/// polynomial.
inline VariableLengthRate rate(const GeneratorSet& c) {
    if (c.empty()) throw invalid_input("rate of an empty generator set");
    VariableLengthRate r;
    r.char_poly = c.characteristic_polynomial();
    r.nu = unique_positive_root(r.char_poly);
    r.r_bits = std::log2(r.nu);
    r.period = c.period();
    return r;
}

} // namespace zerr
