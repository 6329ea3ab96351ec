#pragma once

#include "zerr/bigint.hpp"
#include "zerr/error.hpp"
#include "zerr/generator_set.hpp"
#include "zerr/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

namespace zerr {

/// Transmission state: position reached inside each word of the generator set.
using StateVector = std::vector<std::size_t>;

/// Succession rule rho: which words may emit the next letter in a state.
/// Words are referred to by their index in the generator set.
class SuccessionRule {
public:
    enum class Family { varlen, single_open, table };
    using Table = std::map<StateVector, std::vector<std::size_t>>;

    /// Plain concatenation: every word when idle, otherwise the open one(s).
    static SuccessionRule varlen() { return SuccessionRule(Family::varlen); }

    /// Every word when no word other than the hub is open; otherwise the hub
    /// plus the open words. With a one-letter hub this interleaves the hub
    /// inside any other word.
    static SuccessionRule single_open(std::size_t hub) {
        SuccessionRule r(Family::single_open);
        r.hub_ = hub;
        return r;
    }

    /// Explicit state -> word-subset table. Reaching a state missing from the
    /// table is an error.
    static SuccessionRule table(Table entries) {
        SuccessionRule r(Family::table);
        for (auto& [state, words] : entries) {
            if (words.empty()) throw invalid_input("succession rule maps a state to the empty set");
            std::sort(words.begin(), words.end());
            words.erase(std::unique(words.begin(), words.end()), words.end());
        }
        r.table_ = std::move(entries);
        return r;
    }

    Family family() const noexcept { return family_; }
    std::size_t hub() const noexcept { return hub_; }
    const Table& entries() const noexcept { return table_; }

    /// rho(z) as sorted word indices; never empty.
    std::vector<std::size_t> allowed(const GeneratorSet& c, const StateVector& z) const {
        const std::size_t k = c.size();
        if (z.size() != k) throw invalid_input("state vector size does not match the generator set");
        std::vector<std::size_t> out;
        switch (family_) {
        case Family::varlen:
        case Family::single_open: {
            const bool hub_rule = family_ == Family::single_open;
            if (hub_rule && hub_ >= k) throw invalid_input("hub word index out of range");
            bool idle = true;
            for (std::size_t i = 0; i < k; ++i)
                if (z[i] != 0 && !(hub_rule && i == hub_)) idle = false;
            for (std::size_t i = 0; i < k; ++i)
                if (idle || z[i] != 0 || (hub_rule && i == hub_)) out.push_back(i);
            break;
        }
        case Family::table: {
            auto it = table_.find(z);
            if (it == table_.end()) throw invalid_input("succession table has no entry for a reachable state");
            for (std::size_t i : it->second)
                if (i >= k) throw invalid_input("succession table names a word index out of range");
            out = it->second;
            break;
        }
        }
        return out;
    }

private:
    explicit SuccessionRule(Family f) : family_(f) {}

    Family family_;
    std::size_t hub_ = 0;
    Table table_;
};

/// One letter emission: advance word `word` from state `from` to `to`.
struct TransitionEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    std::size_t word = 0;
    Letter letter = 0;
};

/// States are numbered with the zero vector first. Parallel edges are kept
/// separately (they carry different letters), so adjacency entries count
/// labelled edges.
struct TransitionGraph {
    std::vector<StateVector> states;
    std::vector<TransitionEdge> edges;
    /// outgoing[s] = indices into edges.
    std::vector<std::vector<std::size_t>> outgoing;

    std::size_t state_count() const noexcept { return states.size(); }

    SquareMatrix adjacency_matrix(std::size_t dense_limit = 4096) const {
        if (states.size() > dense_limit) throw resource_limit("transition graph too large for a dense matrix");
        SquareMatrix m(states.size());
        for (const auto& e : edges) m(e.from, e.to) += 1;
        return m;
    }
};

inline constexpr std::size_t default_state_budget = 1'000'000;

/// Builds the transition graph: from state z, every word i in rho(z) emits
/// c_i[z_i] and advances z_i modulo |c_i|.
inline TransitionGraph build_transition_graph(const GeneratorSet& c, const SuccessionRule& rho,
                                              bool reachable_only = true,
                                              std::size_t state_budget = default_state_budget) {
    if (c.empty()) throw invalid_input("intermingled code over an empty generator set");
    const std::size_t k = c.size();
    const auto& words = c.words();
    TransitionGraph t;
    std::map<StateVector, std::size_t> index;

    auto intern = [&](const StateVector& z) {
        auto [it, inserted] = index.emplace(z, t.states.size());
        if (inserted) {
            if (t.states.size() >= state_budget) throw resource_limit("transition graph exceeds the state budget");
            t.states.push_back(z);
        }
        return it->second;
    };

    if (reachable_only) {
        intern(StateVector(k, 0));
    } else {
        // Mixed-radix enumeration of the full product, zero vector first.
        double total = 1;
        for (const auto& w : words) total *= static_cast<double>(w.size());
        if (total > static_cast<double>(state_budget)) throw resource_limit("transition graph exceeds the state budget");
        StateVector z(k, 0);
        while (true) {
            intern(z);
            std::size_t i = k;
            while (i-- > 0) {
                if (++z[i] < words[i].size()) break;
                z[i] = 0;
            }
            if (i == static_cast<std::size_t>(-1)) break;
        }
    }

    for (std::size_t s = 0; s < t.states.size(); ++s) {
        const StateVector z = t.states[s];
        t.outgoing.emplace_back();
        for (std::size_t i : rho.allowed(c, z)) {
            StateVector next = z;
            next[i] = (next[i] + 1) % words[i].size();
            TransitionEdge e{s, intern(next), i, words[i][z[i]]};
            t.outgoing[s].push_back(t.edges.size());
            t.edges.push_back(e);
        }
    }
    return t;
}

/// Number of closed walks from the zero state of each length 0..up_to, i.e.
/// the number of complete intermingled sequences.
inline CountSequence count_sequences(const TransitionGraph& t, std::size_t up_to) {
    CountSequence out;
    std::vector<BigInt> v(t.state_count(), 0);
    if (!v.empty()) v[0] = 1;
    out.push_back(v.empty() ? BigInt(0) : v[0]);
    for (std::size_t l = 1; l <= up_to; ++l) {
        std::vector<BigInt> next(v.size(), 0);
        for (const auto& e : t.edges)
            if (v[e.from] != 0) next[e.to] += v[e.from];
        v = std::move(next);
        out.push_back(v[0]);
    }
    return out;
}

struct IntermingledRate {
    double nu = 0;
    double r_bits = 0;
};

/// Spectral radius of the transition graph's adjacency matrix.
inline IntermingledRate rate(const TransitionGraph& t) {
    IntermingledRate r;
    r.nu = spectral_radius(t.adjacency_matrix());
    r.r_bits = r.nu > 0 ? std::log2(r.nu) : -INFINITY;
    return r;
}

/// A pair of complete sequences of equal length that a receiver cannot tell
/// apart. `confusable`: the sequences differ but are letterwise equal or
/// adjacent. `ambiguous`: two different walks emit the very same sequence.
struct SequenceViolation {
    enum class Kind { confusable, ambiguous };
    Kind kind = Kind::confusable;
    Word first;
    Word second;
};

struct IntermingledReport {
    bool ok = true;
    std::optional<SequenceViolation> violation;
    /// True when verification enumerated sequences up to the horizon only.
    bool bounded = false;
    /// True when the result holds for every length (product machine exhausted
    /// with no violation).
    bool all_lengths = false;
};

inline constexpr std::size_t default_product_budget = 4'000'000;
inline constexpr std::size_t default_enumeration_budget = 20'000;

namespace detail {

struct ProductNode {
    std::size_t s1, s2;
    bool walks_differ, strings_differ;
};

inline std::optional<SequenceViolation> product_search(const GeneratorSet& c, const TransitionGraph& t, std::size_t horizon,
                                                       std::size_t budget, bool& exhausted) {
    const std::size_t n = t.state_count();
    auto key = [n](const ProductNode& p) {
        return ((p.s1 * n + p.s2) << 2) | (static_cast<std::size_t>(p.walks_differ) << 1) |
               static_cast<std::size_t>(p.strings_differ);
    };
    struct Visit {
        std::size_t parent;
        std::size_t e1, e2;
        std::size_t depth;
    };
    std::vector<ProductNode> nodes;
    std::vector<Visit> visits;
    std::unordered_map<std::size_t, std::size_t> seen;
    std::deque<std::size_t> queue;

    auto push = [&](ProductNode p, Visit v) {
        if (seen.count(key(p))) return;
        if (nodes.size() >= budget) throw resource_limit("product machine exceeds its budget");
        seen.emplace(key(p), nodes.size());
        nodes.push_back(p);
        visits.push_back(v);
        queue.push_back(nodes.size() - 1);
    };
    push({0, 0, false, false}, {static_cast<std::size_t>(-1), 0, 0, 0});

    const auto& g = c.graph();
    while (!queue.empty()) {
        std::size_t id = queue.front();
        queue.pop_front();
        const ProductNode p = nodes[id];
        const std::size_t depth = visits[id].depth;
        if (p.walks_differ && p.s1 == 0 && p.s2 == 0) {
            SequenceViolation v;
            v.kind = p.strings_differ ? SequenceViolation::Kind::confusable : SequenceViolation::Kind::ambiguous;
            for (std::size_t cur = id; visits[cur].parent != static_cast<std::size_t>(-1); cur = visits[cur].parent) {
                v.first.push_back(t.edges[visits[cur].e1].letter);
                v.second.push_back(t.edges[visits[cur].e2].letter);
            }
            std::reverse(v.first.begin(), v.first.end());
            std::reverse(v.second.begin(), v.second.end());
            exhausted = false;
            if (depth > horizon) return std::nullopt;
            return v;
        }
        for (std::size_t e1 : t.outgoing[p.s1])
            for (std::size_t e2 : t.outgoing[p.s2]) {
                // Identical walks so far stay in lockstep: only the ordered
                // pair (e1 <= e2) matters until they split.
                if (!p.walks_differ && e1 > e2) continue;
                const auto& a = t.edges[e1];
                const auto& b = t.edges[e2];
                if (!g.confusable(a.letter, b.letter)) continue;
                push({a.to, b.to, p.walks_differ || e1 != e2, p.strings_differ || a.letter != b.letter},
                     {id, e1, e2, depth + 1});
            }
    }
    exhausted = true;
    return std::nullopt;
}

/// All complete sequences of each length up to the horizon with their walks,
/// compared pairwise.
inline std::optional<SequenceViolation> brute_force_search(const GeneratorSet& c, const TransitionGraph& t,
                                                           std::size_t horizon, std::size_t budget) {
    struct Partial {
        std::size_t state;
        Word letters;
    };
    std::vector<Partial> frontier{{0, {}}};
    const auto& g = c.graph();
    for (std::size_t l = 1; l <= horizon; ++l) {
        std::vector<Partial> next;
        for (const auto& p : frontier)
            for (std::size_t e : t.outgoing[p.state]) {
                Partial q{t.edges[e].to, p.letters};
                q.letters.push_back(t.edges[e].letter);
                next.push_back(std::move(q));
                if (next.size() > budget) throw resource_limit("too many sequences to enumerate up to the horizon");
            }
        frontier = std::move(next);
        std::vector<const Word*> complete;
        for (const auto& p : frontier)
            if (p.state == 0) complete.push_back(&p.letters);
        for (std::size_t i = 0; i < complete.size(); ++i)
            for (std::size_t j = i + 1; j < complete.size(); ++j) {
                const Word& x = *complete[i];
                const Word& y = *complete[j];
                bool confusable = true;
                for (std::size_t k = 0; k < l && confusable; ++k) confusable = g.confusable(x[k], y[k]);
                if (!confusable) continue;
                auto kind = x == y ? SequenceViolation::Kind::ambiguous : SequenceViolation::Kind::confusable;
                return SequenceViolation{kind, x, y};
            }
    }
    return std::nullopt;
}

} // namespace detail

/// Zero-error check of an intermingled code: no two distinct complete walks
/// may emit sequences that are equal or adjacent letter by letter.
///
/// Explores the pairwise product of the transition graph, which settles all
/// lengths at once; the reported violation is a shortest one. If the product
/// outgrows its budget, sequences are enumerated up to `horizon` instead and
/// the report is flagged as bounded.
inline IntermingledReport verify_zero_error(const GeneratorSet& c, const SuccessionRule& rho, std::size_t horizon,
                                            std::size_t product_budget = default_product_budget,
                                            std::size_t enumeration_budget = default_enumeration_budget) {
    IntermingledReport report;
    auto t = build_transition_graph(c, rho);
    try {
        bool exhausted = false;
        report.violation = detail::product_search(c, t, horizon, product_budget, exhausted);
        report.all_lengths = exhausted;
    } catch (const resource_limit&) {
        report.bounded = true;
        report.violation = detail::brute_force_search(c, t, horizon, enumeration_budget);
    }
    report.ok = !report.violation.has_value();
    return report;
}

} // namespace zerr
