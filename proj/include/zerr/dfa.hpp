#pragma once

#include "zerr/bigint.hpp"
#include "zerr/error.hpp"
#include "zerr/regex.hpp"
#include "zerr/spectral.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace zerr {

/// Complete deterministic automaton over letters 0..alphabet-1. A dead
/// state, if any, is explicit (`sink`) so the transition table is total.
struct Dfa {
    std::size_t alphabet = 0;
    std::vector<std::vector<std::size_t>> next;  // next[state][letter]
    std::size_t start = 0;
    std::vector<bool> accepting;
    std::optional<std::size_t> sink;

    std::size_t state_count() const noexcept { return next.size(); }

    bool accepts(const Word& w) const {
        std::size_t s = start;
        for (Letter x : w) {
            if (x >= alphabet) return false;
            s = next[s][x];
        }
        return accepting[s];
    }

    friend bool operator==(const Dfa&, const Dfa&) = default;
};

namespace detail {

/// Glushkov position automaton data: each letter occurrence is a position.
struct PositionData {
    std::vector<Letter> letter_of;                 // per position
    std::vector<std::set<std::size_t>> follow;     // per position
};

struct PositionSets {
    bool nullable = false;
    std::set<std::size_t> first, last;
};

inline PositionSets positions(const Regex& e, PositionData& data) {
    PositionSets out;
    switch (e.kind()) {
    case Regex::Kind::empty:
        break;
    case Regex::Kind::epsilon:
        out.nullable = true;
        break;
    case Regex::Kind::letter: {
        std::size_t p = data.letter_of.size();
        data.letter_of.push_back(e.symbol());
        data.follow.emplace_back();
        out.first = out.last = {p};
        break;
    }
    case Regex::Kind::alternation: {
        auto a = positions(e.left(), data);
        auto b = positions(e.right(), data);
        out.nullable = a.nullable || b.nullable;
        out.first = a.first;
        out.first.insert(b.first.begin(), b.first.end());
        out.last = a.last;
        out.last.insert(b.last.begin(), b.last.end());
        break;
    }
    case Regex::Kind::concatenation: {
        auto a = positions(e.left(), data);
        auto b = positions(e.right(), data);
        for (std::size_t p : a.last) data.follow[p].insert(b.first.begin(), b.first.end());
        out.nullable = a.nullable && b.nullable;
        out.first = a.first;
        if (a.nullable) out.first.insert(b.first.begin(), b.first.end());
        out.last = b.last;
        if (b.nullable) out.last.insert(a.last.begin(), a.last.end());
        break;
    }
    case Regex::Kind::star: {
        auto a = positions(e.left(), data);
        for (std::size_t p : a.last) data.follow[p].insert(a.first.begin(), a.first.end());
        out.nullable = true;
        out.first = a.first;
        out.last = a.last;
        break;
    }
    }
    return out;
}

/// BFS renumbering from the start state in letter order; the dead state,
/// if present, goes last. Drops unreachable states.
inline Dfa canonical_numbering(const Dfa& d) {
    const std::size_t n = d.state_count();
    std::vector<bool> dead(n, false);
    for (std::size_t s = 0; s < n; ++s) {
        if (d.accepting[s]) continue;
        bool closed = true;
        for (std::size_t x = 0; x < d.alphabet && closed; ++x) closed = d.next[s][x] == s;
        dead[s] = closed;
    }
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> id(n, unset);
    std::vector<std::size_t> order;
    std::optional<std::size_t> dead_state;
    std::deque<std::size_t> queue{d.start};
    std::vector<bool> seen(n, false);
    seen[d.start] = true;
    while (!queue.empty()) {
        std::size_t s = queue.front();
        queue.pop_front();
        if (dead[s]) {
            dead_state = s;
        } else {
            id[s] = order.size();
            order.push_back(s);
        }
        for (std::size_t x = 0; x < d.alphabet; ++x) {
            std::size_t t = d.next[s][x];
            if (!seen[t]) {
                seen[t] = true;
                queue.push_back(t);
            }
        }
    }
    if (dead_state) {
        id[*dead_state] = order.size();
        order.push_back(*dead_state);
    }
    Dfa out;
    out.alphabet = d.alphabet;
    for (std::size_t s : order) {
        std::vector<std::size_t> row(d.alphabet);
        for (std::size_t x = 0; x < d.alphabet; ++x) row[x] = id[d.next[s][x]];
        out.next.push_back(std::move(row));
        out.accepting.push_back(d.accepting[s]);
    }
    out.start = id[d.start];
    if (dead_state) out.sink = id[*dead_state];
    return out;
}

} // namespace detail

/// Subset construction over the Glushkov position automaton of e. The
/// empty position set becomes the explicit sink.
inline Dfa determinize(const Regex& e, std::size_t alphabet) {
    if (e.alphabet_bound() > alphabet) throw invalid_input("regex uses a letter outside the alphabet");
    detail::PositionData data;
    auto top = detail::positions(e, data);

    // Position sets; the initial state is marked by the extra pseudo-position
    // npos so that it stays distinct from any real set.
    constexpr std::size_t initial = static_cast<std::size_t>(-1);
    using Key = std::vector<std::size_t>;
    std::map<Key, std::size_t> index;
    std::vector<Key> sets;
    Dfa d;
    d.alphabet = alphabet;

    auto intern = [&](Key k) {
        auto [it, inserted] = index.emplace(k, sets.size());
        if (inserted) sets.push_back(std::move(k));
        return it->second;
    };
    intern({initial});
    for (std::size_t s = 0; s < sets.size(); ++s) {
        const Key cur = sets[s];
        std::vector<std::set<std::size_t>> targets(alphabet);
        bool accept = false;
        for (std::size_t p : cur) {
            const auto& succ = p == initial ? top.first : data.follow[p];
            for (std::size_t q : succ) targets[data.letter_of[q]].insert(q);
            if (p == initial ? top.nullable : top.last.count(p) > 0) accept = true;
        }
        std::vector<std::size_t> row(alphabet);
        for (std::size_t x = 0; x < alphabet; ++x) row[x] = intern(Key(targets[x].begin(), targets[x].end()));
        d.next.push_back(std::move(row));
        d.accepting.push_back(accept);
    }
    return detail::canonical_numbering(d);
}

/// Hopcroft partition refinement followed by canonical renumbering.
inline Dfa minimize(const Dfa& d) {
    const std::size_t n = d.state_count();
    const std::size_t k = d.alphabet;
    if (n == 0) return d;

    std::vector<std::vector<std::vector<std::size_t>>> inverse(k, std::vector<std::vector<std::size_t>>(n));
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t x = 0; x < k; ++x) inverse[x][d.next[s][x]].push_back(s);

    std::vector<std::vector<std::size_t>> blocks;
    std::vector<std::size_t> block_of(n);
    {
        std::vector<std::size_t> acc, rej;
        for (std::size_t s = 0; s < n; ++s) (d.accepting[s] ? acc : rej).push_back(s);
        for (auto* b : {&acc, &rej})
            if (!b->empty()) {
                for (std::size_t s : *b) block_of[s] = blocks.size();
                blocks.push_back(std::move(*b));
            }
    }
    std::vector<bool> in_work(blocks.size(), true);
    std::deque<std::size_t> work;
    for (std::size_t b = 0; b < blocks.size(); ++b) work.push_back(b);

    while (!work.empty()) {
        const std::size_t a = work.front();
        work.pop_front();
        in_work[a] = false;
        const std::vector<std::size_t> splitter = blocks[a];
        for (std::size_t x = 0; x < k; ++x) {
            std::map<std::size_t, std::vector<std::size_t>> hit;  // block -> states leading into splitter
            for (std::size_t t : splitter)
                for (std::size_t s : inverse[x][t]) hit[block_of[s]].push_back(s);
            for (auto& [b, inside] : hit) {
                if (inside.size() == blocks[b].size()) continue;
                std::sort(inside.begin(), inside.end());
                std::vector<std::size_t> outside;
                std::set_difference(blocks[b].begin(), blocks[b].end(), inside.begin(), inside.end(),
                                    std::back_inserter(outside));
                const std::size_t nb = blocks.size();
                blocks[b] = std::move(outside);
                for (std::size_t s : inside) block_of[s] = nb;
                blocks.push_back(std::move(inside));
                in_work.push_back(false);
                if (in_work[b]) {
                    in_work[nb] = true;
                    work.push_back(nb);
                } else {
                    std::size_t smaller = blocks[b].size() <= blocks[nb].size() ? b : nb;
                    in_work[smaller] = true;
                    work.push_back(smaller);
                }
            }
        }
    }

    Dfa q;
    q.alphabet = k;
    for (const auto& b : blocks) {
        std::vector<std::size_t> row(k);
        for (std::size_t x = 0; x < k; ++x) row[x] = block_of[d.next[b.front()][x]];
        q.next.push_back(std::move(row));
        q.accepting.push_back(d.accepting[b.front()]);
    }
    q.start = block_of[d.start];
    return detail::canonical_numbering(q);
}

/// Minimal complete DFA of L(e) over letters 0..alphabet-1.
inline Dfa regex_to_dfa(const Regex& e, std::size_t alphabet) { return minimize(determinize(e, alphabet)); }
inline Dfa regex_to_dfa(const Regex& e) { return regex_to_dfa(e, std::max<std::size_t>(e.alphabet_bound(), 1)); }

/// Number of accepted words of each length 0..up_to.
inline CountSequence count_language(const Dfa& d, std::size_t up_to) {
    CountSequence out;
    std::vector<BigInt> v(d.state_count(), 0);
    v[d.start] = 1;
    auto accepted = [&] {
        BigInt total = 0;
        for (std::size_t s = 0; s < v.size(); ++s)
            if (d.accepting[s]) total += v[s];
        return total;
    };
    out.push_back(accepted());
    for (std::size_t l = 1; l <= up_to; ++l) {
        std::vector<BigInt> next(v.size(), 0);
        for (std::size_t s = 0; s < v.size(); ++s) {
            if (v[s] == 0) continue;
            for (std::size_t x = 0; x < d.alphabet; ++x) next[d.next[s][x]] += v[s];
        }
        v = std::move(next);
        out.push_back(accepted());
    }
    return out;
}

/// States that are reachable from the start and can reach acceptance.
inline std::vector<std::size_t> trim_states(const Dfa& d) {
    const std::size_t n = d.state_count();
    std::vector<bool> fwd(n, false), bwd(n, false);
    std::vector<std::size_t> stack{d.start};
    fwd[d.start] = true;
    while (!stack.empty()) {
        std::size_t s = stack.back();
        stack.pop_back();
        for (std::size_t t : d.next[s])
            if (!fwd[t]) {
                fwd[t] = true;
                stack.push_back(t);
            }
    }
    std::vector<std::vector<std::size_t>> pred(n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t : d.next[s]) pred[t].push_back(s);
    for (std::size_t s = 0; s < n; ++s)
        if (d.accepting[s]) {
            bwd[s] = true;
            stack.push_back(s);
        }
    while (!stack.empty()) {
        std::size_t s = stack.back();
        stack.pop_back();
        for (std::size_t t : pred[s])
            if (!bwd[t]) {
                bwd[t] = true;
                stack.push_back(t);
            }
    }
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < n; ++s)
        if (fwd[s] && bwd[s]) out.push_back(s);
    return out;
}

/// Letter-count adjacency matrix of the DFA restricted to its trim states
/// (the sink and other useless states carry no accepted words).
inline SquareMatrix trim_adjacency(const Dfa& d) {
    auto keep = trim_states(d);
    std::vector<std::size_t> local(d.state_count(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = i;
    SquareMatrix m(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t t : d.next[keep[i]])
            if (local[t] != static_cast<std::size_t>(-1)) m(i, local[t]) += 1;
    return m;
}

} // namespace zerr
