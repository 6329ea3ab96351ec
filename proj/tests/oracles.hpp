#pragma once

// Deliberately naive reference implementations. They share nothing with the
// library beyond its plain data types, and trade speed for obviousness.

#include "zerr/bigint.hpp"
#include "zerr/channel_graph.hpp"
#include "zerr/regex.hpp"

#include <functional>
#include <set>
#include <vector>

namespace oracle {

using zerr::BigInt;
using zerr::Word;

/// Adjacency test straight from an edge list, with auto-adjacency.
inline bool confusable(const std::vector<std::pair<std::size_t, std::size_t>>& edges, std::size_t a, std::size_t b) {
    if (a == b) return true;
    for (auto [u, v] : edges)
        if ((u == a && v == b) || (u == b && v == a)) return true;
    return false;
}

/// Maximum independent set by plain include/exclude recursion.
inline std::size_t alpha(const zerr::ChannelGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
    std::vector<std::size_t> chosen;
    std::size_t best = 0;
    std::function<void(std::size_t)> go = [&](std::size_t v) {
        if (chosen.size() + (n - v) <= best) return;
        if (v == n) {
            best = std::max(best, chosen.size());
            return;
        }
        bool free = true;
        for (std::size_t c : chosen) free = free && !adj[c][v];
        if (free) {
            chosen.push_back(v);
            go(v + 1);
            chosen.pop_back();
        }
        go(v + 1);
    };
    go(0);
    return best;
}

/// Strong product adjacency by definition: distinct, and every coordinate
/// equal or adjacent.
inline bool strong_adjacent(const zerr::ChannelGraph& g, const std::vector<std::size_t>& x,
                            const std::vector<std::size_t>& y) {
    if (x == y) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i] && !g.adjacent(x[i], y[i])) return false;
    return true;
}

/// Every way of writing a length-`length` string as a concatenation of words.
inline std::vector<Word> factorisations(const std::vector<Word>& words, std::size_t length) {
    std::vector<Word> out;
    Word cur;
    std::function<void()> go = [&] {
        if (cur.size() == length) {
            out.push_back(cur);
            return;
        }
        for (const auto& w : words) {
            if (cur.size() + w.size() > length) continue;
            cur.insert(cur.end(), w.begin(), w.end());
            go();
            cur.resize(cur.size() - w.size());
        }
    };
    go();
    return out;
}

/// End positions j such that e matches w[i, j).
inline std::set<std::size_t> match_ends(const zerr::Regex& e, const Word& w, std::size_t i) {
    using K = zerr::Regex::Kind;
    std::set<std::size_t> out;
    switch (e.kind()) {
    case K::empty:
        break;
    case K::epsilon:
        out.insert(i);
        break;
    case K::letter:
        if (i < w.size() && w[i] == e.symbol()) out.insert(i + 1);
        break;
    case K::alternation: {
        out = match_ends(e.left(), w, i);
        auto r = match_ends(e.right(), w, i);
        out.insert(r.begin(), r.end());
        break;
    }
    case K::concatenation:
        for (std::size_t m : match_ends(e.left(), w, i)) {
            auto r = match_ends(e.right(), w, m);
            out.insert(r.begin(), r.end());
        }
        break;
    case K::star: {
        out.insert(i);
        std::vector<std::size_t> frontier{i};
        while (!frontier.empty()) {
            std::size_t p = frontier.back();
            frontier.pop_back();
            for (std::size_t q : match_ends(e.left(), w, p))
                if (out.insert(q).second) frontier.push_back(q);
        }
        break;
    }
    }
    return out;
}

inline bool matches(const zerr::Regex& e, const Word& w) { return match_ends(e, w, 0).count(w.size()) > 0; }

/// Number of words of each length 0..up_to over k letters matching e,
/// by enumerating all k^L words.
inline std::vector<BigInt> language_counts(const zerr::Regex& e, std::size_t k, std::size_t up_to) {
    std::vector<BigInt> out;
    for (std::size_t l = 0; l <= up_to; ++l) {
        Word w(l, 0);
        BigInt count = 0;
        while (true) {
            if (matches(e, w)) ++count;
            std::size_t i = l;
            while (i-- > 0) {
                if (++w[i] < k) break;
                w[i] = 0;
            }
            if (i == static_cast<std::size_t>(-1)) break;
        }
        out.push_back(count);
    }
    return out;
}

/// Dense big-integer matrix power, entry (i, j) of m^l.
inline BigInt matrix_power_entry(const std::vector<std::vector<BigInt>>& m, std::size_t l, std::size_t i, std::size_t j) {
    const std::size_t n = m.size();
    std::vector<std::vector<BigInt>> acc(n, std::vector<BigInt>(n, 0));
    for (std::size_t k = 0; k < n; ++k) acc[k][k] = 1;
    for (std::size_t step = 0; step < l; ++step) {
        std::vector<std::vector<BigInt>> next(n, std::vector<BigInt>(n, 0));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) next[a][c] += acc[a][b] * m[b][c];
        acc = std::move(next);
    }
    return acc[i][j];
}

/// Direct run of the intermingled encoder: every sequence of word choices of
/// length `length` allowed by `rho`, returning the emitted strings of the
/// runs that end with all words closed.
inline std::vector<Word> intermingled_sequences(const std::vector<Word>& words,
                                                const std::function<std::vector<std::size_t>(const std::vector<std::size_t>&)>& rho,
                                                std::size_t length) {
    std::vector<Word> out;
    std::vector<std::size_t> z(words.size(), 0);
    Word emitted;
    std::function<void()> go = [&] {
        if (emitted.size() == length) {
            bool closed = true;
            for (std::size_t v : z) closed = closed && v == 0;
            if (closed) out.push_back(emitted);
            return;
        }
        for (std::size_t i : rho(z)) {
            const std::size_t saved = z[i];
            emitted.push_back(words[i][z[i]]);
            z[i] = (z[i] + 1) % words[i].size();
            go();
            z[i] = saved;
            emitted.pop_back();
        }
    };
    go();
    return out;
}

} // namespace oracle
