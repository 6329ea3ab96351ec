#pragma once

#include "zerr/error.hpp"
#include "zerr/vertex_set.hpp"

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace zerr {

/// Channel input letter, i.e. a vertex index of the channel graph.
using Letter = std::size_t;
using Word = std::vector<Letter>;

/// Two words compared for distinguishability; used with |a| <= |b|.
struct WordPair {
    Word a;
    Word b;
    friend bool operator==(const WordPair&, const WordPair&) = default;
};

/// Undirected confusability graph over the channel input alphabet.
///
/// Vertices are dense indices; labels are only for presentation. Self-loops
/// are never stored: operations that treat a vertex as confusable with
/// itself say so explicitly (see confusable()).
class ChannelGraph {
public:
    ChannelGraph() = default;

    explicit ChannelGraph(std::vector<std::string> labels) : labels_(std::move(labels)) {
        std::unordered_set<std::string> seen;
        for (const auto& l : labels_)
            if (!seen.insert(l).second) throw invalid_input("duplicate vertex label '" + l + "'");
        adj_.assign(labels_.size(), VertexSet(labels_.size()));
    }

    ChannelGraph(std::vector<std::string> labels, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
        : ChannelGraph(std::move(labels)) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    /// Graph on n vertices labelled "0".."n-1" with no edges.
    static ChannelGraph with_vertices(std::size_t n) {
        std::vector<std::string> labels;
        labels.reserve(n);
        for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
        return ChannelGraph(std::move(labels));
    }

    std::size_t vertex_count() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t v) const { return labels_.at(v); }

    std::optional<std::size_t> index_of(const std::string& label) const {
        auto it = std::find(labels_.begin(), labels_.end(), label);
        if (it == labels_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - labels_.begin());
    }

    bool adjacent(std::size_t u, std::size_t v) const { return adj_.at(u).contains(v); }
    /// Adjacent or equal: the auto-adjacency convention of zero-error tests.
    bool confusable(std::size_t u, std::size_t v) const { return u == v || adjacent(u, v); }
    const VertexSet& neighbors(std::size_t v) const { return adj_.at(v); }
    std::size_t degree(std::size_t v) const { return adj_.at(v).count(); }

    std::size_t edge_count() const noexcept {
        std::size_t total = 0;
        for (const auto& n : adj_) total += n.count();
        return total / 2;
    }

    /// Edges as (u, v) with u < v, sorted.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t u = 0; u < adj_.size(); ++u)
            adj_[u].for_each([&](std::size_t v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    void add_edge(std::size_t u, std::size_t v) {
        if (u >= vertex_count() || v >= vertex_count()) throw invalid_input("edge endpoint out of range");
        if (u == v) throw invalid_input("self-loops are not stored in a channel graph");
        adj_[u].insert(v);
        adj_[v].insert(u);
    }

    void check_word(const Word& w) const {
        for (Letter x : w)
            if (x >= vertex_count())
                throw invalid_input("letter " + std::to_string(x) + " is not a vertex of a " +
                                    std::to_string(vertex_count()) + "-vertex graph");
    }

    friend bool operator==(const ChannelGraph&, const ChannelGraph&) = default;

private:
    std::vector<std::string> labels_;
    std::vector<VertexSet> adj_;
};

/// Cycle C_n on vertices 0..n-1 (the noisy-typewriter graph).
inline ChannelGraph cycle(std::size_t n) {
    if (n < 3) throw invalid_parameter("cycle needs at least 3 vertices");
    auto g = ChannelGraph::with_vertices(n);
    for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline ChannelGraph path(std::size_t n) {
    auto g = ChannelGraph::with_vertices(n);
    for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline ChannelGraph complete(std::size_t n) {
    auto g = ChannelGraph::with_vertices(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline ChannelGraph one_vertex() { return ChannelGraph::with_vertices(1); }
inline ChannelGraph zero_graph() { return {}; }

/// Disjoint union: g's vertices first, then h's. Labels are kept when they
/// stay unique and otherwise tagged "0:" / "1:" by side.
inline ChannelGraph disjoint_union(const ChannelGraph& g, const ChannelGraph& h) {
    std::vector<std::string> labels(g.labels());
    labels.insert(labels.end(), h.labels().begin(), h.labels().end());
    std::unordered_set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) {
        for (std::size_t i = 0; i < labels.size(); ++i)
            labels[i] = (i < g.vertex_count() ? "0:" : "1:") + labels[i];
    }
    ChannelGraph out(std::move(labels));
    const std::size_t off = g.vertex_count();
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(u + off, v + off);
    return out;
}

namespace detail {

inline ChannelGraph strong_product_labelled(const ChannelGraph& g, const ChannelGraph& h,
                                            std::vector<std::string> labels) {
    const std::size_t m = h.vertex_count();
    ChannelGraph out(std::move(labels));
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        auto gv = g.neighbors(v).to_vector();
        gv.push_back(v);
        for (std::size_t w = 0; w < m; ++w) {
            auto hw = h.neighbors(w).to_vector();
            hw.push_back(w);
            const std::size_t a = v * m + w;
            for (std::size_t v2 : gv)
                for (std::size_t w2 : hw) {
                    const std::size_t b = v2 * m + w2;
                    if (a < b) out.add_edge(a, b);
                }
        }
    }
    return out;
}

inline std::string strip_parens(const std::string& s) {
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return s.substr(1, s.size() - 2);
    return s;
}

} // namespace detail

/// Strong (AND) product. Vertex (v, w) has index v * |V(h)| + w and label "(v,w)".
inline ChannelGraph strong_product(const ChannelGraph& g, const ChannelGraph& h) {
    std::vector<std::string> labels;
    labels.reserve(g.vertex_count() * h.vertex_count());
    for (const auto& a : g.labels())
        for (const auto& b : h.labels()) labels.push_back("(" + a + "," + b + ")");
    return detail::strong_product_labelled(g, h, std::move(labels));
}

/// Default cap on the vertex count of strong powers (adjacency is dense bitsets).
inline constexpr std::size_t default_vertex_budget = 20000;

/// L-fold strong power. Tuple (v_1..v_L) has index sum v_i |V|^(L-i) and
/// label "(v_1,...,v_L)".
inline ChannelGraph strong_power(const ChannelGraph& g, std::size_t l, std::size_t vertex_budget = default_vertex_budget) {
    if (l < 1) throw invalid_parameter("strong power needs l >= 1");
    std::size_t size = 1;
    for (std::size_t i = 0; i < l; ++i) {
        size *= g.vertex_count();
        if (size > vertex_budget) throw resource_limit("strong power exceeds the vertex budget");
    }

    ChannelGraph acc = g;
    for (std::size_t i = 1; i < l; ++i) {
        std::vector<std::string> labels;
        labels.reserve(acc.vertex_count() * g.vertex_count());
        for (const auto& a : acc.labels())
            for (const auto& b : g.labels())
                labels.push_back("(" + (i == 1 ? a : detail::strip_parens(a)) + "," + b + ")");
        acc = detail::strong_product_labelled(acc, g, std::move(labels));
    }
    return acc;
}

/// True iff some position i < |a| has a_i != b_i with a_i b_i not an edge,
/// i.e. the length-|a| prefixes are distinguishable after transmission of a.
inline bool distinguishable(const ChannelGraph& g, const WordPair& p) {
    g.check_word(p.a);
    g.check_word(p.b);
    if (p.a.size() > p.b.size()) throw invalid_input("distinguishable expects |a| <= |b|");
    for (std::size_t i = 0; i < p.a.size(); ++i)
        if (!g.confusable(p.a[i], p.b[i])) return true;
    return false;
}

/// Built-in graphs by name: C<n>, K<n>, P<n>, and "<name>+1" for the disjoint
/// union with one extra vertex. In "<name>+1" the extra vertex is index 0 and
/// the base graph is shifted to 1..n, with labels renumbered "0".."n".
inline ChannelGraph named_graph(const std::string& name) {
    auto parse_count = [&](std::string_view digits) {
        std::size_t n = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
            throw invalid_input("unknown graph name '" + name + "'");
        return n;
    };
    if (name.size() > 2 && name.ends_with("+1")) {
        ChannelGraph base = named_graph(name.substr(0, name.size() - 2));
        ChannelGraph u = disjoint_union(one_vertex(), base);
        ChannelGraph out = ChannelGraph::with_vertices(u.vertex_count());
        for (auto [a, b] : u.edges()) out.add_edge(a, b);
        return out;
    }
    if (name.empty()) throw invalid_input("empty graph name");
    std::string_view rest(name.data() + 1, name.size() - 1);
    switch (name[0]) {
    case 'C':
        return cycle(parse_count(rest));
    case 'K':
        return complete(parse_count(rest));
    case 'P':
        return path(parse_count(rest));
    default:
        throw invalid_input("unknown graph name '" + name + "'");
    }
}

} // namespace zerr
