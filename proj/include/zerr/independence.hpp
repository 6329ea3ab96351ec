#pragma once

#include "zerr/channel_graph.hpp"
#include "zerr/error.hpp"
#include "zerr/vertex_set.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace zerr {

struct IndependenceOptions {
    /// Maximum number of search nodes before giving up with a lower bound.
    std::uint64_t node_budget = 100'000'000;
    /// A proven upper bound on alpha; the search stops as soon as it is met.
    std::optional<std::size_t> upper_bound;
    /// A known independent set used as the starting incumbent.
    std::vector<std::size_t> initial_solution;
    /// Replace the witness by the lexicographically least maximum
    /// independent set when the remaining budget allows it.
    bool canonical_witness = true;
};

struct IndependenceResult {
    std::size_t alpha = 0;
    /// Sorted vertex indices; pairwise non-adjacent, size alpha.
    std::vector<std::size_t> witness;
    /// False when the node budget ran out: alpha is then a lower bound.
    bool exact = false;
    /// True when the witness is the lexicographically least maximum set.
    bool canonical = false;
    std::uint64_t nodes = 0;
};

inline bool is_independent(const ChannelGraph& g, const std::vector<std::size_t>& set) {
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (set[i] >= g.vertex_count()) return false;
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (g.confusable(set[i], set[j])) return false;
    }
    return true;
}

namespace detail {

/// Branch and bound for a maximum independent set on a renumbered graph.
/// Candidate sets are bitsets; the bound partitions the candidates greedily
/// into cliques of the graph (a colouring of its complement).
class IndependentSetSearch {
public:
    IndependentSetSearch(const ChannelGraph& g, std::vector<std::size_t> order)
        : n_(g.vertex_count()), order_(std::move(order)), position_(n_) {
        for (std::size_t i = 0; i < n_; ++i) position_[order_[i]] = i;
        neighbors_.assign(n_, VertexSet(n_));
        non_neighbors_.assign(n_, VertexSet::full(n_));
        for (std::size_t i = 0; i < n_; ++i) {
            g.neighbors(order_[i]).for_each([&](std::size_t w) { neighbors_[i].insert(position_[w]); });
            non_neighbors_[i].subtract(neighbors_[i]);
            non_neighbors_[i].erase(i);
        }
    }

    std::size_t size() const noexcept { return n_; }
    std::size_t to_internal(std::size_t v) const { return position_[v]; }
    std::size_t to_external(std::size_t i) const { return order_[i]; }

    /// Searches candidates for an independent set larger than `best_size`.
    /// Stops once `stop_at` is reached or the budget runs out.
    struct Outcome {
        std::vector<std::size_t> best;  // internal indices
        bool improved = false;
        bool complete = false;
    };
    Outcome run(const VertexSet& candidates, std::size_t best_size, std::size_t stop_at, std::uint64_t budget) {
        best_size_ = best_size;
        stop_at_ = stop_at;
        budget_ = budget;
        nodes_ = 0;
        aborted_ = false;
        improved_ = false;
        best_.clear();
        current_.clear();
        if (best_size_ < stop_at_) expand(candidates);
        return {best_, improved_, !aborted_};
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    bool done() const { return aborted_ || best_size_ >= stop_at_; }

    void expand(VertexSet candidates) {
        if (++nodes_ > budget_) {
            aborted_ = true;
            return;
        }
        std::vector<std::size_t> vertices;
        std::vector<std::size_t> bounds;
        colour(candidates, vertices, bounds);
        for (std::size_t k = vertices.size(); k-- > 0;) {
            if (current_.size() + bounds[k] <= best_size_) return;
            const std::size_t v = vertices[k];
            current_.push_back(v);
            VertexSet next = candidates & non_neighbors_[v];
            if (next.empty()) {
                if (current_.size() > best_size_) {
                    best_size_ = current_.size();
                    best_ = current_;
                    improved_ = true;
                }
            } else {
                expand(std::move(next));
            }
            current_.pop_back();
            if (done()) return;
            candidates.erase(v);
        }
    }

    /// Greedy clique partition of the candidates, emitted class by class;
    /// bounds[k] = number of classes up to and including vertices[k].
    void colour(const VertexSet& candidates, std::vector<std::size_t>& vertices, std::vector<std::size_t>& bounds) const {
        VertexSet uncoloured = candidates;
        std::size_t classes = 0;
        while (!uncoloured.empty()) {
            ++classes;
            VertexSet open = uncoloured;
            while (!open.empty()) {
                std::size_t v = open.first();
                open.erase(v);
                uncoloured.erase(v);
                open &= neighbors_[v];
                vertices.push_back(v);
                bounds.push_back(classes);
            }
        }
    }

    std::size_t n_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> position_;
    std::vector<VertexSet> neighbors_;
    std::vector<VertexSet> non_neighbors_;

    std::size_t best_size_ = 0;
    std::size_t stop_at_ = 0;
    std::uint64_t budget_ = 0;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    bool improved_ = false;
    std::vector<std::size_t> best_;
    std::vector<std::size_t> current_;
};

} // namespace detail

namespace detail {

inline std::vector<std::vector<std::size_t>> connected_components(const ChannelGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<std::size_t>> out;
    VertexSet unseen = VertexSet::full(n);
    while (!unseen.empty()) {
        std::vector<std::size_t> comp{unseen.first()};
        unseen.erase(comp.front());
        for (std::size_t i = 0; i < comp.size(); ++i)
            (g.neighbors(comp[i]) & unseen).for_each([&](std::size_t w) {
                unseen.erase(w);
                comp.push_back(w);
            });
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

inline ChannelGraph induced_subgraph(const ChannelGraph& g, const std::vector<std::size_t>& vertices) {
    std::vector<std::string> labels;
    std::vector<std::size_t> local(g.vertex_count(), 0);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        labels.push_back(g.label(vertices[i]));
        local[vertices[i]] = i;
    }
    ChannelGraph out(std::move(labels));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        g.neighbors(vertices[i]).for_each([&](std::size_t w) {
            if (vertices[i] < w) out.add_edge(i, local[w]);
        });
    return out;
}

IndependenceResult independence_number_connected(const ChannelGraph& g, const IndependenceOptions& opt);

} // namespace detail

/// Exact independence number by branch and bound.
///
/// Components are solved separately. Within one, vertices are searched in
/// order of increasing degree. When the node budget is exhausted the best
/// set found so far is returned with exact = false.
inline IndependenceResult independence_number(const ChannelGraph& g, const IndependenceOptions& opt = {}) {
    auto components = detail::connected_components(g);
    if (components.size() <= 1) return detail::independence_number_connected(g, opt);

    // The initial solution and upper bound refer to the whole graph; only
    // the initial solution splits cleanly across components.
    std::vector<bool> in_initial(g.vertex_count(), false);
    for (std::size_t v : opt.initial_solution) {
        if (v >= g.vertex_count()) throw invalid_input("initial solution is not independent");
        in_initial[v] = true;
    }
    IndependenceResult result;
    result.exact = result.canonical = true;
    for (const auto& comp : components) {
        IndependenceOptions sub = opt;
        sub.upper_bound.reset();
        sub.node_budget = opt.node_budget - std::min(opt.node_budget, result.nodes);
        sub.initial_solution.clear();
        for (std::size_t i = 0; i < comp.size(); ++i)
            if (in_initial[comp[i]]) sub.initial_solution.push_back(i);
        auto r = detail::independence_number_connected(detail::induced_subgraph(g, comp), sub);
        result.alpha += r.alpha;
        result.nodes += r.nodes;
        result.exact = result.exact && r.exact;
        result.canonical = result.canonical && r.canonical;
        for (std::size_t i : r.witness) result.witness.push_back(comp[i]);
    }
    std::sort(result.witness.begin(), result.witness.end());
    if (opt.upper_bound && result.alpha >= *opt.upper_bound) result.exact = true;
    return result;
}

inline IndependenceResult detail::independence_number_connected(const ChannelGraph& g, const IndependenceOptions& opt) {
    IndependenceResult result;
    const std::size_t n = g.vertex_count();
    if (n == 0) {
        result.exact = result.canonical = true;
        return result;
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return g.degree(a) < g.degree(b); });
    detail::IndependentSetSearch search(g, order);

    std::vector<std::size_t> incumbent = opt.initial_solution;
    std::sort(incumbent.begin(), incumbent.end());
    if (!incumbent.empty() && !is_independent(g, incumbent)) throw invalid_input("initial solution is not independent");
    if (incumbent.empty()) incumbent.push_back(order.front());

    const std::size_t stop_at = opt.upper_bound.value_or(n);
    auto outcome = search.run(VertexSet::full(n), incumbent.size(), stop_at, opt.node_budget);
    result.nodes = search.nodes();
    if (outcome.improved) {
        incumbent.clear();
        for (std::size_t i : outcome.best) incumbent.push_back(search.to_external(i));
        std::sort(incumbent.begin(), incumbent.end());
    }
    result.alpha = incumbent.size();
    result.witness = incumbent;
    result.exact = outcome.complete || result.alpha >= stop_at;
    if (!result.exact || !opt.canonical_witness) return result;

    // Lexicographically least maximum set: fix vertices greedily in index
    // order whenever the rest can still be completed to size alpha.
    std::uint64_t remaining = std::min<std::uint64_t>(opt.node_budget - std::min(opt.node_budget, result.nodes),
                                                      10 * result.nodes + 100'000);
    std::vector<std::size_t> chosen;
    VertexSet allowed = VertexSet::full(n);
    std::size_t need = result.alpha;
    for (std::size_t v = 0; v < n && need > 0; ++v) {
        const std::size_t iv = search.to_internal(v);
        if (!allowed.contains(iv)) continue;
        allowed.erase(iv);
        VertexSet rest(n);
        for (std::size_t w = v + 1; w < n; ++w) {
            std::size_t iw = search.to_internal(w);
            if (allowed.contains(iw) && !g.confusable(v, w)) rest.insert(iw);
        }
        bool feasible = need == 1;
        if (!feasible) {
            auto probe = search.run(rest, need - 2, need - 1, remaining);
            result.nodes += search.nodes();
            remaining -= std::min(remaining, search.nodes());
            if (!probe.complete && !probe.improved) return result;
            feasible = probe.improved;
        }
        if (feasible) {
            chosen.push_back(v);
            allowed = rest;
            --need;
        }
    }
    if (need == 0) {
        result.witness = chosen;
        result.canonical = true;
    }
    return result;
}

/// Ratio m/k of a family of m cliques covering every vertex exactly k times.
/// Any such family gives alpha(G x H) <= floor(m * alpha(H) / k).
struct CliqueCoverRatio {
    std::size_t cliques = 0;
    std::size_t multiplicity = 1;
};

namespace detail {

inline void maximal_cliques(const ChannelGraph& g, VertexSet r, VertexSet p, VertexSet x,
                            std::vector<VertexSet>& out, std::size_t cap) {
    if (out.size() >= cap) return;
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    VertexSet px = p;
    px |= x;
    std::size_t pivot = px.first();
    VertexSet branch = p;
    branch.subtract(g.neighbors(pivot));
    for (std::size_t v : branch.to_vector()) {
        VertexSet r2 = r;
        r2.insert(v);
        maximal_cliques(g, r2, p & g.neighbors(v), x & g.neighbors(v), out, cap);
        p.erase(v);
        x.insert(v);
    }
}

} // namespace detail

/// Best of two clique families: a greedy clique partition (k = 1), and all
/// maximal cliques padded with singletons up to uniform multiplicity.
inline CliqueCoverRatio clique_cover_ratio(const ChannelGraph& g) {
    const std::size_t n = g.vertex_count();
    CliqueCoverRatio partition{0, 1};
    VertexSet left = VertexSet::full(n);
    while (!left.empty()) {
        VertexSet open = left;
        while (!open.empty()) {
            std::size_t v = open.first();
            open.erase(v);
            left.erase(v);
            open &= g.neighbors(v);
        }
        ++partition.cliques;
    }
    if (n == 0 || n > 64) return partition;

    std::vector<VertexSet> cliques;
    constexpr std::size_t cap = 4096;
    detail::maximal_cliques(g, VertexSet(n), VertexSet::full(n), VertexSet(n), cliques, cap);
    if (cliques.size() >= cap) return partition;
    std::vector<std::size_t> cover(n, 0);
    for (const auto& c : cliques) c.for_each([&](std::size_t v) { ++cover[v]; });
    const std::size_t k = *std::max_element(cover.begin(), cover.end());
    std::size_t m = cliques.size();
    for (std::size_t c : cover) m += k - c;
    // m / k < partition.cliques / 1
    if (m < partition.cliques * k) return {m, k};
    return partition;
}

/// Upper bound on alpha(g x h) from an upper bound on alpha(h).
inline std::size_t product_upper_bound(const ChannelGraph& g, std::size_t alpha_h) {
    auto r = clique_cover_ratio(g);
    return r.cliques * alpha_h / r.multiplicity;
}

} // namespace zerr
