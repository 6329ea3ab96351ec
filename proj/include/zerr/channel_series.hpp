#pragma once

#include "zerr/bigint.hpp"
#include "zerr/channel_graph.hpp"
#include "zerr/independence.hpp"

#include <cmath>
#include <vector>

namespace zerr {

struct ChannelSeriesOptions {
    IndependenceOptions search;
    std::size_t vertex_budget = default_vertex_budget;
};

/// Prefix of sum_l alpha(G^l) z^l.
struct ChannelSeries {
    CountSequence terms;                        // terms[0] = 1
    std::vector<bool> exact;                    // per term; false = lower bound
    std::vector<std::vector<std::size_t>> witnesses;  // per term, index in G^l
    std::vector<double> running_max_root;       // max_{k<=l} alpha(G^k)^(1/k); [0] unused
    std::uint64_t nodes = 0;

    /// Best lower bound on 2^C0 implied by the prefix.
    double capacity_lower_bound() const { return running_max_root.empty() ? 0.0 : running_max_root.back(); }
};

/// alpha(G^l) for l = 0..up_to.
///
/// Each power is searched with two helpers: the best cross product of
/// witnesses of lower powers as the starting incumbent, and the clique-cover
/// product bound over the previous power as a proven upper bound.
inline ChannelSeries channel_series_prefix(const ChannelGraph& g, std::size_t up_to, const ChannelSeriesOptions& opt = {}) {
    ChannelSeries s;
    s.terms.push_back(1);
    s.exact.push_back(true);
    s.witnesses.push_back({});
    s.running_max_root.push_back(0.0);
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> sizes{1};

    for (std::size_t l = 1; l <= up_to; ++l) {
        ChannelGraph power = strong_power(g, l, opt.vertex_budget);
        sizes.push_back(sizes.back() * n);
        IndependenceOptions io = opt.search;
        io.upper_bound.reset();

        std::vector<std::size_t> incumbent;
        for (std::size_t a = 1; a < l; ++a) {
            const std::size_t b = l - a;
            const auto& wa = s.witnesses[a];
            const auto& wb = s.witnesses[b];
            if (wa.size() * wb.size() <= incumbent.size()) continue;
            incumbent.clear();
            for (std::size_t x : wa)
                for (std::size_t y : wb) incumbent.push_back(x * sizes[b] + y);
        }
        io.initial_solution = incumbent;
        if (l >= 2 && s.exact[l - 1]) {
            io.upper_bound = product_upper_bound(g, s.terms[l - 1].convert_to<std::size_t>());
        }

        auto r = independence_number(power, io);
        s.nodes += r.nodes;
        s.terms.push_back(BigInt(r.alpha));
        s.exact.push_back(r.exact);
        s.witnesses.push_back(r.witness);
        double root = r.alpha > 0 ? std::pow(static_cast<double>(r.alpha), 1.0 / static_cast<double>(l)) : 0.0;
        s.running_max_root.push_back(std::max(s.running_max_root.back(), root));
    }
    return s;
}

} // namespace zerr
