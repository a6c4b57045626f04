#include "flows/causal_flow.hpp"

#include <algorithm>

namespace flows {

CausalFlowSearch find_causal_flow_detailed(const OpenGraph& graph) {
    const int n = graph.vertex_count();
    const VertexSet& inputs = graph.inputs();

    CausalFlow flow;
    flow.g.assign(static_cast<std::size_t>(n), std::nullopt);
    flow.layer.assign(static_cast<std::size_t>(n), 0);

    VertexSet out = graph.outputs();
    int remaining = n - out.count();

    // For every vertex, the count and index sum of its neighbors outside
    // `out`. A corrector is usable exactly when its count is 1, and the sum
    // then names the unique vertex it corrects.
    std::vector<int> pending_degree(static_cast<std::size_t>(n), 0);
    std::vector<long long> pending_sum(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w : graph.neighbors(v)) {
            if (!out.test(w)) {
                ++pending_degree[static_cast<std::size_t>(v)];
                pending_sum[static_cast<std::size_t>(v)] += w;
            }
        }
    }

    // Candidate correctors: vertices of out \ inputs, kept in ascending
    // order. Used correctors leave the pool; their corrected vertices join
    // it unless they are inputs.
    std::vector<Vertex> correctors = (out & inputs.complement()).to_vector();

    VertexSet corrected_now(n);
    std::vector<Vertex> corrected;

    for (int round = 1; remaining > 0; ++round) {
        std::vector<Vertex> survivors;
        corrected.clear();

        for (Vertex v : correctors) {
            const int deg = pending_degree[static_cast<std::size_t>(v)];
            if (deg == 0) continue;  // never usable again
            if (deg != 1) {
                survivors.push_back(v);
                continue;
            }
            const Vertex u = static_cast<Vertex>(pending_sum[static_cast<std::size_t>(v)]);
            if (corrected_now.test(u)) {
                // u was already corrected this round; v stays available.
                survivors.push_back(v);
                continue;
            }
            corrected_now.set(u);
            corrected.push_back(u);
            flow.g[static_cast<std::size_t>(u)] = v;
            flow.layer[static_cast<std::size_t>(u)] = round;
        }

        if (corrected.empty()) return {std::nullopt, out.complement()};

        for (Vertex u : corrected) {
            out.set(u);
            corrected_now.reset(u);
            for (Vertex w : graph.neighbors(u)) {
                --pending_degree[static_cast<std::size_t>(w)];
                pending_sum[static_cast<std::size_t>(w)] -= u;
            }
        }
        remaining -= static_cast<int>(corrected.size());

        const std::size_t tail = survivors.size();
        for (Vertex u : corrected) {
            if (!inputs.test(u)) survivors.push_back(u);
        }
        std::sort(survivors.begin() + static_cast<std::ptrdiff_t>(tail), survivors.end());
        std::inplace_merge(survivors.begin(),
                           survivors.begin() + static_cast<std::ptrdiff_t>(tail),
                           survivors.end());
        correctors = std::move(survivors);
    }

    return {std::move(flow), VertexSet(n)};
}

std::optional<CausalFlow> find_causal_flow(const OpenGraph& g) {
    return find_causal_flow_detailed(g).flow;
}

}  // namespace flows
