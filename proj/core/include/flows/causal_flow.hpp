#pragma once

#include <optional>
#include <vector>

#include "flows/bitset.hpp"
#include "flows/open_graph.hpp"

namespace flows {

/// Causal flow: each non-output vertex u is corrected by a single neighbor
/// g[u], and layer labels give the measurement rounds. Vertices in layer 0
/// are measured last; larger labels are measured earlier.
struct CausalFlow {
    std::vector<std::optional<Vertex>> g;  // nullopt exactly on outputs
    std::vector<int> layer;                // one label per vertex

    int depth() const {
        int d = 0;
        for (int l : layer) d = std::max(d, l);
        return d;
    }
};

/// Outcome of the round-based search. When no flow exists, `stuck` holds
/// the non-corrected vertices left when no round could make progress.
struct CausalFlowSearch {
    std::optional<CausalFlow> flow;
    VertexSet stuck;
};

/// Round-based search for a causal flow. Runs in O(k*n + m) for k outputs.
/// The returned flow is maximally delayed: outputs form layer 0 and every
/// other vertex is corrected in the earliest round able to correct it,
/// which also minimizes depth over all causal flows of the graph.
CausalFlowSearch find_causal_flow_detailed(const OpenGraph& g);

std::optional<CausalFlow> find_causal_flow(const OpenGraph& g);

}  // namespace flows
