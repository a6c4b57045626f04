#pragma once

#include <optional>
#include <vector>

#include "flows/bitset.hpp"
#include "flows/open_graph.hpp"

namespace flows {

/// Generalized flow: each non-output vertex u carries a correction set g[u]
/// of non-input vertices, and layer labels give the measurement rounds.
/// Vertices in layer 0 are measured last; larger labels are measured
/// earlier.
struct GFlow {
    std::vector<VertexSet> g;  // empty exactly on outputs
    std::vector<int> layer;    // one label per vertex

    int depth() const {
        int d = 0;
        for (int l : layer) d = std::max(d, l);
        return d;
    }
};

/// Outcome of the round-based search. When no flow exists, `stuck` holds
/// the non-corrected vertices left when no round could make progress.
struct GFlowSearch {
    std::optional<GFlow> flow;
    VertexSet stuck;
};

/// Round-based search for a generalized flow. Each round solves, over
/// GF(2) and with one shared elimination, the systems asking which
/// still-uncorrected vertices are the unique odd neighbor of some subset of
/// already-corrected non-input vertices. Free variables are fixed to zero,
/// so correction sets are deterministic. The returned flow is maximally
/// delayed, which also minimizes depth over all generalized flows of the
/// graph.
GFlowSearch find_gflow_detailed(const OpenGraph& g);

std::optional<GFlow> find_gflow(const OpenGraph& g);

}  // namespace flows
