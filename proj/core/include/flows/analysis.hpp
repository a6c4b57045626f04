#pragma once

#include <string>
#include <vector>

#include "flows/bitset.hpp"
#include "flows/causal_flow.hpp"
#include "flows/gflow.hpp"
#include "flows/open_graph.hpp"

namespace flows {

/// One failed check. Conditions: "C1" (corrections come later), "C2" (odd
/// or plain neighbors of a correction come later or are the vertex itself),
/// "C3" (the vertex sees its own correction), "domain" (exactly the
/// non-outputs carry corrections), "range" (corrections avoid inputs),
/// "layer0" and "front" (maximal-delay structure).
struct Violation {
    std::string condition;
    std::vector<Vertex> witness;
};

struct VerifyReport {
    bool ok = true;
    std::vector<Violation> violations;

    /// {"ok": bool, "violations": [{"condition": ..., "witness": [names]}]}
    std::string to_json(const OpenGraph& g) const;
};

/// Checks the causal flow conditions plus domain and range. Throws
/// std::invalid_argument when the flow arrays do not match the graph size.
VerifyReport verify_causal_flow(const OpenGraph& g, const CausalFlow& f);

/// Checks the generalized flow conditions plus domain and range.
VerifyReport verify_gflow(const OpenGraph& g, const GFlow& f);

/// Layers as explicit vertex sets, index 0 first. Built from dense labels;
/// a negative label or a skipped level throws std::invalid_argument.
struct LayerPartition {
    std::vector<VertexSet> layers;

    int depth() const { return static_cast<int>(layers.size()) - 1; }
    int universe_size() const { return layers.empty() ? 0 : layers.front().size(); }
    /// Prefix sums of layer sizes.
    std::vector<int> cumulative() const;
};

LayerPartition layer_partition(const std::vector<int>& labels);
LayerPartition layer_partition(const CausalFlow& f);
LayerPartition layer_partition(const GFlow& f);

enum class DelayComparison { more, less, equal, incomparable };

/// Compares cumulative layer sizes of a against b, treating every index
/// past a partition's depth as the full vertex count. `more` means a is
/// strictly more delayed than b. Throws std::invalid_argument when the
/// partitions cover different universes.
DelayComparison is_more_delayed(const LayerPartition& a, const LayerPartition& b);

/// Checks that a valid flow is maximally delayed: layer 0 must be exactly
/// the outputs ("layer0" violations) and every later layer must equal the
/// set of vertices that become correctable at that round ("front"
/// violations). Witnesses are the symmetric difference per level. Throws
/// std::invalid_argument when the flow fails its verifier.
VerifyReport check_maximally_delayed(const OpenGraph& g, const CausalFlow& f);
VerifyReport check_maximally_delayed(const OpenGraph& g, const GFlow& f);

/// Reads a causal flow as a generalized flow with singleton corrections.
GFlow causal_to_gflow(const CausalFlow& f);

/// True when the edge count is at most (n-1)*k - k*(k-1)/2 for k outputs.
/// Graphs above the bound have no causal flow.
bool edge_bound_holds(const OpenGraph& g);

}  // namespace flows
