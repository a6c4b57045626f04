#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <flows/causal_flow.hpp>
#include <flows/gflow.hpp>
#include <flows/open_graph.hpp>

namespace flows_cli {

/// Flow search result in document form, the JSON exchanged by the command
/// line tool:
///   {"kind": "causal"|"gflow", "exists": bool,
///    "g": {name: [names]}, "layer": {name: int}, "depth": int}
/// g, layer and depth are omitted when exists is false. Serialization is
/// byte-deterministic: fixed key order, map keys sorted by name.
struct FlowDocument {
    std::string kind;
    bool exists = false;
    std::map<std::string, std::vector<std::string>> g;
    std::map<std::string, int> layer;
    int depth = 0;

    static FlowDocument from_causal(const flows::OpenGraph& graph,
                                    const std::optional<flows::CausalFlow>& flow);
    static FlowDocument from_gflow(const flows::OpenGraph& graph,
                                   const std::optional<flows::GFlow>& flow);

    /// Throws flows::ParseError on malformed documents.
    static FlowDocument from_json(std::string_view text);
    std::string to_json() const;

    /// Rebuild index-based flows against a graph. Throw flows::StructureError
    /// when the document does not fit the graph (unknown vertex, missing
    /// layer entry, non-singleton causal correction, exists=false).
    flows::CausalFlow to_causal(const flows::OpenGraph& graph) const;
    flows::GFlow to_gflow(const flows::OpenGraph& graph) const;
};

}  // namespace flows_cli
