#pragma once

#include <string>

#include <flows/open_graph.hpp>

#include "flows_cli/flow_document.hpp"

namespace flows_cli {

/// Graphviz rendering of an open graph: inputs as boxes, outputs as double
/// circles, undirected edges as plain lines. With a flow, vertices of each
/// layer share a rank group and every correction is overlaid as a directed
/// bold edge from the corrected vertex to its correctors.
std::string dot_export(const flows::OpenGraph& graph, const FlowDocument* flow = nullptr);

}  // namespace flows_cli
