#include "flows_cli/dot_export.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace flows_cli {

using flows::OpenGraph;
using flows::Vertex;

namespace {

std::string dot_id(const std::string& name) {
    std::string out = "\"";
    for (char c : name) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace

std::string dot_export(const OpenGraph& graph, const FlowDocument* flow) {
    const bool with_flow = flow != nullptr && flow->exists;
    std::ostringstream os;
    os << "graph flows {\n";
    os << "  rankdir=TB;\n";
    os << "  node [shape=circle];\n";

    for (Vertex v = 0; v < graph.vertex_count(); ++v) {
        const bool in = graph.inputs().test(v);
        const bool out = graph.outputs().test(v);
        if (out)
            os << "  " << dot_id(graph.name(v)) << " [shape=doublecircle];\n";
        else if (in)
            os << "  " << dot_id(graph.name(v)) << " [shape=box];\n";
    }

    if (with_flow) {
        // One rank group per layer, deepest (earliest measured) first.
        std::map<int, std::vector<std::string>, std::greater<>> by_layer;
        for (const auto& [name, layer] : flow->layer) by_layer[layer].push_back(name);
        for (auto& [layer, names] : by_layer) {
            std::sort(names.begin(), names.end());
            os << "  { rank=same;";
            for (const auto& name : names) os << " " << dot_id(name) << ";";
            os << " }\n";
        }
    }

    for (auto [u, v] : graph.edges())
        os << "  " << dot_id(graph.name(u)) << " -- " << dot_id(graph.name(v)) << ";\n";

    if (with_flow) {
        for (const auto& [name, targets] : flow->g) {
            for (const auto& target : targets) {
                os << "  " << dot_id(name) << " -- " << dot_id(target)
                   << " [dir=forward, style=bold, color=\"#1f77b4\"];\n";
            }
        }
    }

    os << "}\n";
    return os.str();
}

}  // namespace flows_cli
