#include "flows_cli/flow_document.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include <flows/errors.hpp>

namespace flows_cli {

using flows::OpenGraph;
using flows::ParseError;
using flows::StructureError;
using flows::Vertex;

FlowDocument FlowDocument::from_causal(const OpenGraph& graph,
                                       const std::optional<flows::CausalFlow>& flow) {
    FlowDocument doc;
    doc.kind = "causal";
    doc.exists = flow.has_value();
    if (!flow) return doc;
    for (Vertex u = 0; u < graph.vertex_count(); ++u) {
        if (flow->g[static_cast<std::size_t>(u)])
            doc.g[graph.name(u)] = {graph.name(*flow->g[static_cast<std::size_t>(u)])};
        doc.layer[graph.name(u)] = flow->layer[static_cast<std::size_t>(u)];
    }
    doc.depth = flow->depth();
    return doc;
}

FlowDocument FlowDocument::from_gflow(const OpenGraph& graph,
                                      const std::optional<flows::GFlow>& flow) {
    FlowDocument doc;
    doc.kind = "gflow";
    doc.exists = flow.has_value();
    if (!flow) return doc;
    for (Vertex u = 0; u < graph.vertex_count(); ++u) {
        const flows::VertexSet& corr = flow->g[static_cast<std::size_t>(u)];
        if (corr.any()) {
            std::vector<std::string> names;
            corr.for_each([&](Vertex w) { names.push_back(graph.name(w)); });
            std::sort(names.begin(), names.end());
            doc.g[graph.name(u)] = std::move(names);
        }
        doc.layer[graph.name(u)] = flow->layer[static_cast<std::size_t>(u)];
    }
    doc.depth = flow->depth();
    return doc;
}

FlowDocument FlowDocument::from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed flow document: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("malformed flow document: top level must be an object");

    FlowDocument doc;
    if (!j.contains("kind") || !j["kind"].is_string())
        throw ParseError("malformed flow document: missing string field \"kind\"");
    doc.kind = j["kind"].get<std::string>();
    if (doc.kind != "causal" && doc.kind != "gflow")
        throw ParseError("malformed flow document: kind must be \"causal\" or \"gflow\", got \"" +
                         doc.kind + "\"");
    if (!j.contains("exists") || !j["exists"].is_boolean())
        throw ParseError("malformed flow document: missing boolean field \"exists\"");
    doc.exists = j["exists"].get<bool>();
    if (!doc.exists) return doc;

    if (!j.contains("g") || !j["g"].is_object())
        throw ParseError("malformed flow document: missing object field \"g\"");
    for (const auto& [name, value] : j["g"].items()) {
        if (!value.is_array())
            throw ParseError("malformed flow document: correction for \"" + name +
                             "\" must be an array");
        std::vector<std::string> targets;
        for (const auto& t : value) {
            if (!t.is_string())
                throw ParseError("malformed flow document: correction entries for \"" + name +
                                 "\" must be strings");
            targets.push_back(t.get<std::string>());
        }
        doc.g[name] = std::move(targets);
    }

    if (!j.contains("layer") || !j["layer"].is_object())
        throw ParseError("malformed flow document: missing object field \"layer\"");
    for (const auto& [name, value] : j["layer"].items()) {
        if (!value.is_number_integer())
            throw ParseError("malformed flow document: layer for \"" + name +
                             "\" must be an integer");
        doc.layer[name] = value.get<int>();
    }

    if (!j.contains("depth") || !j["depth"].is_number_integer())
        throw ParseError("malformed flow document: missing integer field \"depth\"");
    doc.depth = j["depth"].get<int>();
    return doc;
}

std::string FlowDocument::to_json() const {
    nlohmann::ordered_json j;
    j["kind"] = kind;
    j["exists"] = exists;
    if (exists) {
        auto& jg = j["g"] = nlohmann::ordered_json::object();
        for (const auto& [name, targets] : g) jg[name] = targets;
        auto& jl = j["layer"] = nlohmann::ordered_json::object();
        for (const auto& [name, l] : layer) jl[name] = l;
        j["depth"] = depth;
    }
    return j.dump(2) + "\n";
}

namespace {

Vertex resolve(const OpenGraph& graph, const std::string& name, const char* where) {
    const Vertex v = graph.find_vertex(name);
    if (v < 0)
        throw StructureError(std::string("unknown vertex \"") + name + "\" in flow document " +
                             where);
    return v;
}

std::vector<int> resolve_layers(const OpenGraph& graph,
                                const std::map<std::string, int>& layer) {
    for (const auto& [name, value] : layer) {
        (void)value;
        resolve(graph, name, "layer map");
    }
    std::vector<int> out(static_cast<std::size_t>(graph.vertex_count()), 0);
    for (Vertex v = 0; v < graph.vertex_count(); ++v) {
        auto it = layer.find(graph.name(v));
        if (it == layer.end())
            throw StructureError("flow document has no layer entry for \"" + graph.name(v) + "\"");
        out[static_cast<std::size_t>(v)] = it->second;
    }
    return out;
}

void require_exists(const FlowDocument& doc) {
    if (!doc.exists)
        throw StructureError("flow document is marked exists=false and carries no flow");
}

void require_depth_matches(const std::vector<int>& layers, int depth) {
    const int deepest = layers.empty() ? 0 : *std::max_element(layers.begin(), layers.end());
    if (depth != deepest)
        throw StructureError("flow document depth " + std::to_string(depth) +
                             " does not match its deepest layer " + std::to_string(deepest));
}

}  // namespace

flows::CausalFlow FlowDocument::to_causal(const OpenGraph& graph) const {
    require_exists(*this);
    flows::CausalFlow flow;
    flow.g.assign(static_cast<std::size_t>(graph.vertex_count()), std::nullopt);
    for (const auto& [name, targets] : g) {
        const Vertex u = resolve(graph, name, "correction map");
        if (targets.size() != 1)
            throw StructureError("causal correction for \"" + name +
                                 "\" must name exactly one vertex");
        flow.g[static_cast<std::size_t>(u)] = resolve(graph, targets.front(), "correction map");
    }
    flow.layer = resolve_layers(graph, layer);
    require_depth_matches(flow.layer, depth);
    return flow;
}

flows::GFlow FlowDocument::to_gflow(const OpenGraph& graph) const {
    require_exists(*this);
    flows::GFlow flow;
    flow.g.assign(static_cast<std::size_t>(graph.vertex_count()),
                  flows::VertexSet(graph.vertex_count()));
    for (const auto& [name, targets] : g) {
        const Vertex u = resolve(graph, name, "correction map");
        for (const std::string& t : targets)
            flow.g[static_cast<std::size_t>(u)].set(resolve(graph, t, "correction map"));
    }
    flow.layer = resolve_layers(graph, layer);
    require_depth_matches(flow.layer, depth);
    return flow;
}

}  // namespace flows_cli
