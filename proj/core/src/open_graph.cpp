#include "flows/open_graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "flows/errors.hpp"

namespace flows {

namespace {

std::string quote_name(std::string_view s) {
    std::string r = "\"";
    r += s;
    r += "\"";
    return r;
}

}  // namespace

OpenGraph::OpenGraph(std::vector<std::string> names,
                     const std::vector<std::pair<Vertex, Vertex>>& edges,
                     const std::vector<Vertex>& inputs,
                     const std::vector<Vertex>& outputs)
    : names_(std::move(names)) {
    const int n = vertex_count();
    adj_.assign(static_cast<std::size_t>(n), {});
    inputs_ = VertexSet(n);
    outputs_ = VertexSet(n);

    for (Vertex v = 0; v < n; ++v) {
        auto [it, fresh] = index_.emplace(names_[static_cast<std::size_t>(v)], v);
        if (!fresh) throw std::invalid_argument("duplicate vertex name " + quote_name(it->first));
    }

    auto check_range = [n](Vertex v, const char* what) {
        if (v < 0 || v >= n)
            throw std::invalid_argument(std::string(what) + " index out of range");
    };

    std::set<std::pair<Vertex, Vertex>> seen;
    for (auto [a, b] : edges) {
        check_range(a, "edge endpoint");
        check_range(b, "edge endpoint");
        if (a == b)
            throw std::invalid_argument("self-loop on " + quote_name(names_[static_cast<std::size_t>(a)]));
        auto e = std::minmax(a, b);
        if (!seen.insert(e).second)
            throw std::invalid_argument("duplicate edge [" + quote_name(name(e.first)) + ", " +
                                        quote_name(name(e.second)) + "]");
        adj_[static_cast<std::size_t>(a)].push_back(b);
        adj_[static_cast<std::size_t>(b)].push_back(a);
    }
    edge_count_ = static_cast<long long>(seen.size());
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

    for (Vertex v : inputs) {
        check_range(v, "input");
        if (inputs_.test(v))
            throw std::invalid_argument("duplicate input " + quote_name(name(v)));
        inputs_.set(v);
    }
    for (Vertex v : outputs) {
        check_range(v, "output");
        if (outputs_.test(v))
            throw std::invalid_argument("duplicate output " + quote_name(name(v)));
        outputs_.set(v);
    }
}

Vertex OpenGraph::find_vertex(std::string_view name) const {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? -1 : it->second;
}

bool OpenGraph::adjacent(Vertex u, Vertex v) const {
    const auto& nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> OpenGraph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

OpenGraph OpenGraph::from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("malformed document: top level must be an object");

    auto field = [&doc](const char* key) -> const nlohmann::json& {
        auto it = doc.find(key);
        if (it == doc.end())
            throw ParseError(std::string("malformed document: missing field ") + quote_name(key));
        if (!it->is_array())
            throw ParseError(std::string("malformed document: field ") + quote_name(key) +
                             " must be an array");
        return *it;
    };

    const auto& jvertices = field("vertices");
    const auto& jedges = field("edges");
    const auto& jinputs = field("inputs");
    const auto& joutputs = field("outputs");

    std::vector<std::string> names;
    std::unordered_map<std::string, Vertex> index;
    names.reserve(jvertices.size());
    for (const auto& jv : jvertices) {
        if (!jv.is_string()) throw ParseError("malformed document: vertex entries must be strings");
        std::string name = jv.get<std::string>();
        if (index.count(name)) throw ParseError("duplicate vertex name " + quote_name(name));
        index.emplace(name, static_cast<Vertex>(names.size()));
        names.push_back(std::move(name));
    }

    auto resolve = [&index](const nlohmann::json& jname, const char* role) -> Vertex {
        if (!jname.is_string())
            throw ParseError(std::string("malformed document: ") + role + " entries must be strings");
        const std::string name = jname.get<std::string>();
        auto it = index.find(name);
        if (it == index.end())
            throw ParseError(std::string(role) + " " + quote_name(name) + " not declared");
        return it->second;
    };

    std::vector<std::pair<Vertex, Vertex>> edges;
    std::set<std::pair<Vertex, Vertex>> seen;
    edges.reserve(jedges.size());
    for (const auto& je : jedges) {
        if (!je.is_array() || je.size() != 2)
            throw ParseError("malformed document: edge entries must be two-element arrays");
        Vertex a = resolve(je[0], "edge endpoint");
        Vertex b = resolve(je[1], "edge endpoint");
        if (a == b) throw ParseError("self-loop on " + quote_name(names[static_cast<std::size_t>(a)]));
        auto e = std::minmax(a, b);
        if (!seen.insert(e).second)
            throw ParseError("duplicate edge [" + quote_name(names[static_cast<std::size_t>(e.first)]) +
                             ", " + quote_name(names[static_cast<std::size_t>(e.second)]) + "]");
        edges.emplace_back(a, b);
    }

    auto resolve_list = [&resolve](const nlohmann::json& jlist, const char* role) {
        std::vector<Vertex> vs;
        std::set<Vertex> seen_vs;
        vs.reserve(jlist.size());
        for (const auto& jname : jlist) {
            Vertex v = resolve(jname, role);
            if (!seen_vs.insert(v).second)
                throw ParseError(std::string("duplicate ") + role + " " +
                                 quote_name(jname.get<std::string>()));
            vs.push_back(v);
        }
        return vs;
    };

    return OpenGraph(std::move(names), edges, resolve_list(jinputs, "input"),
                     resolve_list(joutputs, "output"));
}

std::string OpenGraph::to_json() const {
    std::vector<std::string> sorted_names(names_);
    std::sort(sorted_names.begin(), sorted_names.end());

    std::vector<std::pair<std::string, std::string>> sorted_edges;
    sorted_edges.reserve(static_cast<std::size_t>(edge_count_));
    for (auto [u, v] : edges()) {
        std::string a = name(u);
        std::string b = name(v);
        if (b < a) std::swap(a, b);
        sorted_edges.emplace_back(std::move(a), std::move(b));
    }
    std::sort(sorted_edges.begin(), sorted_edges.end());

    auto sorted_set = [this](const VertexSet& s) {
        std::vector<std::string> out;
        s.for_each([&](Vertex v) { out.push_back(name(v)); });
        std::sort(out.begin(), out.end());
        return out;
    };

    nlohmann::ordered_json j;
    j["vertices"] = sorted_names;
    auto& je = j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : sorted_edges) je.push_back({a, b});
    j["inputs"] = sorted_set(inputs_);
    j["outputs"] = sorted_set(outputs_);
    return j.dump(2) + "\n";
}

VertexSet odd_neighborhood(const OpenGraph& g, const VertexSet& k) {
    if (k.size() != g.vertex_count())
        throw std::invalid_argument("odd_neighborhood: set universe does not match graph");
    VertexSet odd(g.vertex_count());
    k.for_each([&](Vertex u) {
        for (Vertex w : g.neighbors(u)) odd.flip(w);
    });
    return odd;
}

GammaSubmatrix gamma_submatrix(const OpenGraph& g, const VertexSet& row_set,
                               const VertexSet& col_set) {
    if (row_set.size() != g.vertex_count() || col_set.size() != g.vertex_count())
        throw std::invalid_argument("gamma_submatrix: set universe does not match graph");
    GammaSubmatrix sub;
    sub.row_vertices = row_set.to_vector();
    sub.col_vertices = col_set.to_vector();

    std::vector<int> col_pos(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t j = 0; j < sub.col_vertices.size(); ++j)
        col_pos[static_cast<std::size_t>(sub.col_vertices[j])] = static_cast<int>(j);

    sub.matrix = Gf2Matrix(static_cast<int>(sub.row_vertices.size()),
                           static_cast<int>(sub.col_vertices.size()));
    for (std::size_t i = 0; i < sub.row_vertices.size(); ++i) {
        for (Vertex w : g.neighbors(sub.row_vertices[i])) {
            const int j = col_pos[static_cast<std::size_t>(w)];
            if (j >= 0) sub.matrix.set(static_cast<int>(i), j, true);
        }
    }
    return sub;
}

}  // namespace flows
