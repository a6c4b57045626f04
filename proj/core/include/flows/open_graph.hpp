#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "flows/bitset.hpp"
#include "flows/gf2.hpp"

namespace flows {

/// Undirected simple graph with two distinguished (possibly overlapping)
/// vertex subsets: inputs and outputs. Vertices are dense indices; names
/// are kept for serialization and reporting.
class OpenGraph {
public:
    OpenGraph() = default;

    /// Builds a graph from named vertices, index edges, and index input and
    /// output lists. Throws std::invalid_argument on duplicate names,
    /// out-of-range indices, self-loops, duplicate edges, or duplicate
    /// input and output entries.
    OpenGraph(std::vector<std::string> names,
              const std::vector<std::pair<Vertex, Vertex>>& edges,
              const std::vector<Vertex>& inputs,
              const std::vector<Vertex>& outputs);

    /// Parses the JSON document form:
    ///   {"vertices": [...], "edges": [[a, b], ...],
    ///    "inputs": [...], "outputs": [...]}
    /// Throws ParseError naming the offending token.
    static OpenGraph from_json(std::string_view text);

    /// Canonical serialization: vertices, edge endpoints, edges, inputs and
    /// outputs all sorted lexicographically. Equal graphs serialize to
    /// identical bytes.
    std::string to_json() const;

    int vertex_count() const { return static_cast<int>(names_.size()); }
    long long edge_count() const { return edge_count_; }

    const std::string& name(Vertex v) const { return names_[static_cast<std::size_t>(v)]; }
    /// Index for a name, -1 when absent.
    Vertex find_vertex(std::string_view name) const;

    /// Neighbor indices in ascending order.
    const std::vector<Vertex>& neighbors(Vertex v) const {
        return adj_[static_cast<std::size_t>(v)];
    }
    bool adjacent(Vertex u, Vertex v) const;

    const VertexSet& inputs() const { return inputs_; }
    const VertexSet& outputs() const { return outputs_; }

    /// Edge list with u < v, sorted by index pair.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<Vertex>> adj_;
    VertexSet inputs_;
    VertexSet outputs_;
    long long edge_count_ = 0;
    std::unordered_map<std::string, Vertex> index_;
};

/// Set of vertices with an odd number of neighbors inside k.
VertexSet odd_neighborhood(const OpenGraph& g, const VertexSet& k);

/// Adjacency submatrix restricted to the given row and column vertex sets,
/// with both orderings recorded (ascending vertex index).
struct GammaSubmatrix {
    Gf2Matrix matrix;
    std::vector<Vertex> row_vertices;
    std::vector<Vertex> col_vertices;
};

GammaSubmatrix gamma_submatrix(const OpenGraph& g, const VertexSet& row_set,
                               const VertexSet& col_set);

/// Deterministic random open graph: n vertices named v0..v{n-1}, exactly m
/// distinct edges sampled uniformly, then k_in inputs and k_out outputs
/// sampled uniformly and independently (the two sets may overlap). The same
/// arguments always produce the same graph on every platform. Throws
/// std::invalid_argument when the parameters are infeasible.
OpenGraph random_open_graph(int n, long long m, int k_in, int k_out, std::uint64_t seed);

}  // namespace flows
