#include "flows/gflow.hpp"

#include "flows/gf2.hpp"

namespace flows {

GFlowSearch find_gflow_detailed(const OpenGraph& graph) {
    const int n = graph.vertex_count();

    GFlow flow;
    flow.g.assign(static_cast<std::size_t>(n), VertexSet(n));
    flow.layer.assign(static_cast<std::size_t>(n), 0);

    VertexSet out = graph.outputs();
    int remaining = n - out.count();

    for (int round = 1; remaining > 0; ++round) {
        const VertexSet pending = out.complement();
        VertexSet correctors = out;
        correctors.and_not(graph.inputs());

        const GammaSubmatrix sub = gamma_submatrix(graph, pending, correctors);
        const int p = sub.matrix.rows();
        const auto solutions = solve_many(sub.matrix, Gf2Matrix::identity(p));

        int progressed = 0;
        for (int i = 0; i < p; ++i) {
            if (!solutions[static_cast<std::size_t>(i)]) continue;
            const Vertex u = sub.row_vertices[static_cast<std::size_t>(i)];
            VertexSet correction(n);
            solutions[static_cast<std::size_t>(i)]->for_each(
                [&](int j) { correction.set(sub.col_vertices[static_cast<std::size_t>(j)]); });
            flow.g[static_cast<std::size_t>(u)] = std::move(correction);
            flow.layer[static_cast<std::size_t>(u)] = round;
            ++progressed;
        }

        if (progressed == 0) return {std::nullopt, pending};

        for (int i = 0; i < p; ++i) {
            if (solutions[static_cast<std::size_t>(i)])
                out.set(sub.row_vertices[static_cast<std::size_t>(i)]);
        }
        remaining -= progressed;
    }

    return {std::move(flow), VertexSet(n)};
}

std::optional<GFlow> find_gflow(const OpenGraph& g) {
    return find_gflow_detailed(g).flow;
}

}  // namespace flows
