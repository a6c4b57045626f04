#include "flows_cli/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flows_cli {

using flows::OpenGraph;
using flows::Vertex;

namespace {

std::vector<std::string> numbered_names(int n) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    return names;
}

}  // namespace

OpenGraph line_graph(int n) {
    if (n < 1) throw std::invalid_argument("line_graph: n must be at least 1");
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return OpenGraph(numbered_names(n), edges, {0}, {n - 1});
}

OpenGraph layered_graph(int n) {
    if (n < 1) throw std::invalid_argument("layered_graph: n must be at least 1");
    const int rows = (n + 2) / 3;
    const int total = rows * 3;
    auto at = [](int row, int col) { return row * 3 + col; };

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int r = 0; r + 1 < rows; ++r) {
        for (int c = 0; c < 3; ++c) edges.emplace_back(at(r, c), at(r + 1, c));
        if (r % 2 == 0) {
            for (int c = 0; c + 1 < 3; ++c) edges.emplace_back(at(r, c + 1), at(r + 1, c));
        }
    }

    std::vector<Vertex> inputs{at(0, 0), at(0, 1), at(0, 2)};
    std::vector<Vertex> outputs{at(rows - 1, 0), at(rows - 1, 1), at(rows - 1, 2)};
    return OpenGraph(numbered_names(total), edges, inputs, outputs);
}

OpenGraph random_family_graph(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_family_graph: n must be at least 1");
    const long long all = static_cast<long long>(n) * (n - 1) / 2;
    const long long m = std::min<long long>(3LL * n, all);
    const int k = std::max(1, n / 10);
    return flows::random_open_graph(n, m, k, k, seed);
}

}  // namespace flows_cli
