#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "flows/open_graph.hpp"

namespace flows {

namespace {

/// Uniform draw from [0, bound). std::mt19937_64 output is pinned by the
/// standard; the rejection step below is pinned here, so results are
/// identical across platforms and standard libraries.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    assert(bound > 0);
    if (bound == 1) return 0;
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = (max / bound) * bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

/// Uniform k-subset of {0..n-1} via partial Fisher-Yates.
std::vector<Vertex> sample_subset(std::mt19937_64& rng, int n, int k) {
    std::vector<Vertex> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < k; ++i) {
        const int j = i + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(n - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    pool.resize(static_cast<std::size_t>(k));
    return pool;
}

}  // namespace

OpenGraph random_open_graph(int n, long long m, int k_in, int k_out, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random_open_graph: n must be nonnegative");
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > max_edges)
        throw std::invalid_argument("random_open_graph: m must lie in [0, n*(n-1)/2]");
    if (k_in < 0 || k_in > n)
        throw std::invalid_argument("random_open_graph: k_in must lie in [0, n]");
    if (k_out < 0 || k_out > n)
        throw std::invalid_argument("random_open_graph: k_out must lie in [0, n]");

    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));

    std::mt19937_64 rng(seed);

    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::unordered_set<std::uint64_t> seen;
    while (static_cast<long long>(edges.size()) < m) {
        const int a = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(n)));
        int b = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(n - 1)));
        if (b >= a) ++b;
        const auto [u, v] = std::minmax(a, b);
        if (seen.insert(static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) +
                        static_cast<std::uint64_t>(v))
                .second)
            edges.emplace_back(u, v);
    }

    const std::vector<Vertex> inputs = sample_subset(rng, n, k_in);
    const std::vector<Vertex> outputs = sample_subset(rng, n, k_out);
    return OpenGraph(std::move(names), edges, inputs, outputs);
}

}  // namespace flows
