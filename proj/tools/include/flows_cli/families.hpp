#pragma once

#include <cstdint>

#include <flows/open_graph.hpp>

namespace flows_cli {

/// Path v0 - v1 - ... - v{n-1} with input {v0} and output {v{n-1}}.
/// Requires n >= 1.
flows::OpenGraph line_graph(int n);

/// Rows of three vertices; every vertex connects straight down to the next
/// row, and every second row gap adds the shifted diagonal band. Inputs are
/// the first row, outputs the last. n is rounded up to a multiple of 3;
/// requires n >= 1. Always admits a causal flow.
flows::OpenGraph layered_graph(int n);

/// Random family used for benchmarking: n vertices, min(3n, n(n-1)/2)
/// edges, max(1, n/10) inputs and as many outputs.
flows::OpenGraph random_family_graph(int n, std::uint64_t seed);

}  // namespace flows_cli
