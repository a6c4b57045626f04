#pragma once

#include <string>

#include <flows/open_graph.hpp>

namespace testsupport {

/// Three-row staircase: inputs a0,a1,a2 on top, outputs c0,c1,c2 on the
/// bottom, with the shifted diagonal band between the first two rows. The
/// golden instance for both flow kinds: unique causal flow g(ai)=bi,
/// g(bi)=ci with layers c*=0, b*=1, a2=2, a1=3, a0=4, and generalized flow
/// g(a0)={b0,b1,b2}, g(a1)={b1,b2}, g(a2)={b2}, g(bi)={ci} with layers
/// c*=0, b*=1, a*=2.
flows::OpenGraph staircase3();

/// Six-cycle v1..v6 with alternating inputs {v1,v3,v5} and outputs
/// {v2,v4,v6}. No causal flow and no generalized flow exist.
flows::OpenGraph cycle6_alternating();

/// Path v0 - ... - v{n-1} with input {v0}, output {v{n-1}}.
flows::OpenGraph path_open_graph(int n);

/// Directory holding the committed JSON data files, if compiled in.
std::string data_dir();

std::string read_file(const std::string& path);

}  // namespace testsupport
