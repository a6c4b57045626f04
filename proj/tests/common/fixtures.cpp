#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace testsupport {

flows::OpenGraph staircase3() {
    const std::vector<std::string> names{"a0", "a1", "a2", "b0", "b1", "b2",
                                         "c0", "c1", "c2"};
    const std::vector<std::pair<flows::Vertex, flows::Vertex>> edges{
        {0, 3}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 6}, {4, 7}, {5, 8}};
    return flows::OpenGraph(names, edges, {0, 1, 2}, {6, 7, 8});
}

flows::OpenGraph cycle6_alternating() {
    const std::vector<std::string> names{"v1", "v2", "v3", "v4", "v5", "v6"};
    const std::vector<std::pair<flows::Vertex, flows::Vertex>> edges{
        {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}};
    return flows::OpenGraph(names, edges, {0, 2, 4}, {1, 3, 5});
}

flows::OpenGraph path_open_graph(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::pair<flows::Vertex, flows::Vertex>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return flows::OpenGraph(names, edges, {0}, {n - 1});
}

std::string data_dir() {
#ifdef FLOWS_TEST_DATA_DIR
    return FLOWS_TEST_DATA_DIR;
#else
    return "tests/data";
#endif
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace testsupport
