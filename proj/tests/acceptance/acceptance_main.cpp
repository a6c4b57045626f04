#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <flows/analysis.hpp>
#include <flows/bitset.hpp>
#include <flows/causal_flow.hpp>
#include <flows/gf2.hpp>
#include <flows/gflow.hpp>
#include <flows/open_graph.hpp>
#include <flows/oracle.hpp>
#include <flows_cli/families.hpp>
#include <flows_cli/flow_document.hpp>

#include "corpus.hpp"
#include "fixtures.hpp"

namespace {

using flows::Bitset;
using flows::CausalFlow;
using flows::GFlow;
using flows::Gf2Matrix;
using flows::LayerPartition;
using flows::OpenGraph;
using flows::Vertex;
using flows::VertexSet;

struct Criterion {
    std::string title;
    bool pass = true;
    long long checked = 0;
    std::string detail;

    void fail(const std::string& message) {
        if (pass) {
            pass = false;
            detail = message;
        }
    }
};

volatile long long g_sink = 0;

template <typename Fn>
double best_seconds(int reps, Fn&& fn) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < reps; ++i) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        const auto stop = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(stop - start).count());
    }
    return best;
}

std::string describe(const OpenGraph& g) {
    std::ostringstream os;
    os << "n=" << g.vertex_count() << " m=" << g.edge_count() << " edges[";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        if (!first) os << " ";
        first = false;
        os << g.name(u) << "-" << g.name(v);
    }
    os << "] I{";
    g.inputs().for_each([&](Vertex v) { os << " " << g.name(v); });
    os << " } O{";
    g.outputs().for_each([&](Vertex v) { os << " " << g.name(v); });
    os << " }";
    return os.str();
}

OpenGraph with_extra_outputs(const OpenGraph& g, const VertexSet& extra) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) names.push_back(g.name(v));
    VertexSet out = g.outputs();
    out |= extra;
    return OpenGraph(names, g.edges(), g.inputs().to_vector(), out.to_vector());
}

/// Merging the first correction round into the outputs must shift the
/// remaining layers down by exactly one.
template <typename Flow, typename Find>
std::optional<std::string> peel_shift_error(const OpenGraph& g, const Flow& flow, Find&& find) {
    const LayerPartition part = flows::layer_partition(flow);
    if (part.depth() < 1) return std::nullopt;
    const OpenGraph peeled = with_extra_outputs(g, part.layers[1]);
    const auto again = find(peeled);
    if (!again.has_value()) return "peeled graph lost its flow: " + describe(g);
    const LayerPartition shifted = flows::layer_partition(*again);
    if (shifted.depth() != part.depth() - 1)
        return "peeled depth did not drop by one: " + describe(g);
    VertexSet merged = part.layers[0];
    merged |= part.layers[1];
    if (shifted.layers[0] != merged) return "peeled layer 0 mismatch: " + describe(g);
    for (int k = 1; k <= shifted.depth(); ++k) {
        if (shifted.layers[static_cast<std::size_t>(k)] !=
            part.layers[static_cast<std::size_t>(k) + 1])
            return "peeled layer shift mismatch: " + describe(g);
    }
    return std::nullopt;
}

void check_instance(const OpenGraph& g, std::array<Criterion, 9>& c) {
    const int n = g.vertex_count();
    Criterion& existence = c[1];
    Criterion& optimality = c[2];
    Criterion& maximality = c[3];
    Criterion& dominance = c[4];
    Criterion& edge_bound = c[5];

    std::optional<CausalFlow> causal;
    std::optional<GFlow> gen;
    try {
        causal = flows::find_causal_flow(g);
        gen = flows::find_gflow(g);
        if (causal && !flows::verify_causal_flow(g, *causal).ok)
            existence.fail("causal output fails verifier: " + describe(g));
        if (gen && !flows::verify_gflow(g, *gen).ok)
            existence.fail("gflow output fails verifier: " + describe(g));
    } catch (const std::exception& e) {
        existence.fail(std::string("search threw: ") + e.what() + " on " + describe(g));
        return;
    }

    try {
        if (n <= 7) {
            const auto ref = flows::brute_force_causal_flow(g);
            ++existence.checked;
            if (ref.has_value() != causal.has_value()) {
                existence.fail("causal existence differs from oracle: " + describe(g));
            } else if (causal) {
                ++optimality.checked;
                if (causal->depth() != ref->min_depth)
                    optimality.fail("causal depth " + std::to_string(causal->depth()) +
                                    " != oracle " + std::to_string(ref->min_depth) + ": " +
                                    describe(g));
            }
            if (causal &&
                flows::exists_more_delayed_causal_flow(g, flows::layer_partition(*causal))) {
                optimality.fail("a more delayed causal flow exists: " + describe(g));
            }
        }
        if (n <= 6) {
            const auto ref = flows::brute_force_gflow(g);
            ++existence.checked;
            if (ref.has_value() != gen.has_value()) {
                existence.fail("gflow existence differs from oracle: " + describe(g));
            } else if (gen) {
                ++optimality.checked;
                if (gen->depth() != ref->min_depth)
                    optimality.fail("gflow depth " + std::to_string(gen->depth()) + " != oracle " +
                                    std::to_string(ref->min_depth) + ": " + describe(g));
            }
            if (gen && flows::exists_more_delayed_gflow(g, flows::layer_partition(*gen))) {
                optimality.fail("a more delayed gflow exists: " + describe(g));
            }
        }
    } catch (const std::exception& e) {
        existence.fail(std::string("oracle threw: ") + e.what() + " on " + describe(g));
    }

    try {
        if (causal) {
            ++maximality.checked;
            if (!flows::check_maximally_delayed(g, *causal).ok)
                maximality.fail("causal output not maximally delayed: " + describe(g));
            if (const auto err = peel_shift_error(g, *causal, flows::find_causal_flow))
                maximality.fail("causal " + *err);
        }
        if (gen) {
            ++maximality.checked;
            if (!flows::check_maximally_delayed(g, *gen).ok)
                maximality.fail("gflow output not maximally delayed: " + describe(g));
            if (const auto err = peel_shift_error(g, *gen, flows::find_gflow))
                maximality.fail("gflow " + *err);
        }
    } catch (const std::exception& e) {
        maximality.fail(std::string("maximal-delay check threw: ") + e.what() + " on " +
                        describe(g));
    }

    if (causal) {
        ++dominance.checked;
        if (!gen) {
            dominance.fail("causal flow without gflow: " + describe(g));
        } else {
            if (!flows::verify_gflow(g, flows::causal_to_gflow(*causal)).ok)
                dominance.fail("singleton embedding fails gflow verifier: " + describe(g));
            if (gen->depth() > causal->depth())
                dominance.fail("gflow depth exceeds causal depth: " + describe(g));
        }
    }

    ++edge_bound.checked;
    if (!flows::edge_bound_holds(g) && causal)
        edge_bound.fail("causal flow on a graph above the edge bound: " + describe(g));
}

void criterion_golden(Criterion& c) {
    const OpenGraph g = testsupport::staircase3();

    const auto causal = flows::find_causal_flow(g);
    if (!causal.has_value()) {
        c.fail("no causal flow on the staircase");
        return;
    }
    const std::vector<std::optional<Vertex>> want_g = {3, 4, 5, 6, 7, 8,
                                                       std::nullopt, std::nullopt, std::nullopt};
    if (causal->g != want_g) c.fail("causal corrections differ from the golden flow");
    if (causal->layer != std::vector<int>{4, 3, 2, 1, 1, 1, 0, 0, 0})
        c.fail("causal layers differ from the golden flow");
    if (causal->depth() != 4) c.fail("causal depth is not 4");
    if (!flows::verify_causal_flow(g, *causal).ok) c.fail("golden causal flow fails verifier");
    if (!flows::check_maximally_delayed(g, *causal).ok)
        c.fail("golden causal flow not maximally delayed");

    const auto gen = flows::find_gflow(g);
    if (!gen.has_value()) {
        c.fail("no gflow on the staircase");
        return;
    }
    const std::vector<Bitset> want_sets = {
        Bitset::of(9, {3, 4, 5}), Bitset::of(9, {4, 5}), Bitset::of(9, {5}),
        Bitset::of(9, {6}),       Bitset::of(9, {7}),    Bitset::of(9, {8}),
        Bitset(9),                Bitset(9),             Bitset(9)};
    if (gen->g != want_sets) c.fail("gflow corrections differ from the golden flow");
    if (gen->layer != std::vector<int>{2, 2, 2, 1, 1, 1, 0, 0, 0})
        c.fail("gflow layers differ from the golden flow");
    if (gen->depth() != 2) c.fail("gflow depth is not 2");
    if (!flows::verify_gflow(g, *gen).ok) c.fail("golden gflow fails verifier");
    if (!flows::check_maximally_delayed(g, *gen).ok)
        c.fail("golden gflow not maximally delayed");

    const double causal_time = best_seconds(20, [&] {
        g_sink = g_sink + flows::find_causal_flow(g)->depth();
    });
    const double gflow_time = best_seconds(20, [&] {
        g_sink = g_sink + flows::find_gflow(g)->depth();
    });
    if (causal_time >= 1e-3)
        c.fail("causal search took " + std::to_string(causal_time * 1e3) + " ms");
    if (gflow_time >= 1e-3)
        c.fail("gflow search took " + std::to_string(gflow_time * 1e3) + " ms");
    c.checked = 1;
}

void criterion_gf2(Criterion& c) {
    std::mt19937_64 rng(0x5eed5eedULL);
    for (int trial = 0; trial < 10000; ++trial) {
        const int rows = 1 + static_cast<int>(rng() % 64);
        const int cols = 1 + static_cast<int>(rng() % 64);
        Gf2Matrix a(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int col = 0; col < cols; ++col)
                if (rng() & 1) a.set(r, col, true);

        Bitset b(rows);
        const bool planted = (trial & 1) != 0;
        if (planted) {
            Bitset x(cols);
            for (int col = 0; col < cols; ++col)
                if (rng() & 1) x.set(col);
            b = flows::mat_vec_mul(a, x);
        } else {
            for (int r = 0; r < rows; ++r)
                if (rng() & 1) b.set(r);
        }

        Gf2Matrix rhs(rows, 1);
        b.for_each([&](int r) { rhs.set(r, 0, true); });
        const auto sols = flows::solve_many(a, rhs);
        ++c.checked;
        if (planted && !sols[0].has_value()) {
            c.fail("consistent system reported unsolvable at trial " + std::to_string(trial));
            return;
        }
        if (sols[0].has_value() && flows::mat_vec_mul(a, *sols[0]) != b) {
            c.fail("returned solution fails A*x = b at trial " + std::to_string(trial));
            return;
        }
    }

    for (int rows = 1; rows <= 4; ++rows) {
        for (int cols = 1; cols <= 4; ++cols) {
            const std::uint32_t matrices = std::uint32_t{1} << (rows * cols);
            const int vectors = 1 << rows;
            const int points = 1 << cols;
            for (std::uint32_t bits = 0; bits < matrices; ++bits) {
                Gf2Matrix a(rows, cols);
                std::array<std::uint32_t, 4> row_mask{};
                for (int r = 0; r < rows; ++r) {
                    for (int col = 0; col < cols; ++col) {
                        if (bits >> (r * cols + col) & 1U) {
                            a.set(r, col, true);
                            row_mask[static_cast<std::size_t>(r)] |= 1U << col;
                        }
                    }
                }
                Gf2Matrix rhs(rows, vectors);
                for (int b = 0; b < vectors; ++b)
                    for (int r = 0; r < rows; ++r)
                        if (b >> r & 1) rhs.set(r, b, true);
                const auto sols = flows::solve_many(a, rhs);
                for (int b = 0; b < vectors; ++b) {
                    bool solvable = false;
                    for (int x = 0; x < points && !solvable; ++x) {
                        int image = 0;
                        for (int r = 0; r < rows; ++r) {
                            image |= (__builtin_popcount(row_mask[static_cast<std::size_t>(r)] &
                                                         static_cast<std::uint32_t>(x)) &
                                      1)
                                     << r;
                        }
                        solvable = image == b;
                    }
                    ++c.checked;
                    if (sols[static_cast<std::size_t>(b)].has_value() != solvable) {
                        c.fail("consistency verdict differs from exhaustive search at " +
                               std::to_string(rows) + "x" + std::to_string(cols));
                        return;
                    }
                }
            }
        }
    }
}

void criterion_scaling(Criterion& c) {
    const auto sweep_start = std::chrono::steady_clock::now();
    std::vector<double> causal_times;
    for (int n : {100000, 1000000}) {
        const OpenGraph g = flows_cli::line_graph(n);
        causal_times.push_back(best_seconds(3, [&] {
            const auto flow = flows::find_causal_flow(g);
            g_sink = g_sink + (flow ? flow->depth() : -1);
        }));
    }
    const double causal_sweep =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - sweep_start).count();

    const double causal_ratio = causal_times[1] / std::max(causal_times[0], 1e-4);
    if (causal_ratio > 20.0)
        c.fail("causal time grew " + std::to_string(causal_ratio) + "x for 10x vertices");
    if (causal_sweep >= 60.0)
        c.fail("causal sweep took " + std::to_string(causal_sweep) + " s");

    const auto gflow_start = std::chrono::steady_clock::now();
    std::vector<double> gflow_times;
    for (int n : {100, 200, 400}) {
        const OpenGraph g = flows_cli::random_family_graph(n, 1);
        gflow_times.push_back(best_seconds(5, [&] {
            const auto flow = flows::find_gflow(g);
            g_sink = g_sink + (flow ? flow->depth() : -1);
        }));
    }
    const double gflow_sweep =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - gflow_start).count();

    for (std::size_t i = 1; i < gflow_times.size(); ++i) {
        const double ratio = gflow_times[i] / std::max(gflow_times[i - 1], 5e-5);
        if (ratio > 48.0)
            c.fail("gflow time grew " + std::to_string(ratio) + "x for 2x vertices");
    }
    if (gflow_sweep >= 60.0) c.fail("gflow sweep took " + std::to_string(gflow_sweep) + " s");
    c.checked = static_cast<long long>(causal_times.size() + gflow_times.size());
}

std::optional<std::string> run_cli(const std::string& args, std::string* output) {
    const std::string command = std::string(FLOWS_BIN_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return "popen failed";
    char buffer[4096];
    std::size_t got = 0;
    output->clear();
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output->append(buffer, got);
    const int status = pclose(pipe);
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0)
        return "command exited abnormally: " + args;
    return std::nullopt;
}

void criterion_determinism(Criterion& c) {
    const OpenGraph g = testsupport::staircase3();
    const std::string causal_doc =
        flows_cli::FlowDocument::from_causal(g, flows::find_causal_flow(g)).to_json();
    const std::string gflow_doc =
        flows_cli::FlowDocument::from_gflow(g, flows::find_gflow(g)).to_json();
    ++c.checked;
    if (causal_doc !=
        flows_cli::FlowDocument::from_causal(g, flows::find_causal_flow(g)).to_json())
        c.fail("causal document changed between runs");
    ++c.checked;
    if (gflow_doc != flows_cli::FlowDocument::from_gflow(g, flows::find_gflow(g)).to_json())
        c.fail("gflow document changed between runs");

    ++c.checked;
    const std::string generated = flows::random_open_graph(40, 120, 5, 5, 2026).to_json();
    if (generated != flows::random_open_graph(40, 120, 5, 5, 2026).to_json())
        c.fail("generated graph changed between runs");

    const std::string graph_path = testsupport::data_dir() + "/staircase3.json";
    std::string first;
    std::string second;
    ++c.checked;
    if (const auto err = run_cli("find --kind causal " + graph_path, &first)) {
        c.fail(*err);
        return;
    }
    if (const auto err = run_cli("find --kind causal " + graph_path, &second)) {
        c.fail(*err);
        return;
    }
    if (first != second) c.fail("CLI find output changed between runs");
    if (first != causal_doc) c.fail("CLI find output differs from the library document");

    ++c.checked;
    if (const auto err = run_cli("gen --n 40 --m 120 --inputs 5 --outputs 5 --seed 2026", &first)) {
        c.fail(*err);
        return;
    }
    if (const auto err =
            run_cli("gen --n 40 --m 120 --inputs 5 --outputs 5 --seed 2026", &second)) {
        c.fail(*err);
        return;
    }
    if (first != second) c.fail("CLI gen output changed between runs");
    if (first != generated) c.fail("CLI gen output differs from the library serialization");
}

}  // namespace

int main() {
    std::array<Criterion, 9> c{{
        {"golden staircase instance"},
        {"existence matches the exhaustive oracle"},
        {"depth optimality and no more delayed flow"},
        {"maximally delayed structure and peel consistency"},
        {"gflow dominates causal flow"},
        {"edge bound implies causal absence"},
        {"GF(2) solver against multiplication and exhaustive search"},
        {"scaling stays within the expected growth"},
        {"byte identical reruns"},
    }};

    criterion_golden(c[0]);

    testsupport::for_each_connected_instance(1, 5,
                                             [&](const OpenGraph& g) { check_instance(g, c); });
    for (const OpenGraph& g : testsupport::random_instances(1000, 7, 0xC0FFEEULL))
        check_instance(g, c);
    for (const OpenGraph& g : testsupport::random_instances(1000, 6, 0xFACADEULL))
        check_instance(g, c);

    criterion_gf2(c[6]);
    criterion_scaling(c[7]);
    criterion_determinism(c[8]);

    int failures = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const bool ok = c[i].pass;
        failures += ok ? 0 : 1;
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << c[i].title << " (checks: "
                  << c[i].checked << ")";
        if (!ok) std::cout << " -- " << c[i].detail;
        std::cout << "\n";
    }
    std::cout.flush();
    return failures;
}
