#include "flows_cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <flows/analysis.hpp>
#include <flows/causal_flow.hpp>
#include <flows/errors.hpp>
#include <flows/gflow.hpp>
#include <flows/open_graph.hpp>
#include <flows/oracle.hpp>

#include "flows_cli/dot_export.hpp"
#include "flows_cli/families.hpp"
#include "flows_cli/flow_document.hpp"

namespace flows_cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& output_path, const std::string& content) {
    if (output_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file " + output_path);
    out << content;
}

int fail(const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
}

flows::OpenGraph load_graph(const std::string& path) {
    return flows::OpenGraph::from_json(read_file(path));
}

}  // namespace

int cmd_find(const FindOptions& opt) {
    try {
        const flows::OpenGraph graph = load_graph(opt.graph_path);
        FlowDocument doc;
        if (opt.kind == Kind::causal)
            doc = FlowDocument::from_causal(graph, flows::find_causal_flow(graph));
        else
            doc = FlowDocument::from_gflow(graph, flows::find_gflow(graph));
        write_output(opt.output_path, doc.to_json());
        return doc.exists ? 0 : 2;
    } catch (const std::exception& e) {
        return fail(e);
    }
}

int cmd_verify(const VerifyOptions& opt) {
    try {
        const flows::OpenGraph graph = load_graph(opt.graph_path);
        const FlowDocument doc = FlowDocument::from_json(read_file(opt.flow_path));
        flows::VerifyReport report;
        if (opt.kind == Kind::causal)
            report = flows::verify_causal_flow(graph, doc.to_causal(graph));
        else
            report = flows::verify_gflow(graph, doc.to_gflow(graph));
        write_output(opt.output_path, report.to_json(graph));
        return report.ok ? 0 : 2;
    } catch (const std::exception& e) {
        return fail(e);
    }
}

int cmd_gen(const GenOptions& opt) {
    try {
        const flows::OpenGraph graph =
            flows::random_open_graph(opt.n, opt.m, opt.k_in, opt.k_out, opt.seed);
        write_output(opt.output_path, graph.to_json());
        return 0;
    } catch (const std::exception& e) {
        return fail(e);
    }
}

int cmd_oracle(const OracleOptions& opt) {
    try {
        const flows::OpenGraph graph = load_graph(opt.graph_path);
        FlowDocument doc;
        if (opt.kind == Kind::causal) {
            const int guard = opt.guard >= 0 ? opt.guard : 7;
            const auto result = flows::brute_force_causal_flow(graph, guard);
            doc = FlowDocument::from_causal(
                graph, result ? std::optional<flows::CausalFlow>(result->flow) : std::nullopt);
        } else {
            const int guard = opt.guard >= 0 ? opt.guard : 6;
            const auto result = flows::brute_force_gflow(graph, guard);
            doc = FlowDocument::from_gflow(
                graph, result ? std::optional<flows::GFlow>(result->flow) : std::nullopt);
        }
        write_output(opt.output_path, doc.to_json());
        return doc.exists ? 0 : 2;
    } catch (const std::exception& e) {
        return fail(e);
    }
}

int cmd_dot(const DotOptions& opt) {
    try {
        const flows::OpenGraph graph = load_graph(opt.graph_path);
        if (opt.flow_path.empty()) {
            write_output(opt.output_path, dot_export(graph));
            return 0;
        }
        const FlowDocument doc = FlowDocument::from_json(read_file(opt.flow_path));
        // Surface structural mismatches before rendering.
        if (doc.kind == "causal")
            (void)doc.to_causal(graph);
        else
            (void)doc.to_gflow(graph);
        write_output(opt.output_path, dot_export(graph, &doc));
        return 0;
    } catch (const std::exception& e) {
        return fail(e);
    }
}

int cmd_bench(const BenchOptions& opt) {
    try {
        std::vector<int> sizes = opt.sizes;
        std::sort(sizes.begin(), sizes.end());

        std::ostringstream csv;
        csv << "n,m,k,wall_time_seconds,depth\n";
        for (int n : sizes) {
            flows::OpenGraph graph;
            if (opt.family == "line")
                graph = line_graph(n);
            else if (opt.family == "layered")
                graph = layered_graph(n);
            else if (opt.family == "random")
                graph = random_family_graph(n, opt.seed);
            else
                throw std::invalid_argument("unknown family \"" + opt.family + "\"");

            int depth = -1;
            const auto start = std::chrono::steady_clock::now();
            if (opt.kind == Kind::causal) {
                const auto flow = flows::find_causal_flow(graph);
                if (flow) depth = flow->depth();
            } else {
                const auto flow = flows::find_gflow(graph);
                if (flow) depth = flow->depth();
            }
            const auto stop = std::chrono::steady_clock::now();
            const double seconds = std::chrono::duration<double>(stop - start).count();

            csv << graph.vertex_count() << ',' << graph.edge_count() << ','
                << graph.outputs().count() << ',';
            csv.setf(std::ios::fixed);
            csv.precision(9);
            csv << seconds << ',' << depth << '\n';
            csv.unsetf(std::ios::fixed);
        }
        write_output(opt.output_path, csv.str());
        return 0;
    } catch (const std::exception& e) {
        return fail(e);
    }
}

}  // namespace flows_cli
