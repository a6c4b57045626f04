#include <map>
#include <string>

#include <CLI11.hpp>

#include "flows_cli/commands.hpp"

namespace {

const std::map<std::string, flows_cli::Kind> kKinds{
    {"causal", flows_cli::Kind::causal},
    {"gflow", flows_cli::Kind::gflow},
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"causal flow and generalized flow toolkit for open graphs"};
    app.require_subcommand(1);
    int rc = 0;

    flows_cli::FindOptions find_opt;
    auto* find = app.add_subcommand("find", "search for a flow and print it as JSON");
    find->add_option("--kind", find_opt.kind, "flow kind")
        ->required()
        ->transform(CLI::CheckedTransformer(kKinds, CLI::ignore_case));
    find->add_option("graph", find_opt.graph_path, "graph JSON file")->required();
    find->add_option("-o,--output", find_opt.output_path, "write to file instead of stdout");
    find->callback([&] { rc = flows_cli::cmd_find(find_opt); });

    flows_cli::VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "check a flow document against a graph");
    verify->add_option("--kind", verify_opt.kind, "flow kind")
        ->required()
        ->transform(CLI::CheckedTransformer(kKinds, CLI::ignore_case));
    verify->add_option("graph", verify_opt.graph_path, "graph JSON file")->required();
    verify->add_option("flow", verify_opt.flow_path, "flow document JSON file")->required();
    verify->add_option("-o,--output", verify_opt.output_path, "write to file instead of stdout");
    verify->callback([&] { rc = flows_cli::cmd_verify(verify_opt); });

    flows_cli::GenOptions gen_opt;
    auto* gen = app.add_subcommand("gen", "generate a deterministic random open graph");
    gen->add_option("--n", gen_opt.n, "vertex count")->required();
    gen->add_option("--m", gen_opt.m, "edge count")->required();
    gen->add_option("--inputs", gen_opt.k_in, "input count")->required();
    gen->add_option("--outputs", gen_opt.k_out, "output count")->required();
    gen->add_option("--seed", gen_opt.seed, "random seed")->default_val(0);
    gen->add_option("-o,--output", gen_opt.output_path, "write to file instead of stdout");
    gen->callback([&] { rc = flows_cli::cmd_gen(gen_opt); });

    flows_cli::OracleOptions oracle_opt;
    auto* oracle = app.add_subcommand("oracle", "exhaustive reference search (small graphs)");
    oracle->add_option("--kind", oracle_opt.kind, "flow kind")
        ->required()
        ->transform(CLI::CheckedTransformer(kKinds, CLI::ignore_case));
    oracle->add_option("--guard", oracle_opt.guard,
                       "largest vertex count accepted (default 7 causal, 6 gflow)");
    oracle->add_option("graph", oracle_opt.graph_path, "graph JSON file")->required();
    oracle->add_option("-o,--output", oracle_opt.output_path, "write to file instead of stdout");
    oracle->callback([&] { rc = flows_cli::cmd_oracle(oracle_opt); });

    flows_cli::DotOptions dot_opt;
    auto* dot = app.add_subcommand("dot", "render a graph, optionally with a flow, as Graphviz");
    dot->add_option("graph", dot_opt.graph_path, "graph JSON file")->required();
    dot->add_option("--flow", dot_opt.flow_path, "flow document JSON file");
    dot->add_option("-o,--output", dot_opt.output_path, "write to file instead of stdout");
    dot->callback([&] { rc = flows_cli::cmd_dot(dot_opt); });

    flows_cli::BenchOptions bench_opt;
    auto* bench = app.add_subcommand("bench", "time flow searches over a graph family, as CSV");
    bench->add_option("--kind", bench_opt.kind, "flow kind")
        ->default_val(flows_cli::Kind::causal)
        ->transform(CLI::CheckedTransformer(kKinds, CLI::ignore_case));
    bench->add_option("--family", bench_opt.family, "graph family: line, layered or random")
        ->required();
    bench->add_option("--sizes", bench_opt.sizes, "comma separated vertex counts")
        ->required()
        ->delimiter(',');
    bench->add_option("--seed", bench_opt.seed, "random seed for the random family")
        ->default_val(1);
    bench->add_option("-o,--output", bench_opt.output_path, "write to file instead of stdout");
    bench->callback([&] { rc = flows_cli::cmd_bench(bench_opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    return rc;
}
