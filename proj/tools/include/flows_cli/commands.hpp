#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace flows_cli {

enum class Kind { causal, gflow };

/// All commands print to stdout unless output_path is set. They return the
/// process exit code: 0 on success, 2 when a search finds no flow or a
/// verification fails, 1 on any usage, parse, or structural error.

struct FindOptions {
    Kind kind = Kind::causal;
    std::string graph_path;
    std::string output_path;
};
int cmd_find(const FindOptions& opt);

struct VerifyOptions {
    Kind kind = Kind::causal;
    std::string graph_path;
    std::string flow_path;
    std::string output_path;
};
int cmd_verify(const VerifyOptions& opt);

struct GenOptions {
    int n = 0;
    long long m = 0;
    int k_in = 0;
    int k_out = 0;
    std::uint64_t seed = 0;
    std::string output_path;
};
int cmd_gen(const GenOptions& opt);

struct OracleOptions {
    Kind kind = Kind::causal;
    std::string graph_path;
    int guard = -1;  // negative: per-kind default (7 causal, 6 gflow)
    std::string output_path;
};
int cmd_oracle(const OracleOptions& opt);

struct DotOptions {
    std::string graph_path;
    std::string flow_path;  // optional
    std::string output_path;
};
int cmd_dot(const DotOptions& opt);

struct BenchOptions {
    Kind kind = Kind::causal;
    std::string family;  // "line", "layered" or "random"
    std::vector<int> sizes;
    std::uint64_t seed = 1;
    std::string output_path;
};
int cmd_bench(const BenchOptions& opt);

}  // namespace flows_cli
