#pragma once

#include <atomic>
#include <optional>

#include "flows/analysis.hpp"
#include "flows/causal_flow.hpp"
#include "flows/gflow.hpp"
#include "flows/open_graph.hpp"

namespace flows {

/// Cooperative cancellation for the brute-force searches: they poll the
/// flag periodically and throw OracleCancelled when it is set. The flag
/// must outlive the search.
class CancelToken {
public:
    CancelToken() = default;
    explicit CancelToken(const std::atomic<bool>* flag) : flag_(flag) {}
    bool cancelled() const { return flag_ != nullptr && flag_->load(std::memory_order_relaxed); }

private:
    const std::atomic<bool>* flag_ = nullptr;
};

struct CausalOracleResult {
    CausalFlow flow;  // witness realizing the minimum depth
    int min_depth = 0;
};

struct GflowOracleResult {
    GFlow flow;
    int min_depth = 0;
};

/// Exhaustive reference searches, independent of the round-based
/// algorithms: the causal search enumerates corrector assignments and keeps
/// only acyclic ones, the generalized search explores coverable vertex
/// sets directly. Both report the minimum depth over all valid flows and a
/// witness achieving it. Instances larger than max_n (or the 20-vertex
/// hard cap) throw GuardExceeded.
std::optional<CausalOracleResult> brute_force_causal_flow(const OpenGraph& g, int max_n = 7,
                                                          CancelToken cancel = {});
std::optional<GflowOracleResult> brute_force_gflow(const OpenGraph& g, int max_n = 6,
                                                   CancelToken cancel = {});

/// True when some valid flow of the given kind has a layer partition
/// strictly more delayed than `reference`. Throws std::invalid_argument
/// when the reference universe does not match the graph.
bool exists_more_delayed_causal_flow(const OpenGraph& g, const LayerPartition& reference,
                                     int max_n = 7, CancelToken cancel = {});
bool exists_more_delayed_gflow(const OpenGraph& g, const LayerPartition& reference,
                               int max_n = 6, CancelToken cancel = {});

}  // namespace flows
