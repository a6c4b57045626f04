#include "flows/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "flows/errors.hpp"

namespace flows {

namespace {

// Masks and memo tables are indexed by vertex subsets of one 64-bit word;
// the cap keeps the subset tables allocatable.
constexpr int kHardCap = 20;

// Sentinel block count for states that cannot reach full coverage.
constexpr int kNoChain = 500;

struct Poll {
    CancelToken token;
    int countdown = 1;

    void tick() {
        if (--countdown <= 0) {
            countdown = 4096;
            if (token.cancelled()) throw OracleCancelled();
        }
    }
};

struct MaskGraph {
    int n = 0;
    std::uint64_t full = 0;
    std::uint64_t inputs = 0;
    std::uint64_t outputs = 0;
    std::vector<std::uint64_t> adj;

    explicit MaskGraph(const OpenGraph& g) : n(g.vertex_count()) {
        full = n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
        adj.assign(static_cast<std::size_t>(n), 0);
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex w : g.neighbors(u)) adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << w;
        }
        g.inputs().for_each([&](Vertex v) { inputs |= std::uint64_t{1} << v; });
        g.outputs().for_each([&](Vertex v) { outputs |= std::uint64_t{1} << v; });
    }
};

void check_guard(const OpenGraph& g, int max_n, const char* what) {
    const int limit = std::min(max_n, kHardCap);
    if (g.vertex_count() > limit)
        throw GuardExceeded(std::string(what) + ": " + std::to_string(g.vertex_count()) +
                            " vertices exceed the guard of " + std::to_string(limit));
}

/// Depth-first enumeration of corrector assignments. Assigning v to u adds
/// the order constraints u before v and u before every other neighbor of v;
/// assignments whose constraint digraph acquires a cycle are cut off. At
/// each surviving complete assignment, the longest-path labeling is the
/// most delayed layering compatible with that assignment.
struct CausalEnumerator {
    MaskGraph g;
    Poll poll;
    std::vector<Vertex> domain;
    std::vector<std::vector<Vertex>> candidates;
    std::vector<std::uint64_t> succ;
    std::vector<Vertex> chosen;

    CausalEnumerator(const OpenGraph& graph, CancelToken cancel) : g(graph), poll{cancel} {
        for (Vertex v = 0; v < g.n; ++v) {
            if (!(g.outputs >> v & 1)) domain.push_back(v);
        }
        candidates.resize(domain.size());
        for (std::size_t i = 0; i < domain.size(); ++i) {
            const std::uint64_t cs = g.adj[static_cast<std::size_t>(domain[i])] & ~g.inputs;
            for (std::uint64_t t = cs; t; t &= t - 1)
                candidates[i].push_back(std::countr_zero(t));
        }
        succ.assign(static_cast<std::size_t>(g.n), 0);
        chosen.assign(domain.size(), -1);
    }

    bool reaches(std::uint64_t from, Vertex target) const {
        std::uint64_t reach = 0;
        std::uint64_t frontier = from;
        while (frontier) {
            if (frontier >> target & 1) return true;
            reach |= frontier;
            std::uint64_t next = 0;
            for (std::uint64_t t = frontier; t; t &= t - 1)
                next |= succ[static_cast<std::size_t>(std::countr_zero(t))];
            frontier = next & ~reach;
        }
        return false;
    }

    int layer_of(Vertex v, std::vector<int>& memo) const {
        int& slot = memo[static_cast<std::size_t>(v)];
        if (slot >= 0) return slot;
        int best = 0;
        for (std::uint64_t t = succ[static_cast<std::size_t>(v)]; t; t &= t - 1)
            best = std::max(best, layer_of(std::countr_zero(t), memo) + 1);
        return slot = best;
    }

    void layers(std::vector<int>& out) const {
        out.assign(static_cast<std::size_t>(g.n), -1);
        for (Vertex v = 0; v < g.n; ++v) layer_of(v, out);
    }

    /// leaf() returning true stops the whole search.
    template <typename Leaf>
    bool enumerate(std::size_t slot, Leaf&& leaf) {
        poll.tick();
        if (slot == domain.size()) return leaf();
        const Vertex u = domain[slot];
        for (Vertex v : candidates[slot]) {
            const std::uint64_t constraints =
                ((std::uint64_t{1} << v) | g.adj[static_cast<std::size_t>(v)]) &
                ~(std::uint64_t{1} << u);
            if (reaches(constraints, u)) continue;
            succ[static_cast<std::size_t>(u)] = constraints;
            chosen[slot] = v;
            const bool stop = enumerate(slot + 1, leaf);
            succ[static_cast<std::size_t>(u)] = 0;
            if (stop) return true;
        }
        return false;
    }
};

/// State space over covered vertex sets. correctable(a) lists the vertices
/// that some subset of covered non-inputs corrects (unique uncovered odd
/// neighbor), by direct subset enumeration; min_blocks(a) is the fewest
/// rounds finishing the coverage from a.
struct GflowExplorer {
    MaskGraph g;
    Poll poll;
    std::vector<std::uint64_t> correctable_val;
    std::vector<std::uint8_t> correctable_known;
    std::vector<std::int16_t> blocks;

    GflowExplorer(const OpenGraph& graph, CancelToken cancel) : g(graph), poll{cancel} {
        const std::size_t states = std::size_t{1} << g.n;
        correctable_val.assign(states, 0);
        correctable_known.assign(states, 0);
        blocks.assign(states, -1);
    }

    std::uint64_t correctable(std::uint64_t a) {
        if (correctable_known[a]) return correctable_val[a];
        const std::uint64_t corr = a & ~g.inputs;
        const std::uint64_t pending = g.full & ~a;
        std::uint64_t res = 0;
        std::uint64_t k = corr;
        for (;;) {
            poll.tick();
            if (k != 0) {
                std::uint64_t odd = 0;
                for (std::uint64_t t = k; t; t &= t - 1)
                    odd ^= g.adj[static_cast<std::size_t>(std::countr_zero(t))];
                const std::uint64_t hit = odd & pending;
                if (hit != 0 && (hit & (hit - 1)) == 0) res |= hit;
            }
            if (k == 0) break;
            k = (k - 1) & corr;
        }
        correctable_known[a] = 1;
        correctable_val[a] = res;
        return res;
    }

    /// First subset of covered non-inputs whose unique uncovered odd
    /// neighbor is exactly u, in descending submask order. Zero when none.
    std::uint64_t correction_for(std::uint64_t a, Vertex u) {
        const std::uint64_t corr = a & ~g.inputs;
        const std::uint64_t pending = g.full & ~a;
        for (std::uint64_t k = corr;; k = (k - 1) & corr) {
            if (k != 0) {
                std::uint64_t odd = 0;
                for (std::uint64_t t = k; t; t &= t - 1)
                    odd ^= g.adj[static_cast<std::size_t>(std::countr_zero(t))];
                if ((odd & pending) == (std::uint64_t{1} << u)) return k;
            }
            if (k == 0) return 0;
        }
    }

    int min_blocks(std::uint64_t a) {
        if (a == g.full) return 0;
        if (blocks[a] >= 0) return blocks[a];
        poll.tick();
        const std::uint64_t cand = correctable(a) | (g.outputs & ~a);
        int best = kNoChain;
        for (std::uint64_t b = cand; b; b = (b - 1) & cand) {
            const int r = min_blocks(a | b);
            if (r + 1 < best) best = r + 1;
        }
        blocks[a] = static_cast<std::int16_t>(best);
        return best;
    }
};

}  // namespace

std::optional<CausalOracleResult> brute_force_causal_flow(const OpenGraph& g, int max_n,
                                                          CancelToken cancel) {
    check_guard(g, max_n, "brute_force_causal_flow");
    CausalEnumerator e(g, cancel);
    for (const auto& cs : e.candidates) {
        if (cs.empty()) return std::nullopt;
    }

    std::optional<CausalOracleResult> best;
    std::vector<int> layers;
    e.enumerate(0, [&]() {
        e.layers(layers);
        const int depth =
            layers.empty() ? 0 : *std::max_element(layers.begin(), layers.end());
        if (!best || depth < best->min_depth) {
            CausalFlow f;
            f.layer = layers;
            f.g.assign(static_cast<std::size_t>(e.g.n), std::nullopt);
            for (std::size_t i = 0; i < e.domain.size(); ++i)
                f.g[static_cast<std::size_t>(e.domain[i])] = e.chosen[i];
            best = CausalOracleResult{std::move(f), depth};
        }
        return false;
    });
    return best;
}

bool exists_more_delayed_causal_flow(const OpenGraph& g, const LayerPartition& reference,
                                     int max_n, CancelToken cancel) {
    check_guard(g, max_n, "exists_more_delayed_causal_flow");
    if (reference.universe_size() != g.vertex_count())
        throw std::invalid_argument(
            "exists_more_delayed_causal_flow: reference partition does not match the graph");

    CausalEnumerator e(g, cancel);
    const int n = g.vertex_count();
    const std::vector<int> refcum = reference.cumulative();
    std::vector<int> layers;
    std::vector<int> cum;
    return e.enumerate(0, [&]() {
        e.layers(layers);
        const int depth =
            layers.empty() ? 0 : *std::max_element(layers.begin(), layers.end());
        cum.assign(static_cast<std::size_t>(depth) + 1, 0);
        for (int l : layers) ++cum[static_cast<std::size_t>(l)];
        std::partial_sum(cum.begin(), cum.end(), cum.begin());

        const std::size_t steps = std::max(cum.size(), refcum.size());
        bool strict = false;
        for (std::size_t k = 0; k < steps; ++k) {
            const int xa = k < cum.size() ? cum[k] : n;
            const int xb = k < refcum.size() ? refcum[k] : n;
            if (xa < xb) return false;
            if (xa > xb) strict = true;
        }
        return strict;
    });
}

std::optional<GflowOracleResult> brute_force_gflow(const OpenGraph& g, int max_n,
                                                   CancelToken cancel) {
    check_guard(g, max_n, "brute_force_gflow");
    GflowExplorer e(g, cancel);
    const int n = g.vertex_count();
    const int total = e.min_blocks(0);
    if (total >= kNoChain) return std::nullopt;

    GFlow flow;
    flow.g.assign(static_cast<std::size_t>(n), VertexSet(n));
    flow.layer.assign(static_cast<std::size_t>(n), 0);

    std::uint64_t a = 0;
    for (int step = 0; a != e.g.full; ++step) {
        const std::uint64_t cand = e.correctable(a) | (e.g.outputs & ~a);
        const int before = e.min_blocks(a);
        std::uint64_t pick = 0;
        for (std::uint64_t b = cand; b; b = (b - 1) & cand) {
            if (e.min_blocks(a | b) == before - 1) {
                pick = b;
                break;
            }
        }
        for (std::uint64_t t = pick; t; t &= t - 1) {
            const Vertex u = std::countr_zero(t);
            flow.layer[static_cast<std::size_t>(u)] = step;
            if (!(e.g.outputs >> u & 1)) {
                VertexSet ks(n);
                for (std::uint64_t t2 = e.correction_for(a, u); t2; t2 &= t2 - 1)
                    ks.set(std::countr_zero(t2));
                flow.g[static_cast<std::size_t>(u)] = std::move(ks);
            }
        }
        a |= pick;
    }
    return GflowOracleResult{std::move(flow), std::max(total - 1, 0)};
}

bool exists_more_delayed_gflow(const OpenGraph& g, const LayerPartition& reference, int max_n,
                               CancelToken cancel) {
    check_guard(g, max_n, "exists_more_delayed_gflow");
    if (reference.universe_size() != g.vertex_count())
        throw std::invalid_argument(
            "exists_more_delayed_gflow: reference partition does not match the graph");

    GflowExplorer e(g, cancel);
    const int n = g.vertex_count();
    const std::vector<int> refcum = reference.cumulative();

    struct Search {
        GflowExplorer& e;
        int n;
        const std::vector<int>& refcum;
        std::unordered_map<std::uint64_t, char> memo;

        bool run(std::uint64_t a, int step, bool strict) {
            if (a == e.g.full) return strict;
            const std::uint64_t key =
                (a << 7) | (static_cast<std::uint64_t>(step) << 1) | (strict ? 1 : 0);
            if (auto it = memo.find(key); it != memo.end()) return it->second != 0;
            e.poll.tick();

            const int required =
                step < static_cast<int>(refcum.size()) ? refcum[static_cast<std::size_t>(step)] : n;
            const std::uint64_t cand = e.correctable(a) | (e.g.outputs & ~a);
            bool found = false;
            for (std::uint64_t b = cand; b != 0 && !found; b = (b - 1) & cand) {
                const std::uint64_t a2 = a | b;
                const int c2 = std::popcount(a2);
                if (c2 < required) continue;
                found = run(a2, step + 1, strict || c2 > required);
            }
            memo.emplace(key, found ? 1 : 0);
            return found;
        }
    };

    Search s{e, n, refcum, {}};
    return s.run(0, 0, false);
}

}  // namespace flows
