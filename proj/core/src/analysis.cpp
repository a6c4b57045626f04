#include "flows/analysis.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "flows/gf2.hpp"

namespace flows {

namespace {

void check_sizes(const OpenGraph& g, std::size_t g_size, std::size_t layer_size,
                 const char* what) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    if (g_size != n || layer_size != n)
        throw std::invalid_argument(std::string(what) + ": flow arrays do not match graph size");
}

void add(VerifyReport& rep, std::string condition, std::vector<Vertex> witness) {
    rep.ok = false;
    rep.violations.push_back({std::move(condition), std::move(witness)});
}

}  // namespace

std::string VerifyReport::to_json(const OpenGraph& g) const {
    nlohmann::ordered_json j;
    j["ok"] = ok;
    auto& jv = j["violations"] = nlohmann::ordered_json::array();
    for (const auto& v : violations) {
        nlohmann::ordered_json e;
        e["condition"] = v.condition;
        auto& w = e["witness"] = nlohmann::ordered_json::array();
        for (Vertex x : v.witness) w.push_back(g.name(x));
        jv.push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

VerifyReport verify_causal_flow(const OpenGraph& g, const CausalFlow& f) {
    check_sizes(g, f.g.size(), f.layer.size(), "verify_causal_flow");
    const int n = g.vertex_count();
    VerifyReport rep;

    for (Vertex u = 0; u < n; ++u) {
        const auto& corr = f.g[static_cast<std::size_t>(u)];
        if (g.outputs().test(u)) {
            if (corr) add(rep, "domain", {u});
            continue;
        }
        if (!corr) {
            add(rep, "domain", {u});
            continue;
        }
        const Vertex v = *corr;
        if (v < 0 || v >= n) throw std::invalid_argument("verify_causal_flow: correction out of range");
        if (g.inputs().test(v)) add(rep, "range", {u, v});
        if (!g.adjacent(u, v)) add(rep, "C3", {u, v});
        if (f.layer[static_cast<std::size_t>(u)] <= f.layer[static_cast<std::size_t>(v)])
            add(rep, "C1", {u, v});
        for (Vertex w : g.neighbors(v)) {
            if (w == u) continue;
            if (f.layer[static_cast<std::size_t>(u)] <= f.layer[static_cast<std::size_t>(w)])
                add(rep, "C2", {u, w});
        }
    }
    return rep;
}

VerifyReport verify_gflow(const OpenGraph& g, const GFlow& f) {
    check_sizes(g, f.g.size(), f.layer.size(), "verify_gflow");
    const int n = g.vertex_count();
    VerifyReport rep;

    for (Vertex u = 0; u < n; ++u) {
        const VertexSet& corr = f.g[static_cast<std::size_t>(u)];
        if (corr.size() != n)
            throw std::invalid_argument("verify_gflow: correction set universe mismatch");
        if (g.outputs().test(u)) {
            if (corr.any()) add(rep, "domain", {u});
            continue;
        }
        if (corr.none()) {
            add(rep, "domain", {u});
            continue;
        }
        corr.for_each([&](Vertex w) {
            if (g.inputs().test(w)) add(rep, "range", {u, w});
            if (f.layer[static_cast<std::size_t>(u)] <= f.layer[static_cast<std::size_t>(w)])
                add(rep, "C1", {u, w});
        });
        const VertexSet odd = odd_neighborhood(g, corr);
        if (!odd.test(u)) add(rep, "C3", {u});
        odd.for_each([&](Vertex w) {
            if (w == u) return;
            if (f.layer[static_cast<std::size_t>(u)] <= f.layer[static_cast<std::size_t>(w)])
                add(rep, "C2", {u, w});
        });
    }
    return rep;
}

std::vector<int> LayerPartition::cumulative() const {
    std::vector<int> cum;
    cum.reserve(layers.size());
    int total = 0;
    for (const auto& layer : layers) {
        total += layer.count();
        cum.push_back(total);
    }
    return cum;
}

LayerPartition layer_partition(const std::vector<int>& labels) {
    const int n = static_cast<int>(labels.size());
    if (n == 0) return {};
    int depth = 0;
    for (int l : labels) {
        if (l < 0) throw std::invalid_argument("layer_partition: negative layer label");
        depth = std::max(depth, l);
    }
    LayerPartition part;
    part.layers.assign(static_cast<std::size_t>(depth) + 1, VertexSet(n));
    for (Vertex v = 0; v < n; ++v) part.layers[static_cast<std::size_t>(labels[static_cast<std::size_t>(v)])].set(v);
    for (std::size_t k = 0; k < part.layers.size(); ++k) {
        if (part.layers[k].none())
            throw std::invalid_argument("layer_partition: no vertex has label " + std::to_string(k));
    }
    return part;
}

LayerPartition layer_partition(const CausalFlow& f) { return layer_partition(f.layer); }
LayerPartition layer_partition(const GFlow& f) { return layer_partition(f.layer); }

DelayComparison is_more_delayed(const LayerPartition& a, const LayerPartition& b) {
    if (a.universe_size() != b.universe_size())
        throw std::invalid_argument("is_more_delayed: partitions cover different vertex sets");
    const int n = a.universe_size();
    const std::vector<int> ca = a.cumulative();
    const std::vector<int> cb = b.cumulative();
    const std::size_t steps = std::max(ca.size(), cb.size());

    bool strict_a = false;
    bool strict_b = false;
    for (std::size_t k = 0; k < steps; ++k) {
        const int xa = k < ca.size() ? ca[k] : n;
        const int xb = k < cb.size() ? cb[k] : n;
        if (xa > xb) strict_a = true;
        if (xb > xa) strict_b = true;
    }
    if (strict_a && strict_b) return DelayComparison::incomparable;
    if (strict_a) return DelayComparison::more;
    if (strict_b) return DelayComparison::less;
    return DelayComparison::equal;
}

namespace {

/// Order-preserving compression of layer labels to dense ranks, so that
/// flows whose labels skip values are judged by the order they encode.
std::vector<int> dense_ranks(const std::vector<int>& labels) {
    std::vector<int> sorted(labels);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> ranks(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        ranks[i] = static_cast<int>(
            std::lower_bound(sorted.begin(), sorted.end(), labels[i]) - sorted.begin());
    }
    return ranks;
}

/// Front sequence of the round-based causal search, rebuilt from scratch:
/// index 0 is the output set, index k the set of vertices first correctable
/// in round k (unique uncovered neighbor of a covered non-input vertex).
std::vector<VertexSet> causal_fronts(const OpenGraph& g) {
    const int n = g.vertex_count();
    VertexSet covered = g.outputs();
    std::vector<VertexSet> fronts{covered};
    for (;;) {
        VertexSet front(n);
        VertexSet correctors = covered;
        correctors.and_not(g.inputs());
        correctors.for_each([&](Vertex v) {
            int count = 0;
            Vertex unique = -1;
            for (Vertex w : g.neighbors(v)) {
                if (!covered.test(w)) {
                    ++count;
                    unique = w;
                    if (count > 1) break;
                }
            }
            if (count == 1) front.set(unique);
        });
        if (front.none()) return fronts;
        covered |= front;
        fronts.push_back(std::move(front));
    }
}

/// Same for the generalized search: the round-k front holds every
/// uncovered vertex that is the unique uncovered odd neighbor of some
/// subset of covered non-input vertices, decided by GF(2) solving.
std::vector<VertexSet> gflow_fronts(const OpenGraph& g) {
    const int n = g.vertex_count();
    VertexSet covered = g.outputs();
    std::vector<VertexSet> fronts{covered};
    for (;;) {
        VertexSet front(n);
        const VertexSet pending = covered.complement();
        VertexSet correctors = covered;
        correctors.and_not(g.inputs());
        const GammaSubmatrix sub = gamma_submatrix(g, pending, correctors);
        const auto solutions = solve_many(sub.matrix, Gf2Matrix::identity(sub.matrix.rows()));
        for (std::size_t i = 0; i < solutions.size(); ++i) {
            if (solutions[i]) front.set(sub.row_vertices[i]);
        }
        if (front.none()) return fronts;
        covered |= front;
        fronts.push_back(std::move(front));
    }
}

VerifyReport compare_fronts(const std::vector<VertexSet>& fronts, const LayerPartition& part,
                            int n) {
    VerifyReport rep;
    const std::size_t levels = std::max(fronts.size(), part.layers.size());
    for (std::size_t k = 0; k < levels; ++k) {
        const VertexSet expected = k < fronts.size() ? fronts[k] : VertexSet(n);
        const VertexSet actual = k < part.layers.size() ? part.layers[k] : VertexSet(n);
        if (expected == actual) continue;
        add(rep, k == 0 ? "layer0" : "front", (expected ^ actual).to_vector());
    }
    return rep;
}

}  // namespace

VerifyReport check_maximally_delayed(const OpenGraph& g, const CausalFlow& f) {
    if (!verify_causal_flow(g, f).ok)
        throw std::invalid_argument("check_maximally_delayed: flow fails verify_causal_flow");
    const LayerPartition part = layer_partition(dense_ranks(f.layer));
    return compare_fronts(causal_fronts(g), part, g.vertex_count());
}

VerifyReport check_maximally_delayed(const OpenGraph& g, const GFlow& f) {
    if (!verify_gflow(g, f).ok)
        throw std::invalid_argument("check_maximally_delayed: flow fails verify_gflow");
    const LayerPartition part = layer_partition(dense_ranks(f.layer));
    return compare_fronts(gflow_fronts(g), part, g.vertex_count());
}

GFlow causal_to_gflow(const CausalFlow& f) {
    const int n = static_cast<int>(f.g.size());
    GFlow r;
    r.layer = f.layer;
    r.g.assign(static_cast<std::size_t>(n), VertexSet(n));
    for (Vertex u = 0; u < n; ++u) {
        if (f.g[static_cast<std::size_t>(u)]) r.g[static_cast<std::size_t>(u)].set(*f.g[static_cast<std::size_t>(u)]);
    }
    return r;
}

bool edge_bound_holds(const OpenGraph& g) {
    const long long n = g.vertex_count();
    const long long k = g.outputs().count();
    const long long bound = (n - 1) * k - k * (k - 1) / 2;
    return g.edge_count() <= bound;
}

}  // namespace flows
