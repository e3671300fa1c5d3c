#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "hyperten/hypergraph.hpp"

namespace testsupport {

struct RandomSpec {
    int min_vertices = 2;
    int max_vertices = 10;
    int min_edge_size = 2;
    int max_edge_size = 4;
    int max_edges = 8;
    bool require_connected = false;
    bool forbid_isolated = false;
};

// Rejection sampling against the constraints; sizes are desk scale so the
// retry loop terminates fast.
inline hyperten::Hypergraph random_hypergraph(std::mt19937& rng, const RandomSpec& spec = {}) {
    for (;;) {
        std::uniform_int_distribution<int> nven(std::max(spec.min_vertices, spec.min_edge_size),
                                                spec.max_vertices);
        const int n = nven(rng);
        std::uniform_int_distribution<int> medge(1, spec.max_edges);
        const int m = medge(rng);
        std::set<std::vector<int>> edges;
        std::vector<int> pool(n);
        for (int i = 0; i < n; ++i) pool[i] = i + 1;
        for (int e = 0; e < m; ++e) {
            std::uniform_int_distribution<int> size(spec.min_edge_size,
                                                    std::min(spec.max_edge_size, n));
            const int s = size(rng);
            std::shuffle(pool.begin(), pool.end(), rng);
            std::vector<int> edge(pool.begin(), pool.begin() + s);
            std::sort(edge.begin(), edge.end());
            edges.insert(std::move(edge));
        }
        hyperten::Hypergraph h(n, {edges.begin(), edges.end()});
        if (spec.require_connected && !hyperten::is_connected(h)) continue;
        if (spec.forbid_isolated) {
            auto degs = hyperten::degree_profile(h).degrees;
            if (std::find(degs.begin(), degs.end(), 0) != degs.end()) continue;
        }
        return h;
    }
}

// Removes one edge, keeping the rank: some remaining edge must still have
// the original maximum size. Returns false when no such edge exists.
inline bool drop_edge_same_rank(std::mt19937& rng, const hyperten::Hypergraph& h,
                                hyperten::Hypergraph& out) {
    const auto& edges = h.edges();
    if (edges.size() < 2) return false;
    const int k = h.rank();
    int rank_edges = 0;
    for (const auto& e : edges)
        if (static_cast<int>(e.size()) == k) ++rank_edges;
    std::vector<size_t> removable;
    for (size_t i = 0; i < edges.size(); ++i) {
        if (static_cast<int>(edges[i].size()) < k || rank_edges > 1) removable.push_back(i);
    }
    if (removable.empty()) return false;
    std::uniform_int_distribution<size_t> pick(0, removable.size() - 1);
    const size_t drop = removable[pick(rng)];
    std::vector<std::vector<int>> kept;
    for (size_t i = 0; i < edges.size(); ++i)
        if (i != drop) kept.push_back(edges[i]);
    out = hyperten::Hypergraph(h.vertex_count(), std::move(kept));
    return true;
}

}  // namespace testsupport
