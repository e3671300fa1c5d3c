#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperten/rational.hpp"

namespace hyperten {

// Raised on malformed edge-list input; line is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A hypergraph on vertices 1..n with a set of distinct edges, each a set of
// distinct vertices. Canonical form: vertices ascending within each edge,
// edges sorted lexicographically. Immutable after construction.
class Hypergraph {
public:
    Hypergraph() = default;

    // Validates ids, edge sizes and distinctness; canonicalizes.
    // Singleton edges are rejected unless allow_singletons is set; even then
    // the rank must end up >= 2.
    Hypergraph(int vertex_count, std::vector<std::vector<int>> edges,
               bool allow_singletons = false);

    int vertex_count() const { return n_; }
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    bool has_edges() const { return !edges_.empty(); }

    // Maximum edge cardinality (the tensor order); 0 when edgeless.
    int rank() const { return rank_; }
    int corank() const { return corank_; }

private:
    int n_ = 0;
    std::vector<std::vector<int>> edges_;
    int rank_ = 0;
    int corank_ = 0;
};

// Edge-list format: optional first line "n <count>", "#" starts a comment
// line, every other non-blank line is one edge of whitespace-separated
// positive integers. Without a header, n is the maximum id seen.
Hypergraph parse_hypergraph(std::istream& in, bool allow_singletons = false);
Hypergraph parse_hypergraph(const std::string& text, bool allow_singletons = false);

// Canonical text form; parse(serialize(h)) == h bit-exactly.
std::string serialize(const Hypergraph& h);

struct DegreeProfile {
    std::vector<int> degrees;  // d_1..d_n
    int max_degree = 0;
    int min_degree = 0;
    Rational average_degree;   // (sum of edge sizes) / n, exact
};

DegreeProfile degree_profile(const Hypergraph& h);

// (rank, corank); throws std::domain_error on an edgeless hypergraph.
std::pair<int, int> rank_corank(const Hypergraph& h);

bool is_uniform(const Hypergraph& h);  // vacuously true when edgeless
bool is_regular(const Hypergraph& h);  // all degrees equal; vacuously true

// Components of the shared-edge walk relation; isolated vertices are
// singletons. Each component sorted ascending, components ordered by their
// smallest vertex.
std::vector<std::vector<int>> connected_components(const Hypergraph& h);
bool is_connected(const Hypergraph& h);  // n >= 1 and one component

// Digraph with an arc (i,j) iff some edge contains both i and j, i != j.
struct AdjacencyDigraph {
    int n = 0;
    std::vector<std::vector<int>> arcs;  // 0-based adjacency lists, sorted
};

AdjacencyDigraph adjacency_digraph(const Hypergraph& h);

// Strong connectivity of the adjacency digraph (Tarjan SCC).
bool is_weakly_irreducible(const Hypergraph& h);

struct SubHypergraph {
    Hypergraph sub;               // reindexed to 1..|keep_vertices|
    std::vector<int> vertex_map;  // new id v (1-based) -> original id vertex_map[v-1]
    bool proper = false;          // differs from the original
    bool same_rank = false;       // r(G) == r(H)
};

// keep_edges must each be an edge of h and lie inside keep_vertices.
SubHypergraph proper_sub_hypergraph(const Hypergraph& h,
                                    const std::vector<int>& keep_vertices,
                                    const std::vector<std::vector<int>>& keep_edges);

}  // namespace hyperten
