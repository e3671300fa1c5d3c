#pragma once

#include "hyperten/hypergraph.hpp"

namespace fixtures {

using hyperten::Hypergraph;

// n = 5, edges {1,2,3,4} and {4,5}; rank 4, corank 2, degrees (1,1,1,2,1).
inline Hypergraph running_example() { return Hypergraph(5, {{1, 2, 3, 4}, {4, 5}}); }

inline Hypergraph k2() { return Hypergraph(2, {{1, 2}}); }

inline Hypergraph path3() { return Hypergraph(3, {{1, 2}, {2, 3}}); }

inline Hypergraph cycle3() { return Hypergraph(3, {{1, 2}, {2, 3}, {1, 3}}); }

inline Hypergraph cycle4() { return Hypergraph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

inline Hypergraph cycle5() {
    return Hypergraph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
}

inline Hypergraph star_k13() { return Hypergraph(4, {{1, 2}, {1, 3}, {1, 4}}); }

inline Hypergraph complete_3uniform_4() {
    return Hypergraph(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
}

// Feasible non-uniform host; canonical V1 = {1}.
inline Hypergraph mixed_feasible() { return Hypergraph(4, {{1, 2}, {1, 2, 3, 4}}); }

// Even rank, every edge even, yet infeasible: rows of the two pairs sum to
// the big edge's row with the wrong parity.
inline Hypergraph even_infeasible() {
    return Hypergraph(4, {{1, 2}, {3, 4}, {1, 2, 3, 4}});
}

// Single odd edge; rank 3.
inline Hypergraph triangle_edge() { return Hypergraph(3, {{1, 2, 3}}); }

// Two components of different ranks plus an isolated vertex 7.
inline Hypergraph disconnected_mixed() {
    return Hypergraph(7, {{1, 2, 3}, {4, 5}, {5, 6}});
}

// Two 4-cycles; globally odd-bipartite.
inline Hypergraph two_cycles4() {
    return Hypergraph(8, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {5, 6}, {6, 7}, {7, 8}, {5, 8}});
}

}  // namespace fixtures
