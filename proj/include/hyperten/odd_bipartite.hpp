#pragma once

#include <vector>

#include "hyperten/hypergraph.hpp"
#include "hyperten/perron.hpp"
#include "hyperten/rational.hpp"
#include "hyperten/tensor.hpp"

namespace hyperten {

struct OddBipartition {
    bool feasible = false;
    std::vector<int> v1;  // ascending vertex ids, feasible case only
    // Infeasible case: either a single odd-cardinality edge or the subset of
    // edges whose GF(2) rows sum to the contradictory row 0 = 1.
    bool witness_odd_edge = false;
    std::vector<size_t> witness_edges;  // indices into h.edges()
};

struct SignVector {
    std::vector<int> entries;  // one of +1/-1 per vertex

    static SignVector from_bipartition(int n, const std::vector<int>& v1);
};

// GF(2) decision: one row per edge, sum of incident y_v equal to 1.
// Lowest-index pivoting with free variables zeroed gives a canonical V1.
// Any odd-cardinality edge short-circuits to infeasible.
OddBipartition find_odd_bipartition(const Hypergraph& h);

// Direct edge-by-edge parity recheck, independent of the GF(2) solver.
bool check_bipartition(const Hypergraph& h, const std::vector<int>& v1);

// Flips the Perron vector on V1 and measures the residual of the
// adjacency apply at -rho. Requires a connected host and a converged solve.
Residual signed_perron_certificate(const Hypergraph& h, const OddBipartition& bip,
                                   const PerronResult& perron);

// x in {+1,-1}^n with -1 on V1 satisfies Q x^{k-1} = 0. Computed in
// exact rationals; the returned value is 0.0 precisely when the kernel
// identity holds exactly.
Residual signless_kernel_certificate(const Hypergraph& h, const OddBipartition& bip);

// Checks both similarity identities on pre-built dense tensors:
// A = -P^{-(k-1)} A P and L = P^{-(k-1)} Q P, exactly in rationals.
bool similarity_identities_hold(const DenseTensor& adjacency, const DenseTensor& laplacian,
                                const DenseTensor& signless, const SignVector& signs);

// Builds the dense tensors (subject to budget) and checks both identities
// for the sign vector of a feasible bipartition.
bool similarity_certificate(const Hypergraph& h, const OddBipartition& bip,
                            size_t budget = kDefaultDenseBudget);

// L applied to the all-ones vector vanishes identically.
// Computed in exact rationals.
Residual laplacian_allones_check(const Hypergraph& h);

}  // namespace hyperten
