#pragma once

#include <optional>
#include <vector>

#include "hyperten/hypergraph.hpp"
#include "hyperten/perron.hpp"
#include "hyperten/rational.hpp"

namespace hyperten {

// Floating-point k-th root of a nonnegative integer. Perfect powers return
// the exact double so regular hypergraphs report integer bounds exactly.
double integer_kth_root(const mpz_class& radicand, unsigned long k);

struct AverageDegreeBound {
    Rational value;
    bool equality_predicted = false;
};

struct MaxDegreeBound {
    long value = 0;
    bool equality_predicted = false;
};

struct EdgeDegreeProductBound {
    double value = 0.0;
    std::vector<int> witness_edge;
    mpz_class radicand;  // value = radicand^(1/root_index)
    int root_index = 1;
};

struct YuanPairwiseBound {
    double value = 0.0;
    mpz_class max_pair_product;  // value = sqrt(max_pair_product)
};

// rho(A_H) >= average degree, with equality exactly for regular hosts.
AverageDegreeBound lower_bound_average_degree(const Hypergraph& h);

// rho(A_H) <= max degree, with equality exactly for regular hosts.
MaxDegreeBound upper_bound_max_degree(const Hypergraph& h);

// rho(A_H) <= max over edges of
// (d_{i1}^{k-s+1} d_{i2} ... d_{is})^{1/k}, degrees sorted descending.
// Throws std::domain_error on edgeless input.
EdgeDegreeProductBound upper_bound_edge_degree_product(const Hypergraph& h);

// Pairwise bound: max over edges, over vertex pairs within an edge, of
// sqrt(d_i d_j). Valid for uniform hosts.
// Throws std::domain_error on edgeless input.
YuanPairwiseBound upper_bound_yuan_pairwise(const Hypergraph& h);

struct BoundsReport {
    Rational lower_average_degree;
    bool lower_equality_predicted = false;
    long upper_max_degree = 0;
    bool upper_max_equality_predicted = false;
    std::optional<double> upper_edge_degree_product;
    std::vector<int> witness_edge;
    std::optional<double> upper_uniform_geometric_mean;  // present iff uniform
    std::optional<double> upper_yuan_pairwise;
    bool yuan_in_best = false;  // pairwise bound participates for uniform hosts only
    double best_upper = 0.0;
    bool per_component = false;  // connected hypothesis applied per component
    bool sandwich_checked = false;
    bool sandwich_holds = true;
};

// Assembles all bounds. When a PerronResult is supplied, verifies
// lower - 1e-8 <= rho_lower and rho_upper <= best_upper + 1e-8.
// Disconnected hosts aggregate the lower bound per component by max.
BoundsReport bounds_report(const Hypergraph& h, const PerronResult* perron = nullptr);

}  // namespace hyperten
