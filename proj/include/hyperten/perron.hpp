#pragma once

#include <utility>
#include <vector>

#include "hyperten/apply.hpp"
#include "hyperten/hypergraph.hpp"

namespace hyperten {

struct PerronOptions {
    double tol = 1e-10;
    long max_iterations = 100000;
    bool record_trace = false;
    int workers = 0;  // 0 = HYPERTEN_THREADS
};

struct PerronResult {
    double rho_lower = 0.0;
    double rho_upper = 0.0;
    std::vector<double> vector;  // unit max-magnitude; positive when connected
    long iterations = 0;
    bool converged = false;
    TensorKind target = TensorKind::adjacency;
    // per-iterate raw Collatz-Wielandt enclosures, when requested
    std::vector<std::pair<double, double>> trace;

    double estimate() const { return 0.5 * (rho_lower + rho_upper); }
    double width() const { return rho_upper - rho_lower; }
};

// min/max over i of (T x^{k-1})_i / x_i^{k-1}; encloses rho for positive x.
std::pair<double, double> collatz_wielandt(const Hypergraph& h, TensorKind target,
                                           const std::vector<double>& positive_x);

// Shifted power iteration (iterate on T + I, subtract 1) with certified
// Collatz-Wielandt enclosure. Requires a connected hypergraph with edges and
// target A or Q; on iteration exhaustion returns the best enclosure with
// converged = false.
PerronResult spectral_radius(const Hypergraph& h, TensorKind target,
                             const PerronOptions& opts = {});

// Max over vertex-component blocks of the host tensor (component solves use
// the global rank as the order). Edgeless hypergraphs give rho = 0 exactly.
PerronResult spectral_radius_per_component(const Hypergraph& h, TensorKind target,
                                           const PerronOptions& opts = {});

// x^T (T x^{k-1}) after rescaling x to sum_i x_i^k = 1; a lower bound on rho
// for the symmetric nonnegative targets. x must be nonnegative and nonzero.
double rayleigh(const Hypergraph& h, TensorKind target, const std::vector<double>& x);

enum class Monotonicity { strict, indeterminate, inverted };

// Enclosure separation test for sub-hypergraph monotonicity: strict
// when rho(G) upper < rho(H) lower, inverted when rho(G) lower > rho(H)
// upper, indeterminate when the enclosures overlap. g must be a proper
// sub-hypergraph of h (same vertex count, edge subset) of equal rank.
Monotonicity check_strict_monotonicity(const Hypergraph& h, const Hypergraph& g,
                                       const PerronOptions& opts = {});

}  // namespace hyperten
