#include "hyperten/perron.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace hyperten {

namespace {

void require_nonneg_target(TensorKind target) {
    if (target == TensorKind::laplacian)
        throw std::invalid_argument(
            "Perron machinery applies to the nonnegative targets A and Q only");
}

// Core loop; h must be connected with edges, order >= r(h).
PerronResult solve(const Hypergraph& h, TensorKind target, int order, const PerronOptions& opts) {
    const int n = h.vertex_count();
    const int k = order;
    PerronResult res;
    res.target = target;
    std::vector<double> x(n, 1.0);
    double best_lo = 0.0;
    double best_hi = std::numeric_limits<double>::infinity();
    for (long it = 1; it <= opts.max_iterations; ++it) {
        std::vector<double> y = tensor_apply(h, target, x, k, opts.workers);
        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        for (int i = 0; i < n; ++i) {
            double xk = scalar_pow(x[i], k - 1);
            y[i] += xk;  // shift by the identity-like diagonal
            double q = y[i] / xk;
            lo = std::min(lo, q);
            hi = std::max(hi, q);
        }
        lo -= 1.0;
        hi -= 1.0;
        if (opts.record_trace) res.trace.emplace_back(lo, hi);
        best_lo = std::max(best_lo, lo);
        best_hi = std::min(best_hi, hi);
        res.iterations = it;
        res.vector = x;
        if (best_hi - best_lo <= opts.tol * std::max(1.0, best_hi)) {
            res.converged = true;
            break;
        }
        double maxmag = 0.0;
        for (int i = 0; i < n; ++i) {
            x[i] = k == 2 ? y[i] : std::pow(y[i], 1.0 / (k - 1));
            maxmag = std::max(maxmag, x[i]);
        }
        for (int i = 0; i < n; ++i) x[i] /= maxmag;
    }
    res.rho_lower = best_lo;
    res.rho_upper = best_hi;
    return res;
}

}  // namespace

std::pair<double, double> collatz_wielandt(const Hypergraph& h, TensorKind target,
                                           const std::vector<double>& positive_x) {
    require_nonneg_target(target);
    for (double v : positive_x)
        if (!(v > 0.0)) throw std::invalid_argument("Collatz-Wielandt requires a positive vector");
    std::vector<double> y = tensor_apply(h, target, positive_x);
    const int k = h.rank();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < y.size(); ++i) {
        double q = y[i] / scalar_pow(positive_x[i], k - 1);
        lo = std::min(lo, q);
        hi = std::max(hi, q);
    }
    return {lo, hi};
}

PerronResult spectral_radius(const Hypergraph& h, TensorKind target, const PerronOptions& opts) {
    require_nonneg_target(target);
    if (!h.has_edges()) throw std::domain_error("tensor undefined for edgeless hypergraph");
    if (!is_connected(h))
        throw std::invalid_argument(
            "hypergraph is not connected; use spectral_radius_per_component");
    if (opts.tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    return solve(h, target, h.rank(), opts);
}

PerronResult spectral_radius_per_component(const Hypergraph& h, TensorKind target,
                                           const PerronOptions& opts) {
    require_nonneg_target(target);
    const int n = h.vertex_count();
    PerronResult best;
    best.target = target;
    best.converged = true;
    best.vector.assign(std::max(n, 0), 1.0);
    if (!h.has_edges()) return best;  // rho = 0 exactly

    const int k = h.rank();
    bool any = false;
    double winner_mid = 0.0;
    for (const auto& comp : connected_components(h)) {
        std::vector<int> renumber(n + 1, 0);
        for (size_t i = 0; i < comp.size(); ++i) renumber[comp[i]] = static_cast<int>(i) + 1;
        std::vector<std::vector<int>> comp_edges;
        for (const auto& e : h.edges()) {
            if (renumber[e.front()] == 0) continue;  // edges never straddle components
            std::vector<int> mapped;
            mapped.reserve(e.size());
            for (int v : e) mapped.push_back(renumber[v]);
            comp_edges.push_back(std::move(mapped));
        }
        if (comp_edges.empty()) continue;  // isolated vertex: zero block
        PerronResult r;
        const bool only_singletons =
            std::all_of(comp_edges.begin(), comp_edges.end(),
                        [](const auto& e) { return e.size() == 1; });
        if (only_singletons) {
            // a singleton edge never joins two vertices, so this block is the
            // 1x1 tensor with diagonal entry 1 (2 for the signless target)
            r.target = target;
            r.converged = true;
            r.iterations = 1;
            r.vector = {1.0};
            r.rho_lower = r.rho_upper = target == TensorKind::adjacency ? 1.0 : 2.0;
        } else {
            Hypergraph sub(static_cast<int>(comp.size()), std::move(comp_edges), true);
            r = solve(sub, target, k, opts);
        }
        best.converged = best.converged && r.converged;
        best.iterations = std::max(best.iterations, r.iterations);
        // rho(H) = max over component blocks: take max of lowers and uppers
        best.rho_lower = any ? std::max(best.rho_lower, r.rho_lower) : r.rho_lower;
        best.rho_upper = any ? std::max(best.rho_upper, r.rho_upper) : r.rho_upper;
        if (!any || r.estimate() > winner_mid) {
            winner_mid = r.estimate();
            std::vector<double> embedded(n, 0.0);
            for (size_t i = 0; i < comp.size(); ++i) embedded[comp[i] - 1] = r.vector[i];
            best.vector = std::move(embedded);
            best.trace = std::move(r.trace);
        }
        any = true;
    }
    return best;
}

double rayleigh(const Hypergraph& h, TensorKind target, const std::vector<double>& x) {
    require_nonneg_target(target);
    if (!h.has_edges()) throw std::domain_error("tensor undefined for edgeless hypergraph");
    if (x.size() != static_cast<size_t>(h.vertex_count()))
        throw std::invalid_argument("vector length does not match vertex count");
    const int k = h.rank();
    double sum = 0.0;
    for (double v : x) {
        if (v < 0.0) throw std::invalid_argument("Rayleigh quotient requires a nonnegative vector");
        sum += scalar_pow(v, k);
    }
    if (sum == 0.0) throw std::invalid_argument("Rayleigh quotient of the zero vector");
    const double scale = std::pow(sum, 1.0 / k);
    std::vector<double> xs(x.size());
    for (size_t i = 0; i < x.size(); ++i) xs[i] = x[i] / scale;
    std::vector<double> y = tensor_apply(h, target, xs);
    double value = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) value += xs[i] * y[i];
    return value;
}

Monotonicity check_strict_monotonicity(const Hypergraph& h, const Hypergraph& g,
                                       const PerronOptions& opts) {
    if (!is_connected(h)) throw std::invalid_argument("host hypergraph must be connected");
    if (g.vertex_count() > h.vertex_count())
        throw std::invalid_argument("sub-hypergraph has more vertices than the host");
    std::set<std::vector<int>> host(h.edges().begin(), h.edges().end());
    for (const auto& e : g.edges())
        if (!host.count(e)) throw std::invalid_argument("sub-hypergraph edge not in the host");
    const bool proper = g.vertex_count() < h.vertex_count() || g.edges().size() < h.edges().size();
    if (!proper) throw std::invalid_argument("sub-hypergraph equals the host (not proper)");
    if (g.rank() != h.rank())
        throw std::invalid_argument("rank mismatch: comparison requires equal rank");

    PerronResult rh = spectral_radius(h, TensorKind::adjacency, opts);
    PerronResult rg = spectral_radius_per_component(g, TensorKind::adjacency, opts);
    if (rg.rho_upper < rh.rho_lower) return Monotonicity::strict;
    if (rg.rho_lower > rh.rho_upper) return Monotonicity::inverted;
    return Monotonicity::indeterminate;
}

}  // namespace hyperten
