#include "hyperten/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hyperten {

double integer_kth_root(const mpz_class& radicand, unsigned long k) {
    if (k == 0) throw std::invalid_argument("integer_kth_root: k must be positive");
    if (radicand < 0) throw std::invalid_argument("integer_kth_root: radicand must be nonnegative");
    mpz_class r;
    int exact = mpz_root(r.get_mpz_t(), radicand.get_mpz_t(), k);
    if (exact != 0) return r.get_d();
    const double p = radicand.get_d();
    double x = std::pow(p, 1.0 / static_cast<double>(k));
    // two Newton steps polish pow's rounding
    for (int it = 0; it < 2; ++it) {
        double xk1 = std::pow(x, static_cast<double>(k - 1));
        if (xk1 == 0.0) break;
        x -= (xk1 * x - p) / (static_cast<double>(k) * xk1);
    }
    return x;
}

AverageDegreeBound lower_bound_average_degree(const Hypergraph& h) {
    if (h.vertex_count() == 0) {
        throw std::domain_error("lower_bound_average_degree: hypergraph has no vertices");
    }
    AverageDegreeBound b;
    b.value = degree_profile(h).average_degree;
    b.equality_predicted = is_regular(h);
    return b;
}

MaxDegreeBound upper_bound_max_degree(const Hypergraph& h) {
    MaxDegreeBound b;
    b.value = h.vertex_count() == 0 ? 0 : degree_profile(h).max_degree;
    b.equality_predicted = is_regular(h);
    return b;
}

EdgeDegreeProductBound upper_bound_edge_degree_product(const Hypergraph& h) {
    if (!h.has_edges()) {
        throw std::domain_error("upper_bound_edge_degree_product: hypergraph has no edges");
    }
    const int k = h.rank();
    const auto degs = degree_profile(h).degrees;
    EdgeDegreeProductBound b;
    b.root_index = k;
    b.radicand = 0;
    for (const auto& e : h.edges()) {
        std::vector<long> d;
        d.reserve(e.size());
        for (int v : e) d.push_back(degs[static_cast<size_t>(v) - 1]);
        std::sort(d.begin(), d.end(), std::greater<long>());
        const int s = static_cast<int>(e.size());
        mpz_class prod;
        mpz_ui_pow_ui(prod.get_mpz_t(), static_cast<unsigned long>(d[0]),
                      static_cast<unsigned long>(k - s + 1));
        for (int i = 1; i < s; ++i) prod *= d[static_cast<size_t>(i)];
        if (prod > b.radicand) {
            b.radicand = prod;
            b.witness_edge = e;
        }
    }
    b.value = integer_kth_root(b.radicand, static_cast<unsigned long>(k));
    return b;
}

YuanPairwiseBound upper_bound_yuan_pairwise(const Hypergraph& h) {
    if (!h.has_edges()) {
        throw std::domain_error("upper_bound_yuan_pairwise: hypergraph has no edges");
    }
    const auto degs = degree_profile(h).degrees;
    YuanPairwiseBound b;
    b.max_pair_product = 0;
    for (const auto& e : h.edges()) {
        for (size_t a = 0; a < e.size(); ++a) {
            for (size_t c = a + 1; c < e.size(); ++c) {
                mpz_class prod = mpz_class(degs[static_cast<size_t>(e[a]) - 1]) *
                                 degs[static_cast<size_t>(e[c]) - 1];
                if (prod > b.max_pair_product) b.max_pair_product = prod;
            }
        }
    }
    b.value = integer_kth_root(b.max_pair_product, 2);
    return b;
}

namespace {

// Max over components of the component average degree; tighter than the
// global average and valid since rho(H) is the max of component radii.
Rational component_max_average_degree(const Hypergraph& h) {
    const auto comps = connected_components(h);
    const auto degs = degree_profile(h).degrees;
    Rational best(0);
    bool first = true;
    for (const auto& comp : comps) {
        long sum = 0;
        for (int v : comp) sum += degs[static_cast<size_t>(v) - 1];
        Rational avg = Rational(sum) / Rational(static_cast<long>(comp.size()));
        if (first || avg > best) best = avg;
        first = false;
    }
    return best;
}

}  // namespace

BoundsReport bounds_report(const Hypergraph& h, const PerronResult* perron) {
    BoundsReport r;
    const bool connected = is_connected(h);
    r.per_component = !connected;

    AverageDegreeBound lo = lower_bound_average_degree(h);
    r.lower_average_degree = connected ? lo.value : component_max_average_degree(h);
    r.lower_equality_predicted = lo.equality_predicted;

    MaxDegreeBound hi = upper_bound_max_degree(h);
    r.upper_max_degree = hi.value;
    r.upper_max_equality_predicted = hi.equality_predicted;
    r.best_upper = static_cast<double>(hi.value);

    if (h.has_edges()) {
        EdgeDegreeProductBound edp = upper_bound_edge_degree_product(h);
        r.upper_edge_degree_product = edp.value;
        r.witness_edge = edp.witness_edge;
        r.best_upper = std::min(r.best_upper, edp.value);

        YuanPairwiseBound yuan = upper_bound_yuan_pairwise(h);
        r.upper_yuan_pairwise = yuan.value;
        if (is_uniform(h)) {
            r.upper_uniform_geometric_mean = edp.value;  // uniform case: s = k for every edge
            r.yuan_in_best = true;
            r.best_upper = std::min(r.best_upper, yuan.value);
        }
    }

    if (perron != nullptr) {
        r.sandwich_checked = true;
        const double lower = to_double(r.lower_average_degree);
        r.sandwich_holds = (lower - 1e-8 <= perron->rho_lower) &&
                           (perron->rho_upper <= r.best_upper + 1e-8);
    }
    return r;
}

}  // namespace hyperten
