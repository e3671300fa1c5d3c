#include <cmath>
#include <random>

#include "doctest.h"
#include "hyperten/bounds.hpp"
#include "support/fixtures.hpp"
#include "support/random_hypergraph.hpp"

using namespace hyperten;

TEST_CASE("integer k-th roots") {
    CHECK(integer_kth_root(mpz_class(27), 3) == 3.0);  // perfect powers are exact
    CHECK(integer_kth_root(mpz_class(9), 2) == 3.0);
    mpz_class big = mpz_class(1) << 40;
    CHECK(integer_kth_root(big, 8) == 32.0);
    CHECK(integer_kth_root(mpz_class(0), 3) == 0.0);
    CHECK(integer_kth_root(mpz_class(1), 7) == 1.0);
    CHECK(integer_kth_root(mpz_class(2), 2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(integer_kth_root(mpz_class(8), 4) ==
          doctest::Approx(std::pow(8.0, 0.25)).epsilon(1e-15));
    CHECK_THROWS_AS(integer_kth_root(mpz_class(4), 0), std::invalid_argument);
    CHECK_THROWS_AS(integer_kth_root(mpz_class(-1), 2), std::invalid_argument);
}

TEST_CASE("bounds on the running example") {
    Hypergraph h = fixtures::running_example();

    AverageDegreeBound lo = lower_bound_average_degree(h);
    CHECK(lo.value == Rational(6, 5));
    CHECK_FALSE(lo.equality_predicted);

    MaxDegreeBound hi = upper_bound_max_degree(h);
    CHECK(hi.value == 2);
    CHECK_FALSE(hi.equality_predicted);

    EdgeDegreeProductBound edp = upper_bound_edge_degree_product(h);
    CHECK(edp.witness_edge == std::vector<int>{4, 5});  // degrees (2,1): 2^3 * 1 = 8
    CHECK(edp.radicand == 8);
    CHECK(edp.root_index == 4);
    CHECK(edp.value == doctest::Approx(std::pow(8.0, 0.25)).epsilon(1e-15));

    YuanPairwiseBound yuan = upper_bound_yuan_pairwise(h);
    CHECK(yuan.max_pair_product == 2);
    CHECK(yuan.value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

    BoundsReport r = bounds_report(h);
    CHECK(r.lower_average_degree == Rational(6, 5));
    CHECK(r.upper_max_degree == 2);
    CHECK(r.best_upper == edp.value);  // tighter than the max degree
    CHECK(r.upper_yuan_pairwise.has_value());
    CHECK_FALSE(r.yuan_in_best);  // pairwise bound needs a uniform host
    CHECK_FALSE(r.upper_uniform_geometric_mean.has_value());
    CHECK_FALSE(r.per_component);
    CHECK_FALSE(r.sandwich_checked);
}

TEST_CASE("regular hosts collapse every bound to the common degree") {
    BoundsReport k2 = bounds_report(fixtures::k2());
    CHECK(k2.lower_average_degree == 1);
    CHECK(k2.lower_equality_predicted);
    CHECK(k2.upper_max_degree == 1);
    CHECK(k2.upper_max_equality_predicted);
    CHECK(*k2.upper_edge_degree_product == 1.0);
    CHECK(*k2.upper_yuan_pairwise == 1.0);
    CHECK(k2.yuan_in_best);
    CHECK(k2.best_upper == 1.0);

    BoundsReport c = bounds_report(fixtures::complete_3uniform_4());
    CHECK(c.lower_average_degree == 3);
    CHECK(c.lower_equality_predicted);
    CHECK(c.upper_max_degree == 3);
    CHECK(*c.upper_edge_degree_product == 3.0);  // 27^(1/3), exactly
    CHECK(*c.upper_uniform_geometric_mean == 3.0);
    CHECK(*c.upper_yuan_pairwise == 3.0);
    CHECK(c.best_upper == 3.0);
}

TEST_CASE("star bounds") {
    BoundsReport r = bounds_report(fixtures::star_k13());
    CHECK(r.lower_average_degree == Rational(3, 2));
    CHECK_FALSE(r.lower_equality_predicted);
    CHECK(r.upper_max_degree == 3);
    CHECK(*r.upper_edge_degree_product == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    CHECK(r.best_upper == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
}

TEST_CASE("tie on the witness picks the lexicographically first edge") {
    EdgeDegreeProductBound edp = upper_bound_edge_degree_product(fixtures::cycle4());
    CHECK(edp.witness_edge == std::vector<int>{1, 2});
    CHECK(edp.radicand == 4);
    CHECK(edp.value == 2.0);
}

TEST_CASE("uniform hosts: edge product bound never exceeds the pairwise bound") {
    std::mt19937 rng(5150);
    testsupport::RandomSpec spec;
    spec.require_connected = true;
    for (int size : {2, 3, 4}) {
        spec.min_edge_size = spec.max_edge_size = size;
        spec.min_vertices = size;
        for (int t = 0; t < 20; ++t) {
            Hypergraph h = testsupport::random_hypergraph(rng, spec);
            EdgeDegreeProductBound edp = upper_bound_edge_degree_product(h);
            YuanPairwiseBound yuan = upper_bound_yuan_pairwise(h);
            // compare radicand^2 against pairmax^k without leaving integers
            mpz_class lhs = edp.radicand * edp.radicand;
            mpz_class rhs;
            mpz_pow_ui(rhs.get_mpz_t(), yuan.max_pair_product.get_mpz_t(),
                       static_cast<unsigned long>(h.rank()));
            CHECK(lhs <= rhs);
            BoundsReport r = bounds_report(h);
            CHECK(*r.upper_uniform_geometric_mean == *r.upper_edge_degree_product);
            CHECK(r.yuan_in_best);
            CHECK(r.best_upper <= *r.upper_yuan_pairwise + 1e-15);
        }
    }
}

TEST_CASE("disconnected hosts take the tightest per-component average") {
    BoundsReport r = bounds_report(fixtures::disconnected_mixed());
    CHECK(r.per_component);
    CHECK(r.lower_average_degree == Rational(4, 3));  // the path block beats the triangle
    CHECK(r.upper_max_degree == 2);
}

TEST_CASE("edgeless hosts report trivial bounds") {
    BoundsReport r = bounds_report(Hypergraph(3, {}));
    CHECK(r.lower_average_degree == 0);
    CHECK(r.upper_max_degree == 0);
    CHECK_FALSE(r.upper_edge_degree_product.has_value());
    CHECK_FALSE(r.upper_yuan_pairwise.has_value());
    CHECK(r.best_upper == 0.0);

    CHECK_THROWS_AS(upper_bound_edge_degree_product(Hypergraph(3, {})), std::domain_error);
    CHECK_THROWS_AS(upper_bound_yuan_pairwise(Hypergraph(3, {})), std::domain_error);
    CHECK_THROWS_AS(lower_bound_average_degree(Hypergraph(0, {})), std::domain_error);
}

TEST_CASE("sandwich verification against a supplied enclosure") {
    Hypergraph h = fixtures::running_example();
    PerronResult ok;
    ok.rho_lower = 1.27;
    ok.rho_upper = 1.28;
    BoundsReport r = bounds_report(h, &ok);
    CHECK(r.sandwich_checked);
    CHECK(r.sandwich_holds);

    PerronResult bad;
    bad.rho_lower = 5.0;
    bad.rho_upper = 6.0;
    BoundsReport v = bounds_report(h, &bad);
    CHECK(v.sandwich_checked);
    CHECK_FALSE(v.sandwich_holds);
}
