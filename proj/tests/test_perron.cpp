#include <cmath>
#include <random>

#include "doctest.h"
#include "hyperten/perron.hpp"
#include "hyperten/tensor.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random_hypergraph.hpp"

using namespace hyperten;

namespace {

PerronResult solve_adjacency(const Hypergraph& h, double tol = 1e-10) {
    PerronOptions opts;
    opts.tol = tol;
    return spectral_radius(h, TensorKind::adjacency, opts);
}

void check_encloses(const PerronResult& r, double expected, double tol = 1e-8) {
    CHECK(r.converged);
    CHECK(r.rho_lower <= expected + tol);
    CHECK(r.rho_upper >= expected - tol);
    CHECK(std::fabs(r.estimate() - expected) <= tol);
}

}  // namespace

TEST_CASE("closed-form graph spectral radii") {
    check_encloses(solve_adjacency(fixtures::k2()), 1.0);
    check_encloses(solve_adjacency(fixtures::path3()), std::sqrt(2.0));
    check_encloses(solve_adjacency(fixtures::cycle4()), 2.0);
    check_encloses(solve_adjacency(fixtures::star_k13()), std::sqrt(3.0));
#if defined(HYPERTEN_HAVE_EIGEN)
    for (const Hypergraph& h : {fixtures::k2(), fixtures::path3(), fixtures::cycle4(),
                                fixtures::star_k13(), fixtures::cycle5()}) {
        PerronResult r = solve_adjacency(h);
        CHECK(std::fabs(r.estimate() - testsupport::matrix_spectral_radius(h)) <= 1e-8);
    }
#endif
}

TEST_CASE("running example enclosure sits inside its degree bounds") {
    PerronResult r = solve_adjacency(fixtures::running_example());
    CHECK(r.converged);
    CHECK(r.width() <= 1e-8);
    CHECK(r.rho_lower >= 1.2 - 1e-12);     // average degree 6/5
    CHECK(r.rho_upper <= 1.6818 + 1e-4);   // edge degree product bound 8^(1/4)

    auto [lo, hi] = testsupport::dense_power_enclosure(dense_adjacency(fixtures::running_example()));
    CHECK(std::fabs(r.estimate() - 0.5 * (lo + hi)) <= 1e-8);
}

TEST_CASE("signless radius dominates the adjacency radius") {
    for (const Hypergraph& h : {fixtures::running_example(), fixtures::cycle4(),
                                fixtures::mixed_feasible(), fixtures::complete_3uniform_4()}) {
        PerronResult a = spectral_radius(h, TensorKind::adjacency);
        PerronResult q = spectral_radius(h, TensorKind::signless);
        CHECK(q.rho_upper >= a.rho_lower - 1e-12);
        CHECK(q.estimate() >= a.estimate() - 1e-8);
    }
    // row sums of Q are twice the degrees, capping its radius
    PerronResult q = spectral_radius(fixtures::cycle4(), TensorKind::signless);
    CHECK(q.rho_upper <= 4.0 + 1e-8);
}

TEST_CASE("enclosure trace is monotone") {
    PerronOptions opts;
    opts.record_trace = true;
    PerronResult r = spectral_radius(fixtures::running_example(), TensorKind::adjacency, opts);
    REQUIRE(r.trace.size() > 2);
    double lo = 0.0, hi = std::numeric_limits<double>::infinity();
    for (auto [l, u] : r.trace) {
        CHECK(l <= u + 1e-14);
        lo = std::max(lo, l);
        hi = std::min(hi, u);
        CHECK(lo <= hi + 1e-14);  // running intersection stays nonempty
    }
    CHECK(r.rho_lower == doctest::Approx(lo));
    CHECK(r.rho_upper == doctest::Approx(hi));
}

TEST_CASE("quotient bracket at the all-ones vector spans the degree range") {
    auto [lo, hi] =
        collatz_wielandt(fixtures::running_example(), TensorKind::adjacency, {1, 1, 1, 1, 1});
    CHECK(lo == doctest::Approx(1.0));
    CHECK(hi == doctest::Approx(2.0));
    CHECK_THROWS_AS(
        collatz_wielandt(fixtures::k2(), TensorKind::adjacency, {1.0, 0.0}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        collatz_wielandt(fixtures::k2(), TensorKind::adjacency, {1.0, -1.0}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        collatz_wielandt(fixtures::k2(), TensorKind::laplacian, {1.0, 1.0}),
        std::invalid_argument);
}

TEST_CASE("iteration cap yields a valid but unconverged enclosure") {
    PerronOptions opts;
    opts.max_iterations = 2;
    // an irregular host cannot converge in two steps at this tolerance
    PerronResult r = spectral_radius(fixtures::running_example(), TensorKind::adjacency, opts);
    CHECK_FALSE(r.converged);
    CHECK(r.iterations == 2);
    const double rho = 1.2773029345363953;  // tight solve, frozen midpoint
    CHECK(r.rho_lower <= rho + 1e-9);
    CHECK(r.rho_upper >= rho - 1e-9);

    // regular hosts close the bracket immediately
    PerronResult reg = spectral_radius(fixtures::cycle4(), TensorKind::adjacency, opts);
    CHECK(reg.converged);
    CHECK(reg.iterations == 1);
    CHECK(reg.rho_lower == doctest::Approx(2.0));
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(spectral_radius(fixtures::k2(), TensorKind::laplacian),
                    std::invalid_argument);
    CHECK_THROWS_AS(spectral_radius(fixtures::disconnected_mixed(), TensorKind::adjacency),
                    std::invalid_argument);
    CHECK_THROWS_AS(spectral_radius(Hypergraph(3, {}), TensorKind::adjacency),
                    std::domain_error);
    PerronOptions bad;
    bad.tol = 0.0;
    CHECK_THROWS_AS(spectral_radius(fixtures::k2(), TensorKind::adjacency, bad),
                    std::invalid_argument);
}

TEST_CASE("per-component solve takes the dominant block") {
    Hypergraph h = fixtures::disconnected_mixed();
    PerronResult r = spectral_radius_per_component(h, TensorKind::adjacency);
    CHECK(r.converged);
    // the {1,2,3} block contributes exactly 1; the {4,5,6} block exceeds its
    // average degree 4/3, so it wins
    CHECK(r.rho_lower >= 4.0 / 3.0 - 1e-8);
    CHECK(r.rho_upper <= 2.0 + 1e-8);  // max degree of the winning block
    REQUIRE(r.vector.size() == 7);
    CHECK(r.vector[0] == 0.0);
    CHECK(r.vector[1] == 0.0);
    CHECK(r.vector[2] == 0.0);
    CHECK(r.vector[3] > 0.0);
    CHECK(r.vector[4] > 0.0);
    CHECK(r.vector[5] > 0.0);
    CHECK(r.vector[6] == 0.0);  // isolated vertex

    PerronResult two = spectral_radius_per_component(fixtures::two_cycles4(),
                                                     TensorKind::adjacency);
    check_encloses(two, 2.0);

    PerronResult none = spectral_radius_per_component(Hypergraph(4, {}),
                                                      TensorKind::adjacency);
    CHECK(none.converged);
    CHECK(none.rho_lower == 0.0);
    CHECK(none.rho_upper == 0.0);
}

TEST_CASE("per-component enclosure is the max of the blocks") {
    // path block (radius sqrt 2) loses to the square block (radius 2)
    Hypergraph h(7, {{1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
    PerronResult r = spectral_radius_per_component(h, TensorKind::adjacency);
    check_encloses(r, 2.0);
    for (int i = 0; i < 3; ++i) CHECK(r.vector[i] == 0.0);
    for (int i = 3; i < 7; ++i) CHECK(r.vector[i] > 0.0);
}

TEST_CASE("nonnegative quotients never exceed the certified upper bound") {
    std::mt19937 rng(123);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (const Hypergraph& h : {fixtures::running_example(), fixtures::cycle4(),
                                fixtures::complete_3uniform_4(), fixtures::mixed_feasible()}) {
        PerronResult r = solve_adjacency(h);
        for (int rep = 0; rep < 50; ++rep) {
            std::vector<double> x(h.vertex_count());
            double sum = 0.0;
            for (auto& v : x) {
                v = u(rng);
                sum += v;
            }
            if (sum == 0.0) x[0] = 1.0;
            CHECK(rayleigh(h, TensorKind::adjacency, x) <= r.rho_upper + 1e-8);
        }
    }
    CHECK_THROWS_AS(rayleigh(fixtures::k2(), TensorKind::adjacency, {1.0, -0.5}),
                    std::invalid_argument);
    CHECK_THROWS_AS(rayleigh(fixtures::k2(), TensorKind::adjacency, {0.0, 0.0}),
                    std::invalid_argument);
}

TEST_CASE("removing an edge strictly lowers the radius of a connected host") {
    Hypergraph h = fixtures::cycle4();
    Hypergraph g(4, {{1, 2}, {2, 3}});
    CHECK(check_strict_monotonicity(h, g) == Monotonicity::strict);

    Hypergraph hp = fixtures::running_example();
    Hypergraph gp(5, {{1, 2, 3, 4}});
    CHECK(check_strict_monotonicity(hp, gp) == Monotonicity::strict);

    CHECK_THROWS_AS(check_strict_monotonicity(h, h), std::invalid_argument);
    CHECK_THROWS_AS(check_strict_monotonicity(h, Hypergraph(4, {{1, 3}})),
                    std::invalid_argument);  // not an edge of the host
    CHECK_THROWS_AS(check_strict_monotonicity(hp, Hypergraph(5, {{4, 5}})),
                    std::invalid_argument);  // rank drops
    CHECK_THROWS_AS(
        check_strict_monotonicity(fixtures::disconnected_mixed(), fixtures::triangle_edge()),
        std::invalid_argument);  // host must be connected
}

TEST_CASE("random sub-hypergraph comparisons are never inverted") {
    std::mt19937 rng(2026);
    testsupport::RandomSpec spec;
    spec.require_connected = true;
    spec.max_vertices = 8;
    int checked = 0;
    while (checked < 25) {
        Hypergraph h = testsupport::random_hypergraph(rng, spec);
        Hypergraph g;
        if (!testsupport::drop_edge_same_rank(rng, h, g)) continue;
        ++checked;
        CHECK(check_strict_monotonicity(h, g) != Monotonicity::inverted);
    }
}
