#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperten/bounds.hpp"
#include "hyperten/hypergraph.hpp"
#include "hyperten/odd_bipartite.hpp"
#include "hyperten/perron.hpp"
#include "hyperten/tensor.hpp"

namespace hyperten {

inline constexpr int kReportSchemaVersion = 1;

struct ReportOptions {
    double tol = 1e-10;
    long max_iterations = 100000;
    std::string target = "both";  // "a", "q", or "both"
    int workers = 0;              // 0 = HYPERTEN_THREADS
    std::size_t budget = kDefaultDenseBudget;
};

struct OddBipartiteSection {
    OddBipartition bipartition;
    std::vector<std::vector<int>> witness_edges_resolved;  // vertex lists
    // Certificates are attached only for a feasible bipartition.
    std::optional<double> signed_perron_residual;  // absent when the solve failed
    bool signed_skipped = false;
    std::optional<bool> signless_kernel_exact;
    std::optional<bool> similarity_exact;  // absent when over the dense budget
};

struct SpectralReport {
    int vertices = 0;
    int edge_count = 0;
    int rank = 0;
    int corank = 0;
    bool uniform = false;
    bool regular = false;
    bool connected = false;
    std::vector<std::vector<int>> components;
    std::vector<int> degrees;
    Rational average_degree;

    ReportOptions settings;

    std::optional<PerronResult> perron_adjacency;
    std::optional<PerronResult> perron_signless;

    BoundsReport bounds;
    OddBipartiteSection odd_bipartite;

    bool all_converged = true;
};

// Runs every analysis stage. Disconnected hosts are solved per component;
// an unconverged solve leaves all_converged false and the dependent
// certificate skipped, never throws.
SpectralReport build_report(const Hypergraph& h, const ReportOptions& opts = {});

// Canonical JSON: fixed key order, floats at 17 significant digits, no
// locale dependence. Byte-identical for identical inputs and settings.
std::string report_json(const SpectralReport& r);

std::string report_text(const SpectralReport& r);

// Shared float formatting (%.17g) for every JSON emitter in the project.
std::string format_double(double v);

std::string perron_json(const PerronResult& r, double tol, long max_iterations);
std::string perron_text(const PerronResult& r);
std::string bounds_json(const BoundsReport& b);
std::string bounds_text(const BoundsReport& b);

}  // namespace hyperten
