#include <cstddef>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hyperten/bounds.hpp"
#include "hyperten/hypergraph.hpp"
#include "hyperten/odd_bipartite.hpp"
#include "hyperten/perron.hpp"
#include "hyperten/report.hpp"
#include "hyperten/tensor.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInput = 2;
constexpr int kExitNoConverge = 3;
constexpr int kExitBudget = 4;

hyperten::Hypergraph load(const std::string& path, bool allow_singletons) {
    std::ifstream in(path);
    if (!in) throw hyperten::ParseError(0, "cannot open file: " + path);
    return hyperten::parse_hypergraph(in, allow_singletons);
}

std::string vertices_text(const std::vector<int>& vs) {
    std::string s = "{";
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(vs[i]);
    }
    return s + "}";
}

int run_report(const std::string& path, const std::string& format, double tol, long max_iters,
               const std::string& target, bool allow_singletons, std::size_t budget) {
    hyperten::Hypergraph h = load(path, allow_singletons);
    hyperten::ReportOptions opts;
    opts.tol = tol;
    opts.max_iterations = max_iters;
    opts.target = target;
    opts.budget = budget;
    hyperten::SpectralReport rep = hyperten::build_report(h, opts);
    std::cout << (format == "json" ? hyperten::report_json(rep) : hyperten::report_text(rep));
    return rep.all_converged ? kExitOk : kExitNoConverge;
}

int run_tensor(const std::string& path, const std::string& which, std::size_t budget,
               bool allow_singletons) {
    hyperten::Hypergraph h = load(path, allow_singletons);
    hyperten::DenseTensor t;
    if (which == "a")
        t = hyperten::dense_adjacency(h, budget);
    else if (which == "l")
        t = hyperten::dense_laplacian(h, budget);
    else
        t = hyperten::dense_signless(h, budget);
    for (const auto& line : hyperten::dense_nonzero_lines(t)) std::cout << line << '\n';
    return kExitOk;
}

int run_oddbip(const std::string& path, bool allow_singletons) {
    hyperten::Hypergraph h = load(path, allow_singletons);
    hyperten::OddBipartition bip = hyperten::find_odd_bipartition(h);
    if (bip.feasible) {
        std::cout << "odd-bipartite: yes, V1 = " << vertices_text(bip.v1) << '\n';
        return kExitOk;
    }
    std::cout << "odd-bipartite: no\n";
    std::cout << "witness (" << (bip.witness_odd_edge ? "odd edge" : "inconsistent edge subset")
              << "):";
    for (size_t idx : bip.witness_edges) std::cout << ' ' << vertices_text(h.edges()[idx]);
    std::cout << '\n';
    return kExitInfeasible;
}

int run_radius(const std::string& path, const std::string& format, double tol, long max_iters,
               const std::string& target, bool allow_singletons) {
    hyperten::Hypergraph h = load(path, allow_singletons);
    hyperten::PerronOptions opts;
    opts.tol = tol;
    opts.max_iterations = max_iters;
    const auto kind =
        target == "q" ? hyperten::TensorKind::signless : hyperten::TensorKind::adjacency;
    hyperten::PerronResult r = hyperten::spectral_radius_per_component(h, kind, opts);
    std::cout << (format == "json" ? hyperten::perron_json(r, tol, max_iters)
                                   : hyperten::perron_text(r));
    return r.converged ? kExitOk : kExitNoConverge;
}

int run_bounds(const std::string& path, const std::string& format, bool allow_singletons) {
    hyperten::Hypergraph h = load(path, allow_singletons);
    hyperten::BoundsReport b = hyperten::bounds_report(h);
    std::cout << (format == "json" ? hyperten::bounds_json(b) : hyperten::bounds_text(b));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral analysis of general hypergraphs"};
    app.require_subcommand(1);

    std::string path;
    std::string format = "text";
    double tol = 1e-10;
    long max_iters = 100000;
    std::string target = "both";
    std::string radius_target = "a";
    std::string which = "a";
    bool allow_singletons = false;
    std::size_t budget = hyperten::kDefaultDenseBudget;

    auto* report = app.add_subcommand("report", "full spectral report");
    report->add_option("path", path, "edge-list file")->required();
    report->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    report->add_option("--tol", tol, "enclosure tolerance");
    report->add_option("--max-iters", max_iters, "iteration cap");
    report->add_option("--target", target, "which tensors to solve")
        ->check(CLI::IsMember({"a", "q", "both"}));
    report->add_flag("--allow-singleton-edges", allow_singletons, "accept single-vertex edges");
    report->add_option("--budget", budget, "dense-entry cap for the similarity certificate");

    auto* tensor = app.add_subcommand("tensor", "dump exact nonzero tensor entries");
    tensor->add_option("path", path, "edge-list file")->required();
    tensor->add_option("--which", which, "a, l, or q")->check(CLI::IsMember({"a", "l", "q"}));
    tensor->add_option("--budget", budget, "dense-entry cap");
    tensor->add_flag("--allow-singleton-edges", allow_singletons, "accept single-vertex edges");

    auto* oddbip = app.add_subcommand("oddbip", "odd-bipartiteness decision only");
    oddbip->add_option("path", path, "edge-list file")->required();
    oddbip->add_flag("--allow-singleton-edges", allow_singletons, "accept single-vertex edges");

    auto* radius = app.add_subcommand("radius", "certified spectral-radius enclosure");
    radius->add_option("path", path, "edge-list file")->required();
    radius->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    radius->add_option("--tol", tol, "enclosure tolerance");
    radius->add_option("--max-iters", max_iters, "iteration cap");
    radius->add_option("--target", radius_target, "a or q")->check(CLI::IsMember({"a", "q"}));
    radius->add_flag("--allow-singleton-edges", allow_singletons, "accept single-vertex edges");

    auto* bounds = app.add_subcommand("bounds", "degree-based bounds only");
    bounds->add_option("path", path, "edge-list file")->required();
    bounds->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    bounds->add_flag("--allow-singleton-edges", allow_singletons, "accept single-vertex edges");

    CLI11_PARSE(app, argc, argv);

    try {
        if (report->parsed())
            return run_report(path, format, tol, max_iters, target, allow_singletons, budget);
        if (tensor->parsed()) return run_tensor(path, which, budget, allow_singletons);
        if (oddbip->parsed()) return run_oddbip(path, allow_singletons);
        if (radius->parsed())
            return run_radius(path, format, tol, max_iters, radius_target, allow_singletons);
        if (bounds->parsed()) return run_bounds(path, format, allow_singletons);
    } catch (const hyperten::BudgetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const hyperten::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitOk;
}
