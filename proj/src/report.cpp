#include "hyperten/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string_view>

#include "hyperten/apply.hpp"

namespace hyperten {

namespace {

// Minimal canonical emitter: insertion-ordered keys, no whitespace variance.
class JsonOut {
public:
    void begin_object() {
        element_prefix();
        out_ += '{';
        first_.push_back(true);
    }
    void end_object() {
        out_ += '}';
        first_.pop_back();
    }
    void begin_array() {
        element_prefix();
        out_ += '[';
        first_.push_back(true);
    }
    void end_array() {
        out_ += ']';
        first_.pop_back();
    }
    void key(std::string_view k) {
        element_prefix();
        out_ += '"';
        append_escaped(k);
        out_ += "\":";
        first_.back() = true;  // the value that follows takes no comma
    }
    void value(std::string_view s) {
        element_prefix();
        out_ += '"';
        append_escaped(s);
        out_ += '"';
    }
    void value(const char* s) { value(std::string_view(s)); }
    void value(bool b) {
        element_prefix();
        out_ += b ? "true" : "false";
    }
    void value(long long v) {
        element_prefix();
        out_ += std::to_string(v);
    }
    void value(int v) { value(static_cast<long long>(v)); }
    void value(long v) { value(static_cast<long long>(v)); }
    void value(std::size_t v) { value(static_cast<long long>(v)); }
    void value_double(double v) {
        element_prefix();
        if (!std::isfinite(v)) {
            out_ += "null";
            return;
        }
        out_ += format_double(v);
    }
    void null() {
        element_prefix();
        out_ += "null";
    }

    std::string take() { return std::move(out_); }

private:
    void element_prefix() {
        if (first_.empty()) return;
        if (!first_.back()) out_ += ',';
        first_.back() = false;
    }
    void append_escaped(std::string_view s) {
        for (char c : s) {
            switch (c) {
                case '"': out_ += "\\\""; break;
                case '\\': out_ += "\\\\"; break;
                case '\n': out_ += "\\n"; break;
                case '\r': out_ += "\\r"; break;
                case '\t': out_ += "\\t"; break;
                default:
                    if (static_cast<unsigned char>(c) < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof buf, "\\u%04x", c);
                        out_ += buf;
                    } else {
                        out_ += c;
                    }
            }
        }
    }

    std::string out_;
    std::vector<bool> first_;
};

void emit_int_array(JsonOut& j, const std::vector<int>& v) {
    j.begin_array();
    for (int x : v) j.value(x);
    j.end_array();
}

void emit_perron(JsonOut& j, const PerronResult& r) {
    j.begin_object();
    j.key("target");
    j.value(tensor_kind_name(r.target));
    j.key("rho_lower");
    j.value_double(r.rho_lower);
    j.key("rho_upper");
    j.value_double(r.rho_upper);
    j.key("estimate");
    j.value_double(r.estimate());
    j.key("width");
    j.value_double(r.width());
    j.key("iterations");
    j.value(r.iterations);
    j.key("converged");
    j.value(r.converged);
    j.key("vector");
    j.begin_array();
    for (double v : r.vector) j.value_double(v);
    j.end_array();
    j.end_object();
}

void emit_bounds(JsonOut& j, const BoundsReport& b) {
    j.begin_object();
    j.key("lower_average_degree");
    j.value(to_string(b.lower_average_degree));
    j.key("lower_average_degree_value");
    j.value_double(to_double(b.lower_average_degree));
    j.key("lower_equality_predicted");
    j.value(b.lower_equality_predicted);
    j.key("upper_max_degree");
    j.value(b.upper_max_degree);
    j.key("upper_max_equality_predicted");
    j.value(b.upper_max_equality_predicted);
    j.key("upper_edge_degree_product");
    if (b.upper_edge_degree_product)
        j.value_double(*b.upper_edge_degree_product);
    else
        j.null();
    j.key("witness_edge");
    emit_int_array(j, b.witness_edge);
    j.key("upper_uniform_geometric_mean");
    if (b.upper_uniform_geometric_mean)
        j.value_double(*b.upper_uniform_geometric_mean);
    else
        j.null();
    j.key("upper_yuan_pairwise");
    if (b.upper_yuan_pairwise)
        j.value_double(*b.upper_yuan_pairwise);
    else
        j.null();
    j.key("yuan_in_best");
    j.value(b.yuan_in_best);
    j.key("best_upper");
    j.value_double(b.best_upper);
    j.key("per_component");
    j.value(b.per_component);
    j.key("sandwich_checked");
    j.value(b.sandwich_checked);
    j.key("sandwich_holds");
    j.value(b.sandwich_holds);
    j.end_object();
}

void emit_odd_bipartite(JsonOut& j, const OddBipartiteSection& o,
                        const std::vector<std::vector<int>>& witness_edges) {
    const OddBipartition& bip = o.bipartition;
    j.begin_object();
    j.key("odd_bipartite");
    j.value(bip.feasible);
    j.key("V1");
    if (bip.feasible)
        emit_int_array(j, bip.v1);
    else
        j.null();
    j.key("witness");
    if (bip.feasible) {
        j.null();
    } else {
        j.begin_object();
        j.key("type");
        j.value(bip.witness_odd_edge ? "odd_edge" : "gf2_inconsistency");
        j.key("edge_indices");
        j.begin_array();
        for (size_t idx : bip.witness_edges) j.value(idx + 1);
        j.end_array();
        j.key("edges");
        j.begin_array();
        for (const auto& e : witness_edges) emit_int_array(j, e);
        j.end_array();
        j.end_object();
    }
    j.key("certificates");
    if (!bip.feasible) {
        j.null();
    } else {
        j.begin_object();
        j.key("signed_perron_residual");
        if (o.signed_perron_residual)
            j.value_double(*o.signed_perron_residual);
        else
            j.null();
        j.key("signless_kernel_exact");
        if (o.signless_kernel_exact)
            j.value(*o.signless_kernel_exact);
        else
            j.null();
        j.key("similarity_exact");
        if (o.similarity_exact)
            j.value(*o.similarity_exact);
        else
            j.null();
        j.key("skipped");
        j.value(o.signed_skipped);
        j.end_object();
    }
    j.end_object();
}

std::string join_vertices(const std::vector<int>& vs) {
    std::string s = "{";
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(vs[i]);
    }
    s += "}";
    return s;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

SpectralReport build_report(const Hypergraph& h, const ReportOptions& opts) {
    SpectralReport r;
    r.vertices = h.vertex_count();
    r.edge_count = static_cast<int>(h.edges().size());
    r.rank = h.rank();
    r.corank = h.corank();
    r.uniform = is_uniform(h);
    r.regular = is_regular(h);
    r.connected = is_connected(h);
    r.components = connected_components(h);
    DegreeProfile prof = degree_profile(h);
    r.degrees = prof.degrees;
    r.average_degree = prof.average_degree;
    r.settings = opts;

    PerronOptions popts;
    popts.tol = opts.tol;
    popts.max_iterations = opts.max_iterations;
    popts.workers = opts.workers;

    const bool want_a = opts.target == "a" || opts.target == "both";
    const bool want_q = opts.target == "q" || opts.target == "both";
    if (want_a) {
        r.perron_adjacency = spectral_radius_per_component(h, TensorKind::adjacency, popts);
        r.all_converged = r.all_converged && r.perron_adjacency->converged;
    }
    if (want_q) {
        r.perron_signless = spectral_radius_per_component(h, TensorKind::signless, popts);
        r.all_converged = r.all_converged && r.perron_signless->converged;
    }

    r.bounds = bounds_report(h, r.perron_adjacency ? &*r.perron_adjacency : nullptr);

    r.odd_bipartite.bipartition = find_odd_bipartition(h);
    for (size_t idx : r.odd_bipartite.bipartition.witness_edges)
        r.odd_bipartite.witness_edges_resolved.push_back(h.edges()[idx]);
    if (r.odd_bipartite.bipartition.feasible) {
        r.odd_bipartite.signless_kernel_exact =
            signless_kernel_certificate(h, r.odd_bipartite.bipartition).value == 0.0;
        try {
            r.odd_bipartite.similarity_exact =
                similarity_certificate(h, r.odd_bipartite.bipartition, opts.budget);
        } catch (const BudgetError&) {
            // left unset, serialized as null
        }
        if (h.has_edges() && r.perron_adjacency && r.perron_adjacency->converged) {
            // The embedded per-component vector certifies disconnected hosts
            // as well: entries outside the winning component are zero on both
            // sides of the residual.
            SignVector signs =
                SignVector::from_bipartition(h.vertex_count(), r.odd_bipartite.bipartition.v1);
            std::vector<double> z = r.perron_adjacency->vector;
            for (size_t i = 0; i < z.size(); ++i) z[i] *= signs.entries[i];
            auto apply = [&](const std::vector<double>& x) {
                return adjacency_apply(h, x, opts.workers);
            };
            r.odd_bipartite.signed_perron_residual =
                eigen_residual(apply, h.rank(), -r.perron_adjacency->estimate(), std::move(z))
                    .value;
        } else {
            r.odd_bipartite.signed_skipped = true;
        }
    }
    return r;
}

std::string report_json(const SpectralReport& r) {
    JsonOut j;
    j.begin_object();
    j.key("schema_version");
    j.value(kReportSchemaVersion);

    j.key("input");
    j.begin_object();
    j.key("vertices");
    j.value(r.vertices);
    j.key("edges");
    j.value(r.edge_count);
    j.key("rank");
    j.value(r.rank);
    j.key("corank");
    j.value(r.corank);
    j.key("uniform");
    j.value(r.uniform);
    j.key("regular");
    j.value(r.regular);
    j.key("connected");
    j.value(r.connected);
    j.key("component_count");
    j.value(r.components.size());
    j.key("components");
    j.begin_array();
    for (const auto& c : r.components) emit_int_array(j, c);
    j.end_array();
    j.key("degrees");
    emit_int_array(j, r.degrees);
    j.key("average_degree");
    j.value(to_string(r.average_degree));
    j.key("average_degree_value");
    j.value_double(to_double(r.average_degree));
    j.end_object();

    j.key("settings");
    j.begin_object();
    j.key("tol");
    j.value_double(r.settings.tol);
    j.key("max_iterations");
    j.value(r.settings.max_iterations);
    j.key("target");
    j.value(r.settings.target);
    j.key("workers");
    j.value(r.settings.workers);
    j.key("budget");
    j.value(r.settings.budget);
    j.end_object();

    j.key("perron");
    j.begin_object();
    j.key("adjacency");
    if (r.perron_adjacency)
        emit_perron(j, *r.perron_adjacency);
    else
        j.null();
    j.key("signless");
    if (r.perron_signless)
        emit_perron(j, *r.perron_signless);
    else
        j.null();
    j.end_object();

    j.key("bounds");
    emit_bounds(j, r.bounds);

    j.key("odd_bipartite");
    emit_odd_bipartite(j, r.odd_bipartite, r.odd_bipartite.witness_edges_resolved);

    j.key("all_converged");
    j.value(r.all_converged);
    j.end_object();
    std::string out = j.take();
    out += '\n';
    return out;
}

std::string perron_json(const PerronResult& r, double tol, long max_iterations) {
    JsonOut j;
    j.begin_object();
    j.key("schema_version");
    j.value(kReportSchemaVersion);
    j.key("tol");
    j.value_double(tol);
    j.key("max_iterations");
    j.value(max_iterations);
    j.key("result");
    emit_perron(j, r);
    j.end_object();
    std::string out = j.take();
    out += '\n';
    return out;
}

std::string bounds_json(const BoundsReport& b) {
    JsonOut j;
    j.begin_object();
    j.key("schema_version");
    j.value(kReportSchemaVersion);
    j.key("bounds");
    emit_bounds(j, b);
    j.end_object();
    std::string out = j.take();
    out += '\n';
    return out;
}

std::string perron_text(const PerronResult& r) {
    std::ostringstream os;
    os << tensor_kind_name(r.target) << " spectral radius: " << format_double(r.estimate())
       << "\n  enclosure [" << format_double(r.rho_lower) << ", " << format_double(r.rho_upper)
       << "], width " << format_double(r.width()) << "\n  " << r.iterations << " iterations, "
       << (r.converged ? "converged" : "NOT converged") << "\n";
    return os.str();
}

std::string bounds_text(const BoundsReport& b) {
    std::ostringstream os;
    os << "bounds on the adjacency spectral radius:\n";
    os << "  lower (average degree): " << to_string(b.lower_average_degree) << " = "
       << format_double(to_double(b.lower_average_degree))
       << (b.lower_equality_predicted ? " (equality: regular)" : "") << "\n";
    os << "  upper (max degree): " << b.upper_max_degree
       << (b.upper_max_equality_predicted ? " (equality: regular)" : "") << "\n";
    if (b.upper_edge_degree_product) {
        os << "  upper (edge degree product): " << format_double(*b.upper_edge_degree_product)
           << ", witness edge " << join_vertices(b.witness_edge) << "\n";
    }
    if (b.upper_uniform_geometric_mean) {
        os << "  upper (uniform geometric mean): "
           << format_double(*b.upper_uniform_geometric_mean) << "\n";
    }
    if (b.upper_yuan_pairwise) {
        os << "  upper (pairwise degrees): " << format_double(*b.upper_yuan_pairwise)
           << (b.yuan_in_best ? "" : " (informational: host is not uniform)") << "\n";
    }
    os << "  best upper: " << format_double(b.best_upper) << "\n";
    if (b.per_component) os << "  note: connectivity hypothesis applied per component\n";
    if (b.sandwich_checked) {
        os << "  sandwich check: " << (b.sandwich_holds ? "holds" : "VIOLATED") << "\n";
    }
    return os.str();
}

std::string report_text(const SpectralReport& r) {
    std::ostringstream os;
    os << "hypergraph: " << r.vertices << " vertices, " << r.edge_count << " edges\n";
    os << "rank " << r.rank << ", corank " << r.corank << ", "
       << (r.uniform ? "uniform" : "non-uniform") << ", "
       << (r.regular ? "regular" : "non-regular") << ", "
       << (r.connected ? "connected" : "disconnected") << " (" << r.components.size()
       << (r.components.size() == 1 ? " component)" : " components)") << "\n";
    os << "degrees:";
    for (int d : r.degrees) os << ' ' << d;
    os << " (average " << to_string(r.average_degree) << ")\n";
    if (r.perron_adjacency) os << perron_text(*r.perron_adjacency);
    if (r.perron_signless) os << perron_text(*r.perron_signless);
    os << bounds_text(r.bounds);

    const OddBipartition& bip = r.odd_bipartite.bipartition;
    if (bip.feasible) {
        os << "odd-bipartite: yes, V1 = " << join_vertices(bip.v1) << "\n";
        os << "  certificates:";
        if (r.odd_bipartite.signed_perron_residual) {
            os << " signed-perron residual "
               << format_double(*r.odd_bipartite.signed_perron_residual) << ",";
        } else {
            os << " signed-perron skipped,";
        }
        if (r.odd_bipartite.signless_kernel_exact) {
            os << " signless kernel "
               << (*r.odd_bipartite.signless_kernel_exact ? "exact" : "NOT exact") << ",";
        }
        if (r.odd_bipartite.similarity_exact) {
            os << " similarity " << (*r.odd_bipartite.similarity_exact ? "exact" : "NOT exact");
        } else {
            os << " similarity skipped (budget)";
        }
        os << "\n";
    } else {
        os << "odd-bipartite: no\n";
        os << "  witness ("
           << (bip.witness_odd_edge ? "odd edge" : "inconsistent edge subset") << "):";
        for (const auto& e : r.odd_bipartite.witness_edges_resolved)
            os << ' ' << join_vertices(e);
        os << "\n";
    }
    if (!r.all_converged) os << "WARNING: at least one solve did not converge\n";
    return os.str();
}

}  // namespace hyperten
