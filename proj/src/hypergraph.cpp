#include "hyperten/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>

namespace hyperten {

Hypergraph::Hypergraph(int vertex_count, std::vector<std::vector<int>> edges,
                       bool allow_singletons)
    : n_(vertex_count) {
    if (n_ < 0) throw std::invalid_argument("vertex count must be nonnegative");
    std::set<std::vector<int>> seen;
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw std::invalid_argument("duplicate vertex in edge");
        int min_size = allow_singletons ? 1 : 2;
        if (static_cast<int>(e.size()) < min_size)
            throw std::invalid_argument("edge has fewer than " + std::to_string(min_size) +
                                        " vertices");
        if (e.front() < 1 || e.back() > n_)
            throw std::invalid_argument("vertex id out of range 1.." + std::to_string(n_));
        if (!seen.insert(e).second) throw std::invalid_argument("duplicate edge");
    }
    edges_.assign(seen.begin(), seen.end());
    if (!edges_.empty()) {
        rank_ = corank_ = static_cast<int>(edges_.front().size());
        for (const auto& e : edges_) {
            rank_ = std::max(rank_, static_cast<int>(e.size()));
            corank_ = std::min(corank_, static_cast<int>(e.size()));
        }
        if (rank_ < 2)
            throw std::invalid_argument("rank must be >= 2 (only singleton edges present)");
    }
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

int parse_positive_int(const std::string& tok, int line_no, const char* what) {
    size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(line_no, std::string("non-integer token '") + tok + "'");
    }
    if (pos != tok.size())
        throw ParseError(line_no, std::string("non-integer token '") + tok + "'");
    if (v < 1 || v > 1'000'000'000)
        throw ParseError(line_no, std::string(what) + " out of range: " + tok);
    return static_cast<int>(v);
}

}  // namespace

Hypergraph parse_hypergraph(std::istream& in, bool allow_singletons) {
    std::string line;
    int line_no = 0;
    int declared_n = -1;
    bool saw_content = false;
    std::vector<std::vector<int>> edges;
    int max_id = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        std::string body = hash == std::string::npos ? line : line.substr(0, hash);
        auto toks = tokenize(body);
        if (toks.empty()) continue;
        if (!saw_content && toks.size() == 2 && toks[0] == "n") {
            declared_n = parse_positive_int(toks[1], line_no, "vertex count");
            saw_content = true;
            continue;
        }
        saw_content = true;
        std::vector<int> edge;
        for (const auto& t : toks)
            edge.push_back(parse_positive_int(t, line_no, "vertex id"));
        std::sort(edge.begin(), edge.end());
        if (std::adjacent_find(edge.begin(), edge.end()) != edge.end())
            throw ParseError(line_no, "duplicate vertex in edge");
        if (!allow_singletons && edge.size() < 2)
            throw ParseError(line_no, "edge has fewer than 2 vertices");
        if (declared_n >= 0 && edge.back() > declared_n)
            throw ParseError(line_no, "vertex id " + std::to_string(edge.back()) +
                                          " exceeds declared count " +
                                          std::to_string(declared_n));
        max_id = std::max(max_id, edge.back());
        edges.push_back(std::move(edge));
    }
    int n = declared_n >= 0 ? declared_n : max_id;
    if (max_id > n)
        throw ParseError(line_no, "vertex id " + std::to_string(max_id) +
                                      " exceeds declared count " + std::to_string(n));
    try {
        return Hypergraph(n, std::move(edges), allow_singletons);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }
}

Hypergraph parse_hypergraph(const std::string& text, bool allow_singletons) {
    std::istringstream ss(text);
    return parse_hypergraph(ss, allow_singletons);
}

std::string serialize(const Hypergraph& h) {
    std::ostringstream out;
    out << "n " << h.vertex_count() << "\n";
    for (const auto& e : h.edges()) {
        for (size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << "\n";
    }
    return out.str();
}

DegreeProfile degree_profile(const Hypergraph& h) {
    DegreeProfile p;
    int n = h.vertex_count();
    p.degrees.assign(n, 0);
    long incidences = 0;
    for (const auto& e : h.edges()) {
        incidences += static_cast<long>(e.size());
        for (int v : e) ++p.degrees[v - 1];
    }
    if (n > 0) {
        p.max_degree = *std::max_element(p.degrees.begin(), p.degrees.end());
        p.min_degree = *std::min_element(p.degrees.begin(), p.degrees.end());
        p.average_degree = make_rational(incidences, n);
    }
    return p;
}

std::pair<int, int> rank_corank(const Hypergraph& h) {
    if (!h.has_edges()) throw std::domain_error("rank/corank undefined for edgeless hypergraph");
    return {h.rank(), h.corank()};
}

bool is_uniform(const Hypergraph& h) {
    return !h.has_edges() || h.rank() == h.corank();
}

bool is_regular(const Hypergraph& h) {
    auto p = degree_profile(h);
    return p.max_degree == p.min_degree;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<std::vector<int>> connected_components(const Hypergraph& h) {
    int n = h.vertex_count();
    UnionFind uf(n);
    for (const auto& e : h.edges())
        for (size_t i = 1; i < e.size(); ++i) uf.unite(e[0] - 1, e[i] - 1);
    std::vector<std::vector<int>> by_root(n);
    for (int v = 0; v < n; ++v) by_root[uf.find(v)].push_back(v + 1);
    std::vector<std::vector<int>> comps;
    for (auto& c : by_root)
        if (!c.empty()) comps.push_back(std::move(c));
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return comps;
}

bool is_connected(const Hypergraph& h) {
    return h.vertex_count() >= 1 && connected_components(h).size() == 1;
}

AdjacencyDigraph adjacency_digraph(const Hypergraph& h) {
    AdjacencyDigraph g;
    g.n = h.vertex_count();
    std::vector<std::set<int>> arcs(g.n);
    for (const auto& e : h.edges())
        for (int i : e)
            for (int j : e)
                if (i != j) arcs[i - 1].insert(j - 1);
    g.arcs.resize(g.n);
    for (int v = 0; v < g.n; ++v) g.arcs[v].assign(arcs[v].begin(), arcs[v].end());
    return g;
}

namespace {

// Iterative Tarjan; returns the number of strongly connected components.
int scc_count(const AdjacencyDigraph& g) {
    int n = g.n;
    std::vector<int> index(n, -1), low(n, 0), stack;
    std::vector<char> on_stack(n, 0);
    int next_index = 0, count = 0;
    struct Frame {
        int v;
        size_t edge;
    };
    std::vector<Frame> frames;
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        frames.push_back({root, 0});
        while (!frames.empty()) {
            auto& [v, ei] = frames.back();
            if (ei == 0) {
                index[v] = low[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = 1;
            }
            bool descended = false;
            while (ei < g.arcs[v].size()) {
                int w = g.arcs[v][ei++];
                if (index[w] == -1) {
                    frames.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[v] = std::min(low[v], index[w]);
            }
            if (descended) continue;
            if (low[v] == index[v]) {
                ++count;
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                } while (w != v);
            }
            int done = v;
            frames.pop_back();
            if (!frames.empty())
                low[frames.back().v] = std::min(low[frames.back().v], low[done]);
        }
    }
    return count;
}

}  // namespace

bool is_weakly_irreducible(const Hypergraph& h) {
    if (h.vertex_count() < 1) return false;
    return scc_count(adjacency_digraph(h)) == 1;
}

SubHypergraph proper_sub_hypergraph(const Hypergraph& h,
                                    const std::vector<int>& keep_vertices,
                                    const std::vector<std::vector<int>>& keep_edges) {
    std::vector<int> verts = keep_vertices;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts)
        if (v < 1 || v > h.vertex_count())
            throw std::invalid_argument("kept vertex out of range");
    std::set<std::vector<int>> host(h.edges().begin(), h.edges().end());
    std::vector<int> renumber(h.vertex_count() + 1, 0);
    for (size_t i = 0; i < verts.size(); ++i) renumber[verts[i]] = static_cast<int>(i) + 1;

    std::vector<std::vector<int>> sub_edges;
    for (auto e : keep_edges) {
        std::sort(e.begin(), e.end());
        if (!host.count(e)) throw std::invalid_argument("kept edge is not an edge of the host");
        for (int v : e)
            if (renumber[v] == 0)
                throw std::invalid_argument("kept edge not contained in kept vertices");
        std::vector<int> mapped;
        mapped.reserve(e.size());
        for (int v : e) mapped.push_back(renumber[v]);
        sub_edges.push_back(std::move(mapped));
    }
    SubHypergraph result;
    result.sub = Hypergraph(static_cast<int>(verts.size()), std::move(sub_edges));
    result.vertex_map = verts;
    result.proper = verts.size() != static_cast<size_t>(h.vertex_count()) ||
                    result.sub.edges().size() != h.edges().size();
    result.same_rank = result.sub.rank() == h.rank();
    return result;
}

}  // namespace hyperten
