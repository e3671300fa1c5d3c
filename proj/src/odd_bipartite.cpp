#include "hyperten/odd_bipartite.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "hyperten/apply.hpp"

namespace hyperten {

namespace {

class BitRow {
public:
    explicit BitRow(size_t bits) : words_((bits + 63) / 64, 0) {}

    bool test(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void operator^=(const BitRow& o) {
        for (size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    }
    bool any() const {
        for (std::uint64_t w : words_)
            if (w != 0) return true;
        return false;
    }

private:
    std::vector<std::uint64_t> words_;
};

struct Gf2Row {
    BitRow cols;
    BitRow prov;  // which original edge rows were XORed into this one
    bool rhs;
};

}  // namespace

SignVector SignVector::from_bipartition(int n, const std::vector<int>& v1) {
    SignVector s;
    s.entries.assign(static_cast<size_t>(n), 1);
    for (int v : v1) {
        if (v < 1 || v > n) throw std::invalid_argument("bipartition vertex out of range");
        s.entries[static_cast<size_t>(v) - 1] = -1;
    }
    return s;
}

OddBipartition find_odd_bipartition(const Hypergraph& h) {
    OddBipartition out;
    const auto& edges = h.edges();
    const size_t m = edges.size();
    const size_t n = static_cast<size_t>(h.vertex_count());

    // |e n V1| odd and |e n V2| odd force |e| even; an odd edge settles it.
    for (size_t i = 0; i < m; ++i) {
        if (edges[i].size() % 2 == 1) {
            out.feasible = false;
            out.witness_odd_edge = true;
            out.witness_edges = {i};
            return out;
        }
    }

    std::vector<Gf2Row> rows;
    rows.reserve(m);
    for (size_t i = 0; i < m; ++i) {
        Gf2Row r{BitRow(n), BitRow(m), true};
        for (int v : edges[i]) r.cols.set(static_cast<size_t>(v) - 1);
        r.prov.set(i);
        rows.push_back(std::move(r));
    }

    std::vector<int> pivot_row_of_col(n, -1);
    std::vector<char> used(m, 0);
    for (size_t col = 0; col < n; ++col) {
        int pivot = -1;
        for (size_t r = 0; r < m; ++r) {
            if (!used[r] && rows[r].cols.test(col)) {
                pivot = static_cast<int>(r);
                break;
            }
        }
        if (pivot < 0) continue;  // free variable
        used[static_cast<size_t>(pivot)] = 1;
        pivot_row_of_col[col] = pivot;
        for (size_t r = 0; r < m; ++r) {
            if (static_cast<int>(r) != pivot && rows[r].cols.test(col)) {
                rows[r].cols ^= rows[static_cast<size_t>(pivot)].cols;
                rows[r].prov ^= rows[static_cast<size_t>(pivot)].prov;
                rows[r].rhs = rows[r].rhs != rows[static_cast<size_t>(pivot)].rhs;
            }
        }
    }

    for (size_t r = 0; r < m; ++r) {
        if (!rows[r].cols.any() && rows[r].rhs) {
            out.feasible = false;
            out.witness_odd_edge = false;
            for (size_t i = 0; i < m; ++i)
                if (rows[r].prov.test(i)) out.witness_edges.push_back(i);
            return out;
        }
    }

    // Free variables are zero, so each pivot variable equals its row's rhs.
    out.feasible = true;
    for (size_t col = 0; col < n; ++col) {
        int pr = pivot_row_of_col[col];
        if (pr >= 0 && rows[static_cast<size_t>(pr)].rhs)
            out.v1.push_back(static_cast<int>(col) + 1);
    }
    return out;
}

bool check_bipartition(const Hypergraph& h, const std::vector<int>& v1) {
    std::vector<char> in(static_cast<size_t>(h.vertex_count()) + 1, 0);
    for (int v : v1) {
        if (v < 1 || v > h.vertex_count()) return false;
        in[static_cast<size_t>(v)] = 1;
    }
    for (const auto& e : h.edges()) {
        size_t inside = 0;
        for (int v : e) inside += in[static_cast<size_t>(v)];
        if (inside % 2 == 0) return false;
        if ((e.size() - inside) % 2 == 0) return false;
    }
    return true;
}

Residual signed_perron_certificate(const Hypergraph& h, const OddBipartition& bip,
                                   const PerronResult& perron) {
    if (!bip.feasible)
        throw std::invalid_argument("signed_perron_certificate: bipartition is infeasible");
    if (!perron.converged)
        throw std::invalid_argument("signed_perron_certificate: Perron solve did not converge");
    if (!is_connected(h))
        throw std::invalid_argument("signed_perron_certificate: hypergraph must be connected");
    if (perron.vector.size() != static_cast<size_t>(h.vertex_count()))
        throw std::invalid_argument("signed_perron_certificate: vector length mismatch");
    SignVector signs = SignVector::from_bipartition(h.vertex_count(), bip.v1);
    std::vector<double> z = perron.vector;
    for (size_t i = 0; i < z.size(); ++i) z[i] *= signs.entries[i];
    auto apply = [&](const std::vector<double>& x) { return adjacency_apply(h, x); };
    return eigen_residual(apply, h.rank(), -perron.estimate(), std::move(z));
}

Residual signless_kernel_certificate(const Hypergraph& h, const OddBipartition& bip) {
    if (!bip.feasible)
        throw std::invalid_argument("signless_kernel_certificate: bipartition is infeasible");
    if (!h.has_edges()) return Residual{0.0};
    SignVector signs = SignVector::from_bipartition(h.vertex_count(), bip.v1);
    std::vector<Rational> x;
    x.reserve(signs.entries.size());
    for (int s : signs.entries) x.emplace_back(s);
    std::vector<Rational> y = signless_apply(h, x);
    Rational worst(0);
    for (const auto& yi : y) {
        Rational a = abs(yi);
        if (a > worst) worst = a;
    }
    return Residual{to_double(worst)};
}

bool similarity_identities_hold(const DenseTensor& adjacency, const DenseTensor& laplacian,
                                const DenseTensor& signless, const SignVector& signs) {
    const int k = adjacency.order();
    if (static_cast<int>(signs.entries.size()) != adjacency.dim())
        throw std::invalid_argument("sign vector length mismatch");
    DiagonalMatrix p;
    p.diag.reserve(signs.entries.size());
    for (int s : signs.entries) p.diag.emplace_back(s);
    DiagonalMatrix p_inv = p.power(-(k - 1));

    DenseTensor a_t = two_sided_product(p_inv, adjacency, p);
    for (size_t off = 0; off < adjacency.size(); ++off) {
        if (a_t.flat(off) != -adjacency.flat(off)) return false;
    }
    DenseTensor q_t = two_sided_product(p_inv, signless, p);
    return q_t == laplacian;
}

bool similarity_certificate(const Hypergraph& h, const OddBipartition& bip, size_t budget) {
    if (!bip.feasible)
        throw std::invalid_argument("similarity_certificate: bipartition is infeasible");
    if (!h.has_edges()) return true;
    SignVector signs = SignVector::from_bipartition(h.vertex_count(), bip.v1);
    DenseTensor a = dense_adjacency(h, budget);
    DenseTensor l = dense_laplacian(h, budget);
    DenseTensor q = dense_signless(h, budget);
    return similarity_identities_hold(a, l, q, signs);
}

Residual laplacian_allones_check(const Hypergraph& h) {
    if (!h.has_edges()) return Residual{0.0};
    std::vector<Rational> ones(static_cast<size_t>(h.vertex_count()), Rational(1));
    std::vector<Rational> y = laplacian_apply(h, ones);
    Rational worst(0);
    for (const auto& yi : y) {
        Rational a = abs(yi);
        if (a > worst) worst = a;
    }
    return Residual{to_double(worst)};
}

}  // namespace hyperten
