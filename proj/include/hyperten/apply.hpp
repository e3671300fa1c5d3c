#pragma once

#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <type_traits>
#include <vector>

#include "hyperten/hypergraph.hpp"
#include "hyperten/rational.hpp"

namespace hyperten {

enum class TensorKind { adjacency, laplacian, signless };

inline const char* tensor_kind_name(TensorKind kind) {
    switch (kind) {
        case TensorKind::adjacency: return "adjacency";
        case TensorKind::laplacian: return "laplacian";
        case TensorKind::signless: return "signless";
    }
    return "?";
}

// Worker cap from HYPERTEN_THREADS (>=1); read once.
int worker_count();

// x^e with 0^0 = 1 (needed for the uniform case k = |e|).
template <class S>
S scalar_pow(const S& base, int exp) {
    S acc(1);
    for (int i = 0; i < exp; ++i) acc *= base;
    return acc;
}

namespace detail {

// Adds the adjacency contributions of edges [first, last) to acc:
//   acc_i += sum_{e in E_i} x^{e \ {i}} * ((k - |e|) * x_i^{k-|e|} + sum_{j in e} x_j^{k-|e|})
// Callers divide by k afterwards.
template <class S>
void accumulate_adjacency(const std::vector<std::vector<int>>& edges, size_t first, size_t last,
                          int k, const std::vector<S>& x, std::vector<S>& acc) {
    std::vector<S> prefix, suffix, powers;
    for (size_t idx = first; idx < last; ++idx) {
        const auto& e = edges[idx];
        const int s = static_cast<int>(e.size());
        const int t = k - s;
        prefix.assign(s + 1, S(1));
        suffix.assign(s + 1, S(1));
        for (int a = 0; a < s; ++a) prefix[a + 1] = prefix[a] * x[e[a] - 1];
        for (int a = s - 1; a >= 0; --a) suffix[a] = x[e[a] - 1] * suffix[a + 1];
        powers.resize(s);
        S edge_power_sum(0);
        for (int a = 0; a < s; ++a) {
            powers[a] = scalar_pow(x[e[a] - 1], t);
            edge_power_sum += powers[a];
        }
        for (int a = 0; a < s; ++a) {
            S rest = prefix[a] * suffix[a + 1];  // x^{e \ {e[a]}}
            acc[e[a] - 1] += rest * (S(t) * powers[a] + edge_power_sum);
        }
    }
}

template <class S>
std::vector<S> adjacency_part(const Hypergraph& h, int k, const std::vector<S>& x, int workers) {
    const auto& edges = h.edges();
    const size_t m = edges.size();
    const size_t n = x.size();
    int w = workers;
    if (w <= 0) w = std::is_same_v<S, double> ? worker_count() : 1;
    if (static_cast<size_t>(w) > m) w = static_cast<int>(m == 0 ? 1 : m);

    std::vector<std::vector<S>> partial(w, std::vector<S>(n, S(0)));
    if (w == 1) {
        accumulate_adjacency(edges, 0, m, k, x, partial[0]);
    } else {
        auto chunk = [&](int i) -> std::pair<size_t, size_t> {
            return {m * i / w, m * (i + 1) / w};
        };
        if constexpr (std::is_same_v<S, double>) {
            std::vector<std::thread> threads;
            for (int i = 0; i < w; ++i)
                threads.emplace_back([&, i] {
                    auto [lo, hi] = chunk(i);
                    accumulate_adjacency(edges, lo, hi, k, x, partial[i]);
                });
            for (auto& t : threads) t.join();
        } else {
            for (int i = 0; i < w; ++i) {
                auto [lo, hi] = chunk(i);
                accumulate_adjacency(edges, lo, hi, k, x, partial[i]);
            }
        }
        // pairwise tree reduction; bit-stable for a fixed worker count
        for (int step = 1; step < w; step *= 2)
            for (int i = 0; i + step < w; i += 2 * step)
                for (size_t j = 0; j < n; ++j) partial[i][j] += partial[i + step][j];
    }
    std::vector<S> out = std::move(partial[0]);
    const S divisor(k);
    for (auto& v : out) v /= divisor;
    return out;
}

inline void check_apply_args(const Hypergraph& h, size_t xlen) {
    if (!h.has_edges()) throw std::domain_error("tensor undefined for edgeless hypergraph");
    if (xlen != static_cast<size_t>(h.vertex_count()))
        throw std::invalid_argument("vector length does not match vertex count");
}

}  // namespace detail

// (T x^{k-1})_i for T in {A, L = D - A, Q = D + A}; order defaults to r(H),
// a larger order may be passed for component blocks of a non-uniform host.
template <class S>
std::vector<S> tensor_apply(const Hypergraph& h, TensorKind kind, const std::vector<S>& x,
                            int order = 0, int workers = 0) {
    detail::check_apply_args(h, x.size());
    const int k = order > 0 ? order : h.rank();
    if (k < h.rank()) throw std::invalid_argument("order override below rank");
    std::vector<S> out = detail::adjacency_part(h, k, x, workers);
    if (kind != TensorKind::adjacency) {
        auto degrees = degree_profile(h).degrees;
        for (size_t i = 0; i < out.size(); ++i) {
            S diag = S(degrees[i]) * scalar_pow(x[i], k - 1);
            if (kind == TensorKind::laplacian) {
                out[i] = S(diag - out[i]);
            } else {
                out[i] = S(diag + out[i]);
            }
        }
    }
    return out;
}

template <class S>
std::vector<S> adjacency_apply(const Hypergraph& h, const std::vector<S>& x, int workers = 0) {
    return tensor_apply(h, TensorKind::adjacency, x, 0, workers);
}

template <class S>
std::vector<S> laplacian_apply(const Hypergraph& h, const std::vector<S>& x, int workers = 0) {
    return tensor_apply(h, TensorKind::laplacian, x, 0, workers);
}

template <class S>
std::vector<S> signless_apply(const Hypergraph& h, const std::vector<S>& x, int workers = 0) {
    return tensor_apply(h, TensorKind::signless, x, 0, workers);
}

// A x^k = sum_{e in E} x^e sum_{j in e} x_j^{k-|e|}; 0 when edgeless.
template <class S>
S adjacency_form(const Hypergraph& h, const std::vector<S>& x) {
    if (!h.has_edges()) return S(0);
    if (x.size() != static_cast<size_t>(h.vertex_count()))
        throw std::invalid_argument("vector length does not match vertex count");
    const int k = h.rank();
    S total(0);
    for (const auto& e : h.edges()) {
        const int t = k - static_cast<int>(e.size());
        S prod(1), power_sum(0);
        for (int v : e) {
            prod *= x[v - 1];
            power_sum += scalar_pow(x[v - 1], t);
        }
        total += prod * power_sum;
    }
    return total;
}

}  // namespace hyperten
