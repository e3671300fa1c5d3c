#include "hyperten/tensor.hpp"

#include <algorithm>
#include <sstream>

namespace hyperten {

namespace {

std::size_t checked_size(int order, int dim, std::size_t budget) {
    if (order < 1) throw std::invalid_argument("tensor order must be >= 1");
    if (dim < 1) throw std::invalid_argument("tensor dimension must be >= 1");
    std::size_t total = 1;
    for (int i = 0; i < order; ++i) {
        if (dim != 0 && total > budget / static_cast<std::size_t>(dim))
            throw BudgetError("dense tensor would exceed the entry budget of " +
                              std::to_string(budget));
        total *= static_cast<std::size_t>(dim);
    }
    if (total > budget)
        throw BudgetError("dense tensor would exceed the entry budget of " +
                          std::to_string(budget));
    return total;
}

}  // namespace

DenseTensor::DenseTensor(int order, int dim, std::size_t budget)
    : order_(order), dim_(dim), entries_(checked_size(order, dim, budget)) {}

std::size_t DenseTensor::offset(std::span<const int> idx) const {
    if (static_cast<int>(idx.size()) != order_)
        throw std::invalid_argument("index tuple length does not match tensor order");
    std::size_t off = 0;
    for (int i : idx) {
        if (i < 1 || i > dim_) throw std::out_of_range("tensor index out of range");
        off = off * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i - 1);
    }
    return off;
}

bool DenseTensor::next_tuple(std::vector<int>& idx, int dim) {
    for (int pos = static_cast<int>(idx.size()) - 1; pos >= 0; --pos) {
        if (idx[pos] < dim) {
            ++idx[pos];
            return true;
        }
        idx[pos] = 1;
    }
    return false;
}

DenseTensor dense_adjacency(const Hypergraph& h, std::size_t budget) {
    if (!h.has_edges()) throw std::domain_error("tensor undefined for edgeless hypergraph");
    const int k = h.rank();
    const int n = h.vertex_count();
    DenseTensor t(k, n, budget);
    const mpz_class k_fact = factorial(k);
    for (const auto& e : h.edges()) {
        const int s = static_cast<int>(e.size());
        if (s == k) {
            Rational value = Rational(1) / Rational(factorial(k - 1));
            std::vector<int> tuple = e;
            do {
                t.at(tuple) = value;
            } while (std::next_permutation(tuple.begin(), tuple.end()));
        } else {
            Rational value(factorial(k - s + 1));
            value /= Rational(k_fact);
            for (int repeated : e) {
                std::vector<int> tuple;
                tuple.reserve(k);
                for (int i = 0; i < k - s + 1; ++i) tuple.push_back(repeated);
                for (int v : e)
                    if (v != repeated) tuple.push_back(v);
                std::sort(tuple.begin(), tuple.end());
                do {
                    t.at(tuple) = value;
                } while (std::next_permutation(tuple.begin(), tuple.end()));
            }
        }
    }
    return t;
}

namespace {

DenseTensor dense_with_degrees(const Hypergraph& h, std::size_t budget, int sign_of_adjacency) {
    DenseTensor t = dense_adjacency(h, budget);
    if (sign_of_adjacency < 0)
        for (std::size_t off = 0; off < t.size(); ++off) t.flat(off) = -t.flat(off);
    const auto degrees = degree_profile(h).degrees;
    std::vector<int> diag(t.order());
    for (int i = 1; i <= t.dim(); ++i) {
        std::fill(diag.begin(), diag.end(), i);
        t.at(diag) += Rational(degrees[i - 1]);
    }
    return t;
}

}  // namespace

DenseTensor dense_laplacian(const Hypergraph& h, std::size_t budget) {
    return dense_with_degrees(h, budget, -1);
}

DenseTensor dense_signless(const Hypergraph& h, std::size_t budget) {
    return dense_with_degrees(h, budget, +1);
}

namespace {

template <class S>
std::vector<S> dense_apply_impl(const DenseTensor& t, const std::vector<S>& x) {
    if (x.size() != static_cast<size_t>(t.dim()))
        throw std::invalid_argument("vector length does not match tensor dimension");
    const int k = t.order();
    const int n = t.dim();
    std::vector<S> out(n, S(0));
    std::vector<int> idx(k, 1);
    std::size_t off = 0;
    // row-major walk: first index varies slowest
    do {
        const Rational& a = t.flat(off++);
        if (a != 0) {
            S term;
            if constexpr (std::is_same_v<S, double>)
                term = to_double(a);
            else
                term = a;
            for (int pos = 1; pos < k; ++pos) term *= x[idx[pos] - 1];
            out[idx[0] - 1] += term;
        }
    } while (DenseTensor::next_tuple(idx, n));
    return out;
}

}  // namespace

std::vector<Rational> dense_apply(const DenseTensor& t, const std::vector<Rational>& x) {
    return dense_apply_impl(t, x);
}

std::vector<double> dense_apply(const DenseTensor& t, const std::vector<double>& x) {
    return dense_apply_impl(t, x);
}

DiagonalMatrix DiagonalMatrix::power(long e) const {
    DiagonalMatrix out;
    out.diag.reserve(diag.size());
    for (const auto& d : diag) {
        if (e < 0 && d == 0)
            throw std::invalid_argument("diagonal matrix with zero entry is not invertible");
        out.diag.push_back(rational_pow(d, e));
    }
    return out;
}

DiagonalMatrix DiagonalMatrix::identity(int n) {
    DiagonalMatrix d;
    d.diag.assign(n, Rational(1));
    return d;
}

DenseMatrix DenseMatrix::identity(int n) {
    DenseMatrix m(n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = 1;
    return m;
}

DenseTensor two_sided_product(const DiagonalMatrix& p, const DenseTensor& t,
                              const DiagonalMatrix& q) {
    if (p.dim() != t.dim() || q.dim() != t.dim())
        throw std::invalid_argument("matrix dimension does not match tensor dimension");
    DenseTensor out(t.order(), t.dim(), t.size());
    std::vector<int> idx(t.order(), 1);
    std::size_t off = 0;
    do {
        const Rational& a = t.flat(off);
        if (a != 0) {
            Rational scale = p.diag[idx[0] - 1];
            for (int pos = 1; pos < t.order(); ++pos) scale *= q.diag[idx[pos] - 1];
            out.flat(off) = scale * a;
        }
        ++off;
    } while (DenseTensor::next_tuple(idx, t.dim()));
    return out;
}

DenseTensor two_sided_product(const DenseMatrix& p, const DenseTensor& t, const DenseMatrix& q,
                              std::size_t budget) {
    if (p.n != t.dim() || q.n != t.dim())
        throw std::invalid_argument("matrix dimension does not match tensor dimension");
    const int k = t.order();
    const int n = t.dim();
    DenseTensor out(k, n, budget);
    std::vector<int> idx(k, 1);
    std::size_t out_off = 0;
    do {
        Rational sum(0);
        std::vector<int> j(k, 1);
        std::size_t in_off = 0;
        do {
            const Rational& a = t.flat(in_off++);
            if (a == 0) continue;
            Rational term = a * p.at(idx[0], j[0]);
            for (int pos = 1; pos < k && term != 0; ++pos) term *= q.at(j[pos], idx[pos]);
            sum += term;
        } while (DenseTensor::next_tuple(j, n));
        out.flat(out_off++) = sum;
    } while (DenseTensor::next_tuple(idx, n));
    return out;
}

DenseTensor diag_similarity(const DenseTensor& t, const DiagonalMatrix& d) {
    return two_sided_product(d.power(-(t.order() - 1)), t, d);
}

DenseTensor principal_subtensor(const DenseTensor& t, const std::vector<int>& alpha) {
    if (alpha.empty()) throw std::invalid_argument("principal subtensor of the empty set");
    std::vector<int> ids = alpha;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (int v : ids)
        if (v < 1 || v > t.dim()) throw std::out_of_range("subtensor index out of range");
    const int m = static_cast<int>(ids.size());
    DenseTensor out(t.order(), m, t.size());
    std::vector<int> idx(t.order(), 1), mapped(t.order());
    std::size_t off = 0;
    do {
        for (int pos = 0; pos < t.order(); ++pos) mapped[pos] = ids[idx[pos] - 1];
        out.flat(off++) = t.at(mapped);
    } while (DenseTensor::next_tuple(idx, m));
    return out;
}

Rational eigen_residual_exact(
    const std::function<std::vector<Rational>(const std::vector<Rational>&)>& apply, int order,
    const Rational& lambda, std::vector<Rational> x) {
    Rational maxmag(0);
    for (const auto& v : x) {
        Rational a = abs(v);
        if (a > maxmag) maxmag = a;
    }
    if (maxmag == 0) throw std::invalid_argument("residual of the zero vector");
    for (auto& v : x) v /= maxmag;
    std::vector<Rational> y = apply(x);
    Rational r(0);
    for (size_t i = 0; i < x.size(); ++i) {
        Rational diff = abs(y[i] - lambda * rational_pow(x[i], order - 1));
        if (diff > r) r = diff;
    }
    return r;
}

Rational dense_eigen_residual(const DenseTensor& t, const Rational& lambda,
                              const std::vector<Rational>& x) {
    return eigen_residual_exact(
        [&t](const std::vector<Rational>& v) { return dense_apply(t, v); }, t.order(), lambda, x);
}

std::vector<std::string> dense_nonzero_lines(const DenseTensor& t) {
    std::vector<std::string> lines;
    std::vector<int> idx(t.order(), 1);
    std::size_t off = 0;
    do {
        const Rational& a = t.flat(off++);
        if (a != 0) {
            std::ostringstream line;
            for (int i : idx) line << i << ' ';
            line << to_string(a);
            lines.push_back(line.str());
        }
    } while (DenseTensor::next_tuple(idx, t.dim()));
    return lines;
}

}  // namespace hyperten
