#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperten/apply.hpp"
#include "hyperten/hypergraph.hpp"
#include "hyperten/rational.hpp"

namespace hyperten {

inline constexpr std::size_t kDefaultDenseBudget = 10'000'000;

class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Order-k dimension-n tensor of exact rationals, flat row-major total array.
// Indices are 1-based vertex ids throughout.
class DenseTensor {
public:
    DenseTensor() = default;
    DenseTensor(int order, int dim, std::size_t budget = kDefaultDenseBudget);

    int order() const { return order_; }
    int dim() const { return dim_; }
    std::size_t size() const { return entries_.size(); }

    const Rational& at(std::span<const int> idx) const { return entries_[offset(idx)]; }
    Rational& at(std::span<const int> idx) { return entries_[offset(idx)]; }
    const Rational& flat(std::size_t off) const { return entries_[off]; }
    Rational& flat(std::size_t off) { return entries_[off]; }

    std::size_t offset(std::span<const int> idx) const;

    bool operator==(const DenseTensor& other) const = default;

    // Advances a 1-based index tuple in row-major order; false after the last.
    static bool next_tuple(std::vector<int>& idx, int dim);

private:
    int order_ = 0;
    int dim_ = 0;
    std::vector<Rational> entries_;
};

// Adjacency entries: 1/(k-1)! on permutations of full-size edges,
// (k-s+1)!/k! on arrangements of {j^(k-s+1)} u (e \ {j}) for smaller edges.
DenseTensor dense_adjacency(const Hypergraph& h, std::size_t budget = kDefaultDenseBudget);
DenseTensor dense_laplacian(const Hypergraph& h, std::size_t budget = kDefaultDenseBudget);
DenseTensor dense_signless(const Hypergraph& h, std::size_t budget = kDefaultDenseBudget);

// Brute-force contraction (T x^{k-1})_i; the oracle for the implicit kernels.
std::vector<Rational> dense_apply(const DenseTensor& t, const std::vector<Rational>& x);
std::vector<double> dense_apply(const DenseTensor& t, const std::vector<double>& x);

struct DiagonalMatrix {
    std::vector<Rational> diag;

    int dim() const { return static_cast<int>(diag.size()); }
    // Diagonal with entries d_i^e; requires nonzero entries when e < 0.
    DiagonalMatrix power(long e) const;
    static DiagonalMatrix identity(int n);
};

struct DenseMatrix {
    int n = 0;
    std::vector<Rational> entries;  // row-major

    DenseMatrix() = default;
    explicit DenseMatrix(int dim) : n(dim), entries(static_cast<std::size_t>(dim) * dim) {}
    Rational& at(int i, int j) { return entries[static_cast<std::size_t>(i - 1) * n + (j - 1)]; }
    const Rational& at(int i, int j) const {
        return entries[static_cast<std::size_t>(i - 1) * n + (j - 1)];
    }
    static DenseMatrix identity(int n);
};

// (P T Q)_{i1..ik} = sum a_{j1..jk} p_{i1 j1} q_{j2 i2} ... q_{jk ik}.
// Diagonal overload reduces to entrywise scaling.
DenseTensor two_sided_product(const DiagonalMatrix& p, const DenseTensor& t,
                              const DiagonalMatrix& q);
DenseTensor two_sided_product(const DenseMatrix& p, const DenseTensor& t, const DenseMatrix& q,
                              std::size_t budget = kDefaultDenseBudget);

// D^{-(k-1)} T D; preserves the spectrum and H-spectrum.
DenseTensor diag_similarity(const DenseTensor& t, const DiagonalMatrix& d);

// Restriction of all indices to alpha (1-based ids, ascending), reindexed.
DenseTensor principal_subtensor(const DenseTensor& t, const std::vector<int>& alpha);

// max_i |(T x^{k-1})_i - lambda x_i^{k-1}| under max-magnitude normalization.
struct Residual {
    double value = 0.0;
};

template <class Apply>
Residual eigen_residual(Apply&& apply, int order, double lambda, std::vector<double> x) {
    double maxmag = 0.0;
    for (double v : x) maxmag = std::max(maxmag, std::fabs(v));
    if (maxmag == 0.0) throw std::invalid_argument("residual of the zero vector");
    for (double& v : x) v /= maxmag;
    std::vector<double> y = apply(x);
    double r = 0.0;
    for (size_t i = 0; i < x.size(); ++i)
        r = std::max(r, std::fabs(y[i] - lambda * scalar_pow(x[i], order - 1)));
    return Residual{r};
}

// Exact variant over a rational apply capability.
Rational eigen_residual_exact(const std::function<std::vector<Rational>(const std::vector<Rational>&)>& apply,
                              int order, const Rational& lambda, std::vector<Rational> x);
Rational dense_eigen_residual(const DenseTensor& t, const Rational& lambda,
                              const std::vector<Rational>& x);

// One line per nonzero, "i1 i2 ... ik p/q", tuples in lexicographic order.
std::vector<std::string> dense_nonzero_lines(const DenseTensor& t);

}  // namespace hyperten
