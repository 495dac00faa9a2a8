#pragma once

#include "fol/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace fol {

using Vector = std::vector<Rational>;

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}
    static ExactMatrix from_rows(const std::vector<Vector>& rows, int cols = -1);
    static ExactMatrix from_columns(const std::vector<Vector>& cols, int rows = -1);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    Vector column(int j) const;
    Vector row(int i) const;
    Vector apply(const Vector& x) const;
    ExactMatrix transpose() const;

    struct Rref;
    Rref rref() const;
    int rank() const;

    // One vector per free column j of the RREF: x_j = 1, other free entries 0.
    std::vector<Vector> kernel_basis() const;
    // Columns of this matrix at the RREF pivot positions.
    std::vector<Vector> image_basis() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

struct ExactMatrix::Rref {
    ExactMatrix reduced;
    std::vector<int> pivots;  // pivot column of each nonzero row
};

// Sparse vector: strictly increasing indices, nonzero values.
using SparseVec = std::vector<std::pair<int, Rational>>;

SparseVec to_sparse(const Vector& v);
Vector to_dense(const SparseVec& v, int n);

// Incremental row echelon over Q. Stored rows are normalized to leading 1.
class SparseEchelon {
public:
    // Reduces v by the stored rows (leading entries only); returns the residue.
    SparseVec reduce(SparseVec v) const;
    // Inserts v when independent of the stored rows; returns whether it was.
    bool insert(SparseVec v);
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    std::vector<SparseVec> rows_;
    std::vector<int> lead_;      // leading index of rows_[i]
    std::vector<int> by_lead_;   // index -> row slot, -1 if none
};

// Right kernel of the matrix whose columns are given, processing columns left
// to right: for every column dependent on earlier ones, the unique kernel
// vector with coordinate 1 there and support on earlier independent columns.
// That is the RREF free-column basis. Indices refer to columns.
std::vector<SparseVec> sparse_kernel(const std::vector<SparseVec>& columns);

int sparse_rank(const std::vector<SparseVec>& vectors);

// Rank over Z/p of a set of rational vectors, or -1 if some denominator
// vanishes mod p. Never exceeds the rank over Q.
long rank_mod_p(const std::vector<SparseVec>& vectors, int length, std::uint32_t p);

}  // namespace fol
