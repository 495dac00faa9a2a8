#include "fol/matrix.hpp"

#include <algorithm>
#include <cassert>

namespace fol {

ExactMatrix ExactMatrix::from_rows(const std::vector<Vector>& rows, int cols) {
    if (cols < 0) cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    ExactMatrix m(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows_; ++i) {
        assert(static_cast<int>(rows[i].size()) == cols);
        for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

ExactMatrix ExactMatrix::from_columns(const std::vector<Vector>& cols, int rows) {
    if (rows < 0) rows = cols.empty() ? 0 : static_cast<int>(cols[0].size());
    ExactMatrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols_; ++j) {
        assert(static_cast<int>(cols[j].size()) == rows);
        for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Vector ExactMatrix::column(int j) const {
    Vector v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Vector ExactMatrix::row(int i) const { return Vector(a_.begin() + std::size_t(i) * cols_, a_.begin() + std::size_t(i + 1) * cols_); }

Vector ExactMatrix::apply(const Vector& x) const {
    assert(static_cast<int>(x.size()) == cols_);
    Vector y(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (sgn(at(i, j)) != 0 && sgn(x[j]) != 0) y[i] += at(i, j) * x[j];
    return y;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

ExactMatrix::Rref ExactMatrix::rref() const {
    Rref out{*this, {}};
    ExactMatrix& m = out.reduced;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int p = -1;
        for (int i = r; i < rows_; ++i)
            if (sgn(m.at(i, c)) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(r, j));
        Rational inv = 1 / m.at(r, c);
        for (int j = c; j < cols_; ++j)
            if (sgn(m.at(r, j)) != 0) m.at(r, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == r || sgn(m.at(i, c)) == 0) continue;
            Rational f = m.at(i, c);
            for (int j = c; j < cols_; ++j)
                if (sgn(m.at(r, j)) != 0) m.at(i, j) -= f * m.at(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    return out;
}

int ExactMatrix::rank() const { return static_cast<int>(rref().pivots.size()); }

std::vector<Vector> ExactMatrix::kernel_basis() const {
    Rref r = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : r.pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        Vector v(cols_);
        v[f] = 1;
        for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.reduced.at(static_cast<int>(k), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vector> ExactMatrix::image_basis() const {
    std::vector<Vector> out;
    for (int c : rref().pivots) out.push_back(column(c));
    return out;
}

SparseVec to_sparse(const Vector& v) {
    SparseVec s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) s.emplace_back(static_cast<int>(i), v[i]);
    return s;
}

Vector to_dense(const SparseVec& v, int n) {
    Vector d(n);
    for (const auto& [i, c] : v) d[i] = c;
    return d;
}

namespace {

// a - f*b
SparseVec axpy(const SparseVec& a, const Rational& f, const SparseVec& b) {
    SparseVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -f * b[j].second);
            ++j;
        } else {
            Rational c = a[i].second - f * b[j].second;
            if (sgn(c) != 0) out.emplace_back(a[i].first, std::move(c));
            ++i, ++j;
        }
    }
    return out;
}

void scale(SparseVec& v, const Rational& f) {
    for (auto& e : v) e.second *= f;
}

}  // namespace

SparseVec SparseEchelon::reduce(SparseVec v) const {
    while (!v.empty()) {
        int l = v.front().first;
        if (l >= static_cast<int>(by_lead_.size()) || by_lead_[l] < 0) break;
        Rational f = v.front().second;
        v = axpy(v, f, rows_[by_lead_[l]]);
    }
    return v;
}

bool SparseEchelon::insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    int l = v.front().first;
    scale(v, 1 / v.front().second);
    if (l >= static_cast<int>(by_lead_.size())) by_lead_.resize(l + 1, -1);
    by_lead_[l] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
    lead_.push_back(l);
    return true;
}

std::vector<SparseVec> sparse_kernel(const std::vector<SparseVec>& columns) {
    struct Row {
        SparseVec v, comb;
    };
    std::vector<Row> rows;
    std::vector<int> by_lead;
    std::vector<SparseVec> kernel;
    for (int j = 0; j < static_cast<int>(columns.size()); ++j) {
        SparseVec v = columns[j];
        SparseVec comb{{j, Rational(1)}};
        while (!v.empty()) {
            int l = v.front().first;
            if (l >= static_cast<int>(by_lead.size()) || by_lead[l] < 0) break;
            const Row& r = rows[by_lead[l]];
            Rational f = v.front().second;
            v = axpy(v, f, r.v);
            comb = axpy(comb, f, r.comb);
        }
        if (v.empty()) {
            kernel.push_back(std::move(comb));
            continue;
        }
        Rational inv = 1 / v.front().second;
        scale(v, inv);
        scale(comb, inv);
        int l = v.front().first;
        if (l >= static_cast<int>(by_lead.size())) by_lead.resize(l + 1, -1);
        by_lead[l] = static_cast<int>(rows.size());
        rows.push_back({std::move(v), std::move(comb)});
    }
    return kernel;
}

int sparse_rank(const std::vector<SparseVec>& vectors) {
    SparseEchelon e;
    for (const auto& v : vectors) e.insert(v);
    return e.rank();
}

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

}  // namespace

long rank_mod_p(const std::vector<SparseVec>& vectors, int length, std::uint32_t p) {
    std::vector<std::vector<std::uint32_t>> pivot(length);
    long rank = 0;
    std::vector<std::uint64_t> v(length);
    for (const auto& sv : vectors) {
        std::fill(v.begin(), v.end(), 0);
        for (const auto& [i, c] : sv) {
            std::uint64_t den = mpz_fdiv_ui(c.get_den_mpz_t(), p);
            if (den == 0) return -1;
            std::uint64_t num = mpz_fdiv_ui(c.get_num_mpz_t(), p);
            v[i] = num * pow_mod(den, p - 2, p) % p;
        }
        for (int j = 0; j < length; ++j) {
            if (v[j] == 0) continue;
            if (pivot[j].empty()) {
                std::uint64_t inv = pow_mod(v[j], p - 2, p);
                auto& row = pivot[j];
                row.assign(length - j, 0);
                for (int k = j; k < length; ++k) row[k - j] = static_cast<std::uint32_t>(v[k] * inv % p);
                ++rank;
                break;
            }
            std::uint64_t f = p - v[j];
            const auto& row = pivot[j];
            for (int k = j; k < length; ++k)
                if (row[k - j]) v[k] = (v[k] + f * row[k - j]) % p;
        }
    }
    return rank;
}

}  // namespace fol
