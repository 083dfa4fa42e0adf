#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "earoot/rational.hpp"

namespace earoot {

template <class F>
using Mat = Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>;
template <class F>
using Vec = Eigen::Matrix<F, Eigen::Dynamic, 1>;

using QMat = Mat<Rat>;
using QVec = Vec<Rat>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

/// Lexicographic order on integer vectors (for deterministic maps/sets).
struct LexLess {
    bool operator()(const IntVec& a, const IntVec& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (Eigen::Index i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

template <class F>
struct VecLexLess {
    bool operator()(const Vec<F>& a, const Vec<F>& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (Eigen::Index i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

inline QVec to_rat(const IntVec& v) {
    QVec r(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

/// In-place reduced row echelon form over an exact field.
/// Returns the pivot column of each nonzero row, in order.
template <class F>
std::vector<Eigen::Index> row_reduce(Mat<F>& m) {
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index sel = -1;
        for (Eigen::Index r = row; r < m.rows(); ++r)
            if (!m(r, col).is_zero()) { sel = r; break; }
        if (sel < 0) continue;
        if (sel != row) m.row(sel).swap(m.row(row));
        F inv = F(1) / m(row, col);
        for (Eigen::Index c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            F f = m(r, col);
            for (Eigen::Index c = col; c < m.cols(); ++c)
                m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
Eigen::Index rank_of(Mat<F> m) {
    return Eigen::Index(row_reduce(m).size());
}

/// Basis of the right kernel {x : m x = 0}, one column per basis vector.
template <class F>
Mat<F> kernel_basis(Mat<F> m) {
    const Eigen::Index n = m.cols();
    std::vector<Eigen::Index> pivots = row_reduce(m);
    std::vector<bool> is_pivot(size_t(n), false);
    for (auto p : pivots) is_pivot[size_t(p)] = true;
    Mat<F> ker(n, n - Eigen::Index(pivots.size()));
    Eigen::Index k = 0;
    for (Eigen::Index free = 0; free < n; ++free) {
        if (is_pivot[size_t(free)]) continue;
        Vec<F> x = Vec<F>::Constant(n, F(0));
        x[free] = F(1);
        for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m(Eigen::Index(r), free);
        ker.col(k++) = x;
    }
    return ker;
}

/// Solve m x = b; nullopt when inconsistent. Returns one solution.
template <class F>
std::optional<Vec<F>> solve_linear(Mat<F> m, Vec<F> b) {
    const Eigen::Index n = m.cols();
    Mat<F> aug(m.rows(), n + 1);
    aug.leftCols(n) = m;
    aug.col(n) = b;
    std::vector<Eigen::Index> pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;
    Vec<F> x = Vec<F>::Constant(n, F(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(Eigen::Index(r), n);
    return x;
}

template <class F>
std::optional<Mat<F>> inverse_of(const Mat<F>& m) {
    const Eigen::Index n = m.rows();
    Mat<F> aug(n, 2 * n);
    aug.leftCols(n) = m;
    aug.rightCols(n) = Mat<F>::Identity(n, n);
    std::vector<Eigen::Index> pivots = row_reduce(aug);
    if (Eigen::Index(pivots.size()) != n || pivots.back() != n - 1) return std::nullopt;
    return Mat<F>(aug.rightCols(n));
}

template <class F>
F determinant(Mat<F> m) {
    F det(1);
    const Eigen::Index n = m.rows();
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index sel = -1;
        for (Eigen::Index r = col; r < n; ++r)
            if (!m(r, col).is_zero()) { sel = r; break; }
        if (sel < 0) return F(0);
        if (sel != col) { m.row(sel).swap(m.row(col)); det = -det; }
        det = det * m(col, col);
        F inv = F(1) / m(col, col);
        for (Eigen::Index r = col + 1; r < n; ++r) {
            if (m(r, col).is_zero()) continue;
            F f = m(r, col) * inv;
            for (Eigen::Index c = col; c < n; ++c) m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

/// Row span membership: is v in the row space of basis (rows)?
template <class F>
bool in_row_span(const Mat<F>& rows, const Vec<F>& v) {
    Mat<F> m(rows.rows() + 1, rows.cols());
    m.topRows(rows.rows()) = rows;
    m.row(rows.rows()) = v.transpose();
    return rank_of(m) == rank_of(Mat<F>(rows));
}

/// A growing echelonized row space; add() returns true when the vector
/// enlarged the span. Used by the bracket-closure loops.
template <class F>
class SpanBuilder {
public:
    explicit SpanBuilder(Eigen::Index dim) : dim_(dim) {}

    bool add(Vec<F> v) {
        for (auto& [pivot, row] : rows_) {
            if (v[pivot].is_zero()) continue;
            F f = v[pivot];
            for (Eigen::Index c = 0; c < dim_; ++c) v[c] -= f * row[c];
        }
        Eigen::Index p = -1;
        for (Eigen::Index c = 0; c < dim_; ++c)
            if (!v[c].is_zero()) { p = c; break; }
        if (p < 0) return false;
        F inv = F(1) / v[p];
        for (Eigen::Index c = 0; c < dim_; ++c) v[c] = v[c] * inv;
        // keep existing rows reduced against the new one
        for (auto& [pivot, row] : rows_) {
            if (row[p].is_zero()) continue;
            F f = row[p];
            for (Eigen::Index c = 0; c < dim_; ++c) row[c] -= f * v[c];
        }
        rows_.emplace_back(p, std::move(v));
        std::sort(rows_.begin(), rows_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return true;
    }

    bool contains(Vec<F> v) const {
        for (const auto& [pivot, row] : rows_) {
            if (v[pivot].is_zero()) continue;
            F f = v[pivot];
            for (Eigen::Index c = 0; c < dim_; ++c) v[c] -= f * row[c];
        }
        for (Eigen::Index c = 0; c < dim_; ++c)
            if (!v[c].is_zero()) return false;
        return true;
    }

    Eigen::Index dim() const { return Eigen::Index(rows_.size()); }
    Eigen::Index ambient_dim() const { return dim_; }

    std::vector<Vec<F>> basis() const {
        std::vector<Vec<F>> b;
        b.reserve(rows_.size());
        for (const auto& [pivot, row] : rows_) b.push_back(row);
        return b;
    }

private:
    Eigen::Index dim_;
    std::vector<std::pair<Eigen::Index, Vec<F>>> rows_;
};

// ---------------------------------------------------------------------------
// Integer lattices (row Hermite normal form, membership, basis extraction)
// ---------------------------------------------------------------------------

/// Row Hermite normal form of an integer matrix; returns the nonzero rows.
/// Pivots are positive and strictly to the right as rows descend.
IntMat hermite_normal_form(IntMat m);

/// Rank over Q of an integer matrix.
Eigen::Index integer_rank(const IntMat& m);

/// Is v in the lattice generated by the rows of gens?
bool lattice_contains(const IntMat& gens, const IntVec& v);

/// Basis (rows) of the lattice generated by the rows of gens.
IntMat lattice_basis(const IntMat& gens);

IntMat rows_from(const std::vector<IntVec>& vs, Eigen::Index dim);

}  // namespace earoot
