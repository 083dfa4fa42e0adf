#include "earoot/linalg.hpp"

#include <cstdlib>
#include <stdexcept>

namespace earoot {

IntMat rows_from(const std::vector<IntVec>& vs, Eigen::Index dim) {
    IntMat m(Eigen::Index(vs.size()), dim);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (vs[size_t(i)].size() != dim)
            throw std::invalid_argument("rows_from: rank mismatch");
        m.row(i) = vs[size_t(i)].transpose();
    }
    return m;
}

IntMat hermite_normal_form(IntMat m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        // Euclidean elimination on column c using rows >= r.
        while (true) {
            Eigen::Index best = -1;
            for (Eigen::Index i = r; i < rows; ++i) {
                if (m(i, c) == 0) continue;
                if (best < 0 || std::abs(m(i, c)) < std::abs(m(best, c))) best = i;
            }
            if (best < 0) break;
            if (best != r) m.row(best).swap(m.row(r));
            bool clean = true;
            for (Eigen::Index i = r + 1; i < rows; ++i) {
                if (m(i, c) == 0) continue;
                Int q = m(i, c) / m(r, c);
                m.row(i) -= q * m.row(r);
                if (m(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (m(r, c) == 0) continue;
        if (m(r, c) < 0) m.row(r) = -m.row(r);
        // reduce rows above
        for (Eigen::Index i = 0; i < r; ++i) {
            Int q = m(i, c) >= 0 ? m(i, c) / m(r, c) : -((-m(i, c) + m(r, c) - 1) / m(r, c));
            if (q != 0) m.row(i) -= q * m.row(r);
        }
        ++r;
    }
    return m.topRows(r);
}

Eigen::Index integer_rank(const IntMat& m) {
    QMat q(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) q(i, j) = Rat(m(i, j));
    return rank_of(q);
}

bool lattice_contains(const IntMat& gens, const IntVec& v) {
    if (gens.cols() != v.size())
        throw std::invalid_argument("lattice_contains: rank mismatch");
    IntMat h = hermite_normal_form(gens);
    IntVec w = v;
    Eigen::Index prev = -1;
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
        Eigen::Index p = -1;
        for (Eigen::Index c = 0; c < h.cols(); ++c)
            if (h(i, c) != 0) { p = c; break; }
        if (p < 0) break;
        for (Eigen::Index c = prev + 1; c < p; ++c)
            if (w[c] != 0) return false;
        if (w[p] % h(i, p) != 0) return false;
        w -= (w[p] / h(i, p)) * h.row(i).transpose();
        prev = p;
    }
    return w.isZero();
}

IntMat lattice_basis(const IntMat& gens) { return hermite_normal_form(gens); }

}  // namespace earoot
