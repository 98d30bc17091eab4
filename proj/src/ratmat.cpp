#include "vdw/ratmat.hpp"

#include "vdw/error.hpp"

#include <algorithm>

namespace vdw {

RatMat RatMat::identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::from_rows(const std::vector<RatVec>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    RatMat m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw Error("from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RatVec RatMat::row(std::size_t r) const {
    RatVec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(r, j);
    return v;
}

RatMat RatMat::transposed() const {
    RatMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMat RatMat::operator*(const RatMat& o) const {
    if (cols_ != o.rows_) throw Error("matrix product: shape mismatch");
    RatMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

RatMat rref(RatMat m, std::vector<std::size_t>* pivot_cols) {
    if (pivot_cols) pivot_cols->clear();
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m.at(pivot, c) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
        const Rat inv = 1 / m.at(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            const Rat f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return m;
}

std::size_t rank(RatMat m) {
    std::vector<std::size_t> pivots;
    rref(std::move(m), &pivots);
    return pivots.size();
}

std::size_t rank_of_rows(const std::vector<RatVec>& rows) {
    return rank(RatMat::from_rows(rows));
}

Rat det(RatMat m) {
    if (m.rows() != m.cols()) throw Error("det: matrix is not square");
    const std::size_t n = m.rows();
    Rat d(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m.at(pivot, c) == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        const Rat inv = 1 / m.at(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m.at(i, c) == 0) continue;
            const Rat f = m.at(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return d;
}

std::vector<RatVec> nullspace(const RatMat& m) {
    std::vector<std::size_t> pivots;
    RatMat r = rref(m, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<RatVec> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        RatVec v(m.cols(), Rat(0));
        v[free_col] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatMat> solve_right(const RatMat& a, const RatMat& b) {
    if (a.rows() != a.cols() || a.rows() != b.rows()) throw Error("solve_right: shape mismatch");
    const std::size_t n = a.rows();
    RatMat aug(n, n + b.cols());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug.at(i, n + j) = b.at(i, j);
    }
    std::vector<std::size_t> pivots;
    RatMat r = rref(std::move(aug), &pivots);
    if (pivots.size() != n || pivots.back() >= n) return std::nullopt;
    RatMat x(n, b.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x.at(i, j) = r.at(i, n + j);
    return x;
}

std::optional<RatMat> inverse(const RatMat& a) {
    return solve_right(a, RatMat::identity(a.rows()));
}

bool same_row_space(const RatMat& a, const RatMat& b) {
    if (a.cols() != b.cols()) return false;
    const std::size_t ra = rank(a), rb = rank(b);
    if (ra != rb) return false;
    RatMat stacked(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) stacked.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) stacked.at(a.rows() + i, j) = b.at(i, j);
    return rank(std::move(stacked)) == ra;
}

}  // namespace vdw
