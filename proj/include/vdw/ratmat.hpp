#pragma once

#include "vdw/rat.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace vdw {

/// Dense matrix over the rationals with the exact elimination routines the
/// workbench needs: rank, determinant, reduced row echelon form, nullspace,
/// and linear solves.
class RatMat {
public:
    RatMat() = default;
    RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    static RatMat identity(std::size_t n);
    static RatMat from_rows(const std::vector<RatVec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    RatVec row(std::size_t r) const;
    RatMat transposed() const;
    RatMat operator*(const RatMat& o) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> a_;
};

std::size_t rank(RatMat m);
std::size_t rank_of_rows(const std::vector<RatVec>& rows);

/// Determinant of a square matrix.
Rat det(RatMat m);

/// Reduced row echelon form; optionally reports the pivot columns.
RatMat rref(RatMat m, std::vector<std::size_t>* pivot_cols = nullptr);

/// Basis of the right nullspace {x : M x = 0}.
std::vector<RatVec> nullspace(const RatMat& m);

/// X with A X = B for square invertible A, nullopt when A is singular.
std::optional<RatMat> solve_right(const RatMat& a, const RatMat& b);

std::optional<RatMat> inverse(const RatMat& a);

/// Whether two sets of row vectors span the same subspace.
bool same_row_space(const RatMat& a, const RatMat& b);

}  // namespace vdw
