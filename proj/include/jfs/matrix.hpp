#pragma once

#include <jfs/rational.hpp>

#include <cstddef>
#include <vector>

namespace jfs {

/// Dense row-major rational matrix. The shape is fixed at construction.
class RatMatrix
{
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);

    /// Every row must have length `cols`; `cols` is needed when `rows` is empty.
    static RatMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    std::vector<Vec> row_vectors() const;

    RatMatrix transpose() const;
    Vec operator*(const Vec& x) const;
    RatMatrix operator*(const RatMatrix& other) const;

    /// Rows of `this` followed by rows of `other`; column counts must agree.
    RatMatrix stacked(const RatMatrix& other) const;

    bool operator==(const RatMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RrefResult
{
    RatMatrix reduced;
    std::vector<std::size_t> pivot_columns;
    std::size_t rank = 0;
};

/// Unique reduced row-echelon form over the rationals.
RrefResult rref(const RatMatrix& m);

/**
 * Solves the square system M x = rhs. Returns false when M is singular.
 */
bool solve_square(const RatMatrix& m, const Vec& rhs, Vec& x);

}  // namespace jfs
