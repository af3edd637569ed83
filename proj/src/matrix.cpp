#include <jfs/matrix.hpp>

#include <jfs/error.hpp>

#include <utility>

namespace jfs {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0))
{
}

RatMatrix RatMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols)
{
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
    {
        if (rows[i].size() != cols)
            throw DimensionMismatch("matrix row has length " + std::to_string(rows[i].size()) +
                                    ", expected " + std::to_string(cols));
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::identity(std::size_t n)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Vec RatMatrix::row(std::size_t i) const
{
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec RatMatrix::col(std::size_t j) const
{
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        c[i] = (*this)(i, j);
    return c;
}

std::vector<Vec> RatMatrix::row_vectors() const
{
    std::vector<Vec> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        out.push_back(row(i));
    return out;
}

RatMatrix RatMatrix::transpose() const
{
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Vec RatMatrix::operator*(const Vec& x) const
{
    if (x.size() != cols_)
        throw DimensionMismatch("matrix-vector product: " + std::to_string(cols_) + " columns, vector of length " +
                                std::to_string(x.size()));
    Vec y(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
        {
            const Rational& a = (*this)(i, j);
            if (sgn(a) != 0 && sgn(x[j]) != 0)
                y[i] += a * x[j];
        }
    return y;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const
{
    if (other.rows_ != cols_)
        throw DimensionMismatch("matrix product shape mismatch");
    RatMatrix p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
        {
            const Rational& a = (*this)(i, k);
            if (sgn(a) == 0)
                continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                if (sgn(other(k, j)) != 0)
                    p(i, j) += a * other(k, j);
        }
    return p;
}

RatMatrix RatMatrix::stacked(const RatMatrix& other) const
{
    if (other.cols_ != cols_)
        throw DimensionMismatch("cannot stack matrices with different column counts");
    RatMatrix s(rows_ + other.rows_, cols_);
    std::copy(data_.begin(), data_.end(), s.data_.begin());
    std::copy(other.data_.begin(), other.data_.end(),
              s.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return s;
}

RrefResult rref(const RatMatrix& m)
{
    RrefResult out;
    out.reduced = m;
    RatMatrix& r = out.reduced;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col)
    {
        std::size_t pivot = lead;
        while (pivot < r.rows() && sgn(r(pivot, col)) == 0)
            ++pivot;
        if (pivot == r.rows())
            continue;
        if (pivot != lead)
            for (std::size_t j = 0; j < r.cols(); ++j)
                std::swap(r(pivot, j), r(lead, j));
        const Rational inv = Rational(1) / r(lead, col);
        for (std::size_t j = col; j < r.cols(); ++j)
            r(lead, j) *= inv;
        for (std::size_t i = 0; i < r.rows(); ++i)
        {
            if (i == lead || sgn(r(i, col)) == 0)
                continue;
            const Rational f = r(i, col);
            for (std::size_t j = col; j < r.cols(); ++j)
                if (sgn(r(lead, j)) != 0)
                    r(i, j) -= f * r(lead, j);
        }
        out.pivot_columns.push_back(col);
        ++lead;
    }
    out.rank = out.pivot_columns.size();
    return out;
}

bool solve_square(const RatMatrix& m, const Vec& rhs, Vec& x)
{
    const std::size_t n = m.rows();
    if (m.cols() != n || rhs.size() != n)
        throw DimensionMismatch("solve_square expects a square system");
    RatMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i)
    {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n) = rhs[i];
    }
    const RrefResult r = rref(aug);
    if (r.rank < n || (r.rank > 0 && r.pivot_columns[n - 1] != n - 1))
        return false;
    x.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        x[i] = r.reduced(i, n);
    return true;
}

}  // namespace jfs
