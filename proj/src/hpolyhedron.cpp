#include <jfs/hpolyhedron.hpp>

#include <jfs/error.hpp>
#include <jfs/subspace.hpp>

namespace jfs {

HPolyhedron::HPolyhedron(std::size_t dim) : dim_(dim), a_(0, dim), e_(0, dim)
{
}

HPolyhedron::HPolyhedron(RatMatrix a, Vec b, RatMatrix e, Vec d)
    : dim_(a.cols()), a_(std::move(a)), b_(std::move(b)), e_(std::move(e)), d_(std::move(d))
{
    if (e_.cols() != dim_)
        throw DimensionMismatch("inequality and equality blocks have different column counts");
    if (b_.size() != a_.rows() || d_.size() != e_.rows())
        throw DimensionMismatch("right-hand side length does not match the row count");
}

HPolyhedron HPolyhedron::box(const Vec& lo, const Vec& hi)
{
    if (lo.size() != hi.size())
        throw DimensionMismatch("box bounds of different lengths");
    const std::size_t n = lo.size();
    HPolyhedron p(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        p = p.with_ineq(unit_vector(n, i), hi[i]);
        p = p.with_ineq(negate(unit_vector(n, i)), -lo[i]);
    }
    return p;
}

HPolyhedron HPolyhedron::affine(const Subspace& dir, const Vec& base)
{
    return HPolyhedron(dir.ambient_dim()).restricted_to(dir, base);
}

HPolyhedron HPolyhedron::with_ineq(const Vec& a, const Rational& b) const
{
    if (a.size() != dim_)
        throw DimensionMismatch("inequality row of length " + std::to_string(a.size()) + " in dimension " +
                                std::to_string(dim_));
    Vec nb = b_;
    nb.push_back(b);
    return HPolyhedron(a_.stacked(RatMatrix::from_rows({a}, dim_)), std::move(nb), e_, d_);
}

HPolyhedron HPolyhedron::with_eq(const Vec& e, const Rational& d) const
{
    if (e.size() != dim_)
        throw DimensionMismatch("equality row of length " + std::to_string(e.size()) + " in dimension " +
                                std::to_string(dim_));
    Vec nd = d_;
    nd.push_back(d);
    return HPolyhedron(a_, b_, e_.stacked(RatMatrix::from_rows({e}, dim_)), std::move(nd));
}

HPolyhedron HPolyhedron::intersect(const HPolyhedron& other) const
{
    if (other.dim_ != dim_)
        throw DimensionMismatch("intersection of polyhedra in dimensions " + std::to_string(dim_) + " and " +
                                std::to_string(other.dim_));
    Vec nb = b_;
    nb.insert(nb.end(), other.b_.begin(), other.b_.end());
    Vec nd = d_;
    nd.insert(nd.end(), other.d_.begin(), other.d_.end());
    return HPolyhedron(a_.stacked(other.a_), std::move(nb), e_.stacked(other.e_), std::move(nd));
}

HPolyhedron HPolyhedron::restricted_to(const Subspace& dir, const Vec& base) const
{
    if (dir.ambient_dim() != dim_ || base.size() != dim_)
        throw DimensionMismatch("affine restriction in the wrong dimension");
    HPolyhedron out = *this;
    const Subspace normals = orth_complement(dir);
    for (const Vec& w : normals.basis())
        out = out.with_eq(w, dot(w, base));
    return out;
}

HPolyhedron HPolyhedron::with_tight_rows(const std::vector<std::size_t>& rows) const
{
    HPolyhedron out = *this;
    for (std::size_t i : rows)
        out = out.with_eq(a_.row(i), b_[i]);
    return out;
}

Rational HPolyhedron::slack(std::size_t row, const Vec& x) const
{
    Rational s = b_[row];
    for (std::size_t j = 0; j < dim_; ++j)
        if (sgn(a_(row, j)) != 0)
            s -= a_(row, j) * x[j];
    return s;
}

bool HPolyhedron::contains(const Vec& x) const
{
    if (x.size() != dim_)
        throw DimensionMismatch("point of length " + std::to_string(x.size()) + " tested against a polyhedron in Q^" +
                                std::to_string(dim_));
    for (std::size_t i = 0; i < a_.rows(); ++i)
        if (sgn(slack(i, x)) < 0)
            return false;
    for (std::size_t i = 0; i < e_.rows(); ++i)
        if (dot(e_.row(i), x) != d_[i])
            return false;
    return true;
}

std::vector<std::size_t> HPolyhedron::tight_rows(const Vec& x) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < a_.rows(); ++i)
        if (sgn(slack(i, x)) == 0)
            out.push_back(i);
    return out;
}

bool contains(const HPolyhedron& p, const Vec& x)
{
    return p.contains(x);
}

}  // namespace jfs
