#include <jfs/subspace.hpp>

#include <jfs/error.hpp>

namespace jfs {

namespace {

void require_same_ambient(const Subspace& u, const Subspace& v)
{
    if (u.ambient_dim() != v.ambient_dim())
        throw DimensionMismatch("subspaces live in dimensions " + std::to_string(u.ambient_dim()) + " and " +
                                std::to_string(v.ambient_dim()));
}

}  // namespace

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors)
{
    Subspace s;
    s.ambient_dim_ = ambient_dim;
    if (vectors.empty())
        return s;
    const RrefResult r = rref(RatMatrix::from_rows(vectors, ambient_dim));
    for (std::size_t i = 0; i < r.rank; ++i)
        s.basis_.push_back(r.reduced.row(i));
    return s;
}

Subspace Subspace::zero(std::size_t ambient_dim)
{
    return span(ambient_dim, {});
}

Subspace Subspace::full(std::size_t ambient_dim)
{
    std::vector<Vec> e;
    for (std::size_t i = 0; i < ambient_dim; ++i)
        e.push_back(unit_vector(ambient_dim, i));
    return span(ambient_dim, e);
}

bool Subspace::contains(const Vec& v) const
{
    if (v.size() != ambient_dim_)
        throw DimensionMismatch("vector length " + std::to_string(v.size()) + " in ambient dimension " +
                                std::to_string(ambient_dim_));
    Vec r = v;
    for (const Vec& b : basis_)
    {
        std::size_t pivot = 0;
        while (sgn(b[pivot]) == 0)
            ++pivot;
        if (sgn(r[pivot]) == 0)
            continue;
        const Rational f = r[pivot];
        for (std::size_t j = pivot; j < ambient_dim_; ++j)
            if (sgn(b[j]) != 0)
                r[j] -= f * b[j];
    }
    return jfs::is_zero(r);
}

bool Subspace::contains(const Subspace& other) const
{
    require_same_ambient(*this, other);
    for (const Vec& b : other.basis_)
        if (!contains(b))
            return false;
    return true;
}

RatMatrix Subspace::basis_matrix() const
{
    return RatMatrix::from_rows(basis_, ambient_dim_);
}

std::string Subspace::to_string() const
{
    if (basis_.empty())
        return "{0}";
    std::string out = "span{";
    for (std::size_t i = 0; i < basis_.size(); ++i)
    {
        if (i)
            out += ", ";
        out += jfs::to_string(basis_[i]);
    }
    return out + "}";
}

Subspace kernel_basis(const RatMatrix& m)
{
    const std::size_t n = m.cols();
    const RrefResult r = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : r.pivot_columns)
        is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < n; ++free)
    {
        if (is_pivot[free])
            continue;
        Vec v = zeros(n);
        v[free] = 1;
        for (std::size_t i = 0; i < r.rank; ++i)
            v[r.pivot_columns[i]] = -r.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return Subspace::span(n, basis);
}

Subspace orth_complement(const Subspace& u)
{
    return kernel_basis(RatMatrix::from_rows(u.basis(), u.ambient_dim()));
}

Subspace subspace_sum(const Subspace& u, const Subspace& v)
{
    require_same_ambient(u, v);
    std::vector<Vec> all = u.basis();
    all.insert(all.end(), v.basis().begin(), v.basis().end());
    return Subspace::span(u.ambient_dim(), all);
}

Subspace subspace_intersection(const Subspace& u, const Subspace& v)
{
    require_same_ambient(u, v);
    return orth_complement(subspace_sum(orth_complement(u), orth_complement(v)));
}

SubspaceRelations subspace_ops(const Subspace& u, const Subspace& v)
{
    require_same_ambient(u, v);
    SubspaceRelations out;
    out.sum = subspace_sum(u, v);
    out.intersection = subspace_intersection(u, v);
    out.contains = u.contains(v);
    out.equal = (u == v);
    return out;
}

Vec project(const Vec& v, const Subspace& u)
{
    if (v.size() != u.ambient_dim())
        throw DimensionMismatch("projection of a vector of length " + std::to_string(v.size()) +
                                " onto a subspace of Q^" + std::to_string(u.ambient_dim()));
    if (u.is_zero())
        return zeros(v.size());
    const RatMatrix b = u.basis_matrix();
    const RatMatrix gram = b * b.transpose();
    Vec coeffs;
    if (!solve_square(gram, b * v, coeffs))
        throw InternalInconsistency("Gram matrix of a canonical basis is singular");
    return b.transpose() * coeffs;
}

Subspace image(const RatMatrix& a, const Subspace& u)
{
    if (a.cols() != u.ambient_dim())
        throw DimensionMismatch("image: matrix with " + std::to_string(a.cols()) + " columns applied to Q^" +
                                std::to_string(u.ambient_dim()));
    std::vector<Vec> imgs;
    for (const Vec& b : u.basis())
        imgs.push_back(a * b);
    return Subspace::span(a.rows(), imgs);
}

}  // namespace jfs
