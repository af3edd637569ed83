#include <jfs/vregion.hpp>

#include <jfs/error.hpp>
#include <jfs/lp.hpp>

#include <algorithm>

namespace jfs {

namespace {

void dedupe(std::vector<Vec>& vs)
{
    std::sort(vs.begin(), vs.end(), lex_less);
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

void check_dim(const VRegion& r, const Vec& x)
{
    if (x.size() != r.dim)
        throw DimensionMismatch("vector of length " + std::to_string(x.size()) + " against a region in Q^" +
                                std::to_string(r.dim));
}

}  // namespace

VRegion VRegion::empty(std::size_t dim)
{
    VRegion r;
    r.dim = dim;
    r.lineality = Subspace::zero(dim);
    return r;
}

VRegion VRegion::cone(std::size_t dim, std::vector<Vec> rays, Subspace lineality)
{
    VRegion r;
    r.dim = dim;
    r.points = {zeros(dim)};
    r.rays = std::move(rays);
    r.lineality = std::move(lineality);
    return tidy(std::move(r));
}

VRegion VRegion::cone(std::size_t dim, std::vector<Vec> rays)
{
    return cone(dim, std::move(rays), Subspace::zero(dim));
}

VRegion VRegion::origin(std::size_t dim)
{
    return cone(dim, {});
}

VRegion VRegion::whole(std::size_t dim)
{
    return cone(dim, {}, Subspace::full(dim));
}

bool VRegion::is_origin() const
{
    if (points.empty() || !lineality.is_zero())
        return false;
    for (const Vec& p : points)
        if (!is_zero(p))
            return false;
    for (const Vec& r : rays)
        if (!is_zero(r))
            return false;
    return true;
}

std::vector<Vec> VRegion::cone_generators() const
{
    std::vector<Vec> g = rays;
    for (const Vec& b : lineality.basis())
    {
        g.push_back(b);
        g.push_back(negate(b));
    }
    return g;
}

Subspace VRegion::direction_span() const
{
    std::vector<Vec> g = rays;
    g.insert(g.end(), points.begin(), points.end());
    Subspace s = Subspace::span(dim, g);
    return subspace_sum(s, lineality);
}

std::string VRegion::to_string() const
{
    if (is_empty())
        return "empty";
    std::string out = "conv{";
    for (std::size_t i = 0; i < points.size(); ++i)
        out += (i ? ", " : "") + jfs::to_string(points[i]);
    out += "} + cone{";
    for (std::size_t i = 0; i < rays.size(); ++i)
        out += (i ? ", " : "") + jfs::to_string(rays[i]);
    out += "} + " + lineality.to_string();
    return out;
}

VRegion tidy(VRegion r)
{
    std::vector<Vec> rays;
    for (const Vec& v : r.rays)
    {
        check_dim(r, v);
        if (is_zero(v) || r.lineality.contains(v))
            continue;
        rays.push_back(normalize_direction(v));
    }
    dedupe(rays);
    r.rays = std::move(rays);
    for (const Vec& p : r.points)
        check_dim(r, p);
    dedupe(r.points);
    return r;
}

bool region_contains(const VRegion& r, const Vec& x)
{
    check_dim(r, x);
    if (r.is_empty())
        return false;
    const std::size_t n = r.dim;
    const std::size_t np = r.points.size(), nr = r.rays.size(), nl = r.lineality.dim();
    LinearProgram lp(np + nr + nl);
    for (std::size_t j = 0; j < np + nr; ++j)
        lp.nonnegative[j] = true;
    for (std::size_t i = 0; i < n; ++i)
    {
        Vec row(np + nr + nl);
        for (std::size_t j = 0; j < np; ++j)
            row[j] = r.points[j][i];
        for (std::size_t j = 0; j < nr; ++j)
            row[np + j] = r.rays[j][i];
        for (std::size_t j = 0; j < nl; ++j)
            row[np + nr + j] = r.lineality.basis()[j][i];
        lp.add_row(std::move(row), Relation::Equal, x[i]);
    }
    Vec simplex(np + nr + nl);
    for (std::size_t j = 0; j < np; ++j)
        simplex[j] = 1;
    lp.add_row(std::move(simplex), Relation::Equal, Rational(1));
    return solve(lp).status == LPStatus::Optimal;
}

bool recession_contains(const VRegion& r, const Vec& v)
{
    check_dim(r, v);
    if (is_zero(v))
        return true;
    if (r.lineality.contains(v))
        return true;
    return cone_member(v, r.rays, r.lineality);
}

bool region_subset(const VRegion& a, const VRegion& b)
{
    if (a.dim != b.dim)
        throw DimensionMismatch("comparing regions in different dimensions");
    if (a.is_empty())
        return true;
    if (b.is_empty())
        return false;
    for (const Vec& p : a.points)
        if (!region_contains(b, p))
            return false;
    for (const Vec& v : a.cone_generators())
        if (!recession_contains(b, v))
            return false;
    return true;
}

bool region_equal(const VRegion& a, const VRegion& b)
{
    return region_subset(a, b) && region_subset(b, a);
}

VRegion minkowski_sum(const VRegion& a, const VRegion& b)
{
    if (a.dim != b.dim)
        throw DimensionMismatch("Minkowski sum of regions in different dimensions");
    VRegion out = VRegion::empty(a.dim);
    if (a.is_empty() || b.is_empty())
        return out;
    for (const Vec& p : a.points)
        for (const Vec& q : b.points)
            out.points.push_back(add(p, q));
    out.rays = a.rays;
    out.rays.insert(out.rays.end(), b.rays.begin(), b.rays.end());
    out.lineality = subspace_sum(a.lineality, b.lineality);
    return tidy(std::move(out));
}

VRegion linear_image(const RatMatrix& m, const VRegion& r)
{
    if (m.cols() != r.dim)
        throw DimensionMismatch("linear image: matrix has " + std::to_string(m.cols()) + " columns, region lives in Q^" +
                                std::to_string(r.dim));
    VRegion out = VRegion::empty(m.rows());
    for (const Vec& p : r.points)
        out.points.push_back(m * p);
    for (const Vec& v : r.rays)
        out.rays.push_back(m * v);
    out.lineality = image(m, r.lineality);
    return tidy(std::move(out));
}

VRegion project_region(const VRegion& r, const Subspace& u)
{
    if (u.ambient_dim() != r.dim)
        throw DimensionMismatch("projecting a region onto a subspace of another dimension");
    VRegion out = VRegion::empty(r.dim);
    for (const Vec& p : r.points)
        out.points.push_back(project(p, u));
    for (const Vec& v : r.rays)
        out.rays.push_back(project(v, u));
    std::vector<Vec> lin;
    for (const Vec& b : r.lineality.basis())
        lin.push_back(project(b, u));
    out.lineality = Subspace::span(r.dim, lin);
    return tidy(std::move(out));
}

}  // namespace jfs
