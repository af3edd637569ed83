#pragma once

#include <jfs/matrix.hpp>
#include <jfs/rational.hpp>
#include <jfs/subspace.hpp>

#include <string>
#include <vector>

namespace jfs {

/**
 * conv(points) + cone(rays) + lineality. Empty exactly when `points` is
 * empty; a cone when points = {0}. Generators need not be minimal.
 */
struct VRegion
{
    std::size_t dim = 0;
    std::vector<Vec> points;
    std::vector<Vec> rays;
    Subspace lineality;

    static VRegion empty(std::size_t dim);
    static VRegion cone(std::size_t dim, std::vector<Vec> rays, Subspace lineality);
    static VRegion cone(std::size_t dim, std::vector<Vec> rays);
    static VRegion origin(std::size_t dim);
    static VRegion whole(std::size_t dim);

    bool is_empty() const { return points.empty(); }
    /// True iff the region is exactly {0}.
    bool is_origin() const;
    /// Rays followed by +-basis of the lineality: a plain cone generating set.
    std::vector<Vec> cone_generators() const;
    /// Span of all generators; for a cone this is span(K - K).
    Subspace direction_span() const;

    std::string to_string() const;
};

/// Drops zero rays, rays inside the lineality and duplicates; rays are scaled to a canonical length.
VRegion tidy(VRegion r);

bool region_contains(const VRegion& r, const Vec& x);
/// v in cone(rays) + lineality.
bool recession_contains(const VRegion& r, const Vec& v);

/**
 * a subset of b: every point of a lies in b, and every ray and every
 * +-lineality direction of a lies in the recession cone of b.
 */
bool region_subset(const VRegion& a, const VRegion& b);
bool region_equal(const VRegion& a, const VRegion& b);

VRegion minkowski_sum(const VRegion& a, const VRegion& b);
/// Image under x -> M x; generators are mapped directly.
VRegion linear_image(const RatMatrix& m, const VRegion& r);
/// Orthogonal projection onto u.
VRegion project_region(const VRegion& r, const Subspace& u);

}  // namespace jfs
