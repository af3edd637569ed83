#pragma once

#include <jfs/hpolyhedron.hpp>
#include <jfs/subspace.hpp>
#include <jfs/vregion.hpp>

#include <optional>
#include <vector>

namespace jfs {

/// P as a subset of Q, decided by one or two LPs per row of Q. Empty P is a subset of anything.
bool polyhedron_subset(const HPolyhedron& p, const HPolyhedron& q);
bool polyhedron_equal(const HPolyhedron& p, const HPolyhedron& q);

/// {x} as a polyhedron.
HPolyhedron point_set(const Vec& x);

struct AffineHull
{
    Vec base;  ///< a relative interior point
    Subspace dir;
};

/// nullopt when P is empty.
std::optional<AffineHull> affine_hull(const HPolyhedron& p);

/**
 * A nonempty face of a parent polyhedron: the parent with `active_rows`
 * made tight. `span` is the direction of its affine hull.
 */
struct Face
{
    HPolyhedron polyhedron;
    std::vector<std::size_t> active_rows;
    Subspace span;
};

/// Smallest face containing x; x is in its relative interior.
Face minimal_face_at(const HPolyhedron& p, const Vec& x);
/// Smallest face containing the nonempty set S, which must lie in P.
Face face_generated_by(const HPolyhedron& p, const HPolyhedron& s);

/// N_P(S) = {v : <c - s, v> <= 0 for all c in P, s in S}, read off at a relative interior point of S.
VRegion normal_cone(const HPolyhedron& p, const HPolyhedron& s);
VRegion normal_cone_at(const HPolyhedron& p, const Vec& x);

/**
 * Normals within U of the slice P cap (U + S) at S. Requires S - S to lie in U.
 * Computed by projecting the slice's normal cone onto U; that cone's
 * lineality contains the complement of U, so projection equals intersection.
 */
VRegion nested_normal_cone(const HPolyhedron& p, const HPolyhedron& s, const Subspace& u);

/// {v : x + t v in P for some t > 0} as a cone with explicit generators.
VRegion feasible_directions(const HPolyhedron& p, const Vec& x);

/**
 * All nonempty faces of P, identified by the sorted set of inequality rows
 * tight on the whole face, and returned in order of that signature.
 */
std::vector<Face> enumerate_faces(const HPolyhedron& p, std::size_t max_dim_guard = 6);

/**
 * True iff P cap (U + S) is a face of P and S - S lies in U (the slice test
 * for facial subspaces).
 */
bool is_facial_subspace(const HPolyhedron& p, const HPolyhedron& s, const Subspace& u);

}  // namespace jfs
