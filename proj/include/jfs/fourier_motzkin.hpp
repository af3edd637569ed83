#pragma once

#include <jfs/hpolyhedron.hpp>
#include <jfs/matrix.hpp>

namespace jfs {

/**
 * Projection of P onto its first `keep` coordinates by Fourier-Motzkin
 * elimination of the rest. Equalities are used for substitution first; after
 * every eliminated variable rows are normalized, duplicates dropped, and
 * LP-redundant rows pruned.
 */
HPolyhedron project_out_trailing(const HPolyhedron& p, std::size_t keep);

/// {c - d : c in C, d in D}.
HPolyhedron minkowski_difference(const HPolyhedron& c, const HPolyhedron& d);

/// {A x : x in P}.
HPolyhedron polyhedron_image(const RatMatrix& a, const HPolyhedron& p);

}  // namespace jfs
