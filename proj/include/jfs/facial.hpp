#pragma once

#include <jfs/hpolyhedron.hpp>
#include <jfs/subspace.hpp>
#include <jfs/vregion.hpp>

#include <optional>
#include <vector>

namespace jfs {

/// Joint facial subspace T of a pair C, D with a point of C cap D.
struct JFS
{
    Subspace T;
    std::optional<Vec> base_point;
    std::size_t T_a_dim = 0;
};

enum class ReductionVariant { Nested, Pointwise };

struct ReductionStep
{
    Subspace T;                 ///< T_i
    Subspace K_span;            ///< span of the common normal cone K_i
    std::vector<Vec> K_elements;  ///< nonzero elements of K_i spanning K_span
};

/// steps[0..ell]; steps[ell] is the fixed point, where K is {0}.
struct ReductionTrace
{
    std::vector<ReductionStep> steps;
    std::size_t ell = 0;
    ReductionVariant variant = ReductionVariant::Nested;
};

struct ReductionResult
{
    JFS jfs;
    ReductionTrace trace;
};

/**
 * Span of the minimal face at 0 of C - D. Only the cone of C - D at 0 is
 * built: Fourier-Motzkin on the rows of C and D tight at a point of
 * rint(C cap D). Throws DisjointSets when C cap D is empty.
 */
/// `difference`, when given, receives that cone.
JFS jfs_oracle(const HPolyhedron& c, const HPolyhedron& d, HPolyhedron* difference = nullptr);

/// The full C - D, for cross-checks.
HPolyhedron jfs_difference(const HPolyhedron& c, const HPolyhedron& d);

/// Cone of feasible directions of C - D at 0, given a point of rint(C cap D).
HPolyhedron jfs_difference_cone(const HPolyhedron& c, const HPolyhedron& d, const Vec& meet_point);

/**
 * Iterative reduction with nested normal cones:
 * T_{i+1} = T_i cap span(N_C^{T_i}(S) cap -N_D^{T_i}(S))^perp, starting from
 * the whole space. S defaults to C cap D.
 */
ReductionResult jfs_iterative(const HPolyhedron& c, const HPolyhedron& d, const std::optional<HPolyhedron>& s = {});

/// The same recursion with the global normal cones N_C(x), N_D(x) held fixed.
ReductionResult jfs_pointwise(const HPolyhedron& c, const HPolyhedron& d, const Vec& x);

/// span(F_P(S) - F_P(S)), certified by an empty nested normal cone.
Subspace generated_facial_subspace(const HPolyhedron& p, const HPolyhedron& s);

/// P cap (T + base): the part of P inside the affine joint facial subspace.
HPolyhedron restrict_to(const HPolyhedron& p, const JFS& j);

/// H_C(C cap D) + H_D(C cap D) equals the oracle's T.
// The checks below take a precomputed T(C, D) to skip the oracle.
bool check_characterization(const HPolyhedron& c, const HPolyhedron& d, const JFS* known = nullptr);
/// (T + base) cap C equals F_C(C cap D) as a set.
bool check_reveals_faces(const HPolyhedron& c, const HPolyhedron& d, const JFS* known = nullptr);
/// A point in rint(C cap T_a) cap rint(D cap T_a), or nullopt if none was found.
std::optional<Vec> check_rint_qualification(const HPolyhedron& c, const HPolyhedron& d, const JFS* known = nullptr);

/**
 * A nonzero v in `ambient` with sup_C v.c <= inf_D v.d, taken from
 * N_C(C cap D) cap -N_D(C cap D) cap ambient, or nullopt when that cone is
 * {0}. C and D must lie in base + ambient.
 */
std::optional<Vec> separation_certificate(const HPolyhedron& c, const HPolyhedron& d, const Subspace& ambient,
                                          const Vec& base);

/**
 * v_1..v_k with V_i = V_{i-1} cap v_i^perp, each v_i a nonzero nested normal
 * of P at S within V_{i-1} and orthogonal to U, ending at V_k = U.
 */
std::vector<Vec> facial_chain(const HPolyhedron& p, const HPolyhedron& s, const Subspace& v, const Subspace& u);

/// True iff rint(C) and rint(D) share a point.
bool relative_interiors_meet(const HPolyhedron& c, const HPolyhedron& d);

}  // namespace jfs
