#pragma once

#include <jfs/hpolyhedron.hpp>
#include <jfs/matrix.hpp>
#include <jfs/rational.hpp>
#include <jfs/subspace.hpp>

#include <optional>
#include <vector>

namespace jfs {

enum class Sense { Minimize, Maximize };
enum class Relation { LessEqual, Equal, GreaterEqual };
enum class LPStatus { Optimal, Unbounded, Infeasible };

/**
 * A linear program over exact rationals with free or nonnegative variables
 * and <=, =, >= rows. Variables are free unless marked otherwise.
 */
struct LinearProgram
{
    explicit LinearProgram(std::size_t num_vars);

    std::size_t num_vars;
    std::vector<bool> nonnegative;
    std::vector<Vec> rows;
    std::vector<Relation> relations;
    Vec rhs;
    Vec objective;
    Sense sense = Sense::Minimize;

    void add_row(Vec coeffs, Relation rel, Rational value);
    /// Adds `x_var <= value`.
    void add_upper_bound(std::size_t var, const Rational& value);
};

/**
 * Result of an LP solve.
 *
 * Optimal: `point` attains `value`, and `duals` (one per row) satisfy
 * objective = sum_i duals_i * row_i + r with r zero on free variables and
 * sign-constrained on nonnegative ones, and sum_i duals_i * rhs_i = value.
 * Unbounded: `ray` is a recession direction of the feasible set that strictly
 * improves the objective.
 */
struct LPOutcome
{
    LPStatus status = LPStatus::Infeasible;
    Rational value;
    Vec point;
    Vec ray;
    Vec duals;
};

/// Two-phase primal simplex on a dense tableau with Bland's rule.
LPOutcome solve(const LinearProgram& lp);

/// Re-checks feasibility/optimality certificates of an outcome exactly.
bool verify_certificate(const LinearProgram& lp, const LPOutcome& outcome);

/// Optimizes over {x : A x <= b, E x = d}.
LPOutcome solve_lp(const Vec& objective, const HPolyhedron& p, Sense sense);

bool is_empty(const HPolyhedron& p);

struct InteriorPoint
{
    Vec point;
    /// Inequality rows satisfied with equality on the whole polyhedron.
    std::vector<std::size_t> implicit_equalities;
};

/**
 * A point of rint(P) together with the implicit equality rows, or nullopt
 * when P is empty. Every non-implicit row has strictly positive slack at the
 * returned point.
 */
std::optional<InteriorPoint> relative_interior_point(const HPolyhedron& p);

struct ConeSupport
{
    /// Maximal support {i : exists z >= 0, A z = 0, z_i > 0}, sorted.
    std::vector<std::size_t> support;
    /// One z >= 0 with A z = 0 and z_i > 0 exactly on `support`.
    Vec witness;
};

ConeSupport cone_support(const RatMatrix& a);

/// v in cone(generators) + lineality, decided by LP feasibility.
bool cone_member(const Vec& v, const std::vector<Vec>& generators, const Subspace& lineality);

}  // namespace jfs
