#pragma once

#include <jfs/facial.hpp>
#include <jfs/polyfunc.hpp>

#include <optional>
#include <utility>

namespace jfs {

/// range(A) in Q^m, written with equality rows orthogonal to the column space.
HPolyhedron range_polyhedron(const RatMatrix& a);

/**
 * Multiplier form of the conjugate of f = max_i(c_i.x + d_i) + indicator{Px <= p, Qx = q}:
 * f*(s) = min{ p.mu + q.nu - sum l_i d_i : sum l_i c_i + P^T mu + Q^T nu = s, l in the simplex, mu >= 0 }.
 */
ExtRational conjugate_by_multipliers(const PolyFunc& f, const Vec& s);

struct SumRuleReport
{
    JFS jfs;
    VRegion lhs, rhs, lhs_inf, rhs_inf;
    bool equal = false;
    bool equal_inf = false;
};

/// d(f+g)(x) against d(f + 1_Ta)(x) + d(g + 1_Ta)(x), and the same for the singular parts.
/// Optional `known` arguments here and below supply a precomputed T so repeated checks skip the oracle.
SumRuleReport sum_rule_check(const PolyFunc& f, const PolyFunc& g, const Vec& x, const JFS* known = nullptr);
/// The unrestricted right-hand sides df(x) + dg(x) and their singular analogue.
std::pair<VRegion, VRegion> classical_sum(const PolyFunc& f, const PolyFunc& g, const Vec& x);

struct NormalConeReport
{
    JFS jfs;
    VRegion lhs, rhs;
    bool equal = false;
};

/// N_{C cap D}(x) against N_{C cap Ta}(x) + N_{D cap Ta}(x).
NormalConeReport normal_cone_intersection_check(const HPolyhedron& c, const HPolyhedron& d, const Vec& x,
                                                const JFS* known = nullptr);

struct InfConvReport
{
    JFS jfs;
    ExtRational lhs, rhs;
    std::optional<std::pair<Vec, Vec>> witness;
    bool equal_and_attained = false;
};

/// (f+g)*(z) against min_y (f + 1_Ta)*(y) + (g + 1_Ta)*(z - y), with the minimizing split.
InfConvReport infconv_check(const PolyFunc& f, const PolyFunc& g, const Vec& z, const JFS* known = nullptr);

/**
 * inf_y f*(y) + g*(z - y) as one LP in the multipliers of both conjugates.
 * On a finite value, `split` receives the minimizing y.
 */
ExtRational infimal_convolution_of_conjugates(const PolyFunc& f, const PolyFunc& g, const Vec& z, Vec* split);

struct ChainRuleReport
{
    std::optional<JFS> jfs;  ///< absent in the trivial regime
    VRegion lhs, rhs;
    bool equal = false;
    bool trivial = false;  ///< dom g misses range A, so g(Ax) is identically +infinity
};

/// d(g o A)(x) against A^T d(g + 1_Ta)(Ax), with Ta from dom g and range A.
/// `known` is T(dom g, range A).
ChainRuleReport chain_rule_check(const PolyFunc& g, const RatMatrix& a, const Vec& x, const JFS* known = nullptr);

struct DualReport
{
    std::optional<JFS> jfs;
    ExtRational primal_value, dual_value;
    std::optional<Vec> primal_witness, dual_witness;
    bool equal = false;
    bool trivial = false;  ///< A dom f misses dom g
};

/**
 * inf_x f(x) + g(Ax) against
 * -inf_y (f + 1_{A^{-1} Ta})*(A^T y) + (g + 1_Ta)*(-y), with Ta from A dom f and dom g.
 */
DualReport fr_dual_check(const PolyFunc& f, const PolyFunc& g, const RatMatrix& a);

/// The same dual with the unrestricted f and g.
ExtRational classical_dual_value(const PolyFunc& f, const PolyFunc& g, const RatMatrix& a);
/// inf_x f(x) + g(Ax) by one LP; the minimizer goes to `witness` when attained.
ExtRational primal_value(const PolyFunc& f, const PolyFunc& g, const RatMatrix& a, Vec* witness);

}  // namespace jfs
