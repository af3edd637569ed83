#include <jfs/calculus.hpp>

#include <jfs/error.hpp>
#include <jfs/fourier_motzkin.hpp>
#include <jfs/lp.hpp>
#include <jfs/polyhedron.hpp>

namespace jfs {

namespace {

std::size_t multiplier_count(const PolyFunc& f)
{
    return f.pieces().size() + f.domain().num_ineq() + f.domain().num_eq();
}

/**
 * Adds the multiplier block of f's conjugate, evaluated at s = S y + s0, to a
 * minimization LP. The block's variables start at `off`; y occupies
 * [y_off, y_off + S.cols()). With no S, s = s0.
 */
void add_multiplier_block(LinearProgram& lp, const PolyFunc& f, std::size_t off, const RatMatrix* smap,
                          std::size_t y_off, const Vec& s0)
{
    const HPolyhedron& dom = f.domain();
    const std::size_t k = f.pieces().size(), mi = dom.num_ineq(), me = dom.num_eq();
    for (std::size_t j = 0; j < k; ++j)
    {
        lp.nonnegative[off + j] = true;
        lp.objective[off + j] -= f.pieces()[j].d;
    }
    for (std::size_t i = 0; i < mi; ++i)
    {
        lp.nonnegative[off + k + i] = true;
        lp.objective[off + k + i] += dom.b()[i];
    }
    for (std::size_t i = 0; i < me; ++i)
        lp.objective[off + k + mi + i] += dom.d()[i];
    for (std::size_t r = 0; r < f.dim(); ++r)
    {
        Vec row = zeros(lp.num_vars);
        for (std::size_t j = 0; j < k; ++j)
            row[off + j] = f.pieces()[j].c[r];
        for (std::size_t i = 0; i < mi; ++i)
            row[off + k + i] = dom.A()(i, r);
        for (std::size_t i = 0; i < me; ++i)
            row[off + k + mi + i] = dom.E()(i, r);
        if (smap)
            for (std::size_t t = 0; t < smap->cols(); ++t)
                row[y_off + t] -= (*smap)(r, t);
        lp.add_row(std::move(row), Relation::Equal, s0[r]);
    }
    Vec simplex = zeros(lp.num_vars);
    for (std::size_t j = 0; j < k; ++j)
        simplex[off + j] = 1;
    lp.add_row(std::move(simplex), Relation::Equal, Rational(1));
}

// Value of a minimization whose infeasibility means +infinity.
ExtRational min_value(const LPOutcome& r)
{
    switch (r.status)
    {
    case LPStatus::Optimal: return ExtRational::finite(r.value);
    case LPStatus::Unbounded: return ExtRational::neg_inf();
    case LPStatus::Infeasible: break;
    }
    return ExtRational::pos_inf();
}

RatMatrix negated_identity(std::size_t n)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = -1;
    return m;
}

void require_in_domain(const PolyFunc& f, const Vec& x, const char* what)
{
    if (x.size() != f.dim())
        throw DimensionMismatch(std::string(what) + ": point in the wrong dimension");
    if (!f.domain().contains(x))
        throw PreconditionViolation(std::string(what) + ": " + to_string(x) + " is outside the domain");
}

PolyFunc restrict_function(const PolyFunc& f, const JFS& j)
{
    return f.restricted_to(j.T, *j.base_point);
}

// -inf_y f*(A^T y) + g*(-y), with the minimizing y in `witness`.
ExtRational dual_value(const PolyFunc& f, const PolyFunc& g, const RatMatrix& a, Vec* witness)
{
    const std::size_t m = a.rows();
    const std::size_t nf = multiplier_count(f), ng = multiplier_count(g);
    LinearProgram lp(m + nf + ng);
    const RatMatrix at = a.transpose();
    const RatMatrix neg = negated_identity(m);
    add_multiplier_block(lp, f, m, &at, 0, zeros(f.dim()));
    add_multiplier_block(lp, g, m + nf, &neg, 0, zeros(m));
    const LPOutcome r = solve(lp);
    if (r.status == LPStatus::Optimal && witness)
        *witness = Vec(r.point.begin(), r.point.begin() + static_cast<std::ptrdiff_t>(m));
    return -min_value(r);
}

}  // namespace

HPolyhedron range_polyhedron(const RatMatrix& a)
{
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < a.cols(); ++j)
        cols.push_back(a.col(j));
    const Subspace normals = orth_complement(Subspace::span(a.rows(), cols));
    HPolyhedron r(a.rows());
    for (const Vec& w : normals.basis())
        r = r.with_eq(w, Rational(0));
    return r;
}

ExtRational conjugate_by_multipliers(const PolyFunc& f, const Vec& s)
{
    if (s.size() != f.dim())
        throw DimensionMismatch("conjugate_by_multipliers: dual point in the wrong dimension");
    LinearProgram lp(multiplier_count(f));
    add_multiplier_block(lp, f, 0, nullptr, 0, s);
    return min_value(solve(lp));
}

SumRuleReport sum_rule_check(const PolyFunc& f, const PolyFunc& g, const Vec& x, const JFS* known)
{
    require_in_domain(f, x, "sum_rule_check");
    require_in_domain(g, x, "sum_rule_check");
    SumRuleReport r;
    r.jfs = known ? *known : jfs_oracle(f.domain(), g.domain());
    const PolyFunc ft = restrict_function(f, r.jfs), gt = restrict_function(g, r.jfs);
    const PolyFunc sum = f.plus(g);
    r.lhs = subdifferential(sum, x);
    r.rhs = minkowski_sum(subdifferential(ft, x), subdifferential(gt, x));
    r.lhs_inf = singular_subdifferential(sum, x);
    r.rhs_inf = minkowski_sum(singular_subdifferential(ft, x), singular_subdifferential(gt, x));
    r.equal = region_equal(r.lhs, r.rhs);
    r.equal_inf = region_equal(r.lhs_inf, r.rhs_inf);
    return r;
}

std::pair<VRegion, VRegion> classical_sum(const PolyFunc& f, const PolyFunc& g, const Vec& x)
{
    return {minkowski_sum(subdifferential(f, x), subdifferential(g, x)),
            minkowski_sum(singular_subdifferential(f, x), singular_subdifferential(g, x))};
}

NormalConeReport normal_cone_intersection_check(const HPolyhedron& c, const HPolyhedron& d, const Vec& x,
                                                const JFS* known)
{
    if (x.size() != c.dim() || c.dim() != d.dim())
        throw DimensionMismatch("normal_cone_intersection_check: mismatched dimensions");
    if (!c.contains(x) || !d.contains(x))
        throw PreconditionViolation("normal_cone_intersection_check: " + to_string(x) + " is not in C cap D");
    NormalConeReport r;
    r.jfs = known ? *known : jfs_oracle(c, d);
    r.lhs = normal_cone_at(c.intersect(d), x);
    r.rhs = minkowski_sum(normal_cone_at(restrict_to(c, r.jfs), x), normal_cone_at(restrict_to(d, r.jfs), x));
    r.equal = region_equal(r.lhs, r.rhs);
    return r;
}

ExtRational infimal_convolution_of_conjugates(const PolyFunc& f, const PolyFunc& g, const Vec& z, Vec* split)
{
    const std::size_t n = f.dim();
    if (g.dim() != n || z.size() != n)
        throw DimensionMismatch("infimal convolution: mismatched dimensions");
    const std::size_t nf = multiplier_count(f), ng = multiplier_count(g);
    LinearProgram lp(n + nf + ng);
    const RatMatrix id = RatMatrix::identity(n);
    const RatMatrix neg = negated_identity(n);
    add_multiplier_block(lp, f, n, &id, 0, zeros(n));
    add_multiplier_block(lp, g, n + nf, &neg, 0, z);
    const LPOutcome r = solve(lp);
    if (r.status == LPStatus::Optimal && split)
        *split = Vec(r.point.begin(), r.point.begin() + static_cast<std::ptrdiff_t>(n));
    return min_value(r);
}

InfConvReport infconv_check(const PolyFunc& f, const PolyFunc& g, const Vec& z, const JFS* known)
{
    InfConvReport r;
    r.jfs = known ? *known : jfs_oracle(f.domain(), g.domain());
    const PolyFunc ft = restrict_function(f, r.jfs), gt = restrict_function(g, r.jfs);
    r.lhs = conjugate_eval(f.plus(g), z);
    Vec y;
    r.rhs = infimal_convolution_of_conjugates(ft, gt, z, &y);
    bool attained = !r.rhs.is_finite();
    if (r.rhs.is_finite())
    {
        const Vec rest = sub(z, y);
        r.witness = std::make_pair(y, rest);
        // Re-evaluate both conjugates through the epigraph route.
        const ExtRational a = conjugate_eval(ft, y), b = conjugate_eval(gt, rest);
        attained = a.is_finite() && b.is_finite() && a.value + b.value == r.rhs.value;
    }
    r.equal_and_attained = r.lhs == r.rhs && attained;
    return r;
}

ChainRuleReport chain_rule_check(const PolyFunc& g, const RatMatrix& a, const Vec& x, const JFS* known)
{
    if (a.rows() != g.dim() || x.size() != a.cols())
        throw DimensionMismatch("chain_rule_check: matrix shape does not fit the function and point");
    ChainRuleReport r;
    const HPolyhedron range = range_polyhedron(a);
    if (is_empty(g.domain().intersect(range)))
    {
        // g(Ax) is identically +infinity: both sides are empty.
        r.trivial = true;
        r.lhs = VRegion::empty(a.cols());
        r.rhs = VRegion::empty(a.cols());
        r.equal = true;
        return r;
    }
    const Vec ax = a * x;
    require_in_domain(g, ax, "chain_rule_check");
    r.jfs = known ? *known : jfs_oracle(g.domain(), range);
    r.lhs = subdifferential(g.pullback(a), x);
    r.rhs = linear_image(a.transpose(), subdifferential(restrict_function(g, *r.jfs), ax));
    r.equal = region_equal(r.lhs, r.rhs);
    return r;
}

ExtRational primal_value(const PolyFunc& f, const PolyFunc& g, const RatMatrix& a, Vec* witness)
{
    const std::size_t n = f.dim();
    if (a.cols() != n || a.rows() != g.dim())
        throw DimensionMismatch("primal_value: matrix shape does not fit the functions");
    const PolyFunc ga = g.pullback(a);
    // Variables (x, t_f, t_g); minimize t_f + t_g over both epigraphs.
    LinearProgram lp(n + 2);
    lp.objective[n] = 1;
    lp.objective[n + 1] = 1;
    auto add_epigraph = [&](const PolyFunc& h, std::size_t t) {
        for (const AffinePiece& p : h.pieces())
        {
            Vec row = p.c;
            row.resize(n + 2);
            row[t] = -1;
            lp.add_row(std::move(row), Relation::LessEqual, -p.d);
        }
        const HPolyhedron& dom = h.domain();
        for (std::size_t i = 0; i < dom.num_ineq(); ++i)
        {
            Vec row = dom.ineq_row(i);
            row.resize(n + 2);
            lp.add_row(std::move(row), Relation::LessEqual, dom.b()[i]);
        }
        for (std::size_t i = 0; i < dom.num_eq(); ++i)
        {
            Vec row = dom.eq_row(i);
            row.resize(n + 2);
            lp.add_row(std::move(row), Relation::Equal, dom.d()[i]);
        }
    };
    add_epigraph(f, n);
    add_epigraph(ga, n + 1);
    const LPOutcome r = solve(lp);
    if (r.status == LPStatus::Optimal && witness)
        *witness = Vec(r.point.begin(), r.point.begin() + static_cast<std::ptrdiff_t>(n));
    return min_value(r);
}

ExtRational classical_dual_value(const PolyFunc& f, const PolyFunc& g, const RatMatrix& a)
{
    return dual_value(f, g, a, nullptr);
}

DualReport fr_dual_check(const PolyFunc& f, const PolyFunc& g, const RatMatrix& a)
{
    if (a.cols() != f.dim() || a.rows() != g.dim())
        throw DimensionMismatch("fr_dual_check: matrix shape does not fit the functions");
    DualReport r;
    Vec xw;
    r.primal_value = primal_value(f, g, a, &xw);
    if (r.primal_value.is_finite())
        r.primal_witness = xw;

    const HPolyhedron image = polyhedron_image(a, f.domain());
    if (is_empty(image.intersect(g.domain())))
    {
        // Ta is empty: both restricted functions are identically +infinity,
        // their conjugates identically -infinity, and the dual value is +infinity.
        r.trivial = true;
        r.dual_value = ExtRational::pos_inf();
        r.equal = r.primal_value == r.dual_value;
        return r;
    }
    r.jfs = jfs_oracle(image, g.domain());
    const JFS& j = *r.jfs;
    // f + indicator of A^{-1}(Ta): w.(A x) = w.base for every normal w of T.
    HPolyhedron fdom = f.domain();
    const RatMatrix at = a.transpose();
    const Subspace normals = orth_complement(j.T);
    for (const Vec& w : normals.basis())
        fdom = fdom.with_eq(at * w, dot(w, *j.base_point));
    const PolyFunc fr(f.pieces(), fdom);
    const PolyFunc gr = restrict_function(g, j);
    Vec yw;
    r.dual_value = dual_value(fr, gr, a, &yw);
    if (r.dual_value.is_finite())
        r.dual_witness = yw;
    r.equal = r.primal_value == r.dual_value;
    return r;
}

}  // namespace jfs
