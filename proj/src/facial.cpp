#include <jfs/facial.hpp>

#include <jfs/error.hpp>
#include <jfs/fourier_motzkin.hpp>
#include <jfs/lp.hpp>
#include <jfs/polyhedron.hpp>

#include <algorithm>

namespace jfs {

namespace {

void require_same_dim(const HPolyhedron& c, const HPolyhedron& d, const char* what)
{
    if (c.dim() != d.dim())
        throw DimensionMismatch(std::string(what) + ": sets in dimensions " + std::to_string(c.dim()) + " and " +
                                std::to_string(d.dim()));
}

Vec combine(const std::vector<Vec>& gens, const Vec& coeffs, std::size_t n)
{
    Vec v = zeros(n);
    for (std::size_t j = 0; j < gens.size(); ++j)
        if (sgn(coeffs[j]) != 0)
            v = add(v, scale(coeffs[j], gens[j]));
    return v;
}

struct CommonCone
{
    Subspace span;
    std::vector<Vec> elements;  // nonzero, direction-normalized, sorted
};

/**
 * K = {G_C l : G_C l = -G_D m, l, m >= 0, W G_C l = 0}. Its span is the image
 * of the span of the lifted cone, which cone_support pins down: the lifted
 * span is the kernel restricted to the support coordinates. Unpaired, this is
 * just cone(G_C) cap ker W.
 */
CommonCone common_cone(const std::vector<Vec>& gc, const std::vector<Vec>& gd, const std::vector<Vec>& w,
                       std::size_t n, bool paired = true)
{
    const std::size_t a = gc.size(), k = gc.size() + gd.size();
    CommonCone out;
    out.span = Subspace::zero(n);
    if (a == 0)
        return out;
    std::vector<Vec> rows;
    for (std::size_t i = 0; paired && i < n; ++i)
    {
        Vec row(k);
        for (std::size_t j = 0; j < a; ++j)
            row[j] = gc[j][i];
        for (std::size_t j = a; j < k; ++j)
            row[j] = gd[j - a][i];
        rows.push_back(std::move(row));
    }
    for (const Vec& wr : w)
    {
        Vec row(k);
        for (std::size_t j = 0; j < a; ++j)
            row[j] = dot(wr, gc[j]);
        rows.push_back(std::move(row));
    }
    const RatMatrix m = RatMatrix::from_rows(rows, k);
    const ConeSupport cs = cone_support(m);
    if (cs.support.empty())
        return out;

    std::vector<Vec> restricted_rows;
    for (std::size_t i = 0; i < m.rows(); ++i)
    {
        Vec r;
        for (std::size_t j : cs.support)
            r.push_back(m(i, j));
        restricted_rows.push_back(std::move(r));
    }
    const Subspace lifted = kernel_basis(RatMatrix::from_rows(restricted_rows, cs.support.size()));

    auto scatter = [&](const Vec& local) {
        Vec z = zeros(k);
        for (std::size_t t = 0; t < cs.support.size(); ++t)
            z[cs.support[t]] = local[t];
        return z;
    };
    auto lambda_part = [&](const Vec& z) { return Vec(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(a)); };

    std::vector<Vec> span_vectors, elements;
    elements.push_back(combine(gc, lambda_part(cs.witness), n));
    for (const Vec& local : lifted.basis())
    {
        const Vec b = scatter(local);
        span_vectors.push_back(combine(gc, lambda_part(b), n));
        // Step from the witness along +-b while staying nonnegative.
        Rational eps;
        bool have = false;
        for (std::size_t j = 0; j < k; ++j)
            if (sgn(b[j]) != 0)
            {
                Rational r = cs.witness[j] / abs(b[j]);
                if (!have || r < eps)
                    eps = r;
                have = true;
            }
        eps /= 2;
        for (int sign : {1, -1})
            elements.push_back(combine(gc, lambda_part(add(cs.witness, scale(eps * sign, b))), n));
    }
    out.span = Subspace::span(n, span_vectors);
    for (Vec& v : elements)
        if (!is_zero(v))
            out.elements.push_back(normalize_direction(v));
    std::sort(out.elements.begin(), out.elements.end(), lex_less);
    out.elements.erase(std::unique(out.elements.begin(), out.elements.end()), out.elements.end());
    return out;
}

// Nested normal cone of P at a relative interior point x of S within U.
VRegion nested_at(const HPolyhedron& p, const Vec& x, const Subspace& u)
{
    return project_region(normal_cone_at(p.restricted_to(u, x), x), u);
}

struct Reducer
{
    std::size_t n;
    ReductionTrace trace;

    template <class StepFn>
    Subspace run(StepFn next_cone)
    {
        Subspace t = Subspace::full(n);
        for (std::size_t i = 0;; ++i)
        {
            if (i > n)
                throw InternalInconsistency("facial reduction did not stabilize within n steps");
            CommonCone k = next_cone(t);
            const Subspace next = subspace_intersection(t, orth_complement(k.span));
            trace.steps.push_back({t, k.span, std::move(k.elements)});
            if (next == t)
            {
                trace.ell = i;
                return t;
            }
            t = next;
        }
    }
};

std::vector<Vec> complement_rows(const Subspace& t)
{
    return orth_complement(t).basis();
}

}  // namespace

HPolyhedron jfs_difference(const HPolyhedron& c, const HPolyhedron& d)
{
    return minkowski_difference(c, d);
}

namespace {

// Cone of feasible directions of P at x: the rows tight at x, made homogeneous.
HPolyhedron tangent_cone(const HPolyhedron& p, const Vec& x)
{
    HPolyhedron k(p.dim());
    for (std::size_t i : p.tight_rows(x))
        k = k.with_ineq(p.ineq_row(i), Rational(0));
    for (std::size_t i = 0; i < p.num_eq(); ++i)
        k = k.with_eq(p.eq_row(i), Rational(0));
    return k;
}

}  // namespace

HPolyhedron jfs_difference_cone(const HPolyhedron& c, const HPolyhedron& d, const Vec& meet_point)
{
    require_same_dim(c, d, "jfs_difference_cone");
    // With r in rint(C cap D), the cone of C - D at 0 is T_C(r) - T_D(r).
    return minkowski_difference(tangent_cone(c, meet_point), tangent_cone(d, meet_point));
}

JFS jfs_oracle(const HPolyhedron& c, const HPolyhedron& d, HPolyhedron* difference)
{
    require_same_dim(c, d, "jfs_oracle");
    const auto meet = relative_interior_point(c.intersect(d));
    if (!meet)
        throw DisjointSets("jfs_oracle: C and D do not intersect");
    const HPolyhedron diff = jfs_difference_cone(c, d, meet->point);
    const Vec origin = zeros(c.dim());
    if (!diff.contains(origin))
        throw InternalInconsistency("jfs_oracle: 0 is not in the computed cone of C - D");
    JFS j;
    j.T = minimal_face_at(diff, origin).span;
    j.base_point = meet->point;
    j.T_a_dim = j.T.dim();
    if (difference)
        *difference = diff;
    return j;
}

ReductionResult jfs_iterative(const HPolyhedron& c, const HPolyhedron& d, const std::optional<HPolyhedron>& s_in)
{
    require_same_dim(c, d, "jfs_iterative");
    const HPolyhedron meet = c.intersect(d);
    const HPolyhedron s = s_in ? *s_in : meet;
    if (s.dim() != c.dim())
        throw DimensionMismatch("jfs_iterative: S lives in another dimension");
    const auto hull = affine_hull(s);
    if (!hull)
    {
        if (!s_in)
            throw DisjointSets("jfs_iterative: C and D do not intersect");
        throw PreconditionViolation("jfs_iterative: S is empty");
    }
    if (s_in && !polyhedron_subset(s, meet))
        throw PreconditionViolation("jfs_iterative: S is not contained in C cap D");
    const Vec& x = hull->base;

    Reducer r{c.dim(), {}};
    r.trace.variant = ReductionVariant::Nested;
    const Subspace t = r.run([&](const Subspace& ti) {
        if (!ti.contains(hull->dir))
            throw InternalInconsistency("jfs_iterative: S - S left the current subspace");
        const VRegion nc = nested_at(c, x, ti);
        const VRegion nd = nested_at(d, x, ti);
        return common_cone(nc.cone_generators(), nd.cone_generators(), {}, c.dim());
    });
    ReductionResult out;
    out.jfs.T = t;
    out.jfs.base_point = x;
    out.jfs.T_a_dim = t.dim();
    out.trace = std::move(r.trace);
    return out;
}

ReductionResult jfs_pointwise(const HPolyhedron& c, const HPolyhedron& d, const Vec& x)
{
    require_same_dim(c, d, "jfs_pointwise");
    if (x.size() != c.dim())
        throw DimensionMismatch("jfs_pointwise: point in the wrong dimension");
    if (!c.contains(x) || !d.contains(x))
        throw PreconditionViolation("jfs_pointwise: " + to_string(x) + " is not in C cap D");
    const std::vector<Vec> gc = normal_cone_at(c, x).cone_generators();
    const std::vector<Vec> gd = normal_cone_at(d, x).cone_generators();

    Reducer r{c.dim(), {}};
    r.trace.variant = ReductionVariant::Pointwise;
    const Subspace t = r.run([&](const Subspace& ti) { return common_cone(gc, gd, complement_rows(ti), c.dim()); });
    ReductionResult out;
    out.jfs.T = t;
    out.jfs.base_point = x;
    out.jfs.T_a_dim = t.dim();
    out.trace = std::move(r.trace);
    return out;
}

Subspace generated_facial_subspace(const HPolyhedron& p, const HPolyhedron& s)
{
    const Subspace h = face_generated_by(p, s).span;
    if (!nested_normal_cone(p, s, h).is_origin())
        throw InternalInconsistency("generated facial subspace carries a nonzero nested normal");
    return h;
}

HPolyhedron restrict_to(const HPolyhedron& p, const JFS& j)
{
    if (!j.base_point)
        throw PreconditionViolation("restrict_to: the joint facial subspace has no base point");
    return p.restricted_to(j.T, *j.base_point);
}

bool check_characterization(const HPolyhedron& c, const HPolyhedron& d, const JFS* known)
{
    const JFS j = known ? *known : jfs_oracle(c, d);
    const HPolyhedron meet = c.intersect(d);
    const Subspace sum = subspace_sum(generated_facial_subspace(c, meet), generated_facial_subspace(d, meet));
    return sum == j.T;
}

bool check_reveals_faces(const HPolyhedron& c, const HPolyhedron& d, const JFS* known)
{
    const JFS j = known ? *known : jfs_oracle(c, d);
    return polyhedron_equal(restrict_to(c, j), face_generated_by(c, c.intersect(d)).polyhedron);
}

namespace {

// x in rint(P): every row that is not an implicit equality of P is slack at x.
bool in_relative_interior(const HPolyhedron& p, const Vec& x)
{
    if (!p.contains(x))
        return false;
    const auto r = relative_interior_point(p);
    if (!r)
        return false;
    std::vector<bool> implicit(p.num_ineq(), false);
    for (std::size_t i : r->implicit_equalities)
        implicit[i] = true;
    for (std::size_t i = 0; i < p.num_ineq(); ++i)
        if (!implicit[i] && sgn(p.slack(i, x)) <= 0)
            return false;
    return true;
}

}  // namespace

std::optional<Vec> check_rint_qualification(const HPolyhedron& c, const HPolyhedron& d, const JFS* known)
{
    const JFS j = known ? *known : jfs_oracle(c, d);
    // rint(C cap D) meets both restricted relative interiors whenever they meet each other.
    const Vec& x = *j.base_point;
    if (in_relative_interior(restrict_to(c, j), x) && in_relative_interior(restrict_to(d, j), x))
        return x;
    return std::nullopt;
}

std::optional<Vec> separation_certificate(const HPolyhedron& c, const HPolyhedron& d, const Subspace& ambient,
                                          const Vec& base)
{
    require_same_dim(c, d, "separation_certificate");
    const std::size_t n = c.dim();
    if (ambient.ambient_dim() != n || base.size() != n)
        throw DimensionMismatch("separation_certificate: ambient subspace or base in the wrong dimension");
    const HPolyhedron meet = c.intersect(d);
    const auto r = relative_interior_point(meet);
    if (!r)
        throw PreconditionViolation("separation_certificate: C and D do not intersect");
    const HPolyhedron flat = HPolyhedron::affine(ambient, base);
    if (!polyhedron_subset(c, flat) || !polyhedron_subset(d, flat))
        throw PreconditionViolation("separation_certificate: C or D leaves base + ambient");

    const CommonCone k = common_cone(normal_cone_at(c, r->point).cone_generators(),
                                     normal_cone_at(d, r->point).cone_generators(), complement_rows(ambient), n);
    if (k.elements.empty())
        return std::nullopt;
    const Vec& v = k.elements.front();
    const LPOutcome sup_c = solve_lp(v, c, Sense::Maximize);
    const LPOutcome inf_d = solve_lp(v, d, Sense::Minimize);
    if (!ambient.contains(v) || sup_c.status != LPStatus::Optimal || inf_d.status != LPStatus::Optimal ||
        sup_c.value > inf_d.value)
        throw InternalInconsistency("separation_certificate: common normal " + to_string(v) + " does not separate");
    return v;
}

std::vector<Vec> facial_chain(const HPolyhedron& p, const HPolyhedron& s, const Subspace& v, const Subspace& u)
{
    const std::size_t n = p.dim();
    if (v.ambient_dim() != n || u.ambient_dim() != n)
        throw DimensionMismatch("facial_chain: subspaces in the wrong dimension");
    if (!v.contains(u))
        throw PreconditionViolation("facial_chain: U is not contained in V");
    if (!is_facial_subspace(p, s, v) || !is_facial_subspace(p, s, u))
        throw PreconditionViolation("facial_chain: V and U must both be facial subspaces of P at S");
    const Vec x = affine_hull(s)->base;
    const std::vector<Vec> u_rows = u.basis();

    std::vector<Vec> chain;
    Subspace current = v;
    while (current.dim() > u.dim())
    {
        const VRegion nested = nested_at(p, x, current);
        const CommonCone k = common_cone(nested.cone_generators(), {}, u_rows, n, false);
        std::optional<Vec> pick;
        for (const Vec& cand : k.elements)
        {
            const Subspace next = subspace_intersection(current, orth_complement(Subspace::span(n, {cand})));
            if (is_facial_subspace(p, s, next))
            {
                pick = cand;
                break;
            }
        }
        if (!pick || !recession_contains(nested, *pick) || !current.contains(*pick))
            throw InternalInconsistency("facial_chain: no nested normal orthogonal to U at dimension " +
                                        std::to_string(current.dim()));
        current = subspace_intersection(current, orth_complement(Subspace::span(n, {*pick})));
        chain.push_back(*pick);
    }
    if (!(current == u))
        throw InternalInconsistency("facial_chain: chain ended away from U");
    return chain;
}

bool relative_interiors_meet(const HPolyhedron& c, const HPolyhedron& d)
{
    require_same_dim(c, d, "relative_interiors_meet");
    const auto rc = relative_interior_point(c);
    const auto rd = relative_interior_point(d);
    if (!rc || !rd)
        return false;
    // Hold each set's implicit equalities and ask whether the joint system
    // needs any further row tight.
    const HPolyhedron joint = c.with_tight_rows(rc->implicit_equalities).intersect(d.with_tight_rows(rd->implicit_equalities));
    const auto rj = relative_interior_point(joint);
    if (!rj)
        return false;
    std::vector<bool> forced(joint.num_ineq(), false);
    for (std::size_t i : rc->implicit_equalities)
        forced[i] = true;
    for (std::size_t i : rd->implicit_equalities)
        forced[c.num_ineq() + i] = true;
    for (std::size_t i : rj->implicit_equalities)
        if (!forced[i])
            return false;
    return true;
}

}  // namespace jfs
