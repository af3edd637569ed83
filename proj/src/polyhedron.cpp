#include <jfs/polyhedron.hpp>

#include <jfs/error.hpp>
#include <jfs/lp.hpp>

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace jfs {

namespace {

void check_dim(const HPolyhedron& p, const Vec& x, const char* what)
{
    if (x.size() != p.dim())
        throw DimensionMismatch(std::string(what) + ": vector of length " + std::to_string(x.size()) +
                                " in dimension " + std::to_string(p.dim()));
}

InteriorPoint require_rint(const HPolyhedron& p, const char* what)
{
    auto r = relative_interior_point(p);
    if (!r)
        throw EmptySetError(std::string(what) + ": empty polyhedron");
    return *r;
}

Subspace face_span(const HPolyhedron& p, const std::vector<std::size_t>& active)
{
    std::vector<Vec> rows = p.E().row_vectors();
    for (std::size_t i : active)
        rows.push_back(p.ineq_row(i));
    return kernel_basis(RatMatrix::from_rows(rows, p.dim()));
}

Face make_face(const HPolyhedron& p, std::vector<std::size_t> active)
{
    Face f;
    f.polyhedron = p.with_tight_rows(active);
    f.span = face_span(p, active);
    f.active_rows = std::move(active);
    return f;
}

Subspace equality_row_span(const HPolyhedron& p)
{
    return Subspace::span(p.dim(), p.E().row_vectors());
}

void require_inside(const HPolyhedron& p, const HPolyhedron& s, const char* what)
{
    if (s.dim() != p.dim())
        throw DimensionMismatch(std::string(what) + ": sets in different dimensions");
    if (!polyhedron_subset(s, p))
        throw PreconditionViolation(std::string(what) + ": S is not contained in P");
}

// Implicit-equality signature of P with the given rows forced tight, or
// nullopt when that is empty.
std::optional<std::vector<std::size_t>> signature_of(const HPolyhedron& p, const std::vector<std::size_t>& tight)
{
    auto r = relative_interior_point(p.with_tight_rows(tight));
    if (!r)
        return std::nullopt;
    return r->implicit_equalities;
}

}  // namespace

bool polyhedron_subset(const HPolyhedron& p, const HPolyhedron& q)
{
    if (p.dim() != q.dim())
        throw DimensionMismatch("containment test between dimensions " + std::to_string(p.dim()) + " and " +
                                std::to_string(q.dim()));
    if (is_empty(p))
        return true;
    for (std::size_t i = 0; i < q.num_ineq(); ++i)
    {
        const LPOutcome r = solve_lp(q.ineq_row(i), p, Sense::Maximize);
        if (r.status != LPStatus::Optimal || r.value > q.b()[i])
            return false;
    }
    for (std::size_t i = 0; i < q.num_eq(); ++i)
    {
        const Vec row = q.eq_row(i);
        for (Sense s : {Sense::Maximize, Sense::Minimize})
        {
            const LPOutcome r = solve_lp(row, p, s);
            if (r.status != LPStatus::Optimal || r.value != q.d()[i])
                return false;
        }
    }
    return true;
}

bool polyhedron_equal(const HPolyhedron& p, const HPolyhedron& q)
{
    return polyhedron_subset(p, q) && polyhedron_subset(q, p);
}

HPolyhedron point_set(const Vec& x)
{
    return HPolyhedron::affine(Subspace::zero(x.size()), x);
}

std::optional<AffineHull> affine_hull(const HPolyhedron& p)
{
    auto r = relative_interior_point(p);
    if (!r)
        return std::nullopt;
    return AffineHull{r->point, face_span(p, r->implicit_equalities)};
}

Face minimal_face_at(const HPolyhedron& p, const Vec& x)
{
    check_dim(p, x, "minimal_face_at");
    if (!p.contains(x))
        throw PreconditionViolation("minimal_face_at: point " + to_string(x) + " is not in the polyhedron");
    // Rows slack at x stay slack near x inside the face, so x is in its
    // relative interior and the tight rows are exactly its implicit equalities.
    return make_face(p, p.tight_rows(x));
}

Face face_generated_by(const HPolyhedron& p, const HPolyhedron& s)
{
    const InteriorPoint r = require_rint(s, "face_generated_by");
    require_inside(p, s, "face_generated_by");
    return minimal_face_at(p, r.point);
}

VRegion normal_cone_at(const HPolyhedron& p, const Vec& x)
{
    check_dim(p, x, "normal_cone_at");
    if (!p.contains(x))
        throw PreconditionViolation("normal_cone_at: point " + to_string(x) + " is not in the polyhedron");
    std::vector<Vec> rays;
    for (std::size_t i : p.tight_rows(x))
        rays.push_back(p.ineq_row(i));
    return VRegion::cone(p.dim(), std::move(rays), equality_row_span(p));
}

VRegion normal_cone(const HPolyhedron& p, const HPolyhedron& s)
{
    const InteriorPoint r = require_rint(s, "normal_cone");
    require_inside(p, s, "normal_cone");
    return normal_cone_at(p, r.point);
}

VRegion nested_normal_cone(const HPolyhedron& p, const HPolyhedron& s, const Subspace& u)
{
    if (u.ambient_dim() != p.dim())
        throw DimensionMismatch("nested_normal_cone: subspace in the wrong dimension");
    const auto hull = affine_hull(s);
    if (!hull)
        throw EmptySetError("nested_normal_cone: S is empty");
    if (!u.contains(hull->dir))
        throw PreconditionViolation("nested_normal_cone: S - S is not contained in U");
    require_inside(p, s, "nested_normal_cone");
    const HPolyhedron slice = p.restricted_to(u, hull->base);
    return project_region(normal_cone_at(slice, hull->base), u);
}

VRegion feasible_directions(const HPolyhedron& p, const Vec& x)
{
    check_dim(p, x, "feasible_directions");
    if (!p.contains(x))
        throw PreconditionViolation("feasible_directions: point " + to_string(x) + " is not in the polyhedron");
    const std::size_t n = p.dim();
    const std::vector<std::size_t> active = p.tight_rows(x);
    const Subspace lin = face_span(p, active);

    // The cone modulo its lineality is pointed inside w = ker E cap lin^perp;
    // its extreme rays are cut out by k - 1 independent active rows.
    const Subspace w = subspace_intersection(kernel_basis(p.E()), orth_complement(lin));
    const std::size_t k = w.dim();
    std::vector<Vec> rays;
    if (k > 0)
    {
        const RatMatrix bt = w.basis_matrix().transpose();  // n x k, columns span w
        std::vector<Vec> g;
        for (std::size_t i : active)
        {
            Vec gi = bt.transpose() * p.ineq_row(i);
            if (!is_zero(gi))
                g.push_back(std::move(gi));
        }
        auto admissible = [&](const Vec& r) {
            for (const Vec& gi : g)
                if (sgn(dot(gi, r)) > 0)
                    return false;
            return true;
        };
        auto consider = [&](const Vec& r) {
            for (const Vec& cand : {r, negate(r)})
                if (admissible(cand))
                    rays.push_back(bt * cand);
        };
        if (k == 1)
            consider(Vec{Rational(1)});
        else if (g.size() >= k - 1)
        {
            std::vector<std::size_t> pick(k - 1);
            for (std::size_t i = 0; i < k - 1; ++i)
                pick[i] = i;
            for (;;)
            {
                std::vector<Vec> rows;
                for (std::size_t i : pick)
                    rows.push_back(g[i]);
                const Subspace ker = kernel_basis(RatMatrix::from_rows(rows, k));
                if (ker.dim() == 1)
                    consider(ker.basis()[0]);
                // next combination
                std::size_t i = k - 1;
                while (i > 0 && pick[i - 1] == g.size() - (k - 1) + (i - 1))
                    --i;
                if (i == 0)
                    break;
                ++pick[i - 1];
                for (std::size_t j = i; j < k - 1; ++j)
                    pick[j] = pick[j - 1] + 1;
            }
        }
    }
    return VRegion::cone(n, std::move(rays), lin);
}

std::vector<Face> enumerate_faces(const HPolyhedron& p, std::size_t max_dim_guard)
{
    if (p.dim() > max_dim_guard)
        throw PreconditionViolation("enumerate_faces: dimension " + std::to_string(p.dim()) + " exceeds the guard " +
                                    std::to_string(max_dim_guard));
    const auto top = signature_of(p, {});
    if (!top)
        throw EmptySetError("enumerate_faces: empty polyhedron");

    // Breadth-first over faces: tighten one more row at a time and key each
    // result by its implicit-equality signature.
    std::set<std::vector<std::size_t>> seen{*top};
    std::queue<std::vector<std::size_t>> work;
    work.push(*top);
    while (!work.empty())
    {
        const std::vector<std::size_t> sig = work.front();
        work.pop();
        for (std::size_t j = 0; j < p.num_ineq(); ++j)
        {
            if (std::binary_search(sig.begin(), sig.end(), j))
                continue;
            std::vector<std::size_t> tight = sig;
            tight.insert(std::upper_bound(tight.begin(), tight.end(), j), j);
            const auto child = signature_of(p, tight);
            if (child && seen.insert(*child).second)
                work.push(*child);
        }
    }
    std::vector<Face> faces;
    for (const auto& sig : seen)
        faces.push_back(make_face(p, sig));
    return faces;
}

bool is_facial_subspace(const HPolyhedron& p, const HPolyhedron& s, const Subspace& u)
{
    const auto hull = affine_hull(s);
    if (!hull)
        throw EmptySetError("is_facial_subspace: S is empty");
    if (!u.contains(hull->dir))
        return false;
    const HPolyhedron slice = p.restricted_to(u, hull->base);
    // The slice is a face iff the face it generates stays inside U + S.
    return u.contains(face_generated_by(p, slice).span);
}

}  // namespace jfs
