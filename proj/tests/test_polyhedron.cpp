#include <doctest.h>

#include <jfs/error.hpp>
#include <jfs/fourier_motzkin.hpp>
#include <jfs/lp.hpp>
#include <jfs/polyhedron.hpp>

#include "test_support.hpp"

#include <set>

using namespace jfs;
using jfs::testing::ints;

namespace {

HPolyhedron box2(long l1, long h1, long l2, long h2)
{
    return HPolyhedron::box(ints({l1, l2}), ints({h1, h2}));
}

// conv{(0,0), (-1,1), (-1,-1)}
HPolyhedron triangle()
{
    return HPolyhedron(2).with_ineq(ints({1, 1}), 0).with_ineq(ints({1, -1}), 0).with_ineq(ints({-1, 0}), 1);
}

HPolyhedron nonneg_line()
{
    return HPolyhedron(1).with_ineq(ints({-1}), 0);
}

HPolyhedron nonpos_line()
{
    return HPolyhedron(1).with_ineq(ints({1}), 0);
}

HPolyhedron edge_x0()
{
    return box2(0, 0, 0, 1);
}

Subspace e(std::size_t n, std::size_t i)
{
    return Subspace::span(n, {unit_vector(n, i)});
}

}  // namespace

TEST_CASE("contains examples")
{
    const HPolyhedron unit = box2(0, 1, 0, 1);
    CHECK(contains(unit, Vec{frac(1, 2), frac(1, 2)}));
    CHECK_FALSE(contains(unit, ints({2, 0})));
    CHECK(contains(HPolyhedron(2).with_eq(ints({1, 0}), 0), ints({0, 5})));
}

TEST_CASE("affine_hull examples")
{
    auto h = affine_hull(edge_x0());
    REQUIRE(h.has_value());
    CHECK(h->dir == e(2, 1));
    CHECK(h->base[0] == 0);
    CHECK(h->base[1] > 0);
    CHECK(h->base[1] < 1);

    CHECK(affine_hull(box2(0, 1, 0, 1))->dir == Subspace::full(2));
    CHECK_FALSE(affine_hull(HPolyhedron(1).with_ineq(ints({0}), -1)).has_value());
}

TEST_CASE("minimal_face_at examples")
{
    const HPolyhedron p = box2(-2, 0, -1, 1);
    const Face f = minimal_face_at(p, ints({0, 0}));
    CHECK(f.span == e(2, 1));
    CHECK(polyhedron_equal(f.polyhedron, box2(0, 0, -1, 1)));

    const Face whole = minimal_face_at(p, Vec{-1, frac(1, 2)});
    CHECK(whole.span == Subspace::full(2));
    CHECK(polyhedron_equal(whole.polyhedron, p));

    const Face vertex = minimal_face_at(nonneg_line(), ints({0}));
    CHECK(vertex.span.is_zero());

    CHECK_THROWS_AS(minimal_face_at(p, ints({1, 0})), PreconditionViolation);
}

TEST_CASE("face_generated_by examples")
{
    const HPolyhedron p = box2(-1, 0, 0, 1);
    const Face f = face_generated_by(p, edge_x0());
    CHECK(polyhedron_equal(f.polyhedron, edge_x0()));
    CHECK(f.span == e(2, 1));
    CHECK(polyhedron_equal(face_generated_by(p, p).polyhedron, p));
    const Face v = face_generated_by(triangle(), point_set(ints({0, 0})));
    CHECK(v.span.is_zero());
    CHECK(v.active_rows == std::vector<std::size_t>{0, 1});

    CHECK_THROWS_AS(face_generated_by(p, box2(0, 1, 0, 1)), PreconditionViolation);
    CHECK_THROWS_AS(face_generated_by(p, HPolyhedron(2).with_ineq(ints({0, 0}), -1)), EmptySetError);
}

TEST_CASE("normal_cone examples")
{
    CHECK(region_equal(normal_cone(nonneg_line(), point_set(ints({0}))), VRegion::cone(1, {ints({-1})})));
    const HPolyhedron p = box2(-1, 0, 0, 1);
    CHECK(region_equal(normal_cone(p, edge_x0()), VRegion::cone(2, {ints({1, 0})})));
    CHECK(normal_cone(p, p).is_origin());
}

TEST_CASE("nested_normal_cone examples")
{
    const HPolyhedron p = box2(-1, 0, 0, 1);
    CHECK(nested_normal_cone(p, edge_x0(), e(2, 1)).is_origin());
    CHECK(region_equal(nested_normal_cone(p, edge_x0(), Subspace::full(2)), normal_cone(p, edge_x0())));
    CHECK(nested_normal_cone(nonneg_line(), point_set(ints({0})), Subspace::zero(1)).is_origin());
    CHECK_THROWS_AS(nested_normal_cone(p, edge_x0(), e(2, 0)), PreconditionViolation);
}

TEST_CASE("feasible_directions examples")
{
    CHECK(region_equal(feasible_directions(nonneg_line(), ints({0})), VRegion::cone(1, {ints({1})})));
    CHECK(region_equal(feasible_directions(box2(0, 1, 0, 1), Vec{frac(1, 2), frac(1, 2)}), VRegion::whole(2)));
    CHECK(region_equal(feasible_directions(box2(0, 1, 0, 1), ints({0, 0})),
                       VRegion::cone(2, {ints({1, 0}), ints({0, 1})})));
    // Triangle apex: directions between (-1, 1) and (-1, -1).
    const VRegion apex = feasible_directions(triangle(), ints({0, 0}));
    CHECK(region_equal(apex, VRegion::cone(2, {ints({-1, 1}), ints({-1, -1})})));
}

TEST_CASE("minkowski_difference examples")
{
    CHECK(polyhedron_equal(minkowski_difference(nonneg_line(), nonpos_line()), nonneg_line()));
    CHECK(polyhedron_equal(minkowski_difference(box2(-1, 0, 0, 1), box2(0, 1, 0, 1)), box2(-2, 0, -1, 1)));
    const HPolyhedron line = HPolyhedron(2).with_eq(ints({1, 0}), 0);
    CHECK(polyhedron_equal(minkowski_difference(line, line), line));
    CHECK_THROWS_AS(minkowski_difference(line, nonneg_line()), DimensionMismatch);
    // Empty operand gives an empty difference.
    CHECK(is_empty(minkowski_difference(line, HPolyhedron(2).with_ineq(ints({0, 0}), -1))));
}

TEST_CASE("enumerate_faces examples")
{
    CHECK(enumerate_faces(HPolyhedron::box(ints({0}), ints({1}))).size() == 3);
    CHECK(enumerate_faces(box2(0, 1, 0, 1)).size() == 9);
    CHECK(enumerate_faces(triangle()).size() == 7);
    CHECK_THROWS_AS(enumerate_faces(HPolyhedron(7)), PreconditionViolation);
}

namespace {

// Random polytope: a box with a few extra cuts through points near the center.
HPolyhedron random_polytope(std::mt19937_64& rng, std::size_t n)
{
    HPolyhedron p = HPolyhedron::box(Vec(n, Rational(-2)), Vec(n, Rational(2)));
    const std::size_t extra = 1 + rng() % 3;
    for (std::size_t i = 0; i < extra; ++i)
    {
        Vec a = jfs::testing::random_vec(rng, n, 0.2);
        if (is_zero(a))
            continue;
        p = p.with_ineq(a, Rational(static_cast<long>(rng() % 3)));
    }
    return p;
}

std::vector<Vec> vertices(const HPolyhedron& p)
{
    std::vector<Vec> out;
    for (const Face& f : enumerate_faces(p))
        if (f.span.is_zero())
            out.push_back(relative_interior_point(f.polyhedron)->point);
    return out;
}

}  // namespace

TEST_CASE("property: minkowski difference matches pairwise vertex differences")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 15; ++trial)
    {
        const std::size_t n = 1 + rng() % 3;
        const HPolyhedron c = random_polytope(rng, n);
        const HPolyhedron d = random_polytope(rng, n);
        const HPolyhedron m = minkowski_difference(c, d);
        const std::vector<Vec> vc = vertices(c), vd = vertices(d);
        for (const Vec& p : vc)
            for (const Vec& q : vd)
                CHECK(m.contains(sub(p, q)));
        // Every vertex of the difference is a difference of vertices.
        for (const Vec& w : vertices(m))
        {
            bool found = false;
            for (const Vec& p : vc)
                for (const Vec& q : vd)
                    found = found || sub(p, q) == w;
            CHECK(found);
        }
    }
}

TEST_CASE("property: faces are cut out by their affine hulls and are closed under intersection")
{
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 10; ++trial)
    {
        const std::size_t n = 1 + rng() % 3;
        const HPolyhedron p = random_polytope(rng, n);
        const std::vector<Face> faces = enumerate_faces(p);
        std::set<std::vector<std::size_t>> sigs;
        for (const Face& f : faces)
            sigs.insert(f.active_rows);
        for (const Face& f : faces)
        {
            const AffineHull h = *affine_hull(f.polyhedron);
            CHECK(h.dir == f.span);
            CHECK(polyhedron_equal(HPolyhedron::affine(h.dir, h.base).intersect(p), f.polyhedron));
            CHECK(is_facial_subspace(p, f.polyhedron, f.span));
            CHECK(nested_normal_cone(p, f.polyhedron, f.span).is_origin());
        }
        for (const Face& f : faces)
            for (const Face& g : faces)
            {
                const auto r = relative_interior_point(f.polyhedron.intersect(g.polyhedron));
                if (!r)
                    continue;
                CHECK(sigs.count(minimal_face_at(p, r->point).active_rows) == 1);
            }
    }
}

TEST_CASE("property: normal cone is the same at every relative interior point of S")
{
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 10; ++trial)
    {
        const std::size_t n = 1 + rng() % 3;
        const HPolyhedron p = random_polytope(rng, n);
        for (const Face& f : enumerate_faces(p))
        {
            // Average of the face's vertices is another relative interior point.
            const std::vector<Vec> vs = vertices(f.polyhedron);
            Vec avg = zeros(n);
            for (const Vec& v : vs)
                avg = add(avg, v);
            avg = scale(frac(1, static_cast<long>(vs.size())), avg);
            CHECK(region_equal(normal_cone(p, f.polyhedron), normal_cone_at(p, avg)));
        }
    }
}
