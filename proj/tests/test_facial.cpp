#include <doctest.h>

#include <jfs/error.hpp>
#include <jfs/facial.hpp>
#include <jfs/generator.hpp>
#include <jfs/instance.hpp>
#include <jfs/lp.hpp>
#include <jfs/polyhedron.hpp>

#include "test_support.hpp"

using namespace jfs;
using jfs::testing::ints;

namespace {

HPolyhedron box2(long l1, long h1, long l2, long h2)
{
    return HPolyhedron::box(ints({l1, l2}), ints({h1, h2}));
}

HPolyhedron nonneg() { return HPolyhedron(1).with_ineq(ints({-1}), 0); }
HPolyhedron nonpos() { return HPolyhedron(1).with_ineq(ints({1}), 0); }
HPolyhedron left_box() { return box2(-1, 0, 0, 1); }
HPolyhedron right_box() { return box2(0, 1, 0, 1); }

// conv{(0,0), (-1,1), (-1,-1)} and its mirror image.
HPolyhedron triangle()
{
    return HPolyhedron(2).with_ineq(ints({1, 1}), 0).with_ineq(ints({1, -1}), 0).with_ineq(ints({-1, 0}), 1);
}
HPolyhedron mirrored_triangle()
{
    return HPolyhedron(2).with_ineq(ints({-1, -1}), 0).with_ineq(ints({-1, 1}), 0).with_ineq(ints({1, 0}), 1);
}

Subspace e2() { return Subspace::span(2, {ints({0, 1})}); }

}  // namespace

TEST_CASE("jfs_oracle examples")
{
    CHECK(jfs_oracle(nonneg(), nonpos()).T.is_zero());
    const JFS boxes = jfs_oracle(left_box(), right_box());
    CHECK(boxes.T == e2());
    REQUIRE(boxes.base_point.has_value());
    CHECK(left_box().contains(*boxes.base_point));
    CHECK(right_box().contains(*boxes.base_point));
    CHECK(jfs_oracle(right_box(), right_box()).T == Subspace::full(2));
    CHECK_THROWS_AS(jfs_oracle(nonneg(), HPolyhedron(1).with_ineq(ints({1}), -1)), DisjointSets);
}

TEST_CASE("local cone of C - D gives the same face as the full difference")
{
    for (Profile p : all_profiles())
        for (std::size_t n = 1; n <= 3; ++n)
            for (std::uint64_t seed = 1; seed <= 3; ++seed)
            {
                const Instance inst = generate_instance(seed, n, p);
                const HPolyhedron& c = inst.set("C");
                const HPolyhedron& d = inst.set("D");
                if (is_empty(c.intersect(d)))
                    continue;
                CAPTURE(profile_name(p));
                CAPTURE(n);
                CAPTURE(seed);
                const Vec origin = zeros(n);
                const Subspace full = minimal_face_at(jfs_difference(c, d), origin).span;
                CHECK(jfs_oracle(c, d).T == full);
            }
}

TEST_CASE("jfs_iterative examples")
{
    ReductionResult r = jfs_iterative(nonneg(), nonpos(), point_set(ints({0})));
    CHECK(r.trace.ell == 1);
    CHECK(r.jfs.T.is_zero());
    CHECK(r.trace.steps.size() == 2);
    CHECK(r.trace.steps[0].K_elements == std::vector<Vec>{ints({-1})});

    r = jfs_iterative(left_box(), right_box());
    CHECK(r.trace.ell == 1);
    CHECK(r.jfs.T == e2());
    CHECK(r.trace.steps[0].K_span == Subspace::span(2, {ints({1, 0})}));
    CHECK(r.trace.steps[0].K_elements == std::vector<Vec>{ints({1, 0})});

    r = jfs_iterative(right_box(), right_box());
    CHECK(r.trace.ell == 0);
    CHECK(r.jfs.T == Subspace::full(2));
    CHECK(r.trace.steps.back().K_span.is_zero());

    CHECK_THROWS_AS(jfs_iterative(left_box(), right_box(), point_set(ints({-1, 0}))), PreconditionViolation);
}

TEST_CASE("jfs_pointwise examples")
{
    ReductionResult r = jfs_pointwise(left_box(), right_box(), ints({0, 0}));
    CHECK(r.jfs.T == e2());
    CHECK(r.trace.ell == 1);
    CHECK(r.trace.steps[1].T == e2());
    CHECK(r.trace.steps[0].K_span == Subspace::span(2, {ints({1, 0})}));

    r = jfs_pointwise(right_box(), right_box(), ints({0, 0}));
    CHECK(r.jfs.T == Subspace::full(2));
    CHECK(r.trace.ell == 0);

    CHECK(jfs_pointwise(nonneg(), nonpos(), ints({0})).jfs.T.is_zero());
    CHECK_THROWS_AS(jfs_pointwise(left_box(), right_box(), ints({1, 0})), PreconditionViolation);
}

TEST_CASE("generated_facial_subspace examples")
{
    const HPolyhedron edge = box2(0, 0, 0, 1);
    CHECK(generated_facial_subspace(left_box(), edge) == e2());
    CHECK(generated_facial_subspace(left_box(), left_box()) == Subspace::full(2));
    CHECK(generated_facial_subspace(triangle(), point_set(ints({0, 0}))).is_zero());
}

TEST_CASE("characterization and reveals-faces examples")
{
    CHECK(check_characterization(left_box(), right_box()));
    CHECK(check_characterization(right_box(), right_box()));
    CHECK(check_characterization(triangle(), mirrored_triangle()));
    CHECK(jfs_oracle(triangle(), mirrored_triangle()).T.is_zero());

    CHECK(check_reveals_faces(left_box(), right_box()));
    CHECK(check_reveals_faces(box2(0, 1, 0, 1), box2(-1, 2, -1, 2)));
    CHECK(check_reveals_faces(nonneg(), nonpos()));
}

TEST_CASE("rint qualification examples")
{
    auto w = check_rint_qualification(left_box(), right_box());
    REQUIRE(w.has_value());
    CHECK(*w == Vec{0, frac(1, 2)});

    w = check_rint_qualification(nonneg(), nonpos());
    REQUIRE(w.has_value());
    CHECK(*w == ints({0}));

    w = check_rint_qualification(right_box(), right_box());
    REQUIRE(w.has_value());
    for (std::size_t i = 0; i < right_box().num_ineq(); ++i)
        CHECK(sgn(right_box().slack(i, *w)) > 0);
}

TEST_CASE("separation_certificate examples")
{
    const Subspace full = Subspace::full(2);
    auto v = separation_certificate(left_box(), right_box(), full, ints({0, 0}));
    REQUIRE(v.has_value());
    CHECK(*v == ints({1, 0}));

    const JFS j = jfs_oracle(left_box(), right_box());
    CHECK_FALSE(separation_certificate(restrict_to(left_box(), j), restrict_to(right_box(), j), j.T, *j.base_point)
                    .has_value());
    CHECK_FALSE(separation_certificate(right_box(), right_box(), full, ints({0, 0})).has_value());

    // The boxes are not inside the line T_a.
    CHECK_THROWS_AS(separation_certificate(left_box(), right_box(), j.T, *j.base_point), PreconditionViolation);
}

TEST_CASE("facial_chain examples")
{
    const HPolyhedron square = right_box();
    const HPolyhedron corner = point_set(ints({0, 0}));
    std::vector<Vec> chain = facial_chain(square, corner, Subspace::full(2), Subspace::zero(2));
    REQUIRE(chain.size() == 2);
    Subspace v = Subspace::full(2);
    for (const Vec& n : chain)
    {
        CHECK(recession_contains(nested_normal_cone(square, corner, v), n));
        v = subspace_intersection(v, orth_complement(Subspace::span(2, {n})));
        CHECK(is_facial_subspace(square, corner, v));
    }
    CHECK(v.is_zero());

    CHECK(facial_chain(square, corner, Subspace::full(2), Subspace::full(2)).empty());

    const HPolyhedron edge = box2(0, 0, 0, 1);
    chain = facial_chain(square, edge, Subspace::full(2), e2());
    REQUIRE(chain.size() == 1);
    CHECK(chain[0] == ints({-1, 0}));

    CHECK_THROWS_AS(facial_chain(square, corner, Subspace::span(2, {ints({1, 1})}), Subspace::zero(2)),
                    PreconditionViolation);
}

TEST_CASE("relative interiors meeting")
{
    CHECK(relative_interiors_meet(right_box(), box2(0, 2, 0, 2)));
    CHECK_FALSE(relative_interiors_meet(left_box(), right_box()));
    // A segment through the middle of a square.
    CHECK(relative_interiors_meet(right_box(), HPolyhedron(2).with_eq(ints({0, 1}), frac(1, 2))));
    CHECK_FALSE(relative_interiors_meet(right_box(), HPolyhedron(2).with_eq(ints({0, 1}), 1)));
}
