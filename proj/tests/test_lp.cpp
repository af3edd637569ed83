#include <doctest.h>

#include <jfs/error.hpp>
#include <jfs/lp.hpp>

#include "test_support.hpp"

using namespace jfs;
using jfs::testing::ints;

namespace {

HPolyhedron interval(long lo, long hi)
{
    return HPolyhedron::box(ints({lo}), ints({hi}));
}

}  // namespace

TEST_CASE("solve_lp examples")
{
    LPOutcome r = solve_lp(ints({1}), interval(0, 1), Sense::Minimize);
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.value == 0);
    CHECK(r.point == ints({0}));

    const HPolyhedron halfline = HPolyhedron(1).with_ineq(ints({-1}), 0);
    r = solve_lp(ints({-1}), halfline, Sense::Minimize);
    REQUIRE(r.status == LPStatus::Unbounded);
    CHECK(r.ray == ints({1}));

    const HPolyhedron empty = HPolyhedron(1).with_ineq(ints({1}), 0).with_ineq(ints({-1}), -1);
    CHECK(solve_lp(ints({1}), empty, Sense::Minimize).status == LPStatus::Infeasible);
    CHECK(is_empty(empty));

    CHECK_THROWS_AS(solve_lp(ints({1, 2}), interval(0, 1), Sense::Minimize), DimensionMismatch);
}

TEST_CASE("degenerate and redundant systems terminate")
{
    // Many constraints through the optimum vertex plus duplicated equalities.
    HPolyhedron p(2);
    for (long k = 1; k <= 6; ++k)
        p = p.with_ineq(ints({k, 1}), 0);
    p = p.with_ineq(ints({-1, 0}), 0).with_ineq(ints({0, -1}), 0);
    p = p.with_eq(ints({1, -1}), 0).with_eq(ints({2, -2}), 0);
    const LPOutcome r = solve_lp(ints({-1, -1}), p, Sense::Minimize);
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.value == 0);
}

TEST_CASE("property: optimal outcomes carry exact certificates")
{
    std::mt19937_64 rng(21);
    int optimal = 0, unbounded = 0, infeasible = 0;
    for (int trial = 0; trial < 300; ++trial)
    {
        const std::size_t n = 1 + rng() % 4;
        const std::size_t m = rng() % 7;
        LinearProgram lp(n);
        for (std::size_t j = 0; j < n; ++j)
            lp.nonnegative[j] = rng() % 3 == 0;
        for (std::size_t i = 0; i < m; ++i)
        {
            const auto rel = static_cast<Relation>(rng() % 3);
            lp.add_row(jfs::testing::random_vec(rng, n), rel, jfs::testing::random_rational(rng));
        }
        lp.objective = jfs::testing::random_vec(rng, n);
        lp.sense = rng() % 2 ? Sense::Minimize : Sense::Maximize;
        const LPOutcome out = solve(lp);
        CHECK(verify_certificate(lp, out));
        switch (out.status)
        {
        case LPStatus::Optimal: ++optimal; break;
        case LPStatus::Unbounded: ++unbounded; break;
        case LPStatus::Infeasible: ++infeasible; break;
        }
    }
    CHECK(optimal > 0);
    CHECK(unbounded > 0);
    CHECK(infeasible > 0);
}

TEST_CASE("relative_interior_point examples")
{
    const HPolyhedron pinned = HPolyhedron(1).with_ineq(ints({-1}), 0).with_ineq(ints({1}), 0);
    auto r = relative_interior_point(pinned);
    REQUIRE(r.has_value());
    CHECK(r->point == ints({0}));
    CHECK(r->implicit_equalities == std::vector<std::size_t>{0, 1});

    const HPolyhedron box = HPolyhedron::box(ints({-1, 0}), ints({0, 1}));
    r = relative_interior_point(box);
    REQUIRE(r.has_value());
    CHECK(r->implicit_equalities.empty());
    for (std::size_t i = 0; i < box.num_ineq(); ++i)
        CHECK(sgn(box.slack(i, r->point)) > 0);
    // Max-min slack over the unit box is its center.
    CHECK(r->point == Vec{frac(-1, 2), frac(1, 2)});

    const HPolyhedron empty = HPolyhedron(1).with_ineq(ints({1}), 0).with_ineq(ints({-1}), -1);
    CHECK_FALSE(relative_interior_point(empty).has_value());
}

TEST_CASE("property: implicit equalities are exactly the rows with zero maximal slack")
{
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 120; ++trial)
    {
        const std::size_t n = 1 + rng() % 3;
        HPolyhedron p = HPolyhedron::box(Vec(n, Rational(-2)), Vec(n, Rational(2)));
        const std::size_t extra = rng() % 4;
        for (std::size_t i = 0; i < extra; ++i)
        {
            Vec a = jfs::testing::random_vec(rng, n);
            // Occasionally add a pair of opposite rows to force a flat polyhedron.
            if (rng() % 3 == 0)
            {
                p = p.with_ineq(a, 0).with_ineq(negate(a), 0);
                continue;
            }
            p = p.with_ineq(a, jfs::testing::random_rational(rng));
        }
        const auto r = relative_interior_point(p);
        if (!r)
        {
            CHECK(is_empty(p));
            continue;
        }
        CHECK(p.contains(r->point));
        std::vector<bool> implicit(p.num_ineq(), false);
        for (std::size_t i : r->implicit_equalities)
            implicit[i] = true;
        for (std::size_t i = 0; i < p.num_ineq(); ++i)
        {
            // Maximize the slack of row i over P.
            const LPOutcome s = solve_lp(negate(p.ineq_row(i)), p, Sense::Maximize);
            REQUIRE(s.status == LPStatus::Optimal);
            const Rational max_slack = s.value + p.b()[i];
            if (implicit[i])
                CHECK(max_slack == 0);
            else
                CHECK(sgn(p.slack(i, r->point)) > 0);
        }
    }
}

TEST_CASE("cone_support examples")
{
    auto row = [](std::initializer_list<long> xs) { return RatMatrix::from_rows({ints(xs)}, xs.size()); };
    CHECK(cone_support(row({1, -1})).support == std::vector<std::size_t>{0, 1});
    CHECK(cone_support(row({1, 1})).support.empty());
    CHECK(cone_support(row({0, 0})).support == std::vector<std::size_t>{0, 1});
}

TEST_CASE("property: cone_support witness has exactly the reported support")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 150; ++trial)
    {
        const std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 5;
        const RatMatrix a = jfs::testing::random_matrix(rng, rows, cols);
        const ConeSupport cs = cone_support(a);
        CHECK(is_zero(a * cs.witness));
        std::vector<bool> in(cols, false);
        for (std::size_t j : cs.support)
            in[j] = true;
        for (std::size_t j = 0; j < cols; ++j)
        {
            CHECK((sgn(cs.witness[j]) > 0) == in[j]);
            CHECK(sgn(cs.witness[j]) >= 0);
            if (in[j])
                continue;
            // No z >= 0 in the kernel can be positive on j.
            LinearProgram lp(cols);
            lp.sense = Sense::Maximize;
            for (std::size_t k = 0; k < cols; ++k)
                lp.nonnegative[k] = true;
            lp.objective[j] = 1;
            lp.add_upper_bound(j, Rational(1));
            for (std::size_t i = 0; i < rows; ++i)
                lp.add_row(a.row(i), Relation::Equal, Rational(0));
            CHECK(solve(lp).value == 0);
        }
    }
}

TEST_CASE("cone_member examples")
{
    const Subspace zero2 = Subspace::zero(2);
    CHECK(cone_member(ints({1, 1}), {ints({1, 0}), ints({0, 1})}, zero2));
    CHECK_FALSE(cone_member(ints({-1, 0}), {ints({1, 0})}, zero2));
    CHECK(cone_member(ints({-1, 0}), {}, Subspace::span(2, {ints({1, 0})})));
}
