#include <doctest.h>

#include <jfs/calculus.hpp>
#include <jfs/error.hpp>
#include <jfs/lp.hpp>
#include <jfs/polyhedron.hpp>

#include "test_support.hpp"

using namespace jfs;
using jfs::testing::ints;

namespace {

ExtRational fin(long p, long q = 1) { return ExtRational::finite(frac(p, q)); }

HPolyhedron interval(long lo, long hi) { return HPolyhedron::box(ints({lo}), ints({hi})); }
HPolyhedron nonneg() { return HPolyhedron(1).with_ineq(ints({-1}), 0); }
HPolyhedron nonpos() { return HPolyhedron(1).with_ineq(ints({1}), 0); }

PolyFunc absolute() { return PolyFunc({{ints({1}), 0}, {ints({-1}), 0}}, HPolyhedron(1)); }
PolyFunc linear_on_unit() { return PolyFunc({{ints({1}), 0}}, interval(0, 1)); }

HPolyhedron left_box() { return HPolyhedron::box(ints({-1, 0}), ints({0, 1})); }
HPolyhedron right_box() { return HPolyhedron::box(ints({0, 0}), ints({1, 1})); }
HPolyhedron triangle()
{
    return HPolyhedron(2).with_ineq(ints({1, 1}), 0).with_ineq(ints({1, -1}), 0).with_ineq(ints({-1, 0}), 1);
}
HPolyhedron mirrored_triangle()
{
    return HPolyhedron(2).with_ineq(ints({-1, -1}), 0).with_ineq(ints({-1, 1}), 0).with_ineq(ints({1, 0}), 1);
}

VRegion segment(long lo, long hi) { return VRegion{1, {ints({lo}), ints({hi})}, {}, Subspace::zero(1)}; }
VRegion x_axis() { return VRegion::cone(2, {}, Subspace::span(2, {ints({1, 0})})); }

// A random polyhedral function on a bounded domain inside [-2,2]^n containing 0.
PolyFunc random_function(std::mt19937_64& rng, std::size_t n)
{
    std::vector<AffinePiece> pieces;
    const std::size_t k = 1 + rng() % 3;
    for (std::size_t i = 0; i < k; ++i)
        pieces.push_back({testing::random_vec(rng, n), testing::random_rational(rng)});
    HPolyhedron dom = HPolyhedron::box(Vec(n, Rational(-2)), Vec(n, Rational(2)));
    for (std::size_t i = 0; i < 2; ++i)
        dom = dom.with_ineq(testing::random_vec(rng, n), Rational(1));
    return PolyFunc(pieces, dom);
}

Vec random_point_in(std::mt19937_64& rng, const HPolyhedron& p)
{
    for (;;)
    {
        Vec y = testing::random_vec(rng, p.dim(), 0.2);
        if (p.contains(y))
            return y;
    }
}

}  // namespace

TEST_CASE("eval examples")
{
    CHECK(eval(absolute(), ints({-3})) == fin(3));
    CHECK(eval(PolyFunc::indicator(interval(0, 1)), ints({2})) == ExtRational::pos_inf());
    CHECK(eval(PolyFunc::indicator(interval(0, 1)), Vec{frac(1, 2)}) == fin(0));
}

TEST_CASE("subdifferential examples")
{
    CHECK(region_equal(subdifferential(absolute(), ints({0})), segment(-1, 1)));
    const VRegion down = VRegion{1, {ints({1})}, {ints({-1})}, Subspace::zero(1)};
    CHECK(region_equal(subdifferential(linear_on_unit(), ints({0})), down));
    const PolyFunc origin = PolyFunc::indicator(HPolyhedron(1).with_eq(ints({1}), 0));
    CHECK(region_equal(subdifferential(origin, ints({0})), VRegion::whole(1)));
}

TEST_CASE("singular subdifferential examples")
{
    const PolyFunc f = PolyFunc::indicator(nonneg());
    CHECK(region_equal(singular_subdifferential(f, ints({0})), VRegion::cone(1, {ints({-1})})));
    CHECK(region_equal(singular_subdifferential(f, ints({3})), VRegion::origin(1)));
    CHECK(singular_subdifferential(f, ints({-1})).is_empty());
}

TEST_CASE("conjugate examples by both routes")
{
    const PolyFunc unit = PolyFunc::indicator(interval(0, 1));
    const PolyFunc half_line = PolyFunc::indicator(nonneg());
    CHECK(conjugate_eval(unit, ints({1})) == fin(1));
    CHECK(conjugate_eval(half_line, ints({1})) == ExtRational::pos_inf());
    CHECK(conjugate_eval(absolute(), Vec{frac(1, 2)}) == fin(0));
    CHECK(conjugate_by_multipliers(unit, ints({1})) == fin(1));
    CHECK(conjugate_by_multipliers(half_line, ints({1})) == ExtRational::pos_inf());
    CHECK(conjugate_by_multipliers(absolute(), Vec{frac(1, 2)}) == fin(0));
}

TEST_CASE("sum rule examples")
{
    {
        const auto r = sum_rule_check(PolyFunc::indicator(nonneg()), PolyFunc::indicator(nonpos()), ints({0}));
        CHECK(r.jfs.T.is_zero());
        CHECK(region_equal(r.lhs, VRegion::whole(1)));
        CHECK(r.equal);
        CHECK(r.equal_inf);
    }
    {
        const auto r = sum_rule_check(absolute(), PolyFunc::indicator(interval(0, 1)), ints({0}));
        const VRegion down = VRegion{1, {ints({1})}, {ints({-1})}, Subspace::zero(1)};
        CHECK(region_equal(r.lhs, down));
        CHECK(r.equal);
    }
    {
        const Vec x{Rational(0), frac(1, 2)};
        const auto r = sum_rule_check(PolyFunc::indicator(left_box()), PolyFunc::indicator(right_box()), x);
        CHECK(region_equal(r.lhs, x_axis()));
        CHECK(region_equal(r.rhs, x_axis()));
        CHECK(r.equal);
        CHECK(r.equal_inf);
    }
    CHECK_THROWS_AS(sum_rule_check(absolute(), PolyFunc::indicator(interval(0, 1)), ints({2})), PreconditionViolation);
}

TEST_CASE("normal cone of an intersection examples")
{
    const auto edge = normal_cone_intersection_check(left_box(), right_box(), Vec{Rational(0), frac(1, 2)});
    CHECK(region_equal(edge.lhs, x_axis()));
    CHECK(edge.equal);
    const auto same = normal_cone_intersection_check(right_box(), right_box(), Vec{frac(1, 2), frac(1, 2)});
    CHECK(region_equal(same.lhs, VRegion::origin(2)));
    CHECK(same.equal);
    const auto vertex = normal_cone_intersection_check(triangle(), mirrored_triangle(), ints({0, 0}));
    CHECK(region_equal(vertex.lhs, VRegion::whole(2)));
    CHECK(region_equal(vertex.rhs, VRegion::whole(2)));
    CHECK(vertex.equal);
}

TEST_CASE("infimal convolution examples")
{
    {
        const auto r = infconv_check(PolyFunc::indicator(nonneg()), PolyFunc::indicator(nonpos()), ints({1}));
        CHECK(r.lhs == fin(0));
        CHECK(r.rhs == fin(0));
        CHECK(r.witness.has_value());
        CHECK(r.equal_and_attained);
    }
    {
        const PolyFunc unit = PolyFunc::indicator(interval(0, 1));
        const auto r = infconv_check(unit, unit, ints({1}));
        CHECK(r.lhs == fin(1));
        CHECK(r.rhs == fin(1));
        REQUIRE(r.witness.has_value());
        CHECK(add(r.witness->first, r.witness->second) == ints({1}));
        CHECK(r.equal_and_attained);
    }
    {
        // x + 1_{R+} plus 0: conjugate at 2 is sup (2-1)x = +inf.
        const PolyFunc f({{ints({1}), 0}}, nonneg());
        const PolyFunc g({{ints({0}), 0}}, HPolyhedron(1));
        const auto r = infconv_check(f, g, ints({2}));
        CHECK(r.lhs == ExtRational::pos_inf());
        CHECK(r.rhs == ExtRational::pos_inf());
        CHECK(r.equal_and_attained);
    }
}

TEST_CASE("chain rule examples")
{
    const PolyFunc g = PolyFunc::indicator(left_box());
    const RatMatrix column = RatMatrix::from_rows({ints({1}), ints({0})}, 1);
    {
        const auto r = chain_rule_check(g, column, ints({0}));
        REQUIRE(r.jfs.has_value());
        CHECK(r.jfs->T == Subspace::span(2, {ints({1, 0})}));
        CHECK(region_equal(r.lhs, VRegion::cone(1, {ints({1})})));
        CHECK(r.equal);
    }
    {
        const PolyFunc h({{ints({1, -1}), 1}, {ints({0, 2}), 0}}, right_box());
        const auto r = chain_rule_check(h, RatMatrix::identity(2), ints({1, 0}));
        CHECK(r.equal);
        CHECK(region_equal(r.lhs, subdifferential(h, ints({1, 0}))));
    }
    {
        const PolyFunc far = PolyFunc::indicator(HPolyhedron::box(ints({0, 1}), ints({1, 2})));
        const auto r = chain_rule_check(far, column, ints({0}));
        CHECK(r.trivial);
        CHECK(r.lhs.is_empty());
        CHECK(r.rhs.is_empty());
        CHECK(r.equal);
    }
    CHECK_THROWS_AS(chain_rule_check(g, column, ints({3})), PreconditionViolation);
}

TEST_CASE("Fenchel-Rockafellar dual examples")
{
    const RatMatrix one = RatMatrix::identity(1);
    {
        const auto r = fr_dual_check(PolyFunc::indicator(nonneg()), PolyFunc::indicator(nonpos()), one);
        REQUIRE(r.jfs.has_value());
        CHECK(r.jfs->T.is_zero());
        CHECK(r.primal_value == fin(0));
        CHECK(r.dual_value == fin(0));
        CHECK(r.equal);
    }
    {
        const PolyFunc zero({{ints({0}), 0}}, HPolyhedron(1));
        const auto r = fr_dual_check(linear_on_unit(), zero, one);
        CHECK(r.primal_value == fin(0));
        CHECK(r.dual_value == fin(0));
        CHECK(r.primal_witness.has_value());
        CHECK(r.dual_witness.has_value());
        CHECK(r.equal);
    }
    {
        const auto r = fr_dual_check(PolyFunc::indicator(interval(0, 1)), PolyFunc::indicator(interval(2, 3)), one);
        CHECK(r.trivial);
        CHECK(r.primal_value == ExtRational::pos_inf());
        CHECK(r.equal);
    }
}

TEST_CASE("property: subgradient inequality holds on sampled probes")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 12; ++trial)
    {
        const std::size_t n = 1 + rng() % 3;
        const PolyFunc f = random_function(rng, n);
        const Vec x = random_point_in(rng, f.domain());
        const VRegion sd = subdifferential(f, x);
        const ExtRational fx = eval(f, x);
        REQUIRE(fx.is_finite());
        std::vector<Vec> gens = sd.points;
        for (const Vec& p : sd.points)
            for (const Vec& r : sd.cone_generators())
                gens.push_back(add(p, r));
        for (int probe = 0; probe < 200; ++probe)
        {
            const Vec y = random_point_in(rng, f.domain());
            const ExtRational fy = eval(f, y);
            for (const Vec& v : gens)
                CHECK(fy.value >= fx.value + dot(v, sub(y, x)));
        }
    }
}

TEST_CASE("property: conjugate routes agree and biconjugation does not exceed f")
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 12; ++trial)
    {
        const std::size_t n = 1 + rng() % 3;
        const PolyFunc f = random_function(rng, n);
        const Vec x = random_point_in(rng, f.domain());
        const Rational fx = eval(f, x).value;
        // The maximizer of <x,y> - f*(y) is any subgradient at x.
        const Vec v = subdifferential(f, x).points.front();
        const ExtRational fv = conjugate_eval(f, v);
        REQUIRE(fv.is_finite());
        CHECK(dot(x, v) - fv.value == fx);
        for (int k = 0; k < 20; ++k)
        {
            const Vec y = testing::random_vec(rng, n, 0.2);
            const ExtRational a = conjugate_eval(f, y);
            CHECK(a == conjugate_by_multipliers(f, y));
            REQUIRE(a.is_finite());
            CHECK(dot(x, y) - a.value <= fx);
        }
    }
}

TEST_CASE("property: calculus identities on random function pairs")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10; ++trial)
    {
        const std::size_t n = 1 + rng() % 3;
        const PolyFunc f = random_function(rng, n);
        const PolyFunc g = random_function(rng, n);
        const Vec x = random_point_in(rng, f.domain().intersect(g.domain()));
        const auto s = sum_rule_check(f, g, x);
        CHECK(s.equal);
        CHECK(s.equal_inf);
        const Vec z = testing::random_vec(rng, n);
        const auto ic = infconv_check(f, g, z);
        CHECK(ic.equal_and_attained);
        if (ic.witness)
            CHECK(add(ic.witness->first, ic.witness->second) == z);
        const RatMatrix a = testing::random_matrix(rng, n, n);
        const auto d = fr_dual_check(f, g, a);
        CHECK(d.equal);
    }
}
