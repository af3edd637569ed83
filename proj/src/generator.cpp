#include <jfs/generator.hpp>

#include <jfs/lp.hpp>
#include <jfs/polyhedron.hpp>

#include <random>
#include <stdexcept>

namespace jfs {

const std::vector<Profile>& all_profiles()
{
    static const std::vector<Profile> all = {Profile::Overlap, Profile::FaceTouch,  Profile::VertexTouch,
                                             Profile::Nested,  Profile::RandomPair, Profile::RandomFuncs};
    return all;
}

std::string profile_name(Profile p)
{
    switch (p)
    {
    case Profile::Overlap: return "overlap";
    case Profile::FaceTouch: return "face_touch";
    case Profile::VertexTouch: return "vertex_touch";
    case Profile::Nested: return "nested";
    case Profile::RandomPair: return "random_pair";
    case Profile::RandomFuncs: return "random_funcs";
    }
    return "?";
}

Profile parse_profile(const std::string& name)
{
    for (Profile p : all_profiles())
        if (profile_name(p) == name)
            return p;
    throw std::invalid_argument("unknown profile '" + name + "'");
}

namespace {

// Plain modulo keeps the stream identical across standard libraries.
class Dice
{
public:
    explicit Dice(std::uint64_t seed) : rng_(seed) {}

    long between(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    bool chance(unsigned percent) { return rng_() % 100 < percent; }

    Vec ints(std::size_t n, long lo, long hi)
    {
        Vec v(n);
        for (auto& x : v)
            x = between(lo, hi);
        return v;
    }

    Vec nonzero(std::size_t n, long lo, long hi)
    {
        for (;;)
        {
            Vec v = ints(n, lo, hi);
            if (!is_zero(v))
                return v;
        }
    }

private:
    std::mt19937_64 rng_;
};

// n + 1 or n + 2 random halfspaces with positive slack at `center`, occasionally capped by a box.
HPolyhedron random_polyhedron(Dice& dice, std::size_t n, const Vec& center)
{
    HPolyhedron p(n);
    const std::size_t rows = n + 1 + static_cast<std::size_t>(dice.between(0, 1));
    for (std::size_t i = 0; i < rows; ++i)
    {
        const Vec a = dice.nonzero(n, -3, 3);
        p = p.with_ineq(a, dot(a, center) + frac(dice.between(1, 6), 2));
    }
    if (dice.chance(15))
        for (std::size_t i = 0; i < n; ++i)
        {
            const Vec e = unit_vector(n, i);
            p = p.with_ineq(e, center[i] + 3).with_ineq(negate(e), 3 - center[i]);
        }
    return p;
}

// {x : R x in P} for the reflection R through {a.x = beta}.
HPolyhedron reflect(const HPolyhedron& p, const Vec& a, const Rational& beta)
{
    const Rational norm2 = dot(a, a);
    HPolyhedron r(p.dim());
    for (std::size_t i = 0; i < p.num_ineq(); ++i)
    {
        const Vec row = p.ineq_row(i);
        const Rational k = 2 * dot(row, a) / norm2;
        r = r.with_ineq(sub(row, scale(k, a)), p.b()[i] - k * beta);
    }
    for (std::size_t i = 0; i < p.num_eq(); ++i)
    {
        const Vec row = p.eq_row(i);
        const Rational k = 2 * dot(row, a) / norm2;
        r = r.with_eq(sub(row, scale(k, a)), p.d()[i] - k * beta);
    }
    return r;
}

std::size_t set_dim(const HPolyhedron& p)
{
    auto h = affine_hull(p);
    return h ? h->dir.dim() : 0;
}

struct Pair
{
    HPolyhedron c, d;
};

Pair overlap_pair(Dice& dice, std::size_t n)
{
    const Vec center = dice.ints(n, -2, 2);
    return {random_polyhedron(dice, n, center), random_polyhedron(dice, n, center)};
}

/**
 * C and the mirror image of C through a hyperplane supporting it; the mirror
 * is cut by one more halfspace that keeps the shared face. With `vertex`, the
 * hyperplane touches C at one vertex; otherwise it carries a facet.
 */
std::optional<Pair> touching_pair(Dice& dice, std::size_t n, bool vertex)
{
    const Vec center = dice.ints(n, -2, 2);
    const HPolyhedron c = random_polyhedron(dice, n, center);
    Vec a;
    Rational beta;
    if (vertex)
    {
        const LPOutcome r = solve_lp(dice.nonzero(n, -5, 5), c, Sense::Maximize);
        if (r.status != LPStatus::Optimal)
            return std::nullopt;
        // A strictly positive combination of the active normals exposes exactly this vertex.
        const std::vector<std::size_t> tight = c.tight_rows(r.point);
        a = zeros(n);
        for (std::size_t i : tight)
            a = add(a, scale(Rational(dice.between(1, 3)), c.ineq_row(i)));
        if (is_zero(a))
            return std::nullopt;
        beta = dot(a, r.point);
    }
    else
    {
        const std::size_t i = static_cast<std::size_t>(dice.between(0, static_cast<long>(c.num_ineq()) - 1));
        a = c.ineq_row(i);
        beta = c.b()[i];
    }
    const HPolyhedron face = c.with_eq(a, beta);
    if (is_empty(face))
        return std::nullopt;
    HPolyhedron d = reflect(c, a, beta);
    if (dice.chance(60))
    {
        const Vec cut = dice.nonzero(n, -3, 3);
        const LPOutcome top = solve_lp(cut, face, Sense::Maximize);
        if (top.status == LPStatus::Optimal)
            d = d.with_ineq(cut, top.value + frac(dice.between(0, 4), 2));
    }
    Pair p{c, d};
    if (dice.chance(50))
        std::swap(p.c, p.d);
    return p;
}

Pair nested_pair(Dice& dice, std::size_t n)
{
    const Vec center = dice.ints(n, -2, 2);
    const HPolyhedron c = random_polyhedron(dice, n, center);
    switch (dice.between(0, 2))
    {
    case 0:
    {
        // A face: a random subset of rows made tight, if that is nonempty.
        for (int attempt = 0; attempt < 8; ++attempt)
        {
            std::vector<std::size_t> rows;
            for (std::size_t i = 0; i < c.num_ineq(); ++i)
                if (dice.chance(30))
                    rows.push_back(i);
            const HPolyhedron f = c.with_tight_rows(rows);
            if (!is_empty(f))
                return {c, f};
        }
        return {c, c};
    }
    case 1:
    {
        const Vec a = dice.nonzero(n, -2, 2);
        return {c, c.with_eq(a, dot(a, center))};
    }
    default:
    {
        // center + (C - center) / 2
        HPolyhedron d(n);
        for (std::size_t i = 0; i < c.num_ineq(); ++i)
        {
            const Vec row = c.ineq_row(i);
            d = d.with_ineq(row, (c.b()[i] + dot(row, center)) / 2);
        }
        return {c, d};
    }
    }
}

Pair random_pair(Dice& dice, std::size_t n)
{
    auto one = [&] {
        const Vec center = dice.ints(n, -3, 3);
        HPolyhedron p = random_polyhedron(dice, n, center);
        if (dice.chance(25))
        {
            const Vec a = dice.nonzero(n, -2, 2);
            p = p.with_eq(a, dot(a, center));
        }
        return p;
    };
    HPolyhedron c = one();
    return {c, one()};
}

std::vector<AffinePiece> random_pieces(Dice& dice, std::size_t n)
{
    std::vector<AffinePiece> pieces;
    const long k = dice.between(1, 3);
    for (long i = 0; i < k; ++i)
        pieces.push_back({dice.ints(n, -2, 2), Rational(dice.between(-2, 2))});
    return pieces;
}

RatMatrix low_rank_matrix(Dice& dice, std::size_t n)
{
    const std::size_t rank = static_cast<std::size_t>(dice.between(1, static_cast<long>(n)));
    const RatMatrix left = RatMatrix::from_rows([&] {
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < n; ++i)
            rows.push_back(dice.ints(rank, -2, 2));
        return rows;
    }(), rank);
    std::vector<Vec> right_rows;
    for (std::size_t i = 0; i < rank; ++i)
        right_rows.push_back(dice.ints(n, -2, 2));
    return left * RatMatrix::from_rows(right_rows, n);
}

}  // namespace

Instance generate_instance(std::uint64_t seed, std::size_t dim, Profile profile)
{
    if (dim < 1 || dim > 6)
        throw std::invalid_argument("generator dimension must lie in [1, 6]");
    Dice dice(seed * 0x9E3779B97F4A7C15ULL + dim * 131 + static_cast<std::uint64_t>(profile));
    Pair pair;
    switch (profile)
    {
    case Profile::Overlap: pair = overlap_pair(dice, dim); break;
    case Profile::FaceTouch:
    case Profile::VertexTouch:
    case Profile::RandomFuncs:
    {
        const bool touch = profile != Profile::RandomFuncs || dice.chance(70);
        const bool vertex = profile == Profile::VertexTouch || (profile == Profile::RandomFuncs && dice.chance(50));
        std::optional<Pair> p;
        // Postcondition: the pair meets, and only in a lower-dimensional set.
        while (touch && !p)
        {
            p = touching_pair(dice, dim, vertex);
            if (p)
            {
                const HPolyhedron meet = p->c.intersect(p->d);
                const std::size_t k = set_dim(meet);
                if (is_empty(meet) || k >= dim || (vertex && k != 0))
                    p.reset();
            }
        }
        pair = touch ? *p : overlap_pair(dice, dim);
        break;
    }
    case Profile::Nested: pair = nested_pair(dice, dim); break;
    case Profile::RandomPair: pair = random_pair(dice, dim); break;
    }

    Instance inst;
    inst.dim = dim;
    inst.sets.emplace("C", pair.c);
    inst.sets.emplace("D", pair.d);
    inst.funcs.emplace("f", FuncDecl{dim, random_pieces(dice, dim), "C"});
    inst.funcs.emplace("g", FuncDecl{dim, random_pieces(dice, dim), "D"});
    inst.matrices.emplace("A", profile == Profile::RandomFuncs ? low_rank_matrix(dice, dim) : RatMatrix::identity(dim));
    if (auto x = relative_interior_point(pair.c.intersect(pair.d)))
        inst.points.emplace("x", x->point);
    return inst;
}

}  // namespace jfs
