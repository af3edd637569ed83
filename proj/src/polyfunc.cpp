#include <jfs/polyfunc.hpp>

#include <jfs/error.hpp>
#include <jfs/lp.hpp>
#include <jfs/polyhedron.hpp>

namespace jfs {

ExtRational ExtRational::operator-() const
{
    switch (kind)
    {
    case Kind::NegInf: return pos_inf();
    case Kind::PosInf: return neg_inf();
    case Kind::Finite: break;
    }
    return finite(-value);
}

std::string ExtRational::to_string() const
{
    switch (kind)
    {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "+inf";
    case Kind::Finite: break;
    }
    return jfs::to_string(value);
}

PolyFunc::PolyFunc(std::vector<AffinePiece> pieces, HPolyhedron domain)
    : pieces_(std::move(pieces)), domain_(std::move(domain))
{
    if (pieces_.empty())
        throw PreconditionViolation("a polyhedral function needs at least one affine piece");
    for (const AffinePiece& p : pieces_)
        if (p.c.size() != domain_.dim())
            throw DimensionMismatch("affine piece of length " + std::to_string(p.c.size()) + " over a domain in Q^" +
                                    std::to_string(domain_.dim()));
}

PolyFunc PolyFunc::indicator(HPolyhedron domain)
{
    const std::size_t n = domain.dim();
    return PolyFunc({{zeros(n), Rational(0)}}, std::move(domain));
}

PolyFunc PolyFunc::restricted_to(const Subspace& dir, const Vec& base) const
{
    return PolyFunc(pieces_, domain_.restricted_to(dir, base));
}

PolyFunc PolyFunc::plus(const PolyFunc& g) const
{
    if (g.dim() != dim())
        throw DimensionMismatch("adding functions on Q^" + std::to_string(dim()) + " and Q^" + std::to_string(g.dim()));
    std::vector<AffinePiece> sums;
    for (const AffinePiece& p : pieces_)
        for (const AffinePiece& q : g.pieces_)
            sums.push_back({add(p.c, q.c), p.d + q.d});
    return PolyFunc(std::move(sums), domain_.intersect(g.domain_));
}

PolyFunc PolyFunc::pullback(const RatMatrix& a) const
{
    if (a.rows() != dim())
        throw DimensionMismatch("pullback: matrix has " + std::to_string(a.rows()) + " rows, function lives on Q^" +
                                std::to_string(dim()));
    const RatMatrix at = a.transpose();
    std::vector<AffinePiece> pulled;
    for (const AffinePiece& p : pieces_)
        pulled.push_back({at * p.c, p.d});
    HPolyhedron dom(a.cols());
    for (std::size_t i = 0; i < domain_.num_ineq(); ++i)
        dom = dom.with_ineq(at * domain_.ineq_row(i), domain_.b()[i]);
    for (std::size_t i = 0; i < domain_.num_eq(); ++i)
        dom = dom.with_eq(at * domain_.eq_row(i), domain_.d()[i]);
    return PolyFunc(std::move(pulled), std::move(dom));
}

namespace {

Rational max_piece(const PolyFunc& f, const Vec& x)
{
    Rational best = dot(f.pieces()[0].c, x) + f.pieces()[0].d;
    for (const AffinePiece& p : f.pieces())
    {
        Rational v = dot(p.c, x) + p.d;
        if (v > best)
            best = v;
    }
    return best;
}

}  // namespace

ExtRational eval(const PolyFunc& f, const Vec& x)
{
    if (!f.domain().contains(x))
        return ExtRational::pos_inf();
    return ExtRational::finite(max_piece(f, x));
}

VRegion subdifferential(const PolyFunc& f, const Vec& x)
{
    if (!f.domain().contains(x))
        throw PreconditionViolation("subdifferential: " + to_string(x) + " is outside the domain");
    const Rational top = max_piece(f, x);
    VRegion r = normal_cone_at(f.domain(), x);
    r.points.clear();
    for (const AffinePiece& p : f.pieces())
        if (dot(p.c, x) + p.d == top)
            r.points.push_back(p.c);
    return tidy(std::move(r));
}

VRegion singular_subdifferential(const PolyFunc& f, const Vec& x)
{
    if (x.size() != f.dim())
        throw DimensionMismatch("singular_subdifferential: point in the wrong dimension");
    if (!f.domain().contains(x))
        return VRegion::empty(f.dim());
    return normal_cone_at(f.domain(), x);
}

ExtRational conjugate_eval(const PolyFunc& f, const Vec& y)
{
    const std::size_t n = f.dim();
    if (y.size() != n)
        throw DimensionMismatch("conjugate_eval: dual point in the wrong dimension");
    // max y.x - t subject to t >= c_i.x + d_i and x in the domain; variables (x, t).
    LinearProgram lp(n + 1);
    lp.sense = Sense::Maximize;
    lp.objective = y;
    lp.objective.push_back(Rational(-1));
    for (const AffinePiece& p : f.pieces())
    {
        Vec row = p.c;
        row.push_back(Rational(-1));
        lp.add_row(std::move(row), Relation::LessEqual, -p.d);
    }
    const HPolyhedron& dom = f.domain();
    for (std::size_t i = 0; i < dom.num_ineq(); ++i)
    {
        Vec row = dom.ineq_row(i);
        row.push_back(Rational(0));
        lp.add_row(std::move(row), Relation::LessEqual, dom.b()[i]);
    }
    for (std::size_t i = 0; i < dom.num_eq(); ++i)
    {
        Vec row = dom.eq_row(i);
        row.push_back(Rational(0));
        lp.add_row(std::move(row), Relation::Equal, dom.d()[i]);
    }
    const LPOutcome r = solve(lp);
    switch (r.status)
    {
    case LPStatus::Optimal: return ExtRational::finite(r.value);
    case LPStatus::Unbounded: return ExtRational::pos_inf();
    case LPStatus::Infeasible: break;
    }
    // Empty domain: the supremum over nothing.
    return ExtRational::neg_inf();
}

}  // namespace jfs
