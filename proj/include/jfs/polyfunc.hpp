#pragma once

#include <jfs/hpolyhedron.hpp>
#include <jfs/matrix.hpp>
#include <jfs/rational.hpp>
#include <jfs/subspace.hpp>
#include <jfs/vregion.hpp>

#include <string>
#include <vector>

namespace jfs {

/// A rational or one of the two infinities; never a sentinel value.
struct ExtRational
{
    enum class Kind { NegInf, Finite, PosInf };
    Kind kind = Kind::Finite;
    Rational value;

    static ExtRational finite(Rational v) { return {Kind::Finite, std::move(v)}; }
    static ExtRational pos_inf() { return {Kind::PosInf, Rational(0)}; }
    static ExtRational neg_inf() { return {Kind::NegInf, Rational(0)}; }

    bool is_finite() const { return kind == Kind::Finite; }
    bool operator==(const ExtRational& o) const { return kind == o.kind && (kind != Kind::Finite || value == o.value); }
    ExtRational operator-() const;
    std::string to_string() const;
};

struct AffinePiece
{
    Vec c;
    Rational d;

    bool operator==(const AffinePiece&) const = default;
};

/// f(x) = max_i (c_i . x + d_i) on the domain polyhedron, +infinity outside.
class PolyFunc
{
public:
    PolyFunc() = default;
    PolyFunc(std::vector<AffinePiece> pieces, HPolyhedron domain);
    static PolyFunc indicator(HPolyhedron domain);

    std::size_t dim() const { return domain_.dim(); }
    const std::vector<AffinePiece>& pieces() const { return pieces_; }
    const HPolyhedron& domain() const { return domain_; }

    /// f + indicator of base + dir.
    PolyFunc restricted_to(const Subspace& dir, const Vec& base) const;
    /// f + g written with all pairwise sums of pieces.
    PolyFunc plus(const PolyFunc& g) const;
    /// x -> f(A x).
    PolyFunc pullback(const RatMatrix& a) const;

    bool operator==(const PolyFunc&) const = default;

private:
    std::vector<AffinePiece> pieces_;
    HPolyhedron domain_;
};

ExtRational eval(const PolyFunc& f, const Vec& x);
/// conv{c_i : piece i active at x} + N_dom(x). Requires x in the domain.
VRegion subdifferential(const PolyFunc& f, const Vec& x);
/// N_dom(x), or the empty region outside the domain.
VRegion singular_subdifferential(const PolyFunc& f, const Vec& x);
/// sup_x y.x - f(x) via the epigraph LP.
ExtRational conjugate_eval(const PolyFunc& f, const Vec& y);

}  // namespace jfs
