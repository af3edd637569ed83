#pragma once

#include <jfs/matrix.hpp>
#include <jfs/rational.hpp>

#include <string>
#include <vector>

namespace jfs {

class Subspace;

/**
 * {x in Q^n : A x <= b, E x = d}. Only set semantics are meaningful: two
 * polyhedra with different rows may describe the same set. The set may be
 * empty; emptiness is decided by linear programming, not by construction.
 */
class HPolyhedron
{
public:
    HPolyhedron() = default;
    explicit HPolyhedron(std::size_t dim);
    HPolyhedron(RatMatrix a, Vec b, RatMatrix e, Vec d);

    static HPolyhedron universe(std::size_t dim) { return HPolyhedron(dim); }
    /// Axis-aligned box lo <= x <= hi.
    static HPolyhedron box(const Vec& lo, const Vec& hi);
    /// The affine subspace base + dir, written with equality rows.
    static HPolyhedron affine(const Subspace& dir, const Vec& base);

    std::size_t dim() const { return dim_; }
    std::size_t num_ineq() const { return a_.rows(); }
    std::size_t num_eq() const { return e_.rows(); }

    const RatMatrix& A() const { return a_; }
    const Vec& b() const { return b_; }
    const RatMatrix& E() const { return e_; }
    const Vec& d() const { return d_; }

    Vec ineq_row(std::size_t i) const { return a_.row(i); }
    Vec eq_row(std::size_t i) const { return e_.row(i); }

    HPolyhedron with_ineq(const Vec& a, const Rational& b) const;
    HPolyhedron with_eq(const Vec& e, const Rational& d) const;
    /// Intersection, written by stacking both row systems.
    HPolyhedron intersect(const HPolyhedron& other) const;
    /// Intersection with base + dir.
    HPolyhedron restricted_to(const Subspace& dir, const Vec& base) const;
    /// Turns the listed inequality rows into equalities (they stay as inequalities too).
    HPolyhedron with_tight_rows(const std::vector<std::size_t>& rows) const;

    /// b_i - a_i x.
    Rational slack(std::size_t row, const Vec& x) const;
    bool contains(const Vec& x) const;
    /// Inequality rows with zero slack at x.
    std::vector<std::size_t> tight_rows(const Vec& x) const;

    bool operator==(const HPolyhedron& other) const = default;

private:
    std::size_t dim_ = 0;
    RatMatrix a_;
    Vec b_;
    RatMatrix e_;
    Vec d_;
};

/// True iff A x <= b and E x = d hold exactly.
bool contains(const HPolyhedron& p, const Vec& x);

}  // namespace jfs
