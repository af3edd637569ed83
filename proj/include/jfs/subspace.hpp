#pragma once

#include <jfs/matrix.hpp>
#include <jfs/rational.hpp>

#include <string>
#include <vector>

namespace jfs {

/**
 * A linear subspace of Q^n stored by its canonical basis: the nonzero rows of
 * the reduced row-echelon form of any spanning set, pivots equal to one and
 * rows ordered by pivot column. Two subspaces are equal exactly when their
 * canonical bases are identical.
 */
class Subspace
{
public:
    Subspace() = default;

    /// span(vectors) inside Q^ambient_dim.
    static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);
    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    bool is_zero() const { return basis_.empty(); }
    bool is_full() const { return basis_.size() == ambient_dim_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    /// Basis as the rows of a dim x ambient_dim matrix.
    RatMatrix basis_matrix() const;

    bool operator==(const Subspace& other) const = default;

    std::string to_string() const;

private:
    std::size_t ambient_dim_ = 0;
    std::vector<Vec> basis_;
};

/// {v : M v = 0}; ambient dimension is M.cols().
Subspace kernel_basis(const RatMatrix& m);

Subspace orth_complement(const Subspace& u);

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersection(const Subspace& u, const Subspace& v);

struct SubspaceRelations
{
    Subspace sum;
    Subspace intersection;
    bool contains = false;  ///< v is a subset of u
    bool equal = false;
};

/// All pairwise relations at once. Throws DimensionMismatch on differing ambients.
SubspaceRelations subspace_ops(const Subspace& u, const Subspace& v);

/// Orthogonal projection of v onto u.
Vec project(const Vec& v, const Subspace& u);

/// Image A u of a subspace u of Q^{A.cols()}.
Subspace image(const RatMatrix& a, const Subspace& u);

}  // namespace jfs
