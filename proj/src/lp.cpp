#include <jfs/lp.hpp>

#include <jfs/error.hpp>

#include <algorithm>
#include <limits>

namespace jfs {

LinearProgram::LinearProgram(std::size_t n) : num_vars(n), nonnegative(n, false), objective(zeros(n))
{
}

void LinearProgram::add_row(Vec coeffs, Relation rel, Rational value)
{
    if (coeffs.size() != num_vars)
        throw DimensionMismatch("LP row of length " + std::to_string(coeffs.size()) + " for " +
                                std::to_string(num_vars) + " variables");
    rows.push_back(std::move(coeffs));
    relations.push_back(rel);
    rhs.push_back(std::move(value));
}

void LinearProgram::add_upper_bound(std::size_t var, const Rational& value)
{
    add_row(unit_vector(num_vars, var), Relation::LessEqual, value);
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Standard form: min c.y, M y = r, y >= 0, with r >= 0 after row flips.
// Every row i owns one identity column id_col[i] (a slack with +1 or an
// artificial), which seeds the basis and later yields the row's dual.
class Tableau
{
public:
    // Rows of `m` have one entry per column plus the right-hand side.
    Tableau(std::vector<Vec> m, Vec c, std::vector<std::size_t> id_col, std::size_t num_structural)
        : rows_(m.size()), structural_(num_structural), cols_(c.size()), c_(std::move(c)),
          id_col_(std::move(id_col)), t_(std::move(m))
    {
        basis_ = id_col_;
    }

    // Returns false when the program is infeasible.
    bool phase_one()
    {
        bool any_artificial = false;
        for (std::size_t i = 0; i < rows_; ++i)
            any_artificial = any_artificial || id_col_[i] >= structural_;
        if (!any_artificial)
            return true;
        obj_ = zeros(cols_ + 1);
        for (std::size_t j = structural_; j < cols_; ++j)
            obj_[j] = 1;
        for (std::size_t i = 0; i < rows_; ++i)
            if (basis_[i] >= structural_)
                subtract_row(obj_, i, Rational(1));
        iterate(cols_);
        if (sgn(obj_[cols_]) != 0)
            return false;
        // Drive zero-level artificials out of the basis where possible.
        for (std::size_t i = 0; i < rows_; ++i)
        {
            if (basis_[i] < structural_)
                continue;
            for (std::size_t j = 0; j < structural_; ++j)
                if (sgn(t_[i][j]) != 0)
                {
                    pivot(i, j);
                    break;
                }
        }
        return true;
    }

    // Returns the entering column of an unbounded direction, or kNone at optimality.
    std::size_t phase_two()
    {
        obj_ = zeros(cols_ + 1);
        for (std::size_t j = 0; j < structural_; ++j)
            obj_[j] = c_[j];
        for (std::size_t i = 0; i < rows_; ++i)
            if (sgn(c_[basis_[i]]) != 0)
                subtract_row(obj_, i, c_[basis_[i]]);
        return iterate(structural_);
    }

    Vec primal() const
    {
        Vec y = zeros(structural_);
        for (std::size_t i = 0; i < rows_; ++i)
            if (basis_[i] < structural_)
                y[basis_[i]] = t_[i][cols_];
        return y;
    }

    Vec ray(std::size_t entering) const
    {
        Vec y = zeros(structural_);
        y[entering] = 1;
        for (std::size_t i = 0; i < rows_; ++i)
            if (basis_[i] < structural_)
                y[basis_[i]] = -t_[i][entering];
        return y;
    }

    // Duals of the (flipped) standard-form rows, read off the identity columns.
    Vec duals() const
    {
        Vec pi(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            pi[i] = -obj_[id_col_[i]];
        return pi;
    }

    Rational objective_value() const { return -obj_[cols_]; }

private:
    // target -= factor * row i, without temporaries.
    void subtract_row(Vec& target, std::size_t i, const Rational& factor)
    {
        const Vec& row = t_[i];
        for (std::size_t j = 0; j <= cols_; ++j)
            if (sgn(row[j]) != 0)
            {
                mpq_mul(scratch_.get_mpq_t(), factor.get_mpq_t(), row[j].get_mpq_t());
                mpq_sub(target[j].get_mpq_t(), target[j].get_mpq_t(), scratch_.get_mpq_t());
            }
    }

    void pivot(std::size_t r, std::size_t c)
    {
        Vec& prow = t_[r];
        const Rational inv = Rational(1) / prow[c];
        for (std::size_t j = 0; j <= cols_; ++j)
            if (sgn(prow[j]) != 0)
                prow[j] *= inv;
        for (std::size_t i = 0; i < rows_; ++i)
        {
            if (i == r || sgn(t_[i][c]) == 0)
                continue;
            const Rational f = t_[i][c];
            subtract_row(t_[i], r, f);
        }
        if (sgn(obj_[c]) != 0)
        {
            const Rational f = obj_[c];
            subtract_row(obj_, r, f);
        }
        basis_[r] = c;
    }

    // Most negative reduced cost over columns [0, limit); after a long run of
    // degenerate pivots, Bland's rule takes over for the rest of the phase,
    // which rules out cycling.
    std::size_t iterate(std::size_t limit)
    {
        bool bland = false;
        std::size_t degenerate_run = 0;
        for (;;)
        {
            std::size_t entering = kNone;
            for (std::size_t j = 0; j < limit; ++j)
                if (sgn(obj_[j]) < 0)
                {
                    if (entering == kNone || (!bland && obj_[j] < obj_[entering]))
                        entering = j;
                    if (bland)
                        break;
                }
            if (entering == kNone)
                return kNone;
            std::size_t leaving = kNone;
            Rational best_ratio;
            for (std::size_t i = 0; i < rows_; ++i)
            {
                if (sgn(t_[i][entering]) <= 0)
                    continue;
                Rational ratio = t_[i][cols_] / t_[i][entering];
                if (leaving == kNone || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leaving]))
                {
                    leaving = i;
                    best_ratio = std::move(ratio);
                }
            }
            if (leaving == kNone)
                return entering;
            if (sgn(best_ratio) == 0)
            {
                if (++degenerate_run > rows_ + cols_)
                    bland = true;
            }
            else
                degenerate_run = 0;
            pivot(leaving, entering);
        }
    }

    std::size_t rows_;
    std::size_t structural_;
    std::size_t cols_;
    Vec c_;
    std::vector<std::size_t> id_col_;
    std::vector<Vec> t_;
    std::vector<std::size_t> basis_;
    Vec obj_;
    Rational scratch_;
};

bool relation_holds(const Rational& lhs, Relation rel, const Rational& rhs)
{
    switch (rel)
    {
    case Relation::LessEqual: return lhs <= rhs;
    case Relation::Equal: return lhs == rhs;
    case Relation::GreaterEqual: return lhs >= rhs;
    }
    return false;
}

}  // namespace

LPOutcome solve(const LinearProgram& lp)
{
    const std::size_t n = lp.num_vars;
    const std::size_t m = lp.rows.size();
    if (lp.objective.size() != n || lp.nonnegative.size() != n)
        throw DimensionMismatch("LP objective or sign vector has the wrong length");

    // Column layout: one column per nonnegative variable, two per free one.
    std::vector<std::size_t> plus(n), minus(n, kNone);
    std::size_t col = 0;
    for (std::size_t j = 0; j < n; ++j)
    {
        plus[j] = col++;
        if (!lp.nonnegative[j])
            minus[j] = col++;
    }
    std::vector<std::size_t> slack_col(m, kNone);
    for (std::size_t i = 0; i < m; ++i)
        if (lp.relations[i] != Relation::Equal)
            slack_col[i] = col++;
    const std::size_t num_structural_pre = col;

    // Rows whose slack reads +1 after the sign flip start with it basic; the
    // rest get artificials.
    std::vector<int> flip(m, 1);
    std::vector<std::size_t> id_col(m);
    std::size_t num_cols = num_structural_pre;
    for (std::size_t i = 0; i < m; ++i)
    {
        flip[i] = sgn(lp.rhs[i]) < 0 ? -1 : 1;
        const bool slack_is_identity =
            (lp.relations[i] == Relation::LessEqual && flip[i] > 0) ||
            (lp.relations[i] == Relation::GreaterEqual && flip[i] < 0);
        id_col[i] = slack_is_identity ? slack_col[i] : num_cols++;
    }

    // Each tableau row carries its right-hand side in the last slot.
    std::vector<Vec> rows(m);
    for (std::size_t i = 0; i < m; ++i)
    {
        Vec row(num_cols + 1);
        for (std::size_t j = 0; j < n; ++j)
        {
            const Rational& a = lp.rows[i][j];
            if (sgn(a) == 0)
                continue;
            row[plus[j]] = a;
            if (minus[j] != kNone)
                row[minus[j]] = -a;
        }
        if (slack_col[i] != kNone)
            row[slack_col[i]] = lp.relations[i] == Relation::LessEqual ? 1 : -1;
        row[num_cols] = lp.rhs[i];
        if (flip[i] < 0)
            for (Rational& x : row)
                x = -x;
        if (id_col[i] >= num_structural_pre)
            row[id_col[i]] = 1;
        rows[i] = std::move(row);
    }

    Vec c = zeros(num_cols);
    const bool maximize = lp.sense == Sense::Maximize;
    for (std::size_t j = 0; j < n; ++j)
    {
        const Rational cj = maximize ? Rational(-lp.objective[j]) : lp.objective[j];
        c[plus[j]] = cj;
        if (minus[j] != kNone)
            c[minus[j]] = -cj;
    }

    Tableau tab(std::move(rows), std::move(c), id_col, num_structural_pre);
    LPOutcome out;
    if (!tab.phase_one())
    {
        out.status = LPStatus::Infeasible;
        return out;
    }

    auto to_original = [&](const Vec& y) {
        Vec x = zeros(n);
        for (std::size_t j = 0; j < n; ++j)
        {
            x[j] = y[plus[j]];
            if (minus[j] != kNone)
                x[j] -= y[minus[j]];
        }
        return x;
    };

    const std::size_t entering = tab.phase_two();
    if (entering != kNone)
    {
        out.status = LPStatus::Unbounded;
        out.ray = to_original(tab.ray(entering));
        return out;
    }
    out.status = LPStatus::Optimal;
    out.point = to_original(tab.primal());
    out.value = maximize ? Rational(-tab.objective_value()) : tab.objective_value();
    const Vec pi = tab.duals();
    out.duals.resize(m);
    for (std::size_t i = 0; i < m; ++i)
    {
        Rational y = flip[i] < 0 ? Rational(-pi[i]) : pi[i];
        out.duals[i] = maximize ? Rational(-y) : y;
    }
    return out;
}

bool verify_certificate(const LinearProgram& lp, const LPOutcome& outcome)
{
    const std::size_t n = lp.num_vars;
    const bool maximize = lp.sense == Sense::Maximize;
    if (outcome.status == LPStatus::Infeasible)
        return true;
    if (outcome.status == LPStatus::Unbounded)
    {
        const Vec& d = outcome.ray;
        if (d.size() != n)
            return false;
        for (std::size_t i = 0; i < lp.rows.size(); ++i)
            if (!relation_holds(dot(lp.rows[i], d), lp.relations[i], Rational(0)))
                return false;
        for (std::size_t j = 0; j < n; ++j)
            if (lp.nonnegative[j] && sgn(d[j]) < 0)
                return false;
        const int improve = sgn(dot(lp.objective, d));
        return maximize ? improve > 0 : improve < 0;
    }
    const Vec& x = outcome.point;
    if (x.size() != n || outcome.duals.size() != lp.rows.size())
        return false;
    for (std::size_t i = 0; i < lp.rows.size(); ++i)
        if (!relation_holds(dot(lp.rows[i], x), lp.relations[i], lp.rhs[i]))
            return false;
    for (std::size_t j = 0; j < n; ++j)
        if (lp.nonnegative[j] && sgn(x[j]) < 0)
            return false;
    if (dot(lp.objective, x) != outcome.value)
        return false;
    // Dual feasibility and zero duality gap.
    Vec reduced = lp.objective;
    Rational dual_value = 0;
    for (std::size_t i = 0; i < lp.rows.size(); ++i)
    {
        const Rational& y = outcome.duals[i];
        const int s = sgn(y) * (maximize ? -1 : 1);
        if (lp.relations[i] == Relation::LessEqual && s > 0)
            return false;
        if (lp.relations[i] == Relation::GreaterEqual && s < 0)
            return false;
        for (std::size_t j = 0; j < n; ++j)
            reduced[j] -= y * lp.rows[i][j];
        dual_value += y * lp.rhs[i];
    }
    for (std::size_t j = 0; j < n; ++j)
    {
        const int s = sgn(reduced[j]) * (maximize ? -1 : 1);
        if (lp.nonnegative[j] ? s < 0 : s != 0)
            return false;
    }
    return dual_value == outcome.value;
}

LPOutcome solve_lp(const Vec& objective, const HPolyhedron& p, Sense sense)
{
    if (objective.size() != p.dim())
        throw DimensionMismatch("objective of length " + std::to_string(objective.size()) +
                                " over a polyhedron in Q^" + std::to_string(p.dim()));
    LinearProgram lp(p.dim());
    lp.objective = objective;
    lp.sense = sense;
    for (std::size_t i = 0; i < p.num_ineq(); ++i)
        lp.add_row(p.ineq_row(i), Relation::LessEqual, p.b()[i]);
    for (std::size_t i = 0; i < p.num_eq(); ++i)
        lp.add_row(p.eq_row(i), Relation::Equal, p.d()[i]);
    return solve(lp);
}

bool is_empty(const HPolyhedron& p)
{
    return solve_lp(zeros(p.dim()), p, Sense::Minimize).status == LPStatus::Infeasible;
}

std::optional<InteriorPoint> relative_interior_point(const HPolyhedron& p)
{
    const std::size_t n = p.dim();
    const std::size_t m = p.num_ineq();
    // Rounds of capped slack maximization over the rows not yet known to be
    // strictly satisfiable. A zero optimum means every remaining row is an
    // implicit equality. The first round also decides emptiness.
    Vec feasible_point;
    std::vector<bool> strict(m, false);
    std::vector<std::size_t> undecided(m);
    for (std::size_t i = 0; i < m; ++i)
        undecided[i] = i;
    while (!undecided.empty())
    {
        const std::size_t k = undecided.size();
        LinearProgram lp(n + k);
        lp.sense = Sense::Maximize;
        for (std::size_t t = 0; t < k; ++t)
        {
            lp.nonnegative[n + t] = true;
            lp.objective[n + t] = 1;
            lp.add_upper_bound(n + t, Rational(1));
        }
        std::vector<std::size_t> slot(m, k);
        for (std::size_t t = 0; t < k; ++t)
            slot[undecided[t]] = t;
        for (std::size_t i = 0; i < m; ++i)
        {
            Vec row = p.ineq_row(i);
            row.resize(n + k, Rational(0));
            if (slot[i] < k)
                row[n + slot[i]] = 1;
            lp.add_row(std::move(row), Relation::LessEqual, p.b()[i]);
        }
        for (std::size_t i = 0; i < p.num_eq(); ++i)
        {
            Vec row = p.eq_row(i);
            row.resize(n + k, Rational(0));
            lp.add_row(std::move(row), Relation::Equal, p.d()[i]);
        }
        const LPOutcome res = solve(lp);
        if (res.status == LPStatus::Infeasible && feasible_point.empty())
            return std::nullopt;
        if (res.status != LPStatus::Optimal)
            throw InternalInconsistency("capped slack LP is not optimal on a nonempty polyhedron");
        feasible_point.assign(res.point.begin(), res.point.begin() + static_cast<std::ptrdiff_t>(n));
        if (sgn(res.value) == 0)
            break;
        std::vector<std::size_t> rest;
        for (std::size_t t = 0; t < k; ++t)
        {
            if (sgn(res.point[n + t]) > 0)
                strict[undecided[t]] = true;
            else
                rest.push_back(undecided[t]);
        }
        undecided = std::move(rest);
    }

    InteriorPoint out;
    for (std::size_t i = 0; i < m; ++i)
        if (!strict[i])
            out.implicit_equalities.push_back(i);
    if (out.implicit_equalities.size() == m)
    {
        if (feasible_point.empty())
        {
            // No inequality rows at all: any solution of the equalities will do.
            const LPOutcome any = solve_lp(zeros(n), p, Sense::Minimize);
            if (any.status == LPStatus::Infeasible)
                return std::nullopt;
            feasible_point = any.point;
        }
        out.point = feasible_point;
        return out;
    }

    // Max-min slack over the strictly satisfiable rows, capped at one.
    LinearProgram lp(n + 1);
    lp.sense = Sense::Maximize;
    lp.objective[n] = 1;
    lp.nonnegative[n] = true;
    lp.add_upper_bound(n, Rational(1));
    for (std::size_t i = 0; i < m; ++i)
    {
        Vec row = p.ineq_row(i);
        row.push_back(strict[i] ? Rational(1) : Rational(0));
        lp.add_row(std::move(row), strict[i] ? Relation::LessEqual : Relation::Equal, p.b()[i]);
    }
    for (std::size_t i = 0; i < p.num_eq(); ++i)
    {
        Vec row = p.eq_row(i);
        row.push_back(Rational(0));
        lp.add_row(std::move(row), Relation::Equal, p.d()[i]);
    }
    const LPOutcome res = solve(lp);
    if (res.status != LPStatus::Optimal || sgn(res.value) <= 0)
        throw InternalInconsistency("max-min slack LP found no strictly interior point");
    out.point.assign(res.point.begin(), res.point.begin() + static_cast<std::ptrdiff_t>(n));
    return out;
}

ConeSupport cone_support(const RatMatrix& a)
{
    const std::size_t k = a.cols();
    ConeSupport out;
    out.witness = zeros(k);
    std::vector<bool> in_support(k, false);
    for (;;)
    {
        std::vector<std::size_t> open;
        for (std::size_t j = 0; j < k; ++j)
            if (!in_support[j])
                open.push_back(j);
        if (open.empty())
            break;
        LinearProgram lp(k);
        lp.sense = Sense::Maximize;
        for (std::size_t j = 0; j < k; ++j)
            lp.nonnegative[j] = true;
        for (std::size_t j : open)
        {
            lp.objective[j] = 1;
            lp.add_upper_bound(j, Rational(1));
        }
        for (std::size_t i = 0; i < a.rows(); ++i)
            lp.add_row(a.row(i), Relation::Equal, Rational(0));
        const LPOutcome res = solve(lp);
        if (res.status != LPStatus::Optimal)
            throw InternalInconsistency("cone support LP is not optimal");
        if (sgn(res.value) == 0)
            break;
        for (std::size_t j = 0; j < k; ++j)
            if (sgn(res.point[j]) > 0)
            {
                in_support[j] = true;
                out.witness[j] += res.point[j];
            }
    }
    for (std::size_t j = 0; j < k; ++j)
        if (in_support[j])
            out.support.push_back(j);
    return out;
}

bool cone_member(const Vec& v, const std::vector<Vec>& generators, const Subspace& lineality)
{
    const std::size_t n = v.size();
    if (lineality.ambient_dim() != n)
        throw DimensionMismatch("cone membership: lineality lives in a different dimension");
    const std::size_t g = generators.size();
    const std::size_t l = lineality.dim();
    LinearProgram lp(g + l);
    for (std::size_t j = 0; j < g; ++j)
    {
        if (generators[j].size() != n)
            throw DimensionMismatch("cone generator has the wrong length");
        lp.nonnegative[j] = true;
    }
    for (std::size_t i = 0; i < n; ++i)
    {
        Vec row(g + l);
        for (std::size_t j = 0; j < g; ++j)
            row[j] = generators[j][i];
        for (std::size_t j = 0; j < l; ++j)
            row[g + j] = lineality.basis()[j][i];
        lp.add_row(std::move(row), Relation::Equal, v[i]);
    }
    return solve(lp).status != LPStatus::Infeasible;
}

}  // namespace jfs
