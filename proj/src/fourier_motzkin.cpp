#include <jfs/fourier_motzkin.hpp>

#include <jfs/error.hpp>
#include <jfs/lp.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>

namespace jfs {

namespace {

// Set of original rows a derived row was combined from.
using History = std::vector<std::uint64_t>;

std::size_t history_size(const History& h)
{
    std::size_t n = 0;
    for (std::uint64_t w : h)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

History history_union(const History& x, const History& y)
{
    History out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = x[i] | y[i];
    return out;
}

struct Row
{
    Vec a;
    Rational b;
    History history;
};

// Positive scaling so the first nonzero coefficient is +-1. Returns false for a zero row.
bool normalize(Row& r)
{
    for (const Rational& x : r.a)
        if (sgn(x) != 0)
        {
            const Rational s = 1 / abs(x);
            for (Rational& y : r.a)
                y *= s;
            r.b *= s;
            return true;
        }
    return false;
}

HPolyhedron empty_polyhedron(std::size_t dim)
{
    return HPolyhedron(dim).with_ineq(zeros(dim), Rational(-1));
}

class Eliminator
{
public:
    Eliminator(const HPolyhedron& p, std::size_t keep) : n_(p.dim()), keep_(keep), alive_(p.dim(), true)
    {
        for (std::size_t i = 0; i < p.num_ineq(); ++i)
            ineq_.push_back({p.ineq_row(i), p.b()[i], {}});
        for (std::size_t i = 0; i < p.num_eq(); ++i)
            eq_.push_back({p.eq_row(i), p.d()[i], {}});
        const std::size_t words = (p.num_ineq() + 63) / 64;
        for (std::size_t i = 0; i < ineq_.size(); ++i)
        {
            ineq_[i].history.assign(words, 0);
            ineq_[i].history[i / 64] |= std::uint64_t{1} << (i % 64);
        }
        feasible_input_ = !is_empty(p);
    }

    // False when the system was found to be infeasible.
    bool run()
    {
        // Projections of a nonempty set stay nonempty, so the redundancy
        // tests below may assume feasibility.
        if (!feasible_input_)
            return false;
        substitute_equalities();
        if (infeasible_)
            return false;
        prune_redundant();
        for (;;)
        {
            const std::size_t v = pick_variable();
            if (v == n_)
                break;
            eliminate(v);
            if (infeasible_)
                return false;
            prune_redundant();
        }
        return !infeasible_;
    }

    HPolyhedron result() const
    {
        HPolyhedron out(keep_);
        for (const Row& r : ineq_)
            out = out.with_ineq(Vec(r.a.begin(), r.a.begin() + static_cast<std::ptrdiff_t>(keep_)), r.b);
        for (const Row& r : eq_)
            out = out.with_eq(Vec(r.a.begin(), r.a.begin() + static_cast<std::ptrdiff_t>(keep_)), r.b);
        return out;
    }

private:
    void substitute_equalities()
    {
        for (std::size_t v = keep_; v < n_; ++v)
        {
            auto piv = std::find_if(eq_.begin(), eq_.end(), [&](const Row& r) { return sgn(r.a[v]) != 0; });
            if (piv == eq_.end())
                continue;
            const Row p = *piv;
            eq_.erase(piv);
            auto apply = [&](Row& r) {
                if (sgn(r.a[v]) == 0)
                    return;
                const Rational f = r.a[v] / p.a[v];
                for (std::size_t j = 0; j < n_; ++j)
                    if (sgn(p.a[j]) != 0)
                        r.a[j] -= f * p.a[j];
                r.b -= f * p.b;
            };
            for (Row& r : eq_)
                apply(r);
            for (Row& r : ineq_)
                apply(r);
            alive_[v] = false;
        }
        std::vector<Row> kept;
        for (Row& r : eq_)
        {
            if (is_zero(r.a))
            {
                if (sgn(r.b) != 0)
                    infeasible_ = true;
                continue;
            }
            kept.push_back(std::move(r));
        }
        eq_ = std::move(kept);
        tidy_inequalities();
    }

    // Trailing live variable with the smallest Fourier-Motzkin blow-up, or n_ when done.
    std::size_t pick_variable() const
    {
        std::size_t best = n_;
        long best_cost = 0;
        for (std::size_t v = keep_; v < n_; ++v)
        {
            if (!alive_[v])
                continue;
            long pos = 0, neg = 0;
            for (const Row& r : ineq_)
            {
                const int s = sgn(r.a[v]);
                pos += s > 0;
                neg += s < 0;
            }
            const long cost = pos * neg - pos - neg;
            if (best == n_ || cost < best_cost)
            {
                best = v;
                best_cost = cost;
            }
        }
        return best;
    }

    void eliminate(std::size_t v)
    {
        std::vector<Row> pos, neg, rest;
        for (Row& r : ineq_)
        {
            const int s = sgn(r.a[v]);
            (s > 0 ? pos : s < 0 ? neg : rest).push_back(std::move(r));
        }
        ++eliminated_;
        for (const Row& p : pos)
            for (const Row& q : neg)
            {
                // Kohler's bound: after k eliminations a row built from more
                // than k + 1 original rows is implied by the others.
                History h = history_union(p.history, q.history);
                if (history_size(h) > eliminated_ + 1)
                    continue;
                const Rational fp = -q.a[v], fq = p.a[v];
                Row c{zeros(n_), fp * p.b + fq * q.b, std::move(h)};
                for (std::size_t j = 0; j < n_; ++j)
                    c.a[j] = fp * p.a[j] + fq * q.a[j];
                c.a[v] = 0;
                rest.push_back(std::move(c));
            }
        ineq_ = std::move(rest);
        alive_[v] = false;
        tidy_inequalities();
    }

    // Normalizes rows, drops trivial and duplicate ones, and detects 0 <= negative.
    void tidy_inequalities()
    {
        std::vector<Row> kept;
        for (Row& r : ineq_)
        {
            if (!normalize(r))
            {
                if (sgn(r.b) < 0)
                    infeasible_ = true;
                continue;
            }
            kept.push_back(std::move(r));
        }
        std::sort(kept.begin(), kept.end(), [](const Row& x, const Row& y) {
            if (x.a != y.a)
                return lex_less(x.a, y.a);
            return x.b < y.b;
        });
        // For equal left-hand sides the first (tightest) row wins.
        kept.erase(std::unique(kept.begin(), kept.end(), [](const Row& x, const Row& y) { return x.a == y.a; }),
                   kept.end());
        ineq_ = std::move(kept);
    }

    /**
     * Drops rows implied by the others. Row i is implied exactly when
     * min{ sum_k l_k b_k + sum_e m_e d_e : sum_k l_k a_k + sum_e m_e e = a_i, l >= 0 }
     * is at most b_i (Farkas, valid because the system is feasible). The LP has
     * one row per live variable, far fewer than the inequality count.
     */
    void prune_redundant()
    {
        std::vector<std::size_t> live;
        for (std::size_t j = 0; j < n_; ++j)
            if (alive_[j] || j < keep_)
                live.push_back(j);
        std::vector<bool> dropped(ineq_.size(), false);
        for (std::size_t i = 0; i < ineq_.size(); ++i)
        {
            std::vector<std::size_t> others;
            for (std::size_t k = 0; k < ineq_.size(); ++k)
                if (k != i && !dropped[k])
                    others.push_back(k);
            const std::size_t nv = others.size() + eq_.size();
            LinearProgram lp(nv);
            for (std::size_t k = 0; k < others.size(); ++k)
            {
                lp.nonnegative[k] = true;
                lp.objective[k] = ineq_[others[k]].b;
            }
            for (std::size_t e = 0; e < eq_.size(); ++e)
                lp.objective[others.size() + e] = eq_[e].b;
            for (std::size_t j : live)
            {
                Vec row(nv);
                for (std::size_t k = 0; k < others.size(); ++k)
                    row[k] = ineq_[others[k]].a[j];
                for (std::size_t e = 0; e < eq_.size(); ++e)
                    row[others.size() + e] = eq_[e].a[j];
                lp.add_row(std::move(row), Relation::Equal, ineq_[i].a[j]);
            }
            const LPOutcome r = solve(lp);
            if (r.status == LPStatus::Unbounded)
                throw InternalInconsistency("Fourier-Motzkin: a feasible system produced a Farkas certificate");
            if (r.status == LPStatus::Optimal && r.value <= ineq_[i].b)
                dropped[i] = true;
        }
        std::vector<Row> kept;
        for (std::size_t i = 0; i < ineq_.size(); ++i)
            if (!dropped[i])
                kept.push_back(std::move(ineq_[i]));
        ineq_ = std::move(kept);
    }

    std::size_t n_;
    std::size_t keep_;
    std::vector<bool> alive_;
    std::vector<Row> ineq_;
    std::vector<Row> eq_;
    bool infeasible_ = false;
    bool feasible_input_ = false;
    std::size_t eliminated_ = 0;
};

}  // namespace

HPolyhedron project_out_trailing(const HPolyhedron& p, std::size_t keep)
{
    if (keep > p.dim())
        throw DimensionMismatch("cannot keep " + std::to_string(keep) + " of " + std::to_string(p.dim()) +
                                " coordinates");
    Eliminator e(p, keep);
    if (!e.run())
        return empty_polyhedron(keep);
    return e.result();
}

HPolyhedron minkowski_difference(const HPolyhedron& c, const HPolyhedron& d)
{
    if (c.dim() != d.dim())
        throw DimensionMismatch("Minkowski difference of polyhedra in dimensions " + std::to_string(c.dim()) +
                                " and " + std::to_string(d.dim()));
    const std::size_t n = c.dim();
    // Lift to (x, y) with x = c - y, i.e. c = x + y in C and y in D.
    HPolyhedron lifted(2 * n);
    auto doubled = [n](const Vec& a) {
        Vec out = a;
        out.insert(out.end(), a.begin(), a.end());
        return out;
    };
    auto shifted = [n](const Vec& a) {
        Vec out = zeros(n);
        out.insert(out.end(), a.begin(), a.end());
        return out;
    };
    for (std::size_t i = 0; i < c.num_ineq(); ++i)
        lifted = lifted.with_ineq(doubled(c.ineq_row(i)), c.b()[i]);
    for (std::size_t i = 0; i < c.num_eq(); ++i)
        lifted = lifted.with_eq(doubled(c.eq_row(i)), c.d()[i]);
    for (std::size_t i = 0; i < d.num_ineq(); ++i)
        lifted = lifted.with_ineq(shifted(d.ineq_row(i)), d.b()[i]);
    for (std::size_t i = 0; i < d.num_eq(); ++i)
        lifted = lifted.with_eq(shifted(d.eq_row(i)), d.d()[i]);
    return project_out_trailing(lifted, n);
}

HPolyhedron polyhedron_image(const RatMatrix& a, const HPolyhedron& p)
{
    if (a.cols() != p.dim())
        throw DimensionMismatch("image of a polyhedron in Q^" + std::to_string(p.dim()) + " under a matrix with " +
                                std::to_string(a.cols()) + " columns");
    const std::size_t m = a.rows(), n = a.cols();
    // (y, x) with y = A x and x in P.
    HPolyhedron lifted(m + n);
    for (std::size_t i = 0; i < m; ++i)
    {
        Vec row = zeros(m + n);
        row[i] = 1;
        for (std::size_t j = 0; j < n; ++j)
            row[m + j] = -a(i, j);
        lifted = lifted.with_eq(row, Rational(0));
    }
    auto shifted = [m](const Vec& r) {
        Vec out = zeros(m);
        out.insert(out.end(), r.begin(), r.end());
        return out;
    };
    for (std::size_t i = 0; i < p.num_ineq(); ++i)
        lifted = lifted.with_ineq(shifted(p.ineq_row(i)), p.b()[i]);
    for (std::size_t i = 0; i < p.num_eq(); ++i)
        lifted = lifted.with_eq(shifted(p.eq_row(i)), p.d()[i]);
    return project_out_trailing(lifted, m);
}

}  // namespace jfs
