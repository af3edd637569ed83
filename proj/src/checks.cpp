#include <jfs/checks.hpp>

#include <jfs/calculus.hpp>
#include <jfs/error.hpp>
#include <jfs/facial.hpp>
#include <jfs/lp.hpp>
#include <jfs/polyhedron.hpp>
#include <jfs/report.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

namespace jfs {

using nlohmann::json;

std::string verdict_name(Verdict v)
{
    switch (v)
    {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
    }
    return "?";
}

Suite parse_suite(const std::string& name)
{
    static const std::map<std::string, Suite> names = {{"faces", Suite::Faces},
                                                       {"jfs", Suite::Jfs},
                                                       {"calculus", Suite::Calculus},
                                                       {"duality", Suite::Duality},
                                                       {"all", Suite::All}};
    auto it = names.find(name);
    if (it == names.end())
        throw std::invalid_argument("unknown suite '" + name + "'");
    return it->second;
}

bool InstanceReport::passed() const
{
    return std::none_of(checks.begin(), checks.end(),
                        [](const CheckResult& c) { return c.mandatory && c.verdict == Verdict::Fail; });
}

const CheckResult* InstanceReport::find(const std::string& name) const
{
    for (const CheckResult& c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

json to_json(const CheckResult& c, bool timings)
{
    json out = {{"name", c.name}, {"verdict", verdict_name(c.verdict)}, {"mandatory", c.mandatory}, {"details", c.details}};
    if (timings)
        out["seconds"] = c.seconds;
    return out;
}

json to_json(const InstanceReport& r, bool timings)
{
    json checks = json::array();
    for (const CheckResult& c : r.checks)
        checks.push_back(to_json(c, timings));
    return {{"instance_id", r.instance_id}, {"passed", r.passed()}, {"checks", checks}, {"traces", r.traces}};
}

namespace {

std::uint64_t fnv1a(const std::string& s)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s)
    {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

class Runner
{
public:
    Runner(const Instance& inst, const std::string& id, const CheckOptions& opts)
        : inst_(inst), opts_(opts), rng_(opts.seed ^ fnv1a(id))
    {
        report_.instance_id = id;
    }

    InstanceReport finish() { return std::move(report_); }

    void record_failure(const std::string& name, const std::string& what)
    {
        report_.checks.push_back({name, Verdict::Fail, true, {{"error", what}}});
    }

    void faces_suite();
    void jfs_suite();
    void calculus_suite();
    void duality_suite();

private:
    struct Outcome
    {
        bool ok;
        json details = json::object();
    };

    // Records one check; library errors become failures.
    void check(const std::string& name, bool mandatory, const std::function<Outcome()>& body)
    {
        CheckResult r;
        r.name = name;
        r.mandatory = mandatory;
        const auto start = std::chrono::steady_clock::now();
        try
        {
            Outcome o = body();
            r.verdict = o.ok ? Verdict::Pass : Verdict::Fail;
            r.details = std::move(o.details);
        }
        catch (const Error& e)
        {
            r.verdict = Verdict::Fail;
            r.details = {{"error", e.what()}};
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report_.checks.push_back(std::move(r));
    }

    void skip(const std::string& name, const std::string& why, bool mandatory = true)
    {
        report_.checks.push_back({name, Verdict::Skipped, mandatory, {{"note", why}}});
    }

    bool has_sets() const { return inst_.sets.count("C") && inst_.sets.count("D"); }
    bool has_funcs() const { return inst_.funcs.count("f") && inst_.funcs.count("g"); }

    std::size_t pick(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

    Vec random_vec(std::size_t n, long span)
    {
        Vec v(n);
        for (auto& x : v)
            x = frac(static_cast<long>(rng_() % static_cast<std::uint64_t>(4 * span + 1)) - 2 * span, 2);
        return v;
    }

    std::vector<Vec> vertices_of(const HPolyhedron& p);
    void faces_of(const std::string& set_name, const HPolyhedron& p);

    const Instance& inst_;
    CheckOptions opts_;
    std::mt19937_64 rng_;
    InstanceReport report_;
};

// Vertices as square solves over row subsets; nullopt when there are more than `budget` subsets.
std::optional<std::vector<Vec>> vertices_by_subsets(const HPolyhedron& p, std::size_t budget)
{
    const std::size_t n = p.dim();
    std::vector<Vec> rows;
    Vec rhs;
    std::size_t rank = 0;
    for (std::size_t i = 0; i < p.num_eq(); ++i)
    {
        rows.push_back(p.eq_row(i));
        const std::size_t r = rref(RatMatrix::from_rows(rows, n)).rank;
        if (r == rank)
            rows.pop_back();
        else
            rhs.push_back(p.d()[i]);
        rank = r;
    }
    const std::size_t k = n - rank;
    const std::size_t m = p.num_ineq();
    std::vector<Vec> out;
    if (k > m)
        return out;
    // binomial(m, k) with an early exit once it passes the budget
    double count = 1;
    for (std::size_t i = 0; i < k; ++i)
        count = count * static_cast<double>(m - i) / static_cast<double>(i + 1);
    if (count > static_cast<double>(budget))
        return std::nullopt;

    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i)
        pick[i] = i;
    while (true)
    {
        std::vector<Vec> sys = rows;
        Vec r = rhs;
        for (std::size_t i : pick)
        {
            sys.push_back(p.ineq_row(i));
            r.push_back(p.b()[i]);
        }
        Vec x;
        if (solve_square(RatMatrix::from_rows(sys, n), r, x) && p.contains(x) &&
            std::find(out.begin(), out.end(), x) == out.end())
            out.push_back(std::move(x));
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == m - k + i - 1)
            --i;
        if (i == 0)
            break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j)
            pick[j] = pick[j - 1] + 1;
    }
    return out;
}

std::vector<Vec> Runner::vertices_of(const HPolyhedron& p)
{
    if (auto v = vertices_by_subsets(p, 4000))
        return *v;
    // Too many row subsets: take LP optima in random directions that land on vertices.
    std::vector<Vec> out;
    for (std::size_t k = 0; k < 2 * p.dim(); ++k)
    {
        const LPOutcome r = solve_lp(random_vec(p.dim(), 3), p, Sense::Maximize);
        if (r.status == LPStatus::Optimal && minimal_face_at(p, r.point).span.is_zero() &&
            std::find(out.begin(), out.end(), r.point) == out.end())
            out.push_back(r.point);
    }
    return out;
}

void Runner::faces_suite()
{
    for (const char* name : {"C", "D"})
    {
        auto it = inst_.sets.find(name);
        if (it == inst_.sets.end())
            continue;
        const std::string prefix = std::string("faces.") + name + ".";
        if (it->second.dim() > opts_.face_dim_guard)
        {
            skip(prefix + "lattice", "dimension above the face-enumeration guard", false);
            continue;
        }
        if (is_empty(it->second))
        {
            skip(prefix + "lattice", "empty set", false);
            continue;
        }
        faces_of(prefix, it->second);
    }
}

void Runner::faces_of(const std::string& prefix, const HPolyhedron& p)
{
    const std::size_t n = p.dim();
    const std::vector<Face> faces = enumerate_faces(p, opts_.face_dim_guard);
    std::map<std::vector<std::size_t>, std::size_t> by_signature;
    std::vector<Vec> base;
    for (std::size_t i = 0; i < faces.size(); ++i)
    {
        by_signature[faces[i].active_rows] = i;
        base.push_back(affine_hull(faces[i].polyhedron)->base);
    }
    // F subset G iff G's tight rows are among F's.
    auto inside = [&](std::size_t f, std::size_t g) {
        return std::includes(faces[f].active_rows.begin(), faces[f].active_rows.end(), faces[g].active_rows.begin(),
                             faces[g].active_rows.end());
    };
    std::vector<std::pair<std::size_t, std::size_t>> nested_pairs;
    for (std::size_t f = 0; f < faces.size(); ++f)
        for (std::size_t g = 0; g < faces.size(); ++g)
            if (f != g && inside(f, g))
                nested_pairs.emplace_back(f, g);
    std::shuffle(nested_pairs.begin(), nested_pairs.end(), rng_);
    if (nested_pairs.size() > opts_.face_pair_budget)
        nested_pairs.resize(opts_.face_pair_budget);

    check(prefix + "face_characterization", true, [&]() -> Outcome {
        for (std::size_t i = 0; i < faces.size(); ++i)
        {
            const HPolyhedron flat = HPolyhedron::affine(faces[i].span, base[i]).intersect(p);
            if (!polyhedron_equal(flat, faces[i].polyhedron))
                return {false, {{"face", i}, {"reason", "aff(F) cap P differs from F"}}};
        }
        // Segment test: a point of F strictly between y and z forces y and z into F.
        std::size_t hits = 0;
        for (int t = 0; t < 30; ++t)
        {
            const Vec& y = base[pick(base.size())];
            const Vec& z = base[pick(base.size())];
            const Rational lam = frac(1 + static_cast<long>(pick(3)), 4);
            const Vec x = add(y, scale(lam, sub(z, y)));
            for (std::size_t i = 0; i < faces.size(); ++i)
                if (faces[i].polyhedron.contains(x))
                {
                    ++hits;
                    if (!faces[i].polyhedron.contains(y) || !faces[i].polyhedron.contains(z))
                        return {false, {{"face", i}, {"y", to_json(y)}, {"z", to_json(z)}}};
                }
        }
        return {true, {{"faces", faces.size()}, {"segment_hits", hits}}};
    });

    check(prefix + "intersection_closure", true, [&]() -> Outcome {
        std::size_t pairs = 0, compared = 0;
        std::vector<std::pair<std::size_t, std::size_t>> all_pairs;
        for (std::size_t a = 0; a < faces.size(); ++a)
            for (std::size_t b = a + 1; b < faces.size(); ++b)
                all_pairs.emplace_back(a, b);
        std::shuffle(all_pairs.begin(), all_pairs.end(), rng_);
        if (all_pairs.size() > 4 * opts_.face_pair_budget)
            all_pairs.resize(4 * opts_.face_pair_budget);
        for (const auto& [a, b] : all_pairs)
        {
            std::vector<std::size_t> rows = faces[a].active_rows;
            rows.insert(rows.end(), faces[b].active_rows.begin(), faces[b].active_rows.end());
            const HPolyhedron meet = p.with_tight_rows(rows);
            const auto r = relative_interior_point(meet);
            if (!r)
                continue;
            ++pairs;
            const auto hit = by_signature.find(p.tight_rows(r->point));
            if (hit == by_signature.end())
                return {false, {{"faces", {a, b}}, {"reason", "intersection is not an enumerated face"}}};
            if (compared < opts_.face_pair_budget)
            {
                ++compared;
                if (!polyhedron_equal(meet, faces[hit->second].polyhedron))
                    return {false, {{"faces", {a, b}}, {"reason", "intersection differs from its face"}}};
            }
        }
        return {true, {{"meeting_pairs", pairs}, {"compared_by_lp", compared}}};
    });

    check(prefix + "no_nested_normal", true, [&]() -> Outcome {
        for (std::size_t i = 0; i < faces.size(); ++i)
        {
            if (!(generated_facial_subspace(p, faces[i].polyhedron) == faces[i].span))
                return {false, {{"face", i}, {"reason", "generated facial subspace is not span(F - F)"}}};
            if (!nested_normal_cone(p, faces[i].polyhedron, faces[i].span).is_origin())
                return {false, {{"face", i}}};
        }
        return {true, {{"faces", faces.size()}}};
    });

    check(prefix + "nested_normal_induction", true, [&]() -> Outcome {
        std::size_t tested = 0;
        for (auto [f, g] : nested_pairs)
        {
            const HPolyhedron& s = faces[f].polyhedron;
            const Subspace& v = faces[g].span;
            for (const Vec& w : nested_normal_cone(p, s, v).cone_generators())
            {
                if (is_zero(w))
                    continue;
                ++tested;
                const Subspace cut = subspace_intersection(v, orth_complement(Subspace::span(n, {w})));
                if (!is_facial_subspace(p, s, cut))
                    return {false, {{"S_face", f}, {"V_face", g}, {"normal", to_json(w)}}};
            }
        }
        return {true, {{"pairs", nested_pairs.size()}, {"normals_tested", tested}}};
    });

    check(prefix + "facial_chains", true, [&]() -> Outcome {
        std::map<std::size_t, std::size_t> lengths;
        for (auto [f, g] : nested_pairs)
        {
            const HPolyhedron& s = faces[f].polyhedron;
            const Subspace &v = faces[g].span, &u = faces[f].span;
            const std::vector<Vec> chain = facial_chain(p, s, v, u);
            if (chain.size() != v.dim() - u.dim())
                return {false, {{"S_face", f}, {"V_face", g}, {"length", chain.size()}}};
            // Re-walk the chain: each normal is nested at its level and each cut stays facial.
            Subspace level = v;
            for (const Vec& w : chain)
            {
                if (is_zero(w) || !level.contains(w) || !recession_contains(nested_normal_cone(p, s, level), w))
                    return {false, {{"S_face", f}, {"V_face", g}, {"bad_normal", to_json(w)}}};
                level = subspace_intersection(level, orth_complement(Subspace::span(n, {w})));
                if (!is_facial_subspace(p, s, level))
                    return {false, {{"S_face", f}, {"V_face", g}, {"reason", "cut is not facial"}}};
            }
            if (!(level == u))
                return {false, {{"S_face", f}, {"V_face", g}, {"reason", "chain misses U"}}};
            ++lengths[chain.size()];
        }
        json hist = json::object();
        for (auto [len, count] : lengths)
            hist[std::to_string(len)] = count;
        return {true, {{"pairs", nested_pairs.size()}, {"length_histogram", hist}}};
    });

    check(prefix + "local_polar", true, [&]() -> Outcome {
        // Cones of feasible directions at the relative interior points of a few faces.
        std::size_t cones = 0, probes = 0;
        for (std::size_t i = 0; i < faces.size() && cones < 3; i += std::max<std::size_t>(1, faces.size() / 3))
        {
            const Vec& x = base[i];
            HPolyhedron k(n);
            for (std::size_t r : p.tight_rows(x))
                k = k.with_ineq(p.ineq_row(r), Rational(0));
            for (std::size_t r = 0; r < p.num_eq(); ++r)
                k = k.with_eq(p.eq_row(r), Rational(0));
            const VRegion derived = feasible_directions(p, x);
            const std::vector<Face> kfaces = enumerate_faces(k, opts_.face_dim_guard);
            std::vector<std::pair<Subspace, std::vector<Vec>>> polar;
            const HPolyhedron origin = point_set(zeros(n));
            // The whole space is a facial subspace too; it catches probes off aff K.
            polar.emplace_back(Subspace::full(n), nested_normal_cone(k, origin, Subspace::full(n)).cone_generators());
            for (const Face& kf : kfaces)
                polar.emplace_back(kf.span, nested_normal_cone(k, origin, kf.span).cone_generators());
            std::vector<Vec> tests = derived.cone_generators();
            for (int t = 0; t < 12; ++t)
                tests.push_back(random_vec(n, 2));
            for (const Vec& probe : tests)
            {
                bool quantified = true;
                for (const auto& [u, gens] : polar)
                    if (u.contains(probe))
                        for (const Vec& w : gens)
                            if (sgn(dot(probe, w)) > 0)
                                quantified = false;
                const bool member = k.contains(probe);
                if (member != quantified || member != region_contains(derived, probe))
                    return {false, {{"at", to_json(x)}, {"probe", to_json(probe)}, {"member", member}}};
                ++probes;
            }
            ++cones;
        }
        return {true, {{"cones", cones}, {"probes", probes}}};
    });
}

void Runner::jfs_suite()
{
    if (!has_sets())
    {
        skip("jfs", "instance lacks sets C and D");
        return;
    }
    const HPolyhedron& c = inst_.set("C");
    const HPolyhedron& d = inst_.set("D");
    const std::size_t n = c.dim();
    const HPolyhedron meet = c.intersect(d);
    const auto rint = relative_interior_point(meet);
    if (!rint)
    {
        check("jfs.disjoint_outcome", true, [&]() -> Outcome {
            bool oracle_agrees = false, iterative_agrees = false;
            try { jfs_oracle(c, d); } catch (const DisjointSets&) { oracle_agrees = true; }
            try { jfs_iterative(c, d); } catch (const DisjointSets&) { iterative_agrees = true; }
            return {oracle_agrees && iterative_agrees, {{"note", "C and D are disjoint; T_a is empty"}}};
        });
        report_.traces["outcome"] = "disjoint";
        return;
    }

    JFS oracle;
    HPolyhedron diff;
    ReductionResult iter;
    check("jfs.route_agreement", true, [&]() -> Outcome {
        oracle = jfs_oracle(c, d, &diff);
        iter = jfs_iterative(c, d);
        return {iter.jfs.T == oracle.T, {{"oracle", to_json(oracle.T)}, {"iterative", to_json(iter.jfs.T)}}};
    });
    if (report_.checks.back().verdict != Verdict::Pass && oracle.T.ambient_dim() != n)
        return;
    report_.traces["jfs"] = to_json(oracle);
    report_.traces["iterative"] = to_json(iter.trace);

    check("jfs.step_bound", true, [&]() -> Outcome {
        return {iter.trace.ell <= n, {{"ell", iter.trace.ell}, {"n", n}}};
    });

    check("jfs.containment", true, [&]() -> Outcome {
        const Subspace dir = affine_hull(meet)->dir;
        return {oracle.T.contains(dir), {{"meet_dir", to_json(dir)}}};
    });

    check("jfs.characterization", true, [&]() -> Outcome {
        const Subspace hc = generated_facial_subspace(c, meet);
        const Subspace hd = generated_facial_subspace(d, meet);
        const Subspace sum = subspace_sum(hc, hd);
        return {sum == oracle.T, {{"H_C", to_json(hc)}, {"H_D", to_json(hd)}}};
    });

    check("jfs.reveals_faces", true, [&]() -> Outcome {
        const bool on_c = polyhedron_equal(restrict_to(c, oracle), face_generated_by(c, meet).polyhedron);
        const bool on_d = polyhedron_equal(restrict_to(d, oracle), face_generated_by(d, meet).polyhedron);
        return {on_c && on_d, {{"C", on_c}, {"D", on_d}}};
    });

    check("jfs.rint_qualification", true, [&]() -> Outcome {
        const auto w = check_rint_qualification(c, d, &oracle);
        return {w.has_value(), {{"witness", w ? to_json(*w) : json(nullptr)}}};
    });

    check("jfs.no_nested_normal", true, [&]() -> Outcome {
        const VRegion cone = nested_normal_cone(diff, point_set(zeros(n)), oracle.T);
        return {cone.is_origin(), {{"cone", to_json(cone)}}};
    });

    check("jfs.difference_lemma", true, [&]() -> Outcome {
        const HPolyhedron origin = point_set(zeros(n));
        for (std::size_t i = 0; i < iter.trace.steps.size(); ++i)
        {
            const ReductionStep& s = iter.trace.steps[i];
            const Subspace direct = nested_normal_cone(diff, origin, s.T).direction_span();
            if (!(direct == s.K_span))
                return {false, {{"step", i}, {"from_difference", to_json(direct)}, {"from_sets", to_json(s.K_span)}}};
        }
        return {true, {{"steps", iter.trace.steps.size()}}};
    });

    check("jfs.recovery", true, [&]() -> Outcome {
        if (!relative_interiors_meet(c, d))
            return {true, {{"applies", false}}};
        // With meeting relative interiors T is the span of both affine hulls,
        // which is the whole space exactly when some set is full-dimensional.
        const Subspace expected = subspace_sum(affine_hull(c)->dir, affine_hull(d)->dir);
        return {oracle.T == expected, {{"applies", true}, {"T_is_whole", oracle.T.is_full()}}};
    });

    check("jfs.non_separation", true, [&]() -> Outcome {
        const auto cert = separation_certificate(restrict_to(c, oracle), restrict_to(d, oracle), oracle.T,
                                                 *oracle.base_point);
        return {!cert, {{"certificate", cert ? to_json(*cert) : json(nullptr)}}};
    });

    check("jfs.nested_normals_facial", true, [&]() -> Outcome {
        std::size_t tested = 0;
        for (const ReductionStep& s : iter.trace.steps)
            for (const Vec& v : s.K_elements)
            {
                const Subspace cut = subspace_intersection(s.T, orth_complement(Subspace::span(n, {v})));
                ++tested;
                if (!is_facial_subspace(c, meet, cut) || !is_facial_subspace(d, meet, cut))
                    return {false, {{"T", to_json(s.T)}, {"normal", to_json(v)}}};
            }
        return {true, {{"normals_tested", tested}}};
    });

    check("jfs.pointwise_agreement", false, [&]() -> Outcome {
        std::vector<Vec> xs{rint->point};
        for (Vec& v : vertices_of(meet))
            if (v != rint->point)
                xs.push_back(std::move(v));
        json disagree = json::array();
        for (const Vec& x : xs)
        {
            const ReductionResult pw = jfs_pointwise(c, d, x);
            if (!(pw.jfs.T == oracle.T))
                disagree.push_back({{"x", to_json(x)}, {"T", to_json(pw.jfs.T)}});
        }
        return {disagree.empty(), {{"points", xs.size()}, {"disagreements", disagree}}};
    });
}

void Runner::calculus_suite()
{
    if (!has_sets() || !has_funcs())
    {
        skip("calculus", "instance lacks C, D, f or g");
        return;
    }
    const PolyFunc f = inst_.func("f"), g = inst_.func("g");
    const std::size_t n = f.dim();
    if (g.dim() != n)
    {
        skip("calculus", "f and g live in different dimensions");
        return;
    }
    const HPolyhedron meet = f.domain().intersect(g.domain());
    const auto rint = relative_interior_point(meet);
    if (!rint)
    {
        for (const char* name : {"calculus.sum_rule", "calculus.singular_sum_rule", "calculus.normal_cone",
                                 "calculus.infconv"})
            report_.checks.push_back({name, Verdict::Pass, true, {{"note", "domains disjoint; holds trivially"}}});
    }
    else
    {
        std::vector<Vec> xs{rint->point};
        for (Vec& v : vertices_of(meet))
            if (xs.size() < 4)
                xs.push_back(std::move(v));
        // T(dom f, dom g), computed once for every identity below.
        std::optional<JFS> domains;
        auto t_of_domains = [&]() -> const JFS* {
            if (!domains)
                domains = jfs_oracle(f.domain(), g.domain());
            return &*domains;
        };

        std::optional<bool> inf_ok;
        json inf_points = json::array();
        check("calculus.sum_rule", true, [&]() -> Outcome {
            json pts = json::array();
            bool ok = true, ok_inf = true;
            for (const Vec& x : xs)
            {
                const SumRuleReport r = sum_rule_check(f, g, x, t_of_domains());
                ok = ok && r.equal;
                ok_inf = ok_inf && r.equal_inf;
                pts.push_back({{"x", to_json(x)}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}, {"equal", r.equal}});
                inf_points.push_back({{"x", to_json(x)}, {"lhs", to_json(r.lhs_inf)}, {"rhs", to_json(r.rhs_inf)},
                                      {"equal", r.equal_inf}});
            }
            report_.traces["domains_jfs"] = to_json(*t_of_domains());
            inf_ok = ok_inf;
            return {ok, {{"points", pts}}};
        });
        // Both sides come from the same sum_rule_check calls as the plain rule.
        check("calculus.singular_sum_rule", true, [&]() -> Outcome {
            if (!inf_ok)
                return {false, {{"note", "sum rule computation failed"}}};
            return {*inf_ok, {{"points", inf_points}}};
        });

        check("calculus.normal_cone", true, [&]() -> Outcome {
            for (const Vec& x : xs)
            {
                const NormalConeReport r = normal_cone_intersection_check(f.domain(), g.domain(), x, t_of_domains());
                if (!r.equal)
                    return {false, {{"x", to_json(x)}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}}};
            }
            return {true, {{"points", xs.size()}}};
        });

        check("calculus.infconv", true, [&]() -> Outcome {
            std::size_t finite = 0;
            for (std::size_t k = 0; k < opts_.infconv_samples; ++k)
            {
                const Vec z = random_vec(n, 3);
                const InfConvReport r = infconv_check(f, g, z, t_of_domains());
                bool witness_ok = true;
                if (r.rhs.is_finite())
                {
                    ++finite;
                    witness_ok = r.witness && add(r.witness->first, r.witness->second) == z;
                }
                if (!r.equal_and_attained || !witness_ok)
                    return {false, {{"z", to_json(z)}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}}};
            }
            return {true, {{"samples", opts_.infconv_samples}, {"finite", finite}}};
        });

        check("calculus.recovery", true, [&]() -> Outcome {
            if (!relative_interiors_meet(f.domain(), g.domain()))
                return {true, {{"applies", false}}};
            const JFS& j = *t_of_domains();
            // f + 1_{T_a} = f: the restricted sides must equal the classical ones.
            for (const Vec& x : xs)
            {
                const SumRuleReport r = sum_rule_check(f, g, x, &j);
                const auto [classical, classical_inf] = classical_sum(f, g, x);
                if (!region_equal(r.rhs, classical) || !region_equal(r.rhs_inf, classical_inf))
                    return {false, {{"x", to_json(x)}, {"rule", "sum"}}};
            }
            const Vec z = random_vec(n, 3);
            const ExtRational classical = infimal_convolution_of_conjugates(f, g, z, nullptr);
            if (!(classical == infconv_check(f, g, z, &j).rhs))
                return {false, {{"z", to_json(z)}, {"rule", "infconv"}}};
            const RatMatrix id = RatMatrix::identity(n);
            if (!(classical_dual_value(f, g, id) == fr_dual_check(f, g, id).dual_value))
                return {false, {{"rule", "frdual"}}};
            return {true, {{"applies", true}, {"T_is_whole", j.T.is_full()}}};
        });
    }

    if (!inst_.matrices.count("A"))
    {
        skip("calculus.chain_rule", "instance lacks matrix A");
        return;
    }
    const RatMatrix& a = inst_.matrix("A");
    check("calculus.chain_rule", true, [&]() -> Outcome {
        const HPolyhedron pre = g.pullback(a).domain();
        const auto x0 = relative_interior_point(pre);
        if (!x0)
        {
            const ChainRuleReport r = chain_rule_check(g, a, zeros(a.cols()));
            return {r.equal && r.trivial, {{"trivial", true}}};
        }
        std::vector<Vec> xs{x0->point};
        for (Vec& v : vertices_of(pre))
            if (xs.size() < 3)
                xs.push_back(std::move(v));
        const JFS t = jfs_oracle(g.domain(), range_polyhedron(a));
        for (const Vec& x : xs)
        {
            const ChainRuleReport r = chain_rule_check(g, a, x, &t);
            if (!r.equal)
                return {false, {{"x", to_json(x)}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}}};
        }
        return {true, {{"points", xs.size()}}};
    });
}

void Runner::duality_suite()
{
    if (!has_funcs() || !inst_.matrices.count("A"))
    {
        skip("duality", "instance lacks f, g or A");
        return;
    }
    const PolyFunc f = inst_.func("f"), g = inst_.func("g");
    const RatMatrix& a = inst_.matrix("A");
    check("duality.fr_dual", true, [&]() -> Outcome {
        const DualReport r = fr_dual_check(f, g, a);
        json details = {{"primal", to_json(r.primal_value)}, {"dual", to_json(r.dual_value)}, {"trivial", r.trivial}};
        if (r.jfs)
            details["T"] = to_json(r.jfs->T);
        bool witnesses = true;
        if (r.primal_witness)
        {
            // Re-evaluate f(x) + g(Ax) at the primal witness.
            const ExtRational fx = eval(f, *r.primal_witness), gx = eval(g, a * *r.primal_witness);
            witnesses = fx.is_finite() && gx.is_finite() && fx.value + gx.value == r.primal_value.value;
            details["primal_witness"] = to_json(*r.primal_witness);
        }
        if (r.dual_witness)
            details["dual_witness"] = to_json(*r.dual_witness);
        return {r.equal && witnesses, details};
    });
}

}  // namespace

InstanceReport run_checks(const Instance& inst, const std::string& id, Suite suite, const CheckOptions& opts)
{
    Runner r(inst, id, opts);
    try
    {
        if (suite == Suite::Faces || suite == Suite::All)
            r.faces_suite();
        if (suite == Suite::Jfs || suite == Suite::All)
            r.jfs_suite();
        if (suite == Suite::Calculus || suite == Suite::All)
            r.calculus_suite();
        if (suite == Suite::Duality || suite == Suite::All)
            r.duality_suite();
    }
    catch (const Error& e)
    {
        r.record_failure("suite_setup", e.what());
    }
    return r.finish();
}

std::vector<InstanceReport> run_corpus(const std::vector<CorpusEntry>& corpus, Suite suite, const CheckOptions& opts,
                                       unsigned threads)
{
    std::vector<InstanceReport> out(corpus.size());
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, corpus.size())));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < corpus.size();)
            out[i] = run_checks(corpus[i].instance, corpus[i].id, suite, opts);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(work);
    work();
    for (std::thread& t : pool)
        t.join();
    return out;
}

}  // namespace jfs
