// jfs: joint facial subspaces and qualification-free calculus checks from the command line.
//
// Exit codes: 0 every mandatory check passed, 1 some check failed, 2 usage or input error.

#include <jfs/calculus.hpp>
#include <jfs/checks.hpp>
#include <jfs/error.hpp>
#include <jfs/facial.hpp>
#include <jfs/generator.hpp>
#include <jfs/instance.hpp>
#include <jfs/lp.hpp>
#include <jfs/polyhedron.hpp>
#include <jfs/report.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace jfs;
using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kExitPass = 0, kExitFail = 1, kExitUsage = 2;

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct Common
{
    bool json_out = false;
    bool timings = false;
};

class Stopwatch
{
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Instance load_instance(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try
    {
        return parse_instance(buf.str());
    }
    catch (const ParseError& e)
    {
        throw UsageError(path + ": " + e.what());
    }
}

std::string stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

json envelope(const std::string& command, const std::string& id)
{
    return {{"schema_version", kSchemaVersion}, {"command", command}, {"instance_id", id}};
}

void emit_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string describe(const Subspace& s)
{
    if (s.is_zero())
        return "{0}";
    if (s.is_full())
        return "R^" + std::to_string(s.ambient_dim());
    std::string out = "span{";
    for (std::size_t i = 0; i < s.basis().size(); ++i)
        out += (i ? ", " : "") + to_string(s.basis()[i]);
    return out + "}";
}

// ---------------------------------------------------------------- jfs

struct JfsArgs
{
    std::string file;
    std::string c = "C", d = "D";
    std::string s;
    std::string point;
    bool at_vertex = false;
};

int cmd_jfs(const JfsArgs& a, const Common& common)
{
    const Instance inst = load_instance(a.file);
    const HPolyhedron& c = inst.set(a.c);
    const HPolyhedron& d = inst.set(a.d);
    if (c.dim() != d.dim())
        throw UsageError("sets '" + a.c + "' and '" + a.d + "' live in different dimensions");
    const Stopwatch clock;
    json out = envelope("jfs", stem(a.file));
    json checks = json::array();
    auto verdict = [&](const std::string& name, bool ok, bool mandatory, json details = json::object()) {
        checks.push_back({{"name", name}, {"verdict", ok ? "pass" : "fail"}, {"mandatory", mandatory}, {"details", details}});
        return ok || !mandatory;
    };

    const HPolyhedron meet = c.intersect(d);
    const auto rint = relative_interior_point(meet);
    if (!rint)
    {
        out["outcome"] = "disjoint";
        out["checks"] = json::array({{{"name", "disjoint_outcome"}, {"verdict", "pass"}, {"mandatory", true},
                                      {"details", {{"note", "C and D do not meet; T_a is empty"}}}}});
        if (common.timings)
            out["timings"] = {{"total_seconds", clock.seconds()}};
        if (common.json_out)
            emit_json(out);
        else
            std::cout << "C and D are disjoint: T_a is empty and every calculus identity holds trivially.\n";
        return kExitPass;
    }

    const JFS oracle = jfs_oracle(c, d);
    std::optional<HPolyhedron> s;
    if (!a.s.empty())
        s = inst.set(a.s);
    const ReductionResult iter = jfs_iterative(c, d, s);

    Vec x = rint->point;
    if (!a.point.empty())
        x = inst.point(a.point);
    else if (a.at_vertex)
    {
        // First vertex of C cap D found by a deterministic objective.
        const LPOutcome r = solve_lp(Vec(c.dim(), Rational(1)), meet, Sense::Maximize);
        if (r.status == LPStatus::Optimal && minimal_face_at(meet, r.point).span.is_zero())
            x = r.point;
        else
            throw UsageError("--at-vertex: C cap D has no vertex reachable by the fixed objective");
    }
    if (!c.contains(x) || !d.contains(x))
        throw UsageError("point " + to_string(x) + " is not in C cap D");
    const ReductionResult pw = jfs_pointwise(c, d, x);

    bool ok = true;
    ok &= verdict("route_agreement", iter.jfs.T == oracle.T, true);
    ok &= verdict("step_bound", iter.trace.ell <= c.dim(), true, {{"ell", iter.trace.ell}});
    verdict("pointwise_agreement", pw.jfs.T == oracle.T, false, {{"x", to_json(x)}});

    out["outcome"] = "intersecting";
    out["jfs"] = to_json(oracle);
    out["ell"] = iter.trace.ell;
    out["checks"] = checks;
    out["traces"] = {{"iterative", to_json(iter.trace)}, {"pointwise", to_json(pw.trace)}};
    if (common.timings)
        out["timings"] = {{"total_seconds", clock.seconds()}};

    if (common.json_out)
        emit_json(out);
    else
    {
        std::cout << "T        = " << describe(oracle.T) << "  (dim " << oracle.T.dim() << ")\n";
        std::cout << "T_a base = " << to_string(*oracle.base_point) << '\n';
        std::cout << "ell      = " << iter.trace.ell << '\n';
        for (std::size_t i = 0; i < iter.trace.steps.size(); ++i)
        {
            const ReductionStep& st = iter.trace.steps[i];
            std::cout << "  step " << i << ": T_" << i << " = " << describe(st.T) << ", span K_" << i << " = "
                      << describe(st.K_span) << '\n';
        }
        std::cout << "iterative " << (iter.jfs.T == oracle.T ? "agrees" : "DISAGREES") << " with the oracle\n";
        std::cout << "pointwise at " << to_string(x) << ": " << describe(pw.jfs.T)
                  << (pw.jfs.T == oracle.T ? " (agrees)" : " (differs; informational)") << '\n';
        if (common.timings)
            std::cout << "time     = " << clock.seconds() << " s\n";
    }
    return ok ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------- check

struct CheckArgs
{
    std::string file;
    std::size_t random = 0;
    std::uint64_t seed = 1;
    std::size_t dim = 0;
    std::string profile;
    std::string suite = "all";
    unsigned threads = 0;
};

std::vector<CorpusEntry> build_corpus(const CheckArgs& a)
{
    std::vector<CorpusEntry> corpus;
    if (!a.file.empty())
    {
        corpus.push_back({stem(a.file), load_instance(a.file)});
        return corpus;
    }
    std::vector<Profile> profiles = all_profiles();
    if (!a.profile.empty())
        profiles = {parse_profile(a.profile)};
    if (a.dim > 6)
        throw UsageError("--dim must lie in [1, 6]");
    for (std::size_t i = 0; i < a.random; ++i)
    {
        const Profile p = profiles[i % profiles.size()];
        const std::size_t n = a.dim ? a.dim : 1 + (i / profiles.size()) % 5;
        const std::uint64_t seed = a.seed + i;
        corpus.push_back({profile_name(p) + "-d" + std::to_string(n) + "-s" + std::to_string(seed),
                          generate_instance(seed, n, p)});
    }
    return corpus;
}

int cmd_check(const CheckArgs& a, const Common& common)
{
    if (a.file.empty() == (a.random == 0))
        throw UsageError("give either an instance file or --random N");
    const Suite suite = parse_suite(a.suite);
    const std::vector<CorpusEntry> corpus = build_corpus(a);
    CheckOptions opts;
    opts.seed = a.seed;
    const Stopwatch clock;
    const std::vector<InstanceReport> reports = run_corpus(corpus, suite, opts, a.threads);

    std::size_t passed = 0;
    std::map<std::string, std::map<std::string, std::size_t>> tally;
    for (const InstanceReport& r : reports)
    {
        passed += r.passed();
        for (const CheckResult& c : r.checks)
            ++tally[c.name][verdict_name(c.verdict)];
    }
    const bool ok = passed == reports.size();

    if (common.json_out)
    {
        json out = envelope("check", reports.size() == 1 ? reports[0].instance_id : "corpus");
        out["suite"] = a.suite;
        json list = json::array();
        for (const InstanceReport& r : reports)
            list.push_back(to_json(r, common.timings));
        out["reports"] = list;
        out["summary"] = {{"instances", reports.size()}, {"passed", passed}, {"checks", tally}};
        if (common.timings)
            out["timings"] = {{"total_seconds", clock.seconds()}};
        emit_json(out);
    }
    else
    {
        for (const InstanceReport& r : reports)
        {
            std::cout << (r.passed() ? "PASS " : "FAIL ") << r.instance_id << '\n';
            for (const CheckResult& c : r.checks)
                if (c.verdict == Verdict::Fail)
                    std::cout << "    " << (c.mandatory ? "failed " : "note   ") << c.name << ": " << c.details.dump()
                              << '\n';
        }
        std::cout << "\n";
        for (const auto& [name, counts] : tally)
        {
            std::cout << "  " << name;
            for (const auto& [v, k] : counts)
                std::cout << "  " << v << '=' << k;
            std::cout << '\n';
        }
        std::cout << passed << '/' << reports.size() << " instances passed\n";
        if (common.timings)
            std::cout << "time " << clock.seconds() << " s\n";
    }
    return ok ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------- calculus

struct CalculusArgs
{
    std::string file;
    std::string rule;
    std::string f = "f", g = "g";
    std::string c = "C", d = "D";
    std::string matrix = "A";
    std::string point = "x";
    std::string z;
};

int cmd_calculus(const CalculusArgs& a, const Common& common)
{
    const Instance inst = load_instance(a.file);
    const Stopwatch clock;
    json out = envelope("calculus", stem(a.file));
    out["rule"] = a.rule;
    bool ok = false;
    std::ostringstream text;
    auto show_region = [&](const char* label, const VRegion& r) { text << label << r.to_string() << '\n'; };
    auto show_jfs = [&](const JFS& j) {
        out["jfs"] = to_json(j);
        text << "T_a: T = " << describe(j.T) << ", base " << to_string(*j.base_point) << '\n';
    };

    if (a.rule == "sum" || a.rule == "suminf")
    {
        const PolyFunc f = inst.func(a.f), g = inst.func(a.g);
        const Vec& x = inst.point(a.point);
        const SumRuleReport r = sum_rule_check(f, g, x);
        show_jfs(r.jfs);
        const bool inf = a.rule == "suminf";
        const VRegion& lhs = inf ? r.lhs_inf : r.lhs;
        const VRegion& rhs = inf ? r.rhs_inf : r.rhs;
        ok = inf ? r.equal_inf : r.equal;
        out["lhs"] = to_json(lhs);
        out["rhs"] = to_json(rhs);
        show_region("lhs: ", lhs);
        show_region("rhs: ", rhs);
    }
    else if (a.rule == "ncone")
    {
        const NormalConeReport r = normal_cone_intersection_check(inst.set(a.c), inst.set(a.d), inst.point(a.point));
        show_jfs(r.jfs);
        ok = r.equal;
        out["lhs"] = to_json(r.lhs);
        out["rhs"] = to_json(r.rhs);
        show_region("lhs: ", r.lhs);
        show_region("rhs: ", r.rhs);
    }
    else if (a.rule == "chain")
    {
        const ChainRuleReport r = chain_rule_check(inst.func(a.g), inst.matrix(a.matrix), inst.point(a.point));
        if (r.jfs)
            show_jfs(*r.jfs);
        ok = r.equal;
        out["trivial"] = r.trivial;
        out["lhs"] = to_json(r.lhs);
        out["rhs"] = to_json(r.rhs);
        show_region("lhs: ", r.lhs);
        show_region("rhs: ", r.rhs);
    }
    else if (a.rule == "infconv")
    {
        const PolyFunc f = inst.func(a.f), g = inst.func(a.g);
        const Vec& z = inst.point(a.z.empty() ? a.point : a.z);
        const InfConvReport r = infconv_check(f, g, z);
        show_jfs(r.jfs);
        ok = r.equal_and_attained;
        out["lhs"] = to_json(r.lhs);
        out["rhs"] = to_json(r.rhs);
        text << "lhs: " << r.lhs.to_string() << "\nrhs: " << r.rhs.to_string() << '\n';
        if (r.witness)
        {
            out["witness"] = {to_json(r.witness->first), to_json(r.witness->second)};
            text << "split: " << to_string(r.witness->first) << " + " << to_string(r.witness->second) << '\n';
        }
    }
    else if (a.rule == "frdual")
    {
        const DualReport r = fr_dual_check(inst.func(a.f), inst.func(a.g), inst.matrix(a.matrix));
        if (r.jfs)
            show_jfs(*r.jfs);
        ok = r.equal;
        out["trivial"] = r.trivial;
        out["primal_value"] = to_json(r.primal_value);
        out["dual_value"] = to_json(r.dual_value);
        if (r.primal_witness)
            out["primal_witness"] = to_json(*r.primal_witness);
        if (r.dual_witness)
            out["dual_witness"] = to_json(*r.dual_witness);
        text << "primal: " << r.primal_value.to_string() << "\ndual:   " << r.dual_value.to_string() << '\n';
        if (r.trivial)
            text << "A dom f misses dom g: trivial regime\n";
    }
    else
        throw UsageError("unknown rule '" + a.rule + "' (expected sum, suminf, ncone, chain, infconv or frdual)");

    out["verdict"] = ok ? "pass" : "fail";
    if (common.timings)
        out["timings"] = {{"total_seconds", clock.seconds()}};
    if (common.json_out)
        emit_json(out);
    else
        std::cout << text.str() << (ok ? "equal" : "NOT EQUAL") << '\n';
    return ok ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs
{
    std::uint64_t seed = 1;
    std::size_t dim = 2;
    std::string profile = "overlap";
    std::string out;
};

int cmd_generate(const GenerateArgs& a)
{
    const Instance inst = generate_instance(a.seed, a.dim, parse_profile(a.profile));
    const std::string text = "# profile " + a.profile + ", seed " + std::to_string(a.seed) + "\n" + print_instance(inst);
    if (a.out.empty())
        std::cout << text;
    else
    {
        std::ofstream f(a.out);
        if (!f)
            throw UsageError("cannot write '" + a.out + "'");
        f << text;
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Joint facial subspaces of polyhedra and qualification-free convex calculus, in exact arithmetic"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", common.json_out, "Machine-readable JSON report");
        sub->add_flag("--timings", common.timings, "Include wall-clock timings (breaks byte-identical output)");
    };

    JfsArgs jfs_args;
    CLI::App* jfs_cmd = app.add_subcommand("jfs", "Compute T(C, D) by the oracle, iterative and pointwise routes");
    jfs_cmd->add_option("instance", jfs_args.file, "Instance file")->required();
    jfs_cmd->add_option("--sets", [&](const CLI::results_t& r) {
        jfs_args.c = r[0];
        jfs_args.d = r[1];
        return true;
    }, "Names of the two sets (default C D)")->expected(2);
    jfs_cmd->add_option("--within", jfs_args.s, "Set S inside C cap D for the iterative route (default C cap D)");
    jfs_cmd->add_option("--point", jfs_args.point, "Named point for the pointwise route (default: rint of C cap D)");
    jfs_cmd->add_flag("--at-vertex", jfs_args.at_vertex, "Run the pointwise route at a vertex of C cap D");
    add_common(jfs_cmd);

    CheckArgs check_args;
    CLI::App* check_cmd = app.add_subcommand("check", "Run property suites on an instance or a generated corpus");
    check_cmd->add_option("instance", check_args.file, "Instance file");
    check_cmd->add_option("--random", check_args.random, "Number of generated instances");
    check_cmd->add_option("--seed", check_args.seed, "First generator seed (instance i uses seed + i)");
    check_cmd->add_option("--dim", check_args.dim, "Dimension of generated instances (default: cycle 1..5)");
    check_cmd->add_option("--profile", check_args.profile, "Generator profile (default: cycle through all)");
    check_cmd->add_option("--suite", check_args.suite, "faces, jfs, calculus, duality or all")->capture_default_str();
    check_cmd->add_option("--threads", check_args.threads, "Worker threads (default: hardware concurrency)");
    add_common(check_cmd);

    CalculusArgs calc_args;
    CLI::App* calc_cmd = app.add_subcommand("calculus", "Verify one calculus identity on named objects");
    calc_cmd->add_option("instance", calc_args.file, "Instance file")->required();
    calc_cmd->add_option("--rule", calc_args.rule, "sum, suminf, ncone, chain, infconv or frdual")->required();
    calc_cmd->add_option("--f", calc_args.f, "First function")->capture_default_str();
    calc_cmd->add_option("--g", calc_args.g, "Second function (the outer function for chain)")->capture_default_str();
    calc_cmd->add_option("--sets", [&](const CLI::results_t& r) {
        calc_args.c = r[0];
        calc_args.d = r[1];
        return true;
    }, "Sets for ncone (default C D)")->expected(2);
    calc_cmd->add_option("--matrix", calc_args.matrix, "Matrix for chain and frdual")->capture_default_str();
    calc_cmd->add_option("--point", calc_args.point, "Point x")->capture_default_str();
    calc_cmd->add_option("--z", calc_args.z, "Dual point for infconv (default: --point)");
    add_common(calc_cmd);

    GenerateArgs gen_args;
    CLI::App* gen_cmd = app.add_subcommand("generate", "Print a generated instance");
    gen_cmd->add_option("--seed", gen_args.seed, "Seed")->capture_default_str();
    gen_cmd->add_option("--dim", gen_args.dim, "Dimension in [1, 6]")->capture_default_str();
    gen_cmd->add_option("--profile", gen_args.profile,
                        "overlap, face_touch, vertex_touch, nested, random_pair or random_funcs")
        ->capture_default_str();
    gen_cmd->add_option("--out", gen_args.out, "Write to this file instead of stdout");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return kExitUsage;
    }

    try
    {
        if (*jfs_cmd)
            return cmd_jfs(jfs_args, common);
        if (*check_cmd)
            return cmd_check(check_args, common);
        if (*calc_cmd)
            return cmd_calculus(calc_args, common);
        return cmd_generate(gen_args);
    }
    catch (const UsageError& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    catch (const UnknownName& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    catch (const PreconditionViolation& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    catch (const DimensionMismatch& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    catch (const std::invalid_argument& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    catch (const Error& e)
    {
        // Internal inconsistencies and the like: a failed check, not a usage problem.
        std::cerr << "check failure: " << e.what() << '\n';
        return kExitFail;
    }
}
