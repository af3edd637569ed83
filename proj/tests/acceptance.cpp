// Acceptance run: one line per criterion, exit status 1 if a mandatory one fails.
#include <jfs/calculus.hpp>
#include <jfs/checks.hpp>
#include <jfs/facial.hpp>
#include <jfs/generator.hpp>
#include <jfs/instance.hpp>
#include <jfs/vregion.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace jfs;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Tally
{
    std::size_t ran = 0;
    std::size_t failed = 0;
    std::vector<std::string> failures;

    void add(const InstanceReport& r, const std::string& name)
    {
        const CheckResult* c = r.find(name);
        if (!c || c->verdict == Verdict::Skipped)
            return;
        ++ran;
        if (c->verdict == Verdict::Fail)
        {
            ++failed;
            if (failures.size() < 5)
                failures.push_back(r.instance_id + ":" + name);
        }
    }
    bool ok() const { return ran > 0 && failed == 0; }
    std::string summary() const
    {
        std::string s = std::to_string(ran - failed) + "/" + std::to_string(ran);
        for (const std::string& f : failures)
            s += " " + f;
        return s;
    }
};

std::vector<CorpusEntry> corpus(const std::vector<Profile>& profiles, std::size_t max_dim, std::uint64_t seeds,
                                std::uint64_t first_seed = 1)
{
    std::vector<CorpusEntry> out;
    for (std::uint64_t s = first_seed; s < first_seed + seeds; ++s)
        for (Profile p : profiles)
            for (std::size_t n = 1; n <= max_dim; ++n)
                out.push_back({profile_name(p) + "-d" + std::to_string(n) + "-s" + std::to_string(s),
                               generate_instance(s, n, p)});
    return out;
}

bool is_profile(const InstanceReport& r, Profile p)
{
    return r.instance_id.rfind(profile_name(p) + "-", 0) == 0;
}

int failures = 0;

void line(int id, const std::string& what, bool ok, const std::string& detail, bool informational = false)
{
    const char* tag = informational ? "INFO" : (ok ? "PASS" : "FAIL");
    if (!informational && !ok)
        ++failures;
    std::printf("criterion %d %s %s: %s\n", id, tag, what.c_str(), detail.c_str());
    std::fflush(stdout);
}

void half_line_instance()
{
    const auto t0 = Clock::now();
    const Instance inst = parse_instance(
        "dim 1\nset C\nineq -1 <= 0\nend\nset D\nineq 1 <= 0\nend\n"
        "func f\ndom C\nend\nfunc g\ndom D\nend\n");
    const JFS j = jfs_oracle(inst.set("C"), inst.set("D"));
    const SumRuleReport sr = sum_rule_check(inst.func("f"), inst.func("g"), zeros(1));
    const double secs = since(t0);
    const bool t_zero = j.T.is_zero();
    const bool whole_line = region_equal(sr.lhs, VRegion::whole(1)) && sr.equal;
    std::ostringstream os;
    os << "T_a={0} " << (t_zero ? "yes" : "no") << ", restricted sum rule gives R " << (whole_line ? "yes" : "no")
       << ", " << secs << " s";
    line(1, "half-line pair", t_zero && whole_line && secs < 1.0, os.str());
}

}  // namespace

int main()
{
    half_line_instance();

    // jfs corpus: every profile, dims 1..5
    const auto t0 = Clock::now();
    const std::vector<CorpusEntry> jc = corpus(all_profiles(), 5, 20);
    const std::vector<InstanceReport> jr = run_corpus(jc, Suite::Jfs, {});
    const double jfs_secs = since(t0);

    Tally routes, steps, charact, reveals, contain, rint, nonsep, recovery;
    double route_secs = 0;
    std::size_t intersecting = 0;
    std::map<std::size_t, std::size_t> ell_hist;
    std::size_t pw_points = 0, pw_bad = 0;
    std::ofstream disagreements("pointwise_disagreements.txt");
    for (std::size_t i = 0; i < jr.size(); ++i)
    {
        const InstanceReport& r = jr[i];
        routes.add(r, "jfs.disjoint_outcome");
        routes.add(r, "jfs.route_agreement");
        if (const CheckResult* c = r.find("jfs.route_agreement"))
        {
            ++intersecting;
            route_secs += c->seconds;
        }
        if (const CheckResult* c = r.find("jfs.disjoint_outcome"))
            route_secs += c->seconds;
        steps.add(r, "jfs.step_bound");
        if (const CheckResult* c = r.find("jfs.step_bound"))
            ++ell_hist[c->details.at("ell").get<std::size_t>()];
        charact.add(r, "jfs.characterization");
        reveals.add(r, "jfs.reveals_faces");
        contain.add(r, "jfs.containment");
        rint.add(r, "jfs.rint_qualification");
        nonsep.add(r, "jfs.non_separation");
        if (is_profile(r, Profile::Overlap))
            recovery.add(r, "jfs.recovery");
        if (const CheckResult* c = r.find("jfs.pointwise_agreement"); c && c->verdict != Verdict::Skipped)
        {
            pw_points += c->details.at("points").get<std::size_t>();
            const auto& bad = c->details.at("disagreements");
            pw_bad += bad.size();
            if (!bad.empty())
                disagreements << "# " << r.instance_id << "\n# " << bad.dump() << "\n"
                              << print_instance(jc[i].instance) << "\n";
        }
    }

    {
        std::ostringstream os;
        os << routes.summary() << " agree on " << jr.size() << " instances (" << intersecting
           << " intersecting), routes " << route_secs << " s, whole suite " << jfs_secs << " s";
        line(2, "route agreement", routes.ok() && jr.size() >= 500 && route_secs < 120.0, os.str());
    }
    {
        std::ostringstream os;
        os << steps.summary() << ", ell distribution";
        for (const auto& [ell, count] : ell_hist)
            os << " " << ell << ":" << count;
        // The first common cone is already the normal cone of C - D at 0, so
        // a polyhedral pair never needs more than one step.
        os << " (at most 1 expected for polyhedra)";
        line(3, "step bound", steps.ok(), os.str());
    }
    line(4, "characterization and revealed faces", charact.ok() && reveals.ok() && contain.ok(),
         "characterization " + charact.summary() + ", reveals " + reveals.summary() + ", containment " +
             contain.summary());
    line(5, "qualification restored", rint.ok() && nonsep.ok(),
         "witness " + rint.summary() + ", no separating certificate " + nonsep.summary());

    // function corpus: every profile that builds intersecting or touching domains
    const std::vector<Profile> fprofiles{Profile::RandomFuncs, Profile::FaceTouch, Profile::VertexTouch,
                                         Profile::Overlap, Profile::Nested};
    const auto t1 = Clock::now();
    const std::vector<CorpusEntry> fc = corpus(fprofiles, 5, 12);
    const std::vector<InstanceReport> cr = run_corpus(fc, Suite::Calculus, {});
    const std::vector<InstanceReport> dr = run_corpus(fc, Suite::Duality, {});
    const double calc_secs = since(t1);
    Tally sum, sinf, ncone, infconv, chain, frdual, crecovery;
    for (const InstanceReport& r : cr)
    {
        sum.add(r, "calculus.sum_rule");
        sinf.add(r, "calculus.singular_sum_rule");
        ncone.add(r, "calculus.normal_cone");
        infconv.add(r, "calculus.infconv");
        chain.add(r, "calculus.chain_rule");
        if (is_profile(r, Profile::Overlap))
            crecovery.add(r, "calculus.recovery");
    }
    for (const InstanceReport& r : dr)
        frdual.add(r, "duality.fr_dual");
    {
        std::ostringstream os;
        os << fc.size() << " instances in " << calc_secs << " s; sum " << sum.summary() << ", singular "
           << sinf.summary() << ", normal cone " << ncone.summary() << ", infconv " << infconv.summary() << ", chain "
           << chain.summary() << ", dual " << frdual.summary();
        const bool ok = fc.size() >= 300 && sum.ok() && sinf.ok() && ncone.ok() && infconv.ok() && chain.ok() &&
                        frdual.ok();
        line(6, "calculus identities", ok, os.str());
    }
    line(7, "recovery on overlapping pairs", recovery.ok() && crecovery.ok(),
         "T = R^n " + recovery.summary() + ", restricted = classical " + crecovery.summary());

    // face-lattice sub-corpus: 50 instances of dimension at most 4
    std::vector<CorpusEntry> faces;
    const std::vector<Profile> all = all_profiles();
    for (std::size_t i = 0; i < 50; ++i)
    {
        const Profile p = all[i % all.size()];
        const std::size_t n = 1 + (i / all.size()) % 4;
        const std::uint64_t seed = 100 + i;
        faces.push_back({profile_name(p) + "-d" + std::to_string(n) + "-s" + std::to_string(seed),
                         generate_instance(seed, n, p)});
    }
    const auto t2 = Clock::now();
    const std::vector<InstanceReport> fr = run_corpus(faces, Suite::Faces, {});
    std::map<std::string, Tally> lemma;
    for (const InstanceReport& r : fr)
        for (const CheckResult& c : r.checks)
        {
            const std::string kind = c.name.substr(c.name.rfind('.') + 1);
            lemma[kind].add(r, c.name);
        }
    {
        std::ostringstream os;
        bool ok = lemma.size() >= 6;
        os << faces.size() << " instances in " << since(t2) << " s;";
        for (const auto& [kind, t] : lemma)
        {
            ok = ok && t.ok();
            os << " " << kind << " " << t.summary();
        }
        line(8, "face-lattice lemmas", ok, os.str());
    }

    {
        std::ostringstream os;
        os << (pw_points - pw_bad) << "/" << pw_points << " points agree";
        if (pw_bad)
            os << ", disagreeing instances written to pointwise_disagreements.txt";
        line(9, "pointwise agreement rate", true, os.str(), true);
    }
    return failures ? 1 : 0;
}
