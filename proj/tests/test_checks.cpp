#include <doctest.h>

#include <jfs/checks.hpp>
#include <jfs/generator.hpp>
#include <jfs/instance.hpp>

#include <fstream>
#include <sstream>

using namespace jfs;

namespace {

Instance load(const std::string& name)
{
    std::ifstream in(std::string(JFS_TEST_DATA) + "/" + name);
    REQUIRE(in);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

std::size_t count(const InstanceReport& r, Verdict v)
{
    std::size_t k = 0;
    for (const CheckResult& c : r.checks)
        k += c.verdict == v;
    return k;
}

}  // namespace

TEST_CASE("half-line instance passes every suite")
{
    const InstanceReport r = run_checks(load("half_line.txt"), "half_line", Suite::All, {});
    for (const CheckResult& c : r.checks)
    {
        CAPTURE(c.name);
        CHECK(c.verdict != Verdict::Fail);
    }
    CHECK(r.passed());
    CHECK(count(r, Verdict::Pass) > 20);
    REQUIRE(r.find("jfs.route_agreement"));
    CHECK(r.traces.at("iterative").at("ell") == 1);
}

TEST_CASE("edge-touching boxes")
{
    const InstanceReport r = run_checks(load("boxes.txt"), "boxes", Suite::Jfs, {});
    CHECK(r.passed());
    // no functions, so the calculus suite has nothing to run
    const InstanceReport c = run_checks(load("boxes.txt"), "boxes", Suite::Calculus, {});
    CHECK(count(c, Verdict::Pass) == 0);
    CHECK(c.passed());
}

TEST_CASE("a failed mandatory check fails the report, an informational one does not")
{
    InstanceReport r;
    r.checks.push_back({"a", Verdict::Pass, true});
    r.checks.push_back({"b", Verdict::Fail, false});
    CHECK(r.passed());
    r.checks.push_back({"c", Verdict::Fail, true});
    CHECK_FALSE(r.passed());
    CHECK(r.find("c") != nullptr);
    CHECK(r.find("d") == nullptr);
}

TEST_CASE("disjoint sets are an outcome, not an error")
{
    const Instance inst = parse_instance("dim 1\nset C\nineq 1 <= 0\nend\nset D\nineq -1 <= -1\nend\n");
    const InstanceReport r = run_checks(inst, "apart", Suite::All, {});
    CHECK(r.passed());
    REQUIRE(r.find("jfs.disjoint_outcome"));
    CHECK(r.find("jfs.disjoint_outcome")->verdict == Verdict::Pass);
    CHECK(r.traces.at("outcome") == "disjoint");
}

TEST_CASE("reports are identical across runs and thread counts")
{
    std::vector<CorpusEntry> corpus;
    for (Profile p : all_profiles())
        corpus.push_back({profile_name(p), generate_instance(3, 2, p)});
    const auto one = run_corpus(corpus, Suite::All, {}, 1);
    const auto again = run_corpus(corpus, Suite::All, {}, 1);
    const auto three = run_corpus(corpus, Suite::All, {}, 3);
    REQUIRE(one.size() == corpus.size());
    for (std::size_t i = 0; i < one.size(); ++i)
    {
        CAPTURE(one[i].instance_id);
        const std::string text = to_json(one[i]).dump();
        CHECK(text == to_json(again[i]).dump());
        CHECK(text == to_json(three[i]).dump());
        CHECK(one[i].instance_id == corpus[i].id);
        CHECK(one[i].passed());
    }
}

TEST_CASE("timings only appear on request")
{
    const InstanceReport r = run_checks(load("boxes.txt"), "boxes", Suite::Jfs, {});
    REQUIRE(!r.checks.empty());
    CHECK_FALSE(to_json(r.checks[0]).contains("seconds"));
    CHECK(to_json(r.checks[0], true).contains("seconds"));
}

TEST_CASE("suite names")
{
    CHECK(parse_suite("faces") == Suite::Faces);
    CHECK(parse_suite("all") == Suite::All);
    CHECK_THROWS_AS(parse_suite("everything"), std::invalid_argument);
}
