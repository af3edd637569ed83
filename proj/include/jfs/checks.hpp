#pragma once

#include <jfs/instance.hpp>

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace jfs {

enum class Verdict { Pass, Fail, Skipped };
std::string verdict_name(Verdict v);

struct CheckResult
{
    std::string name;
    Verdict verdict = Verdict::Skipped;
    bool mandatory = true;
    nlohmann::json details = nlohmann::json::object();
    double seconds = 0;  ///< wall clock; reported only on request
};

enum class Suite { Faces, Jfs, Calculus, Duality, All };
/// Throws std::invalid_argument on an unknown name.
Suite parse_suite(const std::string& name);

struct CheckOptions
{
    std::uint64_t seed = 0;
    std::size_t infconv_samples = 20;
    std::size_t face_dim_guard = 4;   ///< face-lattice checks skip sets of higher dimension
    std::size_t face_pair_budget = 24;  ///< face pairs examined per set for chains and induction
};

struct InstanceReport
{
    std::string instance_id;
    std::vector<CheckResult> checks;
    nlohmann::json traces = nlohmann::json::object();

    /// No mandatory check failed.
    bool passed() const;
    const CheckResult* find(const std::string& name) const;
};

/**
 * Runs a property suite on an instance that names sets C and D and, for the
 * calculus and duality suites, functions f and g and matrix A (g is composed
 * with A). Checks whose inputs are missing are skipped. Every check catches
 * library errors and reports them as failures with the message attached.
 */
InstanceReport run_checks(const Instance& inst, const std::string& id, Suite suite, const CheckOptions& opts);

struct CorpusEntry
{
    std::string id;
    Instance instance;
};

/// run_checks over every entry on up to `threads` workers (0 = hardware concurrency); results keep entry order.
std::vector<InstanceReport> run_corpus(const std::vector<CorpusEntry>& corpus, Suite suite, const CheckOptions& opts,
                                       unsigned threads = 0);

nlohmann::json to_json(const CheckResult& c, bool timings = false);
nlohmann::json to_json(const InstanceReport& r, bool timings = false);

}  // namespace jfs
