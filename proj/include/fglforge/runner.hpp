#ifndef FGLFORGE_RUNNER_HPP
#define FGLFORGE_RUNNER_HPP

#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "fglforge/json_io.hpp"

namespace fglforge {

struct Defaults {
    long prime = 2;
    int dim_bound = 10;
    int x_bound = 12;
    std::vector<long> reps; // empty: (1, ..., p-1)
};

Json to_json(const Defaults& d);

// Values given on the command line. They beat both the plan file and the
// built-in defaults, including parameters pinned on individual checks.
struct Overrides {
    std::optional<long> prime;
    std::optional<int> dim_bound;
    std::optional<int> x_bound;
    std::optional<std::vector<long>> reps;
};

struct CheckSpec {
    std::string name;
    std::string kind;
    Json params = Json::object();
};

struct VerifyPlan {
    Defaults defaults;
    Overrides overrides;
    std::vector<CheckSpec> checks;
    int jobs = 1;
    bool include_timings = false;
};

enum class CheckStatus { Pass, Fail, ConfigError };

struct CheckResult {
    std::string name;
    std::string kind;
    Json params; // fully resolved
    CheckStatus status = CheckStatus::Fail;
    std::string error;
    Json audit = Json::object();
    double seconds = 0;
};

struct RunResult {
    std::vector<CheckResult> results; // sorted by name
    int exit_code = 0;                // 0 pass, 1 check failure, 2 configuration error
    Json report;
};

// Contexts are the expensive part; checks share them across threads.
class ContextCache {
public:
    std::shared_ptr<const BPContext> bp(long p, int dim_bound);
    std::shared_ptr<const SteenrodContext> steenrod(long p, int dim_bound, const std::vector<long>& reps);

private:
    std::mutex mu_;
    std::map<std::pair<long, int>, std::shared_ptr<const BPContext>> bp_;
    std::map<std::tuple<long, int, std::vector<long>>, std::shared_ptr<const SteenrodContext>> st_;
};

// Plan JSON: {"defaults":{"prime":2,"dimBound":10,"xBound":12,"reps":[..]},
//             "jobs":K, "checks":[{"name":..,"kind":..,<params>}, ...]}
VerifyPlan plan_from_json(const Json& j);
Json to_json(const VerifyPlan& plan);

// The acceptance suite behind `verify all`.
std::vector<CheckSpec> default_suite();

// Names of the supported check kinds.
std::vector<std::string> check_kinds();

CheckResult run_check(const CheckSpec& spec, const Defaults& defaults, const Overrides& overrides,
                      ContextCache& cache);

RunResult run_plan(const VerifyPlan& plan);

// Configuration problems (bad prime, short bounds, violated preconditions,
// malformed parameters) versus genuine failures of a computation.
CheckStatus classify_exception(std::exception_ptr e, std::string& message);

// 2 if any configuration error, else 1 if any failure, else 0.
int exit_code_for(const std::vector<CheckResult>& results);

// --jobs, else FGLFORGE_JOBS, else 1. Throws ConfigError on junk.
int resolve_jobs(std::optional<int> flag);

std::string to_string(CheckStatus s);

} // namespace fglforge

#endif
