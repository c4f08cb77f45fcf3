#include "fglforge/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <set>
#include <thread>

#include "fglforge/samples.hpp"

namespace fglforge {

std::string to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass:
        return "pass";
    case CheckStatus::Fail:
        return "fail";
    case CheckStatus::ConfigError:
        return "config-error";
    }
    return "?";
}

Json to_json(const Defaults& d)
{
    return {{"prime", d.prime},
            {"dimBound", d.dim_bound},
            {"xBound", d.x_bound},
            {"reps", d.reps.empty() ? Json(nullptr) : Json(d.reps)}};
}

std::shared_ptr<const BPContext> ContextCache::bp(long p, int dim_bound)
{
    std::lock_guard<std::mutex> lock(mu_);
    auto& slot = bp_[{p, dim_bound}];
    if (!slot)
        slot = std::make_shared<const BPContext>(p, dim_bound);
    return slot;
}

std::shared_ptr<const SteenrodContext> ContextCache::steenrod(long p, int dim_bound, const std::vector<long>& reps)
{
    auto ctx = bp(p, dim_bound);
    std::lock_guard<std::mutex> lock(mu_);
    auto& slot = st_[{p, dim_bound, reps}];
    if (!slot)
        slot = std::make_shared<const SteenrodContext>(ctx, reps);
    return slot;
}

VerifyPlan plan_from_json(const Json& j)
{
    try {
        VerifyPlan plan;
        if (j.contains("defaults")) {
            const Json& d = j.at("defaults");
            plan.defaults.prime = d.value("prime", plan.defaults.prime);
            plan.defaults.dim_bound = d.value("dimBound", plan.defaults.dim_bound);
            plan.defaults.x_bound = d.value("xBound", plan.defaults.x_bound);
            if (d.contains("reps") && !d.at("reps").is_null())
                plan.defaults.reps = d.at("reps").get<std::vector<long>>();
        }
        plan.jobs = j.value("jobs", 1);
        plan.include_timings = j.value("timings", false);
        if (j.contains("checks"))
            for (const auto& c : j.at("checks")) {
                CheckSpec spec;
                spec.kind = c.at("kind").get<std::string>();
                spec.name = c.value("name", std::string());
                for (const auto& [k, v] : c.items())
                    if (k != "kind" && k != "name")
                        spec.params[k] = v;
                plan.checks.push_back(std::move(spec));
            }
        return plan;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed plan: ") + e.what());
    }
}

Json to_json(const VerifyPlan& plan)
{
    Json checks = Json::array();
    for (const auto& c : plan.checks) {
        Json o = {{"name", c.name}, {"kind", c.kind}};
        for (const auto& [k, v] : c.params.items())
            o[k] = v;
        checks.push_back(o);
    }
    return {{"defaults", to_json(plan.defaults)}, {"jobs", plan.jobs}, {"timings", plan.include_timings},
            {"checks", checks}};
}

std::vector<CheckSpec> default_suite()
{
    std::vector<CheckSpec> s;
    auto add = [&](std::string name, std::string kind, Json params) {
        s.push_back({std::move(name), std::move(kind), std::move(params)});
    };
    add("c01-fgl-axioms", "fgl-axioms", {{"xBound", 8}, {"dimBound", 8}});
    add("c02-hurewicz-integrality", "hurewicz-integrality", {{"dimBound", 12}});
    add("c03-p-series-p2", "p-series-congruence", {{"prime", 2}, {"dimBound", 12}});
    add("c03-p-series-p3", "p-series-congruence", {{"prime", 3}, {"dimBound", 10}});
    add("c04-nu-p2", "nu-criterion", {{"prime", 2}, {"dimBound", 7}});
    add("c04-nu-p3", "nu-criterion", {{"prime", 3}, {"dimBound", 8}});
    add("c05-st-products-p2-1", "prop31", {{"prime", 2}, {"dimBound", 10}, {"monomial", {1}}});
    add("c05-st-products-p2-2", "prop31", {{"prime", 2}, {"dimBound", 10}, {"monomial", {2}}});
    add("c05-st-products-p2-1-1", "prop31", {{"prime", 2}, {"dimBound", 10}, {"monomial", {1, 1}}});
    add("c05-st-products-p3-1", "prop31", {{"prime", 3}, {"dimBound", 10}, {"monomial", {1}}});
    add("c06-st-identity-p", "cor32", {{"prime", 2}, {"dimBound", 10}, {"element", "2"}, {"level", 1}});
    add("c06-st-identity-v1", "cor32", {{"prime", 2}, {"dimBound", 10}, {"element", "v1"}, {"level", 1}});
    add("c06-st-identity-v1^2", "cor32", {{"prime", 2}, {"dimBound", 10}, {"element", "v1^2"}, {"level", 2}});
    add("c06-st-identity-2v1", "cor32", {{"prime", 2}, {"dimBound", 10}, {"element", "2*v1"}, {"level", 2}});
    add("c07-phi-filtration-p2-m1", "prop33", {{"prime", 2}, {"dimBound", 10}, {"level", 1}, {"samples", 12}, {"seed", 7}});
    add("c07-phi-filtration-p2-m2", "prop33", {{"prime", 2}, {"dimBound", 10}, {"level", 2}, {"samples", 12}, {"seed", 8}});
    add("c07-phi-filtration-p3-m1", "prop33", {{"prime", 3}, {"dimBound", 12}, {"level", 1}, {"samples", 12}, {"seed", 9}});
    add("c08-phi-additivity", "phi-additivity", {{"prime", 2}, {"dimBound", 10}, {"pairs", 20}, {"seed", 11}});
    add("c09-twisted-log", "twisted-log", {{"prime", 2}, {"dimBound", 10}, {"xBound", 6}});
    for (int n = 3; n <= 8; ++n)
        add("c10-koszul-n" + std::to_string(n), "koszul", {{"n", n}});
    add("c11-descent-rost-n3", "descent", {{"prime", 2}, {"dimBound", 10}, {"n", 3}});
    add("x-coset-independence-p3", "coset-independence",
        {{"prime", 3}, {"dimBound", 10}, {"reps1", {1, 2}}, {"reps2", {1, -1}}, {"element", "v1"}});
    return s;
}

namespace {

struct Resolved {
    long p;
    int D;
    int xb;
    std::vector<long> reps;
};

Resolved resolve(Json& params, const Defaults& d, const Overrides& o)
{
    Resolved r;
    r.p = o.prime.value_or(params.value("prime", d.prime));
    r.D = o.dim_bound.value_or(params.value("dimBound", d.dim_bound));
    r.xb = o.x_bound.value_or(params.value("xBound", d.x_bound));
    if (o.reps)
        r.reps = *o.reps;
    else if (params.contains("reps"))
        r.reps = params.at("reps").get<std::vector<long>>();
    else
        r.reps = d.reps;
    if (r.reps.empty() && is_prime(r.p))
        r.reps = default_coset_reps(r.p);
    return r;
}

// Checks that do not use a parameter must not report it.
void record(Json& params, const Resolved& r, bool prime, bool dim, bool xb, bool reps)
{
    if (prime)
        params["prime"] = r.p;
    if (dim)
        params["dimBound"] = r.D;
    if (xb)
        params["xBound"] = r.xb;
    if (reps)
        params["reps"] = r.reps;
}

long binomial(int n, int k)
{
    long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

using Runner = std::function<bool(Json& params, const Defaults&, const Overrides&, ContextCache&, Json& audit)>;

bool check_fgl_axioms(Json& params, const Defaults& d, const Overrides& o, ContextCache&, Json& audit)
{
    const Resolved r = resolve(params, d, o);
    record(params, r, false, true, true, false);
    const FormalGroupLaw law = universal_fgl(r.xb, r.D);
    const FglAxiomReport rep = fglforge::check_fgl_axioms(law, true);
    audit = to_json(rep);
    return rep.pass();
}

bool check_integrality(Json& params, const Defaults& d, const Overrides& o, ContextCache&, Json& audit)
{
    const Resolved r = resolve(params, d, o);
    record(params, r, false, true, false, false);
    bool ok = true;
    int checked = 0;
    Json bad = Json::array();
    try {
        const FormalGroupLaw law = universal_fgl(r.D + 1, r.D);
        checked = static_cast<int>(law.F.coeffs().size());
    } catch (const LocalityFailure& e) {
        ok = false;
        bad.push_back(e.what());
    }
    const Series log = universal_log(r.D + 1, r.D);
    Json classes = Json::object();
    for (int n = 1; n <= r.D; ++n) {
        const GradedPoly c = projective_space_class(n, log);
        classes[std::to_string(n)] = c.to_string();
        if (!c.is_integral()) {
            ok = false;
            bad.push_back("[P^" + std::to_string(n) + "]");
        }
    }
    audit = {{"lawCoefficients", checked}, {"projectiveSpaces", classes}, {"nonIntegral", bad}};
    return ok;
}

bool check_p_series_congruence(Json& params, const Defaults& d, const Overrides& o, ContextCache& cache, Json& audit)
{
    const Resolved r = resolve(params, d, o);
    record(params, r, true, true, false, false);
    const auto ctx = cache.bp(r.p, r.D);
    TLaurent diff = p_series(*ctx);
    long deg = 1;
    for (int l = 0; l <= ctx->max_generator(); ++l, deg *= r.p)
        diff -= TLaurent::monomial(ctx->v(l), static_cast<int>(deg - 1));
    const bool ok = ideal_membership(diff, 2);
    audit = {{"generators", ctx->max_generator()}, {"difference", to_json(diff)}};
    return ok;
}

bool check_nu(Json& params, const Defaults& d, const Overrides& o, ContextCache& cache, Json& audit)
{
    const Resolved r = resolve(params, d, o);
    record(params, r, true, true, false, false);
    const auto ctx = cache.bp(r.p, r.D);
    if (ctx->max_generator() < 1)
        throw TruncationInsufficient("no Hazewinkel generator within dimension bound " + std::to_string(r.D));
    bool ok = true;
    Json per = Json::object();
    for (int k = 1; k <= ctx->max_generator(); ++k) {
        const NuElementReport rep = nu_element_report(*ctx, k);
        per[std::to_string(k)] = {{"pass", rep.pass()},
                                  {"allDivisibleByP", rep.all_divisible_by_p},
                                  {"additiveNumber", to_string(rep.additive_number)},
                                  {"integral", rep.integral},
                                  {"inB", ctx->generators()[static_cast<std::size_t>(k - 1)].in_b.to_string()}};
        ok = ok && rep.pass();
    }
    audit = {{"generators", per}};
    return ok;
}

bool check_prop31(Json& params, const Defaults& d, const Overrides& o, ContextCache& cache, Json& audit)
{
    const Resolved r = resolve(params, d, o);
    record(params, r, true, true, false, true);
    const auto mono = params.at("monomial").get<std::vector<int>>();
    const auto s = cache.steenrod(r.p, r.D, r.reps);
    const CongruenceReport rep = verify_prop_stp(*s, mono);
    audit = to_json(rep);
    return rep.pass;
}

bool check_cor32(Json& params, const Defaults& d, const Overrides& o, ContextCache& cache, Json& audit)
{
    const Resolved r = resolve(params, d, o);
    record(params, r, true, true, false, true);
    const auto s = cache.steenrod(r.p, r.D, r.reps);
    const GradedPoly x = parse_element(params.at("element").get<std::string>(), s->bp().v_alphabet(), r.D);
    const CongruenceReport rep = verify_cor_stid(*s, x, params.at("level").get<int>());
    audit = to_json(rep);
    return rep.pass;
}

bool check_prop33(Json& params, const Defaults& d, const Overrides& o, ContextCache& cache, Json& audit)
{
    const Resolved r = resolve(params, d, o);
    record(params, r, true, true, false, true);
    const int m = params.at("level").get<int>();
    const auto s = cache.steenrod(r.p, r.D, r.reps);
    std::vector<GradedPoly> samples;
    if (params.contains("elements")) {
        for (const auto& e : params.at("elements"))
            samples.push_back(parse_element(e.get<std::string>(), s->bp().v_alphabet(), r.D));
    } else {
        const int count = params.value("samples", 10);
        const auto seed = params.value("seed", std::uint64_t{1});
        params["samples"] = count;
        params["seed"] = seed;
        samples = ideal_power_samples(s->bp(), m + 1, count, seed, r.D / static_cast<int>(r.p));
    }
    Json per = Json::array();
    bool ok = true;
    for (const auto& x : samples) {
        Json row = {{"element", x.to_string()}};
        try {
            const SymImReport rep = verify_prop_symim(*s, {x}, m);
            row["pass"] = rep.pass;
            int level = kInfiniteValuation;
            for (const auto& [k, c] : rep.samples.front().phi.value.coeffs())
                level = std::min(level, ideal_filtration(c));
            row["phiFiltration"] = level == kInfiniteValuation ? Json(nullptr) : Json(level);
            ok = ok && rep.pass;
        } catch (const DivisibilityFailure& e) {
            row["pass"] = false;
            row["divisibilityFailure"] = e.what();
            ok = false;
        }
        per.push_back(row);
    }
    audit = {{"samples", per}};
    return ok;
}

bool check_phi_additivity(Json& params, const Defaults& d, const Overrides& o, ContextCache& cache, Json& audit)
{
    const Resolved r = resolve(params, d, o);
    record(params, r, true, true, false, true);
    const auto s = cache.steenrod(r.p, r.D, r.reps);
    const int count = params.value("pairs", 20);
    const auto seed = params.value("seed", std::uint64_t{1});
    params["pairs"] = count;
    params["seed"] = seed;
    const auto pairs = homogeneous_pairs(s->bp(), count, seed, r.D / static_cast<int>(r.p));
    Json per = Json::array();
    bool ok = true;
    for (const auto& [x, y] : pairs) {
        const TLaurent defect =
            symmetric_phi(*s, x + y).value - symmetric_phi(*s, x).value - symmetric_phi(*s, y).value;
        bool good = true;
        for (const auto& [k, c] : defect.coeffs())
            good = good && k == 0;
        ok = ok && good;
        per.push_back({{"x", x.to_string()}, {"y", y.to_string()}, {"pass", good},
                       {"degreeZeroDefect", defect.coefficient(0).to_string()}});
    }
    audit = {{"pairs", per}};
    return ok;
}

bool check_twisted_log(Json& params, const Defaults& d, const Overrides& o, ContextCache& cache, Json& audit)
{
    const Resolved r = resolve(params, d, o);
    record(params, r, true, true, true, true);
    const auto s = cache.steenrod(r.p, r.D, r.reps);
    const TwistedLogReport rep = verify_twisted_log(*s, r.xb);
    Json coeffs = Json::object();
    for (int n = 1; n <= r.xb; ++n)
        coeffs[std::to_string(n)] = to_json(rep.via_composition.coefficient(n));
    audit = {{"pass", rep.pass}, {"twistedLog", coeffs}};
    return rep.pass;
}

bool check_coset(Json& params, const Defaults& d, const Overrides& o, ContextCache& cache, Json& audit)
{
    const Resolved r = resolve(params, d, o);
    record(params, r, true, true, false, false);
    const auto r1 = params.at("reps1").get<std::vector<long>>();
    const auto r2 = params.at("reps2").get<std::vector<long>>();
    const auto a = cache.steenrod(r.p, r.D, r1);
    const auto b = cache.steenrod(r.p, r.D, r2);
    const GradedPoly x = parse_element(params.at("element").get<std::string>(), a->bp().v_alphabet(), r.D);
    const CongruenceReport rep = verify_coset_independence(*a, *b, x);
    audit = to_json(rep);
    return rep.pass;
}

bool check_koszul(Json& params, const Defaults&, const Overrides& o, ContextCache&, Json& audit)
{
    const int n = params.at("n").get<int>();
    const int D = o.dim_bound.value_or(params.value("dimBound", std::max(10, (1 << (n - 2)) - 1)));
    const int strata = params.value("strataBound", D);
    params["dimBound"] = D;
    params["strataBound"] = strata;
    const KoszulComplex K = build_koszul(n, D);
    const bool d2 = koszul_d_squared_zero(K);
    const ExactnessReport ex = koszul_exactness(K, strata);
    const TorReport tor = tor_with_residue(K);
    const SyzygyReport syz = syzygy_report(n);
    bool tor_ok = tor.top_nonzero == n - 2 && tor.ranks.at(n - 2) == 1;
    Json ranks = Json::object();
    Json term_ranks = Json::object();
    for (const auto& [j, rk] : tor.ranks) {
        ranks[std::to_string(j)] = rk;
        term_ranks[std::to_string(j)] = K.rank(j);
        tor_ok = tor_ok && rk == binomial(n - 1, j + 1) && K.rank(j) == binomial(n - 1, j + 1);
    }
    Json failed = Json::array();
    for (const auto& st : ex.strata)
        if (!st.over_zp)
            failed.push_back({{"dimension", st.dimension}, {"overQ", st.over_q}, {"overZ2", st.over_zp}});
    audit = {{"dSquaredZero", d2},
             {"exact", ex.pass},
             {"strataChecked", static_cast<int>(ex.strata.size())},
             {"failedStrata", failed},
             {"termRanks", term_ranks},
             {"torRanks", ranks},
             {"torDifferentialsVanish", tor.differentials_vanish},
             {"torTopIndex", tor.top_nonzero},
             {"syzygy", to_json(syz)}};
    return d2 && ex.pass && tor_ok && tor.differentials_vanish && syz.all_in_range;
}

bool check_descent(Json& params, const Defaults& d, const Overrides& o, ContextCache& cache, Json& audit)
{
    const Resolved r = resolve(params, d, o);
    record(params, r, true, true, false, true);
    const int n = params.value("n", 3);
    params["n"] = n;
    if (r.p != 2)
        throw ConfigError("descent on the Rost model needs p = 2");
    const auto s = cache.steenrod(r.p, r.D, r.reps);
    const RelationPresentation pres = rost_presentation(n, r.D);
    const int codim = (1 << (n - 1)) - 1;
    std::vector<FormalRelation> rels;
    const Alphabet a = s->bp().v_alphabet();
    if (params.contains("relations")) {
        for (const auto& j : params.at("relations"))
            rels.push_back(formal_relation_from_json(j, a, r.D));
    } else {
        // coefficients of dimension >= codim inside I(2, n-2)
        const std::vector<std::pair<std::string, int>> defaults{
            {"2*v1^3", 3}, {"v1^3", 3}, {"2*v2", 1}, {"v1*v2", 2}, {"4*v1^3", 4}, {"v1^4", 4}, {"v1^3 + 2*v2", 1}};
        for (const auto& [text, m] : defaults) {
            const GradedPoly u = parse_poly(text, a, r.D);
            if (u.dimension().value_or(0) < codim)
                continue;
            rels.emplace_back(std::vector<Cycle>{{"e0", codim}}, std::vector<GradedPoly>{u}, m);
        }
        if (rels.empty())
            throw ConfigError("no default relation fits n = " + std::to_string(n) + "; pass relations explicitly");
    }
    bool ok = true;
    Json per = Json::array();
    for (const auto& rel : rels) {
        const DescentReport rep = descent_step(*s, rel, pres);
        ok = ok && rep.pass();
        Json phi = Json::array();
        for (const auto& t : rep.phi)
            phi.push_back(to_json(t));
        per.push_back({{"alpha", to_json(rel)},
                       {"alpha1", to_json(rep.alpha1)},
                       {"beta1", to_json(rep.beta1)},
                       {"supportPreserved", rep.support_preserved},
                       {"betaInLevel", rep.beta_in_level},
                       {"congruence", rep.congruence},
                       {"stComponentMatches", rep.st_component_matches},
                       {"pass", rep.pass()}});
    }
    audit = {{"relations", per}};
    return ok;
}

const std::map<std::string, Runner>& runners()
{
    static const std::map<std::string, Runner> table{
        {"fgl-axioms", check_fgl_axioms},
        {"hurewicz-integrality", check_integrality},
        {"p-series-congruence", check_p_series_congruence},
        {"nu-criterion", check_nu},
        {"prop31", check_prop31},
        {"cor32", check_cor32},
        {"prop33", check_prop33},
        {"phi-additivity", check_phi_additivity},
        {"twisted-log", check_twisted_log},
        {"coset-independence", check_coset},
        {"koszul", check_koszul},
        {"descent", check_descent},
    };
    return table;
}

} // namespace

std::vector<std::string> check_kinds()
{
    std::vector<std::string> out;
    for (const auto& [k, v] : runners())
        out.push_back(k);
    return out;
}

CheckResult run_check(const CheckSpec& spec, const Defaults& defaults, const Overrides& overrides,
                      ContextCache& cache)
{
    CheckResult res;
    res.name = spec.name;
    res.kind = spec.kind;
    res.params = spec.params;
    const auto start = std::chrono::steady_clock::now();
    try {
        auto it = runners().find(spec.kind);
        if (it == runners().end())
            throw ConfigError("unknown check kind: " + spec.kind);
        const bool ok = it->second(res.params, defaults, overrides, cache, res.audit);
        res.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    } catch (...) {
        res.status = classify_exception(std::current_exception(), res.error);
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

CheckStatus classify_exception(std::exception_ptr e, std::string& message)
{
    try {
        std::rethrow_exception(e);
    } catch (const ConfigError& e) {
        message = e.what();
        return CheckStatus::ConfigError;
    } catch (const PreconditionError& e) {
        message = std::string("precondition: ") + e.what();
        return CheckStatus::ConfigError;
    } catch (const AlphabetMismatch& e) {
        message = std::string("alphabet mismatch: ") + e.what();
        return CheckStatus::ConfigError;
    } catch (const nlohmann::json::exception& e) {
        message = std::string("bad parameter: ") + e.what();
        return CheckStatus::ConfigError;
    } catch (const std::exception& e) {
        // DivisibilityFailure, LocalityFailure, OracleInconsistency, WindowOverflow, ...
        message = e.what();
        return CheckStatus::Fail;
    } catch (...) {
        message = "unknown exception";
        return CheckStatus::Fail;
    }
}

int exit_code_for(const std::vector<CheckResult>& results)
{
    bool failed = false;
    for (const auto& r : results) {
        if (r.status == CheckStatus::ConfigError)
            return 2;
        failed = failed || r.status == CheckStatus::Fail;
    }
    return failed ? 1 : 0;
}

RunResult run_plan(const VerifyPlan& plan)
{
    std::vector<CheckSpec> checks = plan.checks;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        if (checks[i].name.empty())
            checks[i].name = checks[i].kind + "#" + std::to_string(i);
        if (!seen.insert(checks[i].name).second)
            throw ConfigError("duplicate check name: " + checks[i].name);
    }

    RunResult out;
    out.results.resize(checks.size());
    ContextCache cache;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < checks.size(); i = next++)
            out.results[i] = run_check(checks[i], plan.defaults, plan.overrides, cache);
    };
    const int jobs = std::max(1, std::min<int>(plan.jobs, static_cast<int>(checks.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();
    std::sort(out.results.begin(), out.results.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });

    int passed = 0;
    int failed = 0;
    int config = 0;
    Json list = Json::array();
    for (const auto& r : out.results) {
        passed += r.status == CheckStatus::Pass;
        failed += r.status == CheckStatus::Fail;
        config += r.status == CheckStatus::ConfigError;
        Json j = {{"name", r.name}, {"kind", r.kind}, {"params", r.params}, {"status", to_string(r.status)},
                  {"pass", r.status == CheckStatus::Pass}};
        if (!r.error.empty())
            j["error"] = r.error;
        if (plan.include_timings)
            j["seconds"] = r.seconds;
        j["audit"] = r.audit;
        list.push_back(std::move(j));
    }
    Json overrides = Json::object();
    if (plan.overrides.prime)
        overrides["prime"] = *plan.overrides.prime;
    if (plan.overrides.dim_bound)
        overrides["dimBound"] = *plan.overrides.dim_bound;
    if (plan.overrides.x_bound)
        overrides["xBound"] = *plan.overrides.x_bound;
    if (plan.overrides.reps)
        overrides["reps"] = *plan.overrides.reps;
    out.exit_code = exit_code_for(out.results);
    out.report = {{"tool", "fglforge"},
                  {"defaults", to_json(plan.defaults)},
                  {"overrides", overrides},
                  {"pass", out.exit_code == 0},
                  {"summary", {{"total", static_cast<int>(out.results.size())},
                               {"passed", passed},
                               {"failed", failed},
                               {"configErrors", config}}},
                  {"checks", list}};
    return out;
}

int resolve_jobs(std::optional<int> flag)
{
    if (flag) {
        if (*flag < 1)
            throw ConfigError("--jobs must be >= 1");
        return *flag;
    }
    if (const char* env = std::getenv("FGLFORGE_JOBS")) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(env, &used);
            if (used != std::string(env).size() || v < 1)
                throw std::invalid_argument(env);
            return v;
        } catch (const std::exception&) {
            throw ConfigError(std::string("FGLFORGE_JOBS is not a positive integer: ") + env);
        }
    }
    return 1;
}

} // namespace fglforge
