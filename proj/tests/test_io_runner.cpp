#include "doctest.h"

#include <cstdlib>

#include "fglforge/runner.hpp"
#include "fglforge/samples.hpp"
#include "support.hpp"

using namespace fglforge;
using fglforge::testing::Gen;

TEST_CASE("parse_poly reads back to_string")
{
    const Alphabet v = Alphabet::v(2);
    const GradedPoly x = parse_poly("2*v1^3 - 3/2*v2 + 1", v, 10);
    GradedPoly expected = GradedPoly::constant(1, v, 10);
    expected.add_term(Monomial::generator(1, 3), 2);
    expected.add_term(Monomial::generator(2), make_rational(-3, 2));
    CHECK(x == expected);
    CHECK(parse_poly("v0*v1", v, 10) == GradedPoly::constant(2, v, 10) * GradedPoly::generator(1, v, 10));
    CHECK(parse_poly("-v1^2*v2", v, 10).to_string() == "-v1^2*v2");
    CHECK_THROWS_AS(parse_poly("b1", v, 10), ConfigError);
    CHECK_THROWS_AS(parse_poly("2**v1", v, 10), ConfigError);
    CHECK_THROWS_AS(parse_poly("", v, 10), ConfigError);

    Gen g(41);
    for (int i = 0; i < 200; ++i) {
        const Alphabet a = i % 3 == 0 ? Alphabet::b() : i % 3 == 1 ? Alphabet::m() : Alphabet::v(3);
        const GradedPoly p = g.poly(a, 8, 5, 12);
        CHECK(parse_poly(p.to_string(), a, 12) == p);
    }
}

TEST_CASE("JSON round trips")
{
    Gen g(5);
    for (int i = 0; i < 100; ++i) {
        const Alphabet a = i % 2 ? Alphabet::b() : Alphabet::v(2);
        const GradedPoly p = g.poly(a, 7, 6, 9);
        const GradedPoly q = poly_from_json(to_json(p));
        CHECK(q == p);
        CHECK(q.dim_bound() == p.dim_bound());
        CHECK(q.alphabet() == p.alphabet());
        // byte-level: emit(parse(emit x)) == emit x
        CHECK(to_json(q).dump() == to_json(p).dump());

        TLaurent t(p.zero_like(), -6, 3);
        for (int k = -6; k <= 3; k += 2)
            t.add_coefficient(k, g.poly(a, 5, 3, 9));
        const TLaurent u = tlaurent_from_json(to_json(t));
        CHECK(u == t);
        CHECK(u.low() == t.low());
        CHECK(u.high() == t.high());
    }

    const FormalGroupLaw law = universal_fgl(5, 4);
    const FormalGroupLaw back = fgl_from_json(to_json(law));
    CHECK(back.F == law.F);
    CHECK(back.kind == law.kind);
    CHECK(to_json(back).dump() == to_json(law).dump());

    const Series log = universal_log(6, 5);
    CHECK(series_from_json(to_json(log)) == log);

    for (int n = 3; n <= 6; ++n) {
        const SyzygyReport r = syzygy_report(n);
        CHECK(to_json(syzygy_report_from_json(to_json(r))).dump() == to_json(r).dump());
    }

    const FormalRelation rel({{"e0", 3}}, {parse_poly("2*v1^3", Alphabet::v(2), 10)}, 3);
    const FormalRelation rel2 = formal_relation_from_json(to_json(rel), Alphabet::v(2), 10);
    CHECK(to_json(rel2).dump() == to_json(rel).dump());
}

TEST_CASE("malformed JSON is a configuration error")
{
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"alphabet":"q","terms":[]})")), ConfigError);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"alphabet":"v","terms":[]})")), ConfigError); // no prime
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"alphabet":"b","terms":[{"coeff":"1/0","exps":{}}]})")),
                    ConfigError);
    CHECK_THROWS_AS(plan_from_json(Json::parse(R"({"checks":[{"name":"a"}]})")), ConfigError);
}

TEST_CASE("generated samples sit in the requested ideal power")
{
    for (long p : {2L, 3L}) {
        const BPContext ctx(p, 12);
        for (int level = 1; level <= 4; ++level) {
            const auto xs = ideal_power_samples(ctx, level, 15, 100 + level, 12 / static_cast<int>(p));
            CHECK(xs.size() == 15);
            for (const auto& x : xs) {
                CHECK_FALSE(x.is_zero());
                CHECK(x.is_homogeneous());
                CHECK(ideal_membership(x, level));
            }
        }
        const auto pairs = homogeneous_pairs(ctx, 20, 3, 12 / static_cast<int>(p));
        CHECK(pairs.size() == 20);
        for (const auto& [x, y] : pairs) {
            CHECK(x.dimension() == y.dimension());
            CHECK(x.is_integral());
            CHECK(y.is_integral());
        }
    }
    // same seed, same samples
    const BPContext ctx(2, 10);
    const auto a = ideal_power_samples(ctx, 2, 10, 9, 5);
    const auto b = ideal_power_samples(ctx, 2, 10, 9, 5);
    CHECK(a == b);
}

TEST_CASE("runner: exit codes")
{
    VerifyPlan empty;
    const RunResult r0 = run_plan(empty);
    CHECK(r0.exit_code == 0);
    CHECK(r0.results.empty());
    CHECK(r0.report["checks"].empty());

    VerifyPlan one;
    one.checks.push_back({"p31", "prop31", {{"prime", 2}, {"monomial", {1}}}});
    CHECK(run_plan(one).exit_code == 0);

    VerifyPlan tight;
    tight.checks.push_back({"tight", "prop31", {{"prime", 2}, {"dimBound", 2}, {"monomial", {1, 1}}}});
    const RunResult r2 = run_plan(tight);
    CHECK(r2.exit_code == 2);
    CHECK(r2.results[0].error.find("truncation insufficient") != std::string::npos);

    VerifyPlan bad_prime;
    bad_prime.checks.push_back({"np", "p-series-congruence", {{"prime", 6}}});
    CHECK(run_plan(bad_prime).exit_code == 2);

    VerifyPlan unknown;
    unknown.checks.push_back({"u", "no-such-check", Json::object()});
    CHECK(run_plan(unknown).exit_code == 2);

    // a false hypothesis is the caller's mistake: v1 is only in I^1
    VerifyPlan wrong_level;
    wrong_level.checks.push_back({"f", "cor32", {{"element", "v1"}, {"level", 2}}});
    const RunResult rw = run_plan(wrong_level);
    CHECK(rw.exit_code == 2);
    CHECK(rw.results[0].error.find("precondition") != std::string::npos);

    VerifyPlan dup;
    dup.checks.push_back({"same", "p-series-congruence", Json::object()});
    dup.checks.push_back({"same", "p-series-congruence", Json::object()});
    CHECK_THROWS_AS(run_plan(dup), ConfigError);
}

TEST_CASE("runner: failures versus configuration errors")
{
    auto status_of = [](auto&& thrower) {
        std::string msg;
        try {
            thrower();
        } catch (...) {
            return classify_exception(std::current_exception(), msg);
        }
        return CheckStatus::Pass;
    };
    CHECK(status_of([] { throw DivisibilityFailure("x"); }) == CheckStatus::Fail);
    CHECK(status_of([] { throw OracleInconsistency("x"); }) == CheckStatus::Fail);
    CHECK(status_of([] { throw LocalityFailure("x"); }) == CheckStatus::Fail);
    CHECK(status_of([] { throw WindowOverflow("x"); }) == CheckStatus::Fail);
    CHECK(status_of([] { throw TruncationInsufficient("x"); }) == CheckStatus::ConfigError);
    CHECK(status_of([] { throw PreconditionError("x"); }) == CheckStatus::ConfigError);
    CHECK(status_of([] { throw AlphabetMismatch("x"); }) == CheckStatus::ConfigError);
    CHECK(status_of([] { (void)Json::parse("{").at("a"); }) == CheckStatus::ConfigError);

    auto results = [](std::initializer_list<CheckStatus> ss) {
        std::vector<CheckResult> out;
        for (CheckStatus s : ss) {
            CheckResult r;
            r.status = s;
            out.push_back(r);
        }
        return out;
    };
    CHECK(exit_code_for({}) == 0);
    CHECK(exit_code_for(results({CheckStatus::Pass, CheckStatus::Pass})) == 0);
    CHECK(exit_code_for(results({CheckStatus::Pass, CheckStatus::Fail})) == 1);
    CHECK(exit_code_for(results({CheckStatus::Fail, CheckStatus::ConfigError})) == 2);
    CHECK(exit_code_for(results({CheckStatus::ConfigError, CheckStatus::Fail})) == 2);

    // a real failing computation: with only {v1^3} as relations the oracle
    // cannot account for every component of Phi(alpha)
    std::string msg;
    CheckStatus s = CheckStatus::Pass;
    try {
        auto ctx = std::make_shared<const BPContext>(2, 10);
        const SteenrodContext sctx(ctx);
        const Alphabet v = ctx->v_alphabet();
        const RelationPresentation narrow({{"e0", 3}}, {{parse_poly("v1^3", v, 10)}});
        const FormalRelation alpha({{"e0", 3}}, {parse_poly("v1^3", v, 10)}, 3);
        (void)descent_step(sctx, alpha, narrow);
    } catch (...) {
        s = classify_exception(std::current_exception(), msg);
    }
    CHECK(s == CheckStatus::Fail);
}

TEST_CASE("runner: precedence flags > plan > defaults")
{
    VerifyPlan plan;
    plan.defaults.dim_bound = 9;
    plan.checks.push_back({"a", "p-series-congruence", {{"prime", 3}}});
    plan.checks.push_back({"b", "p-series-congruence", Json::object()});
    RunResult r = run_plan(plan);
    CHECK(r.results[0].params["prime"] == 3);
    CHECK(r.results[0].params["dimBound"] == 9);
    CHECK(r.results[1].params["prime"] == 2);

    plan.overrides.prime = 5;
    plan.overrides.dim_bound = 8;
    r = run_plan(plan);
    CHECK(r.results[0].params["prime"] == 5);
    CHECK(r.results[1].params["dimBound"] == 8);
    CHECK(r.report["overrides"]["prime"] == 5);
    CHECK(r.report["defaults"]["dimBound"] == 9);
}

TEST_CASE("runner: plan JSON and deterministic parallel reports")
{
    VerifyPlan plan;
    plan.checks = {
        {"z-koszul", "koszul", {{"n", 5}}},
        {"a-pseries", "p-series-congruence", {{"prime", 3}}},
        {"m-prop33", "prop33", {{"level", 1}, {"samples", 4}, {"seed", 2}}},
        {"b-phi", "phi-additivity", {{"pairs", 5}}},
    };
    const VerifyPlan back = plan_from_json(to_json(plan));
    CHECK(to_json(back).dump() == to_json(plan).dump());

    plan.jobs = 1;
    const std::string serial = run_plan(plan).report.dump();
    plan.jobs = 4;
    const std::string parallel = run_plan(plan).report.dump();
    CHECK(serial == parallel);
    const Json report = Json::parse(serial);
    CHECK(report["checks"][0]["name"] == "a-pseries");
    CHECK(report["checks"][3]["name"] == "z-koszul");
    CHECK(report["pass"] == true);
    CHECK_FALSE(report["checks"][0].contains("seconds"));
}

TEST_CASE("resolve_jobs")
{
    CHECK(resolve_jobs(3) == 3);
    CHECK_THROWS_AS(resolve_jobs(0), ConfigError);
    ::setenv("FGLFORGE_JOBS", "5", 1);
    CHECK(resolve_jobs(std::nullopt) == 5);
    CHECK(resolve_jobs(2) == 2);
    ::setenv("FGLFORGE_JOBS", "5x", 1);
    CHECK_THROWS_AS(resolve_jobs(std::nullopt), ConfigError);
    ::unsetenv("FGLFORGE_JOBS");
    CHECK(resolve_jobs(std::nullopt) == 1);
}
