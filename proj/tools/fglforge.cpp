// Command-line front end. Exit status: 0 everything passed, 1 a check or a
// computation failed, 2 the configuration was rejected.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "fglforge/runner.hpp"

using namespace fglforge;

namespace {

struct Common {
    long prime = 2;
    int dim_bound = 10;
    int x_bound = 12;
    bool json = false;
};

std::vector<long> parse_list(const std::string& text)
{
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stol(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ConfigError("not an integer list: " + text);
        }
    }
    return out;
}

void emit(const Json& j, bool json, const std::string& text)
{
    if (json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

int emit_run(const RunResult& run, const std::string& out)
{
    const std::string body = run.report.dump(2) + "\n";
    if (out.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f)
            throw ConfigError("cannot write " + out);
        f << body;
        for (const auto& r : run.results)
            std::cout << (r.status == CheckStatus::Pass ? "PASS " : r.status == CheckStatus::Fail ? "FAIL " : "CONFIG ")
                      << r.name << "\n";
    }
    for (const auto& r : run.results)
        if (!r.error.empty())
            std::cerr << r.name << ": " << r.error << "\n";
    return run.exit_code;
}

Json generator_json(const HazewinkelGenerator& g)
{
    return {{"k", g.k}, {"inB", to_json(g.in_b)}, {"inV", to_json(g.in_v)}, {"text", g.in_b.to_string()}};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"fglforge: exact computations with formal group laws, BP and cobordism operations"};
    app.require_subcommand(1);
    int status = 0;

    // ---- fgl
    auto* fgl = app.add_subcommand("fgl", "Universal formal group law");
    fgl->require_subcommand(1);
    {
        auto* c = fgl->add_subcommand("universal", "Coefficients a_ij of the universal law in Z[b1, b2, ...]");
        auto o = std::make_shared<Common>();
        auto assoc = std::make_shared<bool>(false);
        o->x_bound = 8;
        o->dim_bound = 8;
        c->add_option("--xbound", o->x_bound, "Truncation in x, y")->check(CLI::Range(1, 64));
        c->add_option("--dimbound", o->dim_bound, "Dimension bound")->check(CLI::Range(0, 64));
        c->add_flag("--verify-assoc", *assoc, "Also check associativity (slow)");
        c->add_flag("--json", o->json);
        c->callback([o, assoc, &status] {
            const FormalGroupLaw law = universal_fgl(o->x_bound, o->dim_bound);
            const FglAxiomReport rep = check_fgl_axioms(law, *assoc);
            emit({{"law", to_json(law)}, {"axioms", to_json(rep)}, {"pass", rep.pass()}}, o->json,
                 "F(x,y) = " + law.F.to_string() + "\naxioms: " + (rep.pass() ? "pass" : "FAIL"));
            status = rep.pass() ? 0 : 1;
        });
    }
    {
        auto* c = fgl->add_subcommand("log", "Logarithm x + sum m_n x^{n+1} in the b-coordinates");
        auto o = std::make_shared<Common>();
        o->x_bound = 0;
        c->add_option("--dimbound", o->dim_bound)->check(CLI::Range(0, 64));
        c->add_option("--xbound", o->x_bound, "Defaults to dimbound + 1");
        c->add_flag("--json", o->json);
        c->callback([o] {
            const int xb = o->x_bound > 0 ? o->x_bound : o->dim_bound + 1;
            const Series log = universal_log(xb, o->dim_bound);
            emit(to_json(log), o->json, "log(x) = " + log.to_string());
        });
    }
    {
        auto* c = fgl->add_subcommand("charnums", "Characteristic numbers of a class given in b-coordinates");
        auto o = std::make_shared<Common>();
        auto element = std::make_shared<std::string>();
        c->add_option("--element", *element, "Homogeneous element: JSON or text such as 'b1^2 - b2'")->required();
        c->add_flag("--json", o->json);
        c->callback([o, element, &status] {
            const GradedPoly x = parse_element(*element, Alphabet::b(), kUnbounded);
            const auto dim = x.dimension();
            if (!x.is_zero() && !dim)
                throw ConfigError("element is not homogeneous");
            const CharacteristicNumbers cn = characteristic_numbers(x, dim.value_or(0));
            Json nums = Json::object();
            std::string text;
            for (const auto& [m, q] : cn.numbers) {
                const std::string key = GradedPoly::term(1, m, Alphabet::b()).to_string();
                nums[key] = to_string(q);
                text += key + ": " + to_string(q) + "\n";
            }
            emit({{"element", to_json(x)}, {"dimension", dim.value_or(0)}, {"numbers", nums},
                  {"integral", cn.integral}},
                 o->json, text + "integral: " + (cn.integral ? "yes" : "no"));
            status = 0;
        });
    }

    // ---- bp
    auto* bp = app.add_subcommand("bp", "Brown-Peterson coefficients");
    bp->require_subcommand(1);
    {
        auto* c = bp->add_subcommand("generators", "Hazewinkel generators in the b-coordinates");
        auto o = std::make_shared<Common>();
        c->add_option("--prime", o->prime);
        c->add_option("--dimbound", o->dim_bound)->check(CLI::Range(0, 64));
        c->add_flag("--json", o->json);
        c->callback([o] {
            const BPContext ctx(o->prime, o->dim_bound);
            Json gens = Json::array();
            std::string text;
            for (const auto& g : ctx.generators()) {
                gens.push_back(generator_json(g));
                text += "v" + std::to_string(g.k) + " = " + g.in_b.to_string() + "\n";
            }
            emit({{"prime", o->prime}, {"dimBound", o->dim_bound}, {"generators", gens}}, o->json, text);
        });
    }
    {
        auto* c = bp->add_subcommand("p-series", "[p](t)/t for the p-typical law");
        auto o = std::make_shared<Common>();
        auto leq = std::make_shared<int>(-1);
        c->add_option("--prime", o->prime);
        c->add_option("--dimbound", o->dim_bound)->check(CLI::Range(0, 64));
        c->add_option("--leq", *leq, "Only p + v1 t^{p-1} + ... + v_i t^{p^i-1}");
        c->add_flag("--json", o->json);
        c->callback([o, leq] {
            const BPContext ctx(o->prime, o->dim_bound);
            const TLaurent s = *leq >= 0 ? p_series_leq(ctx, *leq) : p_series(ctx);
            emit(to_json(s), o->json, s.to_string());
        });
    }
    {
        auto* c = bp->add_subcommand("member", "Is the element in I(p)^m?");
        auto o = std::make_shared<Common>();
        auto element = std::make_shared<std::string>();
        auto power = std::make_shared<int>(1);
        c->add_option("--element", *element, "JSON or text in v1, v2, ...")->required();
        c->add_option("--power", *power)->check(CLI::NonNegativeNumber);
        c->add_option("--prime", o->prime, "Used for text input");
        c->add_flag("--json", o->json);
        c->callback([o, element, power, &status] {
            const GradedPoly x = parse_element(*element, Alphabet::v(o->prime), kUnbounded);
            if (x.alphabet().kind != Alphabet::Kind::V)
                throw AlphabetMismatch("membership needs an element in the v-alphabet");
            const bool in = ideal_membership(x, *power);
            const int f = ideal_filtration(x);
            emit({{"element", to_json(x)}, {"power", *power}, {"member", in},
                  {"filtration", f == kInfiniteValuation ? Json(nullptr) : Json(f)}},
                 o->json, in ? "member" : "not a member");
            status = 0;
        });
    }

    // ---- ops
    auto* ops = app.add_subcommand("ops", "Steenrod and symmetric operations on BP coefficients");
    ops->require_subcommand(1);
    for (const std::string which : {"steenrod", "phi"}) {
        auto* c = ops->add_subcommand(which, which == "phi" ? "Symmetric operation Phi(x)" : "Total Steenrod operation St(x)");
        auto o = std::make_shared<Common>();
        auto element = std::make_shared<std::string>();
        auto reps = std::make_shared<std::string>();
        auto below = std::make_shared<int>(-1);
        auto top = std::make_shared<int>(-1);
        c->add_option("--prime", o->prime);
        c->add_option("--dimbound", o->dim_bound)->check(CLI::Range(0, 64));
        c->add_option("--element", *element, "JSON or text such as v2 or '2*v1^3'")->required();
        c->add_option("--reps", *reps, "Coset representatives, e.g. 1,-1");
        c->add_option("--below", *below, "Extra t-degrees below -p*d");
        c->add_option("--top", *top, "Highest t-degree kept");
        c->add_flag("--json", o->json);
        c->callback([o, element, reps, below, top, which] {
            auto ctx = std::make_shared<const BPContext>(o->prime, o->dim_bound);
            const SteenrodContext sctx(ctx, reps->empty() ? std::vector<long>{} : parse_list(*reps));
            const GradedPoly x = parse_element(*element, ctx->v_alphabet(), o->dim_bound);
            std::optional<WindowPolicy> w;
            if (*below >= 0 || *top != -1) {
                w = sctx.default_window();
                if (*below >= 0)
                    w->below = *below;
                if (*top != -1)
                    w->top = *top;
            }
            const OperationValue v =
                which == "phi" ? symmetric_phi(sctx, x, w) : steenrod_on_coefficients(sctx, x, w);
            emit({{"element", to_json(x)}, {"reps", sctx.coset_reps()}, {"totalDimension", v.total_dimension},
                  {"value", to_json(v.value)}},
                 o->json, v.value.to_string());
        });
    }

    // ---- verify
    auto* verify = app.add_subcommand("verify", "Mechanical checks; every report carries pass and an audit object");
    verify->require_subcommand(1);
    auto overrides = std::make_shared<Overrides>();
    auto jobs = std::make_shared<std::optional<int>>();
    auto out = std::make_shared<std::string>();
    auto timings = std::make_shared<bool>(false);
    auto add_shared = [&](CLI::App* c) {
        c->add_option_function<long>("--prime", [overrides](long v) { overrides->prime = v; });
        c->add_option_function<int>("--dimbound", [overrides](int v) { overrides->dim_bound = v; });
        c->add_option_function<int>("--xbound", [overrides](int v) { overrides->x_bound = v; });
        c->add_option_function<std::string>("--reps", [overrides](const std::string& v) { overrides->reps = parse_list(v); });
        c->add_option_function<int>("--jobs", [jobs](int v) { *jobs = v; }, "Worker threads (FGLFORGE_JOBS)");
        c->add_option("--out", *out, "Write the JSON report here");
        c->add_flag("--timings", *timings, "Include wall-clock seconds (breaks byte determinism)");
        c->add_flag("--json", "Reports are always JSON; accepted for symmetry");
    };
    auto run_single = [&, overrides, jobs, out, timings](CheckSpec spec) {
        VerifyPlan plan;
        plan.overrides = *overrides;
        plan.jobs = resolve_jobs(*jobs);
        plan.include_timings = *timings;
        plan.checks.push_back(std::move(spec));
        status = emit_run(run_plan(plan), *out);
    };
    {
        auto* c = verify->add_subcommand("prop31", "St of a product of generators against the truncated [p]-series");
        add_shared(c);
        auto mono = std::make_shared<std::string>("1");
        c->add_option("--monomial", *mono, "Generator indices, e.g. 1,1")->required();
        c->callback([mono, run_single] {
            Json m = Json::array();
            for (long k : parse_list(*mono))
                m.push_back(k);
            run_single({"prop31", "prop31", {{"monomial", m}}});
        });
    }
    {
        auto* c = verify->add_subcommand("cor32", "The t^{-d(p-1)} component of St is the identity mod I^{m+1}");
        add_shared(c);
        auto element = std::make_shared<std::string>();
        auto level = std::make_shared<int>(0);
        c->add_option("--element", *element)->required();
        c->add_option("--level", *level, "m with x in I(p)^m")->required();
        c->callback([element, level, run_single] {
            run_single({"cor32", "cor32", {{"element", *element}, {"level", *level}}});
        });
    }
    {
        auto* c = verify->add_subcommand("prop33", "Phi(I^{m+1}) inside I^m on generated or given samples");
        add_shared(c);
        auto level = std::make_shared<int>(1);
        auto samples = std::make_shared<int>(10);
        auto seed = std::make_shared<std::uint64_t>(1);
        auto elements = std::make_shared<std::vector<std::string>>();
        c->add_option("--level", *level, "m")->required();
        c->add_option("--samples", *samples);
        c->add_option("--seed", *seed);
        c->add_option("--element", *elements, "Explicit samples instead of generated ones");
        c->callback([level, samples, seed, elements, run_single] {
            Json p = {{"level", *level}};
            if (elements->empty()) {
                p["samples"] = *samples;
                p["seed"] = *seed;
            } else {
                p["elements"] = *elements;
            }
            run_single({"prop33", "prop33", p});
        });
    }
    {
        auto* c = verify->add_subcommand("coset-independence", "St mod I^2 does not depend on the representatives");
        add_shared(c);
        auto r1 = std::make_shared<std::string>();
        auto r2 = std::make_shared<std::string>();
        auto element = std::make_shared<std::string>("v1");
        c->add_option("--reps1", *r1)->required();
        c->add_option("--reps2", *r2)->required();
        c->add_option("--element", *element);
        c->callback([r1, r2, element, run_single] {
            run_single({"coset-independence", "coset-independence",
                        {{"reps1", parse_list(*r1)}, {"reps2", parse_list(*r2)}, {"element", *element}}});
        });
    }
    {
        auto* c = verify->add_subcommand("twisted-log", "Logarithm of the twisted law computed two ways");
        add_shared(c);
        c->callback([run_single] { run_single({"twisted-log", "twisted-log", Json::object()}); });
    }
    {
        auto* c = verify->add_subcommand("all", "The full acceptance suite");
        add_shared(c);
        c->callback([&, overrides, jobs, out, timings] {
            VerifyPlan plan;
            plan.overrides = *overrides;
            plan.jobs = resolve_jobs(*jobs);
            plan.include_timings = *timings;
            plan.checks = default_suite();
            status = emit_run(run_plan(plan), *out);
        });
    }
    {
        auto* c = verify->add_subcommand("plan", "Run a JSON plan file");
        add_shared(c);
        auto file = std::make_shared<std::string>();
        c->add_option("plan", *file, "Plan file")->required();
        c->callback([&, file, overrides, jobs, out, timings] {
            std::ifstream f(*file);
            if (!f)
                throw ConfigError("cannot read plan " + *file);
            Json j;
            try {
                j = Json::parse(f);
            } catch (const nlohmann::json::exception& e) {
                throw ConfigError(std::string("plan is not JSON: ") + e.what());
            }
            VerifyPlan plan = plan_from_json(j);
            plan.overrides = *overrides;
            if (*jobs || !j.contains("jobs"))
                plan.jobs = resolve_jobs(*jobs);
            plan.include_timings = plan.include_timings || *timings;
            status = emit_run(run_plan(plan), *out);
        });
    }

    // ---- koszul
    auto* koszul = app.add_subcommand("koszul", "Resolution of I(2, n-2) and the Rost-model descent step");
    koszul->require_subcommand(1);
    {
        auto* c = koszul->add_subcommand("rost", "Koszul complex, exactness, Tor and syzygy codimensions");
        auto n = std::make_shared<int>(3);
        auto tor = std::make_shared<bool>(false);
        auto syz = std::make_shared<bool>(false);
        auto json = std::make_shared<bool>(false);
        auto D = std::make_shared<int>(-1);
        c->add_option("--n", *n)->required();
        c->add_option("--dimbound", *D, "Defaults to max(10, 2^{n-2}-1)");
        c->add_flag("--tor", *tor);
        c->add_flag("--syzygy-report", *syz);
        c->add_flag("--json", *json);
        c->callback([n, tor, syz, json, D, &status] {
            const int bound = *D >= 0 ? *D : std::max(10, (1 << (*n - 2)) - 1);
            const KoszulComplex K = build_koszul(*n, bound);
            const bool d2 = koszul_d_squared_zero(K);
            const ExactnessReport ex = koszul_exactness(K, bound);
            Json ranks = Json::object();
            for (int j = 0; j <= K.top_index(); ++j)
                ranks[std::to_string(j)] = K.rank(j);
            Json r = {{"n", *n}, {"dimBound", bound}, {"termRanks", ranks}, {"dSquaredZero", d2}, {"exact", ex.pass}};
            bool ok = d2 && ex.pass;
            if (*tor) {
                const TorReport t = tor_with_residue(K);
                Json tr = Json::object();
                for (const auto& [j, rk] : t.ranks)
                    tr[std::to_string(j)] = rk;
                r["tor"] = {{"ranks", tr}, {"differentialsVanish", t.differentials_vanish}, {"topIndex", t.top_nonzero}};
                ok = ok && t.differentials_vanish;
            }
            if (*syz) {
                const SyzygyReport s = syzygy_report(*n);
                r["syzygy"] = to_json(s);
                ok = ok && s.all_in_range;
            }
            r["pass"] = ok;
            std::string text = "n=" + std::to_string(*n) + " d^2=0: " + (d2 ? "yes" : "no") +
                               ", exact: " + (ex.pass ? "yes" : "no");
            if (r.contains("syzygy") && r["syzygy"]["topCodimDiscrepancy"].get<bool>())
                text += "\ntop generator codimension: formula gives " +
                        std::to_string(r["syzygy"]["topCodimFormula"].get<int>()) + ", stated value " +
                        std::to_string(r["syzygy"]["topCodimStated"].get<int>()) + " (flagged)";
            emit(r, *json, text);
            status = ok ? 0 : 1;
        });
    }
    {
        auto* c = koszul->add_subcommand("descent", "One step alpha = p*alpha1 + beta1 on the Rost presentation");
        add_shared(c);
        auto n = std::make_shared<int>(3);
        auto relations = std::make_shared<std::vector<std::string>>();
        c->add_option("--n", *n);
        c->add_option("--relation", *relations, "Relation JSON; repeatable. Default samples when absent");
        c->callback([n, relations, run_single] {
            Json p = {{"n", *n}};
            if (!relations->empty()) {
                Json rel = Json::array();
                for (const auto& r : *relations) {
                    try {
                        rel.push_back(Json::parse(r));
                    } catch (const nlohmann::json::exception& e) {
                        throw ConfigError(std::string("relation is not JSON: ") + e.what());
                    }
                }
                p["relations"] = rel;
            }
            run_single({"descent", "descent", p});
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "error: precondition: " << e.what() << "\n";
        return 2;
    } catch (const AlphabetMismatch& e) {
        std::cerr << "error: alphabet mismatch: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return status;
}
