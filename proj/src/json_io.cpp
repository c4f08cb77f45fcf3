#include "fglforge/json_io.hpp"

#include <cctype>

namespace fglforge {

namespace {

Json bound_json(int b)
{
    return b >= kUnbounded || b <= -kUnbounded ? Json(nullptr) : Json(b);
}

int bound_from(const Json& j, int unbounded)
{
    return j.is_null() ? unbounded : j.get<int>();
}

std::string alphabet_name(const Alphabet& a)
{
    switch (a.kind) {
    case Alphabet::Kind::B:
        return "b";
    case Alphabet::Kind::M:
        return "m";
    case Alphabet::Kind::V:
        return "v";
    }
    return "?";
}

Alphabet alphabet_from(const Json& j)
{
    const std::string name = j.at("alphabet").get<std::string>();
    if (name == "b")
        return Alphabet::b();
    if (name == "m")
        return Alphabet::m();
    if (name == "v") {
        if (!j.contains("prime") || j.at("prime").is_null())
            throw ConfigError("v-alphabet element needs a prime");
        return Alphabet::v(j.at("prime").get<long>());
    }
    throw ConfigError("unknown alphabet: " + name);
}

void put_header(Json& j, const Alphabet& a, int dim_bound)
{
    j["alphabet"] = alphabet_name(a);
    j["prime"] = a.kind == Alphabet::Kind::V ? Json(a.prime) : Json(nullptr);
    j["dimBound"] = bound_json(dim_bound);
}

Json terms_json(const GradedPoly& p)
{
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json exps = Json::object();
        for (const auto& [idx, e] : m.exponents())
            exps[std::to_string(idx)] = e;
        terms.push_back({{"coeff", to_string(c)}, {"exps", exps}});
    }
    return terms;
}

} // namespace

Json to_json(const GradedPoly& p)
{
    Json j;
    put_header(j, p.alphabet(), p.dim_bound());
    j["terms"] = terms_json(p);
    return j;
}

GradedPoly poly_from_json(const Json& j)
{
    try {
        const Alphabet a = alphabet_from(j);
        GradedPoly p(a, bound_from(j.value("dimBound", Json(nullptr)), kUnbounded));
        for (const auto& t : j.at("terms")) {
            std::vector<std::pair<int, int>> exps;
            for (const auto& [k, e] : t.at("exps").items()) {
                const int idx = std::stoi(k);
                const int ex = e.get<int>();
                if (idx < 1 || ex < 1)
                    throw ConfigError("bad exponent entry " + k);
                exps.emplace_back(idx, ex);
            }
            std::sort(exps.begin(), exps.end());
            p.add_term(Monomial(exps), make_rational(t.at("coeff").get<std::string>()));
        }
        return p;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("malformed polynomial JSON: ") + e.what());
    }
}

Json to_json(const Series& s)
{
    const GradedPoly& z = s.coefficient_zero();
    Json j;
    put_header(j, z.alphabet(), z.dim_bound());
    j["vars"] = s.vars();
    j["xBound"] = s.x_bound();
    Json coeffs = Json::array();
    for (const auto& [k, c] : s.coeffs())
        coeffs.push_back({{"i", k.first}, {"j", k.second}, {"terms", terms_json(c)}});
    j["coeffs"] = coeffs;
    return j;
}

Series series_from_json(const Json& j)
{
    try {
        const GradedPoly zero = poly_from_json({{"alphabet", j.at("alphabet")},
                                                {"prime", j.value("prime", Json(nullptr))},
                                                {"dimBound", j.value("dimBound", Json(nullptr))},
                                                {"terms", Json::array()}});
        const int vars = j.at("vars").get<int>();
        if (vars != 1 && vars != 2)
            throw ConfigError("series must have 1 or 2 variables");
        Series s(vars, j.at("xBound").get<int>(), zero);
        for (const auto& e : j.at("coeffs")) {
            Json pj = j;
            pj.erase("coeffs");
            pj["terms"] = e.at("terms");
            s.add_coefficient(e.at("i").get<int>(), e.at("j").get<int>(), poly_from_json(pj));
        }
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed series JSON: ") + e.what());
    }
}

Json to_json(const FormalGroupLaw& law)
{
    Json j = {{"kind", to_string(law.kind)}};
    const Json body = to_json(law.F);
    for (const auto& [k, v] : body.items())
        j[k] = v;
    return j;
}

FormalGroupLaw fgl_from_json(const Json& j)
{
    static const std::vector<LawKind> kinds{LawKind::UniversalB, LawKind::BPTypical, LawKind::Twisted,
                                            LawKind::Additive};
    const std::string name = j.value("kind", std::string());
    for (LawKind k : kinds)
        if (to_string(k) == name)
            return {series_from_json(j), k};
    throw ConfigError("unknown law kind: " + name);
}

Json to_json(const TLaurent& a)
{
    Json j;
    put_header(j, a.alphabet(), a.dim_bound());
    j["tlow"] = bound_json(a.low());
    j["thigh"] = bound_json(a.high());
    Json coeffs = Json::object();
    for (const auto& [k, c] : a.coeffs())
        coeffs[std::to_string(k)] = to_json(c);
    j["coeffs"] = coeffs;
    return j;
}

TLaurent tlaurent_from_json(const Json& j)
{
    try {
        const Alphabet a = alphabet_from(j);
        const GradedPoly zero(a, bound_from(j.value("dimBound", Json(nullptr)), kUnbounded));
        TLaurent r(zero, bound_from(j.value("tlow", Json(nullptr)), -kUnbounded),
                   bound_from(j.value("thigh", Json(nullptr)), kUnbounded));
        for (const auto& [k, c] : j.at("coeffs").items()) {
            const GradedPoly p = poly_from_json(c);
            if (!(p.alphabet() == a))
                throw AlphabetMismatch("TLaurent coefficient alphabet differs from its header");
            r.add_coefficient(std::stoi(k), p);
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed TLaurent JSON: ") + e.what());
    }
}

Json to_json(const SyzygyReport& r)
{
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"I", row.I},
                        {"j", row.j},
                        {"codim", row.codim},
                        {"inPaperRange", row.in_claimed_range},
                        {"geqHomIndex", row.geq_hom_index}});
    return {{"n", r.n},
            {"rows", rows},
            {"allInPaperRange", r.all_in_range},
            {"topCodimFormula", r.top_codim_formula},
            {"topCodimStated", r.top_codim_stated},
            {"topCodimDiscrepancy", r.top_codim_discrepancy}};
}

SyzygyReport syzygy_report_from_json(const Json& j)
{
    SyzygyReport r;
    r.n = j.at("n").get<int>();
    for (const auto& row : j.at("rows"))
        r.rows.push_back({row.at("I").get<IndexSet>(), row.at("j").get<int>(), row.at("codim").get<int>(),
                          row.at("inPaperRange").get<bool>(), row.at("geqHomIndex").get<bool>()});
    r.all_in_range = j.at("allInPaperRange").get<bool>();
    r.top_codim_formula = j.at("topCodimFormula").get<int>();
    r.top_codim_stated = j.at("topCodimStated").get<int>();
    r.top_codim_discrepancy = j.at("topCodimDiscrepancy").get<bool>();
    return r;
}

Json to_json(const FormalRelation& r)
{
    Json support = Json::array();
    for (const auto& z : r.support())
        support.push_back({{"label", z.label}, {"codim", z.codim}});
    Json coeffs = Json::array();
    for (const auto& u : r.coefficients())
        coeffs.push_back(to_json(u));
    return {{"support", support}, {"coefficients", coeffs}, {"level", r.level()}};
}

FormalRelation formal_relation_from_json(const Json& j, const Alphabet& alphabet, int dim_bound)
{
    try {
        std::vector<Cycle> support;
        for (const auto& z : j.at("support"))
            support.push_back({z.at("label").get<std::string>(), z.at("codim").get<int>()});
        std::vector<GradedPoly> coeffs;
        for (const auto& c : j.at("coefficients"))
            coeffs.push_back(c.is_string() ? parse_poly(c.get<std::string>(), alphabet, dim_bound)
                                           : poly_from_json(c).with_bound(dim_bound));
        for (const auto& c : coeffs)
            if (!(c.alphabet() == alphabet))
                throw AlphabetMismatch("relation coefficient is not in the expected alphabet");
        return FormalRelation(std::move(support), std::move(coeffs), j.at("level").get<int>());
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed relation JSON: ") + e.what());
    }
}

Json to_json(const CongruenceReport& r)
{
    Json per = Json::object();
    for (const auto& [k, ok] : r.per_degree)
        per[std::to_string(k)] = ok;
    return {{"pass", r.pass}, {"modulusPower", r.modulus_power}, {"perDegree", per},
            {"difference", to_json(r.difference)}};
}

Json to_json(const FglAxiomReport& r)
{
    return {{"pass", r.pass()},
            {"leftUnit", r.left_unit},
            {"rightUnit", r.right_unit},
            {"commutative", r.commutative},
            {"associative", r.associative ? Json(*r.associative) : Json(nullptr)}};
}

GradedPoly parse_poly(std::string_view text, const Alphabet& alphabet, int dim_bound)
{
    GradedPoly p(alphabet, dim_bound);
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    auto fail = [&](const std::string& why) -> GradedPoly {
        throw ConfigError("cannot parse element '" + std::string(text) + "': " + why);
    };
    auto read_int = [&]() -> long {
        const std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        if (start == i)
            fail("expected a number at position " + std::to_string(start));
        return std::stol(std::string(text.substr(start, i - start)));
    };
    skip();
    if (i == text.size())
        return fail("empty input");
    bool first = true;
    while (i < text.size()) {
        skip();
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            return fail("expected + or - at position " + std::to_string(i));
        }
        first = false;
        Rational c = sign;
        std::vector<std::pair<int, int>> exps;
        for (;;) {
            skip();
            if (i >= text.size())
                return fail("dangling operator");
            if (std::isdigit(static_cast<unsigned char>(text[i]))) {
                const std::size_t start = i;
                read_int();
                if (i < text.size() && text[i] == '/') {
                    ++i;
                    read_int();
                }
                c *= make_rational(text.substr(start, i - start));
            } else if (text[i] == alphabet.symbol()) {
                ++i;
                const int idx = static_cast<int>(read_int());
                int e = 1;
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    e = static_cast<int>(read_int());
                }
                if (alphabet.kind == Alphabet::Kind::V && idx == 0) {
                    for (int k = 0; k < e; ++k)
                        c *= alphabet.prime;
                } else {
                    if (idx < 1 || e < 1)
                        return fail("bad generator");
                    exps.emplace_back(idx, e);
                }
            } else {
                return fail(std::string("unexpected '") + text[i] + "'");
            }
            skip();
            if (i < text.size() && text[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        std::sort(exps.begin(), exps.end());
        Monomial m;
        for (const auto& [idx, e] : exps)
            m = m * Monomial::generator(idx, e);
        p.add_term(m, c);
        skip();
    }
    return p;
}

GradedPoly parse_element(const std::string& arg, const Alphabet& alphabet, int dim_bound)
{
    std::size_t k = 0;
    while (k < arg.size() && std::isspace(static_cast<unsigned char>(arg[k])))
        ++k;
    if (k < arg.size() && arg[k] == '{') {
        Json j;
        try {
            j = Json::parse(arg);
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(std::string("element is not valid JSON: ") + e.what());
        }
        const GradedPoly p = poly_from_json(j);
        if (!(p.alphabet() == alphabet))
            throw AlphabetMismatch("element alphabet does not match the requested one");
        return p.with_bound(dim_bound);
    }
    return parse_poly(arg, alphabet, dim_bound);
}

} // namespace fglforge
