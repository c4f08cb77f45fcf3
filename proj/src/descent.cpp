#include "fglforge/descent.hpp"

#include <algorithm>
#include <map>

#include "fglforge/zp_linalg.hpp"

namespace fglforge {

namespace {

// Codimension of a support vector, or nullopt if zero; throws if mixed.
std::optional<int> vector_codim(const std::vector<Cycle>& support, const std::vector<GradedPoly>& vec,
                                const char* what)
{
    if (vec.size() != support.size())
        throw PreconditionError(std::string(what) + ": coefficient count does not match the support");
    std::optional<int> c;
    for (std::size_t j = 0; j < vec.size(); ++j) {
        if (vec[j].is_zero())
            continue;
        const auto d = vec[j].dimension();
        if (!d)
            throw PreconditionError(std::string(what) + ": coefficient is not homogeneous");
        const int cj = support[j].codim - *d;
        if (c && *c != cj)
            throw PreconditionError(std::string(what) + ": coefficients do not share one codimension");
        c = cj;
    }
    return c;
}

// Largest level <= cap holding every coefficient.
int common_level(const std::vector<GradedPoly>& vec, int cap)
{
    int level = cap;
    for (const auto& u : vec)
        if (!u.is_zero())
            level = std::min(level, ideal_filtration(u));
    return std::max(level, 0);
}

} // namespace

FormalRelation::FormalRelation(std::vector<Cycle> support, std::vector<GradedPoly> coefficients, int m)
    : support_(std::move(support)), coeffs_(std::move(coefficients)), m_(m)
{
    for (const auto& z : support_)
        if (z.codim <= 0)
            throw PreconditionError("cycle " + z.label + " must have positive codimension");
    codim_ = vector_codim(support_, coeffs_, "FormalRelation");
    for (const auto& u : coeffs_) {
        if (u.alphabet().kind != Alphabet::Kind::V)
            throw AlphabetMismatch("FormalRelation coefficients must be BP elements");
        if (!ideal_membership(u, m_))
            throw PreconditionError("FormalRelation: coefficient " + u.to_string() + " is not in I(p)^" +
                                    std::to_string(m_));
    }
}

bool FormalRelation::is_zero() const
{
    for (const auto& u : coeffs_)
        if (!u.is_zero())
            return false;
    return true;
}

RelationPresentation::RelationPresentation(std::vector<Cycle> support, std::vector<std::vector<GradedPoly>> generators)
    : support_(std::move(support)), gens_(std::move(generators))
{
    for (const auto& g : gens_)
        vector_codim(support_, g, "RelationPresentation");
}

bool RelationPresentation::contains(const std::vector<GradedPoly>& vec) const
{
    const auto c = vector_codim(support_, vec, "RelationPresentation::contains");
    if (!c)
        return true;
    const Alphabet a = [&] {
        for (const auto& u : vec)
            if (!u.is_zero())
                return u.alphabet();
        return vec.front().alphabet();
    }();
    const long p = a.prime;

    // coordinates: (support index, monomial of dimension r_j - c)
    std::map<std::pair<std::size_t, std::vector<std::pair<int, int>>>, std::size_t> coord;
    for (std::size_t j = 0; j < support_.size(); ++j) {
        const int d = support_[j].codim - *c;
        if (d < 0)
            continue;
        for (const auto& mono : monomials_of_dimension(a, d))
            coord.emplace(std::make_pair(j, mono.exponents()), coord.size());
    }
    auto to_vector = [&](const std::vector<GradedPoly>& v, std::vector<Rational>& out) {
        out.assign(coord.size(), Rational(0));
        for (std::size_t j = 0; j < v.size(); ++j)
            for (const auto& [mono, q] : v[j].terms()) {
                auto it = coord.find({j, mono.exponents()});
                if (it == coord.end())
                    return false;
                out[it->second] = q;
            }
        return true;
    };

    std::vector<std::vector<Rational>> columns;
    for (const auto& g : gens_) {
        const auto cg = vector_codim(support_, g, "RelationPresentation");
        if (!cg || *cg < *c)
            continue;
        for (const auto& mu : monomials_of_dimension(a, *cg - *c)) {
            std::vector<GradedPoly> scaled;
            for (const auto& gj : g)
                scaled.push_back(gj * GradedPoly::term(Rational(1), mu, a, gj.dim_bound()));
            std::vector<Rational> col;
            if (to_vector(scaled, col))
                columns.push_back(std::move(col));
        }
    }
    std::vector<Rational> w;
    if (!to_vector(vec, w))
        return false;
    ZpMatrix m(coord.size(), std::vector<Rational>(columns.size(), Rational(0)));
    for (std::size_t k = 0; k < columns.size(); ++k)
        for (std::size_t i = 0; i < coord.size(); ++i)
            m[i][k] = columns[k][i];
    if (columns.empty()) {
        for (const auto& x : w)
            if (x != 0)
                return false;
        return true;
    }
    return in_zp_column_span(std::move(m), std::move(w), p);
}

RelationPresentation rost_presentation(int n, int dim_bound)
{
    if (n < 3)
        throw ConfigError("rost presentation: n must be >= 3");
    const Alphabet a = Alphabet::v(2);
    if (dim_bound < a.generator_dim(n - 2))
        throw TruncationInsufficient("rost presentation: v_" + std::to_string(n - 2) + " exceeds dimension bound " +
                                     std::to_string(dim_bound));
    std::vector<Cycle> support{{"e0", (1 << (n - 1)) - 1}};
    std::vector<std::vector<GradedPoly>> gens;
    gens.push_back({GradedPoly::constant(2, a, dim_bound)});
    for (int i = 1; i <= n - 2; ++i)
        gens.push_back({GradedPoly::generator(i, a, dim_bound)});
    return RelationPresentation(std::move(support), std::move(gens));
}

DescentReport descent_step(const SteenrodContext& sctx, const FormalRelation& alpha,
                           const RelationPresentation& oracle)
{
    const long p = sctx.prime();
    const std::size_t J = alpha.support().size();
    const GradedPoly zero = sctx.bp().v_zero();
    const int m = alpha.level();
    if (oracle.support().size() != J)
        throw PreconditionError("descent_step: relation and presentation have different supports");
    for (std::size_t j = 0; j < J; ++j)
        if (oracle.support()[j].codim != alpha.support()[j].codim)
            throw PreconditionError("descent_step: support codimensions disagree with the presentation");

    std::vector<GradedPoly> zeros(J, zero);
    DescentReport r{alpha, FormalRelation(alpha.support(), zeros, m), FormalRelation(alpha.support(), zeros, m),
                    std::vector<TLaurent>(J, TLaurent(zero)), zeros};
    if (alpha.is_zero()) {
        r.support_preserved = r.beta_in_level = r.congruence = r.st_component_matches = true;
        return r;
    }
    const int c = *alpha.codimension();
    if (c > 0)
        throw PreconditionError("descent_step: codimension " + std::to_string(c) + " is positive");
    if (!oracle.contains(alpha.coefficients()))
        throw PreconditionError("descent_step: alpha is not a relation of the presentation");

    const Rational eps(sctx.epsilon());
    const TLaurent& ps = sctx.p_series();
    const int target = c * static_cast<int>(p - 1);
    int lo = 0;
    for (std::size_t j = 0; j < J; ++j) {
        const GradedPoly& u = alpha.coefficients()[j];
        if (u.is_zero())
            continue;
        const int rj = alpha.support()[j].codim;
        const int shift = rj * static_cast<int>(p - 1);
        Rational twist = 1;
        for (int i = 0; i < rj; ++i)
            twist *= eps;
        const OperationValue phi = symmetric_phi(sctx, u);
        r.phi[j] = (phi.value.slice_leq(-shift) * twist).shifted(shift);
        const OperationValue st = steenrod_on_coefficients(
            sctx, u, WindowPolicy{static_cast<int>(p) - 1, target - shift});
        r.st_component[j] = st.value.coefficient(target - shift) * twist;
        lo = std::min(lo, r.phi[j].low());
    }

    // every t-component of Phi(alpha) must itself be a relation
    for (int k = lo; k <= 0; ++k) {
        std::vector<GradedPoly> comp;
        for (std::size_t j = 0; j < J; ++j)
            comp.push_back(r.phi[j].coefficient(k));
        if (!oracle.contains(comp))
            throw OracleInconsistency("Phi(alpha) component at t^" + std::to_string(k) + " is not a relation");
    }

    std::vector<GradedPoly> a1(J, zero);
    std::vector<GradedPoly> b1(J, zero);
    for (std::size_t j = 0; j < J; ++j) {
        if (r.phi[j].is_zero())
            continue;
        const int rj = alpha.support()[j].codim;
        Rational inv = 1;
        for (int i = 0; i < rj; ++i)
            inv /= eps;
        a1[j] = r.phi[j].coefficient(target) * (-inv);
        GradedPoly acc = zero;
        for (int l = 1; target - l >= r.phi[j].low(); ++l)
            acc += ps.coefficient(l) * r.phi[j].coefficient(target - l);
        b1[j] = acc * (-inv);
    }

    bool support_ok = true;
    bool congruence = true;
    bool st_ok = true;
    bool beta_ok = true;
    for (std::size_t j = 0; j < J; ++j) {
        const GradedPoly& u = alpha.coefficients()[j];
        if (u.is_zero() && (!a1[j].is_zero() || !b1[j].is_zero()))
            support_ok = false;
        beta_ok = beta_ok && ideal_membership(b1[j], m);
        congruence = congruence && ideal_membership(u - a1[j] * Rational(p) - b1[j], m + 1);
        Rational twist = 1;
        for (int i = 0; i < alpha.support()[j].codim; ++i)
            twist *= eps;
        st_ok = st_ok && ideal_membership(r.st_component[j] - u * twist, m + 1);
    }
    r.support_preserved = support_ok;
    r.beta_in_level = beta_ok;
    r.congruence = congruence;
    r.st_component_matches = st_ok;
    r.alpha1 = FormalRelation(alpha.support(), a1, common_level(a1, m));
    r.beta1 = FormalRelation(alpha.support(), b1, common_level(b1, m));
    return r;
}

} // namespace fglforge
