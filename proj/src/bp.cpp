#include "fglforge/bp.hpp"

#include <algorithm>

namespace fglforge {

namespace {

long ipow(long p, int k)
{
    long r = 1;
    for (int i = 0; i < k; ++i)
        r *= p;
    return r;
}

} // namespace

BPContext::BPContext(long p, int dim_bound)
    : p_(p), dim_bound_(dim_bound), max_k_(0), log_b_(1, 1, GradedPoly()), exp_m_(1, 1, GradedPoly()),
      bp_law_{Series(2, 1, GradedPoly()), LawKind::BPTypical}
{
    if (!is_prime(p))
        throw ConfigError("bad prime: " + std::to_string(p));
    if (dim_bound < 0)
        throw ConfigError("negative dimension bound");
    const Alphabet va = Alphabet::v(p);
    max_k_ = va.max_index_within(dim_bound);

    log_b_ = fglforge::universal_log(dim_bound + 1, dim_bound);

    // generic logarithm in m-coordinates, inverted: b_n = [x^{n+1}] exp(m)
    const GradedPoly m_zero(Alphabet::m(), dim_bound);
    Series log_m = Series::variable(1, dim_bound + 1, m_zero);
    for (int n = 1; n <= dim_bound; ++n)
        log_m.add_coefficient(n + 1, 0, GradedPoly::generator(n, Alphabet::m(), dim_bound));
    exp_m_ = series_invert_composition(log_m);

    const GradedPoly vz(va, dim_bound);
    lambda_b_.push_back(b_zero().one_like());
    lambda_v_.push_back(vz.one_like());
    std::vector<GradedPoly> v_b{b_zero()}; // v_b[k] = v_k in b-coordinates, k >= 1
    for (int k = 1; k <= max_k_; ++k) {
        const int n = static_cast<int>(ipow(p, k) - 1);
        lambda_b_.push_back(log_b_.coefficient(n + 1));

        // p lambda_k = sum_{i=0}^{k-1} lambda_i v_{k-i}^{p^i}
        GradedPoly lam_v = vz.zero_like();
        GradedPoly vk_b = lambda_b_[k] * Rational(p);
        for (int i = 0; i < k; ++i) {
            const auto e = static_cast<unsigned>(ipow(p, i));
            lam_v += lambda_v_[i] * GradedPoly::generator(k - i, va, dim_bound).pow(e);
            if (i > 0)
                vk_b -= lambda_b_[i] * v_b[k - i].pow(e);
        }
        lambda_v_.push_back(lam_v * Rational(1, p));
        v_b.push_back(vk_b);
        if (!vk_b.is_p_local(p))
            throw LocalityFailure("Hazewinkel generator v_" + std::to_string(k) + " is not p-local");
        gens_.push_back({k, vk_b, GradedPoly::generator(k, va, dim_bound)});
    }

    bp_law_ = fgl_from_log(bp_log(dim_bound + 1), LawKind::BPTypical);
    for (const auto& [key, c] : bp_law_.F.coeffs())
        if (!c.is_p_local(p))
            throw LocalityFailure("F_BP coefficient is not p-local: " + c.to_string());
}

GradedPoly BPContext::v(int k) const
{
    if (k == 0)
        return v_zero().constant_like(p_);
    if (k > max_k_)
        throw TruncationInsufficient("v_" + std::to_string(k) + " exceeds dimension bound " +
                                     std::to_string(dim_bound_));
    return GradedPoly::generator(k, v_alphabet(), dim_bound_);
}

Series BPContext::bp_log(int x_bound) const
{
    Series log = Series::variable(1, x_bound, v_zero());
    for (int k = 1; k <= max_k_; ++k)
        if (ipow(p_, k) <= x_bound)
            log.add_coefficient(static_cast<int>(ipow(p_, k)), 0, lambda_v_[k]);
    return log;
}

void BPContext::require_dims(const GradedPoly& c, const char* op) const
{
    if (!c.is_zero() && c.terms().rbegin()->first.dimension(c.alphabet()) > dim_bound_)
        throw TruncationInsufficient(std::string(op) + ": element exceeds dimension bound " +
                                     std::to_string(dim_bound_));
}

GradedPoly BPContext::to_m_coordinates(const GradedPoly& c) const
{
    if (!(c.alphabet() == Alphabet::b()))
        throw AlphabetMismatch("to_m_coordinates expects the b-alphabet");
    require_dims(c, "to_m_coordinates");
    const GradedPoly mz(Alphabet::m(), dim_bound_);
    return substitute(c, [&](int n) { return b_in_m(n); }, mz);
}

GradedPoly BPContext::from_m_coordinates(const GradedPoly& c) const
{
    if (!(c.alphabet() == Alphabet::m()))
        throw AlphabetMismatch("from_m_coordinates expects the m-alphabet");
    require_dims(c, "from_m_coordinates");
    return substitute(c, [&](int n) { return log_b_.coefficient(n + 1); }, b_zero());
}

GradedPoly BPContext::v_to_b(const GradedPoly& x) const
{
    if (!(x.alphabet() == v_alphabet()))
        throw AlphabetMismatch("v_to_b expects the v-alphabet at p = " + std::to_string(p_));
    require_dims(x, "v_to_b");
    return substitute(x, [&](int k) { return gens_.at(k - 1).in_b; }, b_zero());
}

GradedPoly quillen_project(const GradedPoly& c, const BPContext& ctx)
{
    const GradedPoly in_m = ctx.to_m_coordinates(c);
    const long p = ctx.prime();
    const GradedPoly mz(Alphabet::m(), ctx.dim_bound());
    const GradedPoly projected = substitute(
        in_m,
        [&](int n) {
            long q = n + 1;
            while (q % p == 0)
                q /= p;
            return q == 1 ? GradedPoly::generator(n, Alphabet::m(), ctx.dim_bound()) : mz;
        },
        mz);
    return ctx.from_m_coordinates(projected);
}

const std::vector<HazewinkelGenerator>& hazewinkel_generators(const BPContext& ctx)
{
    return ctx.generators();
}

FormalGroupLaw bp_fgl(const BPContext& ctx)
{
    return ctx.bp_law();
}

TLaurent p_series(const BPContext& ctx)
{
    const TLaurent t = TLaurent::monomial(ctx.v_zero().one_like(), 1);
    return formal_multiple(ctx.bp_law(), static_cast<int>(ctx.prime()), t).shifted(-1);
}

TLaurent p_series_leq(const BPContext& ctx, int i)
{
    if (i < 0)
        throw PreconditionError("p_series_leq: i must be >= 0");
    TLaurent r(ctx.v_zero());
    for (int l = 0; l <= i; ++l)
        r.add_coefficient(static_cast<int>(ipow(ctx.prime(), l) - 1), ctx.v(l));
    return r;
}

BPElement to_v_basis(const GradedPoly& c, const BPContext& ctx)
{
    const GradedPoly in_m = ctx.to_m_coordinates(c);
    const long p = ctx.prime();
    for (const auto& [mono, coeff] : in_m.terms()) {
        for (const auto& [n, e] : mono.exponents()) {
            long q = n + 1;
            while (q % p == 0)
                q /= p;
            if (q != 1)
                throw PreconditionError("to_v_basis: element is not p-typical (involves m_" + std::to_string(n) +
                                        ")");
        }
    }
    const GradedPoly value = substitute(
        in_m,
        [&](int n) {
            int k = 0;
            for (long q = n + 1; q > 1; q /= p)
                ++k;
            return ctx.lambda_v(k);
        },
        ctx.v_zero());
    return {value};
}

namespace {

void require_bp_element(const GradedPoly& x)
{
    if (x.alphabet().kind != Alphabet::Kind::V)
        throw AlphabetMismatch("ideal membership needs the v-alphabet");
    if (!x.is_p_local(x.alphabet().prime))
        throw PreconditionError("ideal membership: element is not p-local: " + x.to_string());
}

} // namespace

int ideal_filtration(const GradedPoly& x)
{
    require_bp_element(x);
    const auto p = static_cast<unsigned long>(x.alphabet().prime);
    int level = kInfiniteValuation;
    for (const auto& [mono, c] : x.terms())
        level = std::min(level, padic_valuation(c, p) + mono.degree());
    return level;
}

bool ideal_membership(const GradedPoly& x, int m)
{
    return ideal_filtration(x) >= m;
}

bool ideal_membership(const TLaurent& x, int m)
{
    return std::all_of(x.coeffs().begin(), x.coeffs().end(),
                       [m](const auto& kv) { return ideal_membership(kv.second, m); });
}

NuElementReport nu_element_report(const BPContext& ctx, int k)
{
    const auto& g = ctx.generators().at(k - 1);
    const auto p = static_cast<unsigned long>(ctx.prime());
    const int d = ctx.v_alphabet().generator_dim(k);
    const CharacteristicNumbers numbers = characteristic_numbers(g.in_b, d);
    NuElementReport r;
    r.k = k;
    r.integral = numbers.integral;
    r.all_divisible_by_p = std::all_of(numbers.numbers.begin(), numbers.numbers.end(), [p](const auto& kv) {
        return kv.second == 0 || padic_valuation(kv.second, p) >= 1;
    });
    r.additive_number = numbers.numbers.at(Monomial::generator(1, d));
    r.additive_not_divisible_by_p2 = padic_valuation(r.additive_number, p) < 2;
    return r;
}

} // namespace fglforge
