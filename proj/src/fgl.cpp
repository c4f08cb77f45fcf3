#include "fglforge/fgl.hpp"

#include <vector>

namespace fglforge {

std::string to_string(LawKind kind)
{
    switch (kind) {
    case LawKind::UniversalB:
        return "universal-b";
    case LawKind::BPTypical:
        return "bp-p-typical";
    case LawKind::Twisted:
        return "twisted";
    case LawKind::Additive:
        return "additive";
    }
    return "unknown";
}

Series universal_exp(int x_bound, int dim_bound)
{
    if (x_bound < 1 || dim_bound < 0)
        throw ConfigError("universal_exp: bounds must be >= 1");
    const GradedPoly zero(Alphabet::b(), dim_bound);
    Series e = Series::variable(1, x_bound, zero);
    for (int n = 1; n + 1 <= x_bound && n <= dim_bound; ++n)
        e.add_coefficient(n + 1, 0, GradedPoly::generator(n, Alphabet::b(), dim_bound));
    return e;
}

Series universal_log(int x_bound, int dim_bound)
{
    return series_invert_composition(universal_exp(x_bound, dim_bound));
}

FormalGroupLaw fgl_from_log(const Series& log, LawKind kind)
{
    log.require_univariate("fgl_from_log");
    const Series exp = series_invert_composition(log);
    const int n = log.x_bound();
    const Series lx = log.as_bivariate(0);
    const Series ly = log.as_bivariate(1);
    const Series sum = lx + ly;
    Series F(2, n, log.coefficient_zero());
    Series power = sum;
    for (int k = 1; k <= n; ++k) {
        if (k > 1)
            power = power * sum;
        const GradedPoly ek = exp.coefficient(k);
        if (!ek.is_zero())
            F += ek * power;
    }
    return {F, kind};
}

FormalGroupLaw universal_fgl(int x_bound, int dim_bound)
{
    FormalGroupLaw law = fgl_from_log(universal_log(x_bound, dim_bound), LawKind::UniversalB);
    for (const auto& [k, c] : law.F.coeffs())
        if (!c.is_integral())
            throw LocalityFailure("universal_fgl: non-integral coefficient at x^" + std::to_string(k.first) +
                                  " y^" + std::to_string(k.second) + ": " + c.to_string());
    return law;
}

FormalGroupLaw additive_fgl(int x_bound, const GradedPoly& zero)
{
    Series F = Series::variable(2, x_bound, zero, 0) + Series::variable(2, x_bound, zero, 1);
    return {F, LawKind::Additive};
}

template <class C>
FglAxiomReport check_fgl_axioms(const BasicFormalGroupLaw<C>& law, bool verify_assoc)
{
    using Inner = PowerSeries<C>;
    using Outer = PowerSeries<Inner>;
    const Inner& F = law.F;
    const int n = F.x_bound();
    const C& zero = F.coefficient_zero();
    FglAxiomReport report;

    // F(x, 0) = x and F(0, y) = y
    Inner fx0(2, n, zero);
    Inner f0y(2, n, zero);
    for (const auto& [k, c] : F.coeffs()) {
        if (k.second == 0)
            fx0.add_coefficient(k.first, 0, c);
        if (k.first == 0)
            f0y.add_coefficient(0, k.second, c);
    }
    report.left_unit = (fx0 == Inner::variable(2, n, zero, 0));
    report.right_unit = (f0y == Inner::variable(2, n, zero, 1));
    report.commutative = (F == F.swapped());

    if (verify_assoc) {
        // Series in z whose coefficients are series in (x, y).
        const Inner inner_zero(2, n, zero);
        auto lift = [&](const C& c) { return Inner::constant(2, n, c); };
        const Outer one = Outer::constant(1, n, inner_zero.one_like());
        const Outer z = Outer::variable(1, n, inner_zero);
        const Outer fxy = Outer::constant(1, n, F);
        const Outer x = Outer::constant(1, n, Inner::variable(2, n, zero, 0));
        Outer fyz(1, n, inner_zero);
        for (const auto& [k, c] : F.coeffs()) {
            Inner coeff(2, n, zero);
            coeff.add_coefficient(0, k.first, c);
            fyz.add_coefficient(k.second, 0, coeff);
        }
        const Outer lhs = substitute_bivariate(F, fxy, z, one, lift);
        const Outer rhs = substitute_bivariate(F, x, fyz, one, lift);
        bool ok = true;
        for (int c = 0; c <= n && ok; ++c) {
            const Inner l = lhs.coefficient(c);
            const Inner r = rhs.coefficient(c);
            // only total degree <= n is determined by the truncated law
            ok = (l.truncated(n - c) == r.truncated(n - c));
        }
        report.associative = ok;
    }
    return report;
}

template FglAxiomReport check_fgl_axioms(const BasicFormalGroupLaw<GradedPoly>&, bool);
template FglAxiomReport check_fgl_axioms(const BasicFormalGroupLaw<TLaurent>&, bool);

namespace {

void require_positive_valuation(const TLaurent& a, const char* op)
{
    if (!a.is_zero() && *a.valuation() < 1)
        throw PreconditionError(std::string(op) + ": argument must have zero constant term");
}

} // namespace

TLaurent formal_sum(const FormalGroupLaw& law, const TLaurent& a, const TLaurent& b)
{
    require_positive_valuation(a, "formal_sum");
    require_positive_valuation(b, "formal_sum");
    return substitute_bivariate(law.F, a, b, a.one_like(), [](const GradedPoly& c) { return TLaurent::constant(c); });
}

LaurentSeries formal_sum_with_constant(const FormalGroupLaw& law, const TLaurent& s, int x_bound)
{
    require_positive_valuation(s, "formal_sum_with_constant");
    const TLaurent zero = s.zero_like();
    int max_j = 0;
    for (const auto& [k, c] : law.F.coeffs())
        max_j = std::max(max_j, k.second);
    std::vector<TLaurent> powers{s.one_like()};
    for (int j = 1; j <= max_j; ++j)
        powers.push_back(powers.back() * s);
    LaurentSeries r(1, x_bound, zero);
    for (const auto& [k, c] : law.F.coeffs())
        if (k.first <= x_bound)
            r.add_coefficient(k.first, 0, c * powers[k.second]);
    return r;
}

TLaurent formal_multiple(const FormalGroupLaw& law, int n, const TLaurent& a)
{
    if (n < 0)
        throw PreconditionError("formal_multiple: n must be >= 0");
    TLaurent acc = a.zero_like();
    for (int i = 0; i < n; ++i)
        acc = formal_sum(law, acc, a);
    return acc;
}

TLaurent formal_multiple_via_log(const Series& log, int n, int x_bound)
{
    const Series lg = log.truncated(x_bound);
    const Series exp = series_invert_composition(lg);
    return to_tlaurent(series_compose(exp, Rational(n) * lg));
}

GradedPoly projective_space_class(int n, const Series& log)
{
    if (n < 1 || n + 1 > log.x_bound())
        throw TruncationInsufficient("[P^" + std::to_string(n) + "] needs log to x^" + std::to_string(n + 1));
    return log.coefficient(n + 1) * Rational(n + 1);
}

CharacteristicNumbers characteristic_numbers(const GradedPoly& c, int dim)
{
    if (!c.is_zero() && c.dimension() != dim)
        throw PreconditionError("characteristic_numbers: element is not homogeneous of dimension " +
                                std::to_string(dim));
    CharacteristicNumbers out{std::map<Monomial, Rational, MonomialOrder>(MonomialOrder{c.alphabet()}), true};
    for (const auto& m : monomials_of_dimension(c.alphabet(), dim))
        out.numbers.emplace(m, c.coefficient(m));
    out.integral = c.is_integral();
    return out;
}

} // namespace fglforge
