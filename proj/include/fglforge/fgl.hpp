#ifndef FGLFORGE_FGL_HPP
#define FGLFORGE_FGL_HPP

#include <map>
#include <optional>
#include <string>

#include "fglforge/errors.hpp"
#include "fglforge/graded_poly.hpp"
#include "fglforge/power_series.hpp"
#include "fglforge/tlaurent.hpp"

namespace fglforge {

enum class LawKind { UniversalB, BPTypical, Twisted, Additive };

std::string to_string(LawKind kind);

// F(x, y) as a bivariate series of total dimension -1 over the ring C.
template <class C>
struct BasicFormalGroupLaw {
    PowerSeries<C> F;
    LawKind kind;
};

using FormalGroupLaw = BasicFormalGroupLaw<GradedPoly>;

// x + b_1 x^2 + b_2 x^3 + ... up to x^{x_bound}, b_n dropped when n > dim_bound.
Series universal_exp(int x_bound, int dim_bound);
// Compositional inverse of universal_exp: x + sum m_n x^{n+1}.
Series universal_log(int x_bound, int dim_bound);

// exp(log x + log y) for a logarithm with leading coefficient 1.
FormalGroupLaw fgl_from_log(const Series& log, LawKind kind);

// The law over Z[b_1, b_2, ...]; throws LocalityFailure if any coefficient
// fails to be an integer.
FormalGroupLaw universal_fgl(int x_bound, int dim_bound);

FormalGroupLaw additive_fgl(int x_bound, const GradedPoly& zero);

struct FglAxiomReport {
    bool left_unit = false;
    bool right_unit = false;
    bool commutative = false;
    std::optional<bool> associative; // only when requested
    bool pass() const { return left_unit && right_unit && commutative && associative.value_or(true); }
};

// Unit and commutativity exactly; associativity F(F(x,y),z) = F(x,F(y,z))
// through total degree x_bound when verify_assoc is set.
template <class C>
FglAxiomReport check_fgl_axioms(const BasicFormalGroupLaw<C>& law, bool verify_assoc);

// Coefficients at a particular x^i y^j.
template <class C>
C fgl_coefficient(const BasicFormalGroupLaw<C>& law, int i, int j)
{
    return law.F.coefficient(i, j);
}

// F(a, b) for a, b univariate series (in the same variable) with zero
// constant terms.
template <class C>
PowerSeries<C> formal_sum(const BasicFormalGroupLaw<C>& law, const PowerSeries<C>& a,
                          const PowerSeries<C>& b)
{
    if (!a.has_zero_constant_term() || !b.has_zero_constant_term())
        throw PreconditionError("formal_sum: arguments must have zero constant term");
    a.require_univariate("formal_sum");
    return substitute_bivariate(law.F, a, b, a.one_like(), [](const C& c) { return c; });
}

// F(a, b) for t-series a, b (t-valuation >= 1) over a GradedPoly law.
TLaurent formal_sum(const FormalGroupLaw& law, const TLaurent& a, const TLaurent& b);

// F(x, s) as a series in x whose coefficients are t-series: x +_F s.
LaurentSeries formal_sum_with_constant(const FormalGroupLaw& law, const TLaurent& s, int x_bound);

// [n](a) by iterated formal sums: [0] = 0, [n] = F([n-1], a).
template <class C>
PowerSeries<C> formal_multiple(const BasicFormalGroupLaw<C>& law, int n, const PowerSeries<C>& a)
{
    if (n < 0)
        throw PreconditionError("formal_multiple: n must be >= 0");
    PowerSeries<C> acc = a.zero_like();
    for (int i = 0; i < n; ++i)
        acc = formal_sum(law, acc, a);
    return acc;
}

TLaurent formal_multiple(const FormalGroupLaw& law, int n, const TLaurent& a);

// [n](t) for any integer n through a logarithm: exp(n * log t), as a t-series.
TLaurent formal_multiple_via_log(const Series& log, int n, int x_bound);

// [P^n] := (n+1) m_n in the Hurewicz coordinates.
GradedPoly projective_space_class(int n, const Series& log);

struct CharacteristicNumbers {
    // Every dimension-d monomial, zero entries included, in canonical order.
    std::map<Monomial, Rational, MonomialOrder> numbers;
    bool integral = true;
};

CharacteristicNumbers characteristic_numbers(const GradedPoly& c, int dim);

} // namespace fglforge

#endif
