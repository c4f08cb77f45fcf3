#ifndef FGLFORGE_TLAURENT_HPP
#define FGLFORGE_TLAURENT_HPP

#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "fglforge/graded_poly.hpp"

namespace fglforge {

// Finitely supported Laurent object in t (dimension -1) with GradedPoly
// coefficients. The window [low, high] is part of the value:
//   - low is a floor: no coefficient may live below it (WindowOverflow);
//   - high is the retained precision: coefficients above it are dropped,
//     and products only keep the degrees that are determined by both factors.
// kUnbounded means "exact": with dimension-truncated coefficients a
// homogeneous object has only finitely many nonzero coefficients anyway.
class TLaurent {
public:
    explicit TLaurent(GradedPoly zero = GradedPoly(), int low = -kUnbounded, int high = kUnbounded);

    static TLaurent constant(const GradedPoly& c);
    // c * t^k
    static TLaurent monomial(const GradedPoly& c, int k);

    TLaurent zero_like() const { return TLaurent(zero_, low_, high_); }
    TLaurent one_like() const { return constant(zero_.one_like()); }
    TLaurent constant_like(const Rational& c) const { return constant(zero_.constant_like(c)); }

    const GradedPoly& coefficient_zero() const { return zero_; }
    const Alphabet& alphabet() const { return zero_.alphabet(); }
    int dim_bound() const { return zero_.dim_bound(); }
    int low() const { return low_; }
    int high() const { return high_; }
    const std::map<int, GradedPoly>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<int> valuation() const;
    std::optional<int> top_degree() const;
    GradedPoly coefficient(int k) const;
    void add_coefficient(int k, const GradedPoly& c);

    // Total dimension T when every coefficient at t^k is homogeneous of
    // dimension T + k (t carries dimension -1). nullopt for zero or mixed.
    std::optional<int> total_dimension() const;
    bool is_homogeneous_of(int total_dim) const;
    bool is_p_local(long p) const;

    TLaurent operator-() const;
    TLaurent& operator+=(const TLaurent& o);
    TLaurent& operator-=(const TLaurent& o);
    TLaurent& operator*=(const Rational& c);

    friend TLaurent operator+(TLaurent a, const TLaurent& b) { return a += b; }
    friend TLaurent operator-(TLaurent a, const TLaurent& b) { return a -= b; }
    friend TLaurent operator*(const TLaurent& a, const TLaurent& b);
    friend TLaurent operator*(TLaurent a, const Rational& c) { return a *= c; }
    friend TLaurent operator*(const Rational& c, TLaurent a) { return a *= c; }
    friend TLaurent operator*(const GradedPoly& c, const TLaurent& a);

    // Coefficients compared; windows are bookkeeping and ignored.
    friend bool operator==(const TLaurent& a, const TLaurent& b);

    // Multiplication by t^k.
    TLaurent shifted(int k) const;
    // Terms of t-degree <= bound; the result's precision becomes exact above
    // the bound only if the input was known there (high is kept otherwise).
    TLaurent slice_leq(int bound) const;
    // Re-window: mass below low raises WindowOverflow, mass above high is dropped.
    TLaurent restricted(int low, int high) const;
    TLaurent with_dim_bound(int dim_bound) const;
    TLaurent pow(unsigned n) const;

    // Multiplicative inverse of c*t^k*(1 + tail) with c a nonzero scalar
    // (a p-local unit when the alphabet carries a prime). The tail must be
    // nilpotent under dimension truncation unless high is finite.
    TLaurent inverse() const;

    std::string to_string() const;

private:
    GradedPoly zero_;
    std::map<int, GradedPoly> coeffs_;
    int low_;
    int high_;
};

TLaurent tlaurent_mul_invert(const TLaurent& a);

std::ostream& operator<<(std::ostream& os, const TLaurent& a);

} // namespace fglforge

#endif
