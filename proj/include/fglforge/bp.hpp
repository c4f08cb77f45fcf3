#ifndef FGLFORGE_BP_HPP
#define FGLFORGE_BP_HPP

#include <vector>

#include "fglforge/fgl.hpp"

namespace fglforge {

// An element of BP (x) Q in the v-alphabet. Genuine BP elements are p-local.
struct BPElement {
    GradedPoly value;

    long prime() const { return value.alphabet().prime; }
    bool p_local() const { return value.is_p_local(prime()); }
};

struct HazewinkelGenerator {
    int k = 0;
    GradedPoly in_b; // Hurewicz coordinates
    GradedPoly in_v; // the generator v_k itself
};

// Everything BP needs at a prime p up to dimension dim_bound: the
// logarithm coefficients lambda_k = m_{p^k - 1}, the Hazewinkel generators
// and the coordinate changes between b, m, lambda and v. Immutable once built.
class BPContext {
public:
    BPContext(long p, int dim_bound);

    long prime() const { return p_; }
    int dim_bound() const { return dim_bound_; }
    // Largest k with p^k - 1 <= dim_bound.
    int max_generator() const { return max_k_; }
    Alphabet v_alphabet() const { return Alphabet::v(p_); }
    GradedPoly v_zero() const { return GradedPoly(v_alphabet(), dim_bound_); }
    GradedPoly b_zero() const { return GradedPoly(Alphabet::b(), dim_bound_); }
    GradedPoly v(int k) const;

    // lambda_k in b-coordinates (= m_{p^k-1}) and in v-coordinates.
    const GradedPoly& lambda_b(int k) const { return lambda_b_.at(k); }
    const GradedPoly& lambda_v(int k) const { return lambda_v_.at(k); }

    const std::vector<HazewinkelGenerator>& generators() const { return gens_; }

    // Universal logarithm x + sum m_n x^{n+1} (b-alphabet) and b_n in m-coordinates.
    const Series& universal_log() const { return log_b_; }
    GradedPoly b_in_m(int n) const { return exp_m_.coefficient(n + 1); }

    // sum_k lambda_k x^{p^k} in v-coordinates up to x^{x_bound}.
    Series bp_log(int x_bound) const;
    // F_BP over the v-alphabet, total degree dim_bound + 1.
    const FormalGroupLaw& bp_law() const { return bp_law_; }

    GradedPoly to_m_coordinates(const GradedPoly& c) const;
    GradedPoly from_m_coordinates(const GradedPoly& c) const;
    GradedPoly v_to_b(const GradedPoly& x) const;

private:
    void require_dims(const GradedPoly& c, const char* op) const;

    long p_;
    int dim_bound_;
    int max_k_;
    Series log_b_;
    Series exp_m_;
    std::vector<GradedPoly> lambda_b_;
    std::vector<GradedPoly> lambda_v_;
    std::vector<HazewinkelGenerator> gens_;
    FormalGroupLaw bp_law_;
};

// Multiplicative projector on the Hurewicz image: m_n -> m_n when n + 1 is a
// power of p, m_n -> 0 otherwise.
GradedPoly quillen_project(const GradedPoly& c, const BPContext& ctx);

const std::vector<HazewinkelGenerator>& hazewinkel_generators(const BPContext& ctx);

FormalGroupLaw bp_fgl(const BPContext& ctx);

// [p](t)/t for F_BP: t-degrees 0..dim_bound, total dimension 0.
TLaurent p_series(const BPContext& ctx);

// p + v_1 t^{p-1} + ... + v_i t^{p^i - 1}
TLaurent p_series_leq(const BPContext& ctx, int i);

// Rewrites a p-typical element given in b-coordinates in terms of v_1, v_2, ...
BPElement to_v_basis(const GradedPoly& c, const BPContext& ctx);

// x in I(p)^m: each term c v^a needs ord_p(c) >= m - |a|.
bool ideal_membership(const GradedPoly& x, int m);
bool ideal_membership(const TLaurent& x, int m);

// Largest m with x in I(p)^m (kInfiniteValuation for 0).
int ideal_filtration(const GradedPoly& x);

struct NuElementReport {
    int k = 0;
    bool all_divisible_by_p = false;
    Rational additive_number;
    bool additive_not_divisible_by_p2 = false;
    bool integral = false;
    bool pass() const { return all_divisible_by_p && additive_not_divisible_by_p2; }
};

NuElementReport nu_element_report(const BPContext& ctx, int k);

} // namespace fglforge

#endif
