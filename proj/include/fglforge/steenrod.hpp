#ifndef FGLFORGE_STEENROD_HPP
#define FGLFORGE_STEENROD_HPP

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "fglforge/bp.hpp"

namespace fglforge {

// Value of St or Phi on a coefficient: a Laurent object in t over the
// v-alphabet. On an element of dimension d both operations produce total
// dimension p*d (t has dimension -1).
struct OperationValue {
    TLaurent value;
    int total_dimension = 0;
};

// t-degree window for St and Phi on an element of top dimension d:
// [-p*d - below, top]. Everything at t^k with p*d + k > dim bound is unknown,
// so top <= dim_bound - p*d is enforced.
struct WindowPolicy {
    int below;
    int top;
};

// Total Steenrod operation on BP at a prime, for one choice of coset
// representatives i_1..i_{p-1}:
//   gamma(x) = x * prod_l (x +_BP [i_l](t)),
//   St(lambda_k) = m'_{p^k - 1}, the coefficients of the normalized
//   logarithm gamma'(0) * log_BP(gamma^{-1}(x)) of the twisted law.
// Construction does all the series work; afterwards the object is immutable.
class SteenrodContext {
public:
    explicit SteenrodContext(std::shared_ptr<const BPContext> ctx, std::vector<long> coset_reps = {});

    const BPContext& bp() const { return *ctx_; }
    std::shared_ptr<const BPContext> bp_ptr() const { return ctx_; }
    long prime() const { return ctx_->prime(); }
    const std::vector<long>& coset_reps() const { return reps_; }
    // Product of the coset representatives.
    long epsilon() const { return epsilon_; }
    int x_bound() const { return x_bound_; }

    const LaurentSeries& gamma() const { return gamma_; }
    const LaurentSeries& gamma_inverse() const { return gamma_inverse_; }
    // x-linear coefficient of gamma: prod_l [i_l](t) = epsilon t^{p-1} (1 + ...).
    const TLaurent& gamma_lead() const { return gamma_lead_; }
    // Normalized logarithm of the twisted law, leading coefficient 1.
    const LaurentSeries& twisted_log() const { return twisted_log_; }
    const TLaurent& st_lambda(int k) const { return st_lambda_.at(k); }
    const TLaurent& st_generator(int k) const { return st_v_.at(k); }
    // [p](t)/t, cached for Phi.
    const TLaurent& p_series() const { return p_series_; }

    // Slack of p - 1 on both sides of [-p*d, 0].
    WindowPolicy default_window() const { return {static_cast<int>(prime()) - 1, static_cast<int>(prime()) - 1}; }

private:
    std::shared_ptr<const BPContext> ctx_;
    std::vector<long> reps_;
    long epsilon_ = 1;
    int x_bound_ = 1;
    LaurentSeries gamma_;
    LaurentSeries gamma_inverse_;
    TLaurent gamma_lead_;
    LaurentSeries twisted_log_;
    std::vector<TLaurent> st_lambda_;
    std::vector<TLaurent> st_v_;
    TLaurent p_series_;
};

// Default representatives (1, ..., p-1); throws ConfigError unless every
// nonzero residue appears exactly once.
std::vector<long> default_coset_reps(long p);
void validate_coset_reps(long p, const std::vector<long>& reps);

const LaurentSeries& steenrod_gamma(const SteenrodContext& sctx);

// St(x) on the given window (default_window() when absent). Throws
// TruncationInsufficient when the window reaches past the dimension bound.
OperationValue steenrod_on_coefficients(const SteenrodContext& sctx, const GradedPoly& x,
                                        std::optional<WindowPolicy> window = std::nullopt);

// Phi(x): the unique Laurent object in t-degrees <= 0 with
// ([p] * Phi)_{<=0} = (x^p - St(x))_{<=0}, solved from the lowest degree up.
// Throws DivisibilityFailure when a solved coefficient is not p-local.
// Only the lower slack of the window is used; the top is always 0.
OperationValue symmetric_phi(const SteenrodContext& sctx, const GradedPoly& x,
                             std::optional<WindowPolicy> window = std::nullopt);

OperationValue slice_leq(const OperationValue& v, int bound);

// Audit record for congruence checks: one entry per t-degree.
struct CongruenceReport {
    bool pass = true;
    int modulus_power = 0; // the m of I(p)^m
    std::map<int, bool> per_degree;
    TLaurent difference;
};

// St(prod v_{k_l}) == t^{-pd} prod [p]_{<=k_l}  (mod I(p)^{m+1})
CongruenceReport verify_prop_stp(const SteenrodContext& sctx, const std::vector<int>& monomial);

// St with two choices of representatives agree mod I(p)^2 on x in I(p).
CongruenceReport verify_coset_independence(const SteenrodContext& first, const SteenrodContext& second,
                                           const GradedPoly& x);

// The t^{-d(p-1)} coefficient of St(x) is x modulo I(p)^{m+1}, for x in I(p)^m.
CongruenceReport verify_cor_stid(const SteenrodContext& sctx, const GradedPoly& x, int m);

// Positive t-degree part of St(x) lies in I(p)^{m+1} for x in I(p)^m.
CongruenceReport verify_st_nonpositive(const SteenrodContext& sctx, const GradedPoly& x, int m);

struct SymImSample {
    GradedPoly sample;
    OperationValue phi;
    bool pass = false;
};

struct SymImReport {
    bool pass = true;
    int m = 0;
    std::vector<SymImSample> samples;
};

// Phi(I(p)^{m+1}) lies in I(p)^m [t^{-1}].
SymImReport verify_prop_symim(const SteenrodContext& sctx, const std::vector<GradedPoly>& samples, int m);

struct TwistedLogReport {
    bool pass = false;
    int x_bound = 0;
    LaurentSeries via_composition{1, 1, TLaurent()};
    LaurentSeries via_bivariate{1, 1, TLaurent()};
};

// Builds F'(u, v) = gamma(F_BP(gamma^{-1} u, gamma^{-1} v)) bivariately,
// takes its logarithm through the invariant differential 1 / d_2 F'(x, 0),
// and compares with the normalized log_BP o gamma^{-1}.
TwistedLogReport verify_twisted_log(const SteenrodContext& sctx, int x_bound);

} // namespace fglforge

#endif
