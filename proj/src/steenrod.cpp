#include "fglforge/steenrod.hpp"

#include <algorithm>
#include <set>

namespace fglforge {

namespace {

long ipow(long p, int k)
{
    long r = 1;
    for (int i = 0; i < k; ++i)
        r *= p;
    return r;
}

int top_dimension(const GradedPoly& x)
{
    return x.is_zero() ? 0 : x.terms().rbegin()->first.dimension(x.alphabet());
}

void require_bp_input(const SteenrodContext& sctx, const GradedPoly& x, const char* op)
{
    if (!(x.alphabet() == sctx.bp().v_alphabet()))
        throw AlphabetMismatch(std::string(op) + ": element must be in the v-alphabet at p = " +
                               std::to_string(sctx.prime()));
    if (!x.is_p_local(sctx.prime()))
        throw PreconditionError(std::string(op) + ": element is not p-local: " + x.to_string());
}

TLaurent lift(const GradedPoly& c)
{
    return TLaurent::constant(c);
}

CongruenceReport congruence(const TLaurent& diff, int m, int low, int high)
{
    CongruenceReport r;
    r.modulus_power = m;
    r.difference = diff;
    for (int k = low; k <= high; ++k) {
        const bool ok = ideal_membership(diff.coefficient(k), m);
        r.per_degree[k] = ok;
        r.pass = r.pass && ok;
    }
    return r;
}

} // namespace

std::vector<long> default_coset_reps(long p)
{
    std::vector<long> reps;
    for (long i = 1; i < p; ++i)
        reps.push_back(i);
    return reps;
}

void validate_coset_reps(long p, const std::vector<long>& reps)
{
    if (static_cast<long>(reps.size()) != p - 1)
        throw ConfigError("coset representatives: need exactly " + std::to_string(p - 1) + " entries");
    std::set<long> residues;
    for (long i : reps) {
        const long r = ((i % p) + p) % p;
        if (r == 0)
            throw ConfigError("coset representative " + std::to_string(i) + " is divisible by p");
        residues.insert(r);
    }
    if (static_cast<long>(residues.size()) != p - 1)
        throw ConfigError("coset representatives repeat a residue class");
}

SteenrodContext::SteenrodContext(std::shared_ptr<const BPContext> ctx, std::vector<long> coset_reps)
    : ctx_(std::move(ctx)), reps_(std::move(coset_reps)), gamma_(1, 1, TLaurent()), gamma_inverse_(1, 1, TLaurent()),
      twisted_log_(1, 1, TLaurent())
{
    if (!ctx_)
        throw ConfigError("SteenrodContext needs a BP context");
    const long p = ctx_->prime();
    const int D = ctx_->dim_bound();
    if (reps_.empty())
        reps_ = default_coset_reps(p);
    validate_coset_reps(p, reps_);
    for (long i : reps_)
        epsilon_ *= i;

    const int K = ctx_->max_generator();
    x_bound_ = static_cast<int>(ipow(p, K));
    const int N = x_bound_;
    const TLaurent tz(ctx_->v_zero());
    const Series log = ctx_->bp_log(D + 1);

    // x * prod_l (x +_BP [i_l](t))
    LaurentSeries prod = LaurentSeries::constant(1, N, tz.one_like());
    for (long i : reps_) {
        const TLaurent it = formal_multiple_via_log(log, static_cast<int>(i), D + 1);
        prod = prod * formal_sum_with_constant(ctx_->bp_law(), it, N);
    }
    gamma_ = LaurentSeries::variable(1, N, tz) * prod;
    gamma_lead_ = gamma_.coefficient(1);
    gamma_inverse_ = series_invert_composition(gamma_);

    const LaurentSeries log_t = log.truncated(N).map_coefficients(tz, lift);
    twisted_log_ = gamma_lead_ * series_compose(log_t, gamma_inverse_);

    st_lambda_.push_back(tz.one_like());
    st_v_.push_back(tz.constant_like(p));
    for (int k = 1; k <= K; ++k) {
        st_lambda_.push_back(twisted_log_.coefficient(static_cast<int>(ipow(p, k))));
        // v_k = p lambda_k - sum_{i=1}^{k-1} lambda_i v_{k-i}^{p^i}
        TLaurent vk = st_lambda_[k] * Rational(p);
        for (int i = 1; i < k; ++i)
            vk -= st_lambda_[i] * st_v_[k - i].pow(static_cast<unsigned>(ipow(p, i)));
        if (!vk.is_p_local(p))
            throw LocalityFailure("St(v_" + std::to_string(k) + ") is not p-local");
        st_v_.push_back(vk);
    }
    p_series_ = fglforge::p_series(*ctx_);
}

const LaurentSeries& steenrod_gamma(const SteenrodContext& sctx)
{
    return sctx.gamma();
}

OperationValue steenrod_on_coefficients(const SteenrodContext& sctx, const GradedPoly& x,
                                        std::optional<WindowPolicy> window)
{
    require_bp_input(sctx, x, "steenrod_on_coefficients");
    const WindowPolicy w = window.value_or(sctx.default_window());
    const long p = sctx.prime();
    const int D = sctx.bp().dim_bound();
    const int pd = static_cast<int>(p) * top_dimension(x);
    if (pd + w.top > D)
        throw TruncationInsufficient("St needs dimension bound " + std::to_string(pd + w.top) + ", have " +
                                     std::to_string(D));
    const TLaurent tz(sctx.bp().v_zero());
    const GradedPoly xd = x.with_bound(D);
    const TLaurent st = evaluate<TLaurent>(
        xd, [&](int k) { return sctx.st_generator(k); }, [&](const Rational& c) { return tz.constant_like(c); });
    return {st.restricted(-pd - w.below, w.top), pd};
}

OperationValue symmetric_phi(const SteenrodContext& sctx, const GradedPoly& x, std::optional<WindowPolicy> window)
{
    require_bp_input(sctx, x, "symmetric_phi");
    const WindowPolicy w = window.value_or(sctx.default_window());
    const long p = sctx.prime();
    const TLaurent tz(sctx.bp().v_zero());
    if (x.is_zero())
        return {tz.restricted(-w.below, 0), 0};
    const auto d = x.dimension();
    if (!d)
        throw PreconditionError("symmetric_phi: element is not homogeneous");
    if (*d <= 0)
        throw PreconditionError("symmetric_phi: element must have positive dimension");
    const int pd = static_cast<int>(p) * *d;
    const int low = -pd - w.below;

    const OperationValue st = steenrod_on_coefficients(sctx, x, WindowPolicy{w.below, 0});
    const GradedPoly xd = x.with_bound(sctx.bp().dim_bound());
    const TLaurent target = TLaurent::constant(xd.pow(static_cast<unsigned>(p))) - st.value;
    const TLaurent& ps = sctx.p_series();

    // p phi_j = target_j - sum_{i >= 1} a_i phi_{j-i}
    std::vector<GradedPoly> phi;
    TLaurent out(tz.coefficient_zero(), low, 0);
    for (int j = low; j <= 0; ++j) {
        GradedPoly acc = target.coefficient(j);
        for (int i = 1; j - i >= low; ++i) {
            const GradedPoly& prev = phi[static_cast<std::size_t>(j - i - low)];
            if (!prev.is_zero())
                acc -= ps.coefficient(i) * prev;
        }
        GradedPoly pj = acc * Rational(1, p);
        if (!pj.is_p_local(p))
            throw DivisibilityFailure("Phi: coefficient at t^" + std::to_string(j) + " is not p-local: " +
                                      pj.to_string());
        out.add_coefficient(j, pj);
        phi.push_back(std::move(pj));
    }
    return {out, pd};
}

OperationValue slice_leq(const OperationValue& v, int bound)
{
    return {v.value.slice_leq(bound), v.total_dimension};
}

CongruenceReport verify_prop_stp(const SteenrodContext& sctx, const std::vector<int>& monomial)
{
    const BPContext& bp = sctx.bp();
    const long p = sctx.prime();
    GradedPoly x = bp.v_zero().one_like();
    TLaurent rhs = TLaurent(bp.v_zero()).one_like();
    int d = 0;
    for (int k : monomial) {
        if (k < 0)
            throw PreconditionError("verify_prop_stp: generator index must be >= 0");
        x = x * bp.v(k);
        rhs = rhs * p_series_leq(bp, k);
        d += static_cast<int>(ipow(p, k) - 1);
    }
    const WindowPolicy w = sctx.default_window();
    const OperationValue st = steenrod_on_coefficients(sctx, x, w);
    const int pd = static_cast<int>(p) * d;
    const TLaurent diff = st.value - rhs.shifted(-pd);
    return congruence(diff, static_cast<int>(monomial.size()) + 1, -pd - w.below, w.top);
}

CongruenceReport verify_coset_independence(const SteenrodContext& first, const SteenrodContext& second,
                                           const GradedPoly& x)
{
    if (first.prime() != second.prime() || first.bp().dim_bound() != second.bp().dim_bound())
        throw ConfigError("coset independence: contexts differ in prime or dimension bound");
    require_bp_input(first, x, "verify_coset_independence");
    if (!ideal_membership(x, 1))
        throw PreconditionError("verify_coset_independence: element is not in I(p)");
    const WindowPolicy w = first.default_window();
    const OperationValue a = steenrod_on_coefficients(first, x, w);
    const OperationValue b = steenrod_on_coefficients(second, x, w);
    const int pd = a.total_dimension;
    return congruence(a.value - b.value, 2, -pd - w.below, w.top);
}

CongruenceReport verify_cor_stid(const SteenrodContext& sctx, const GradedPoly& x, int m)
{
    require_bp_input(sctx, x, "verify_cor_stid");
    const auto d = x.dimension();
    if (!x.is_zero() && !d)
        throw PreconditionError("verify_cor_stid: element is not homogeneous");
    if (!ideal_membership(x, m))
        throw PreconditionError("verify_cor_stid: element is not in I(p)^" + std::to_string(m));
    const int deg = -d.value_or(0) * static_cast<int>(sctx.prime() - 1);
    const OperationValue st = steenrod_on_coefficients(sctx, x, WindowPolicy{0, deg});
    const TLaurent diff =
        TLaurent::monomial(st.value.coefficient(deg) - x.with_bound(sctx.bp().dim_bound()), deg);
    return congruence(diff, m + 1, deg, deg);
}

CongruenceReport verify_st_nonpositive(const SteenrodContext& sctx, const GradedPoly& x, int m)
{
    require_bp_input(sctx, x, "verify_st_nonpositive");
    if (!ideal_membership(x, m))
        throw PreconditionError("verify_st_nonpositive: element is not in I(p)^" + std::to_string(m));
    const WindowPolicy w = sctx.default_window();
    const OperationValue st = steenrod_on_coefficients(sctx, x, w);
    TLaurent positive(st.value.coefficient_zero());
    for (const auto& [k, c] : st.value.coeffs())
        if (k > 0)
            positive.add_coefficient(k, c);
    return congruence(positive, m + 1, 1, w.top);
}

SymImReport verify_prop_symim(const SteenrodContext& sctx, const std::vector<GradedPoly>& samples, int m)
{
    if (m < 0)
        throw PreconditionError("verify_prop_symim: m must be >= 0");
    SymImReport r;
    r.m = m;
    for (const auto& s : samples) {
        require_bp_input(sctx, s, "verify_prop_symim");
        if (!ideal_membership(s, m + 1))
            throw PreconditionError("verify_prop_symim: sample not in I(p)^" + std::to_string(m + 1) + ": " +
                                    s.to_string());
        SymImSample out{s, symmetric_phi(sctx, s), false};
        out.pass = ideal_membership(out.phi.value, m);
        r.pass = r.pass && out.pass;
        r.samples.push_back(std::move(out));
    }
    return r;
}

TwistedLogReport verify_twisted_log(const SteenrodContext& sctx, int x_bound)
{
    if (x_bound < 1 || x_bound > sctx.x_bound())
        throw TruncationInsufficient("twisted log check: x bound " + std::to_string(x_bound) +
                                     " exceeds the available " + std::to_string(sctx.x_bound()));
    const TLaurent tz(sctx.bp().v_zero());
    const LaurentSeries g = sctx.gamma().truncated(x_bound);
    const LaurentSeries gi = sctx.gamma_inverse().truncated(x_bound);
    const LaurentSeries u = gi.as_bivariate(0);
    const LaurentSeries v = gi.as_bivariate(1);
    const LaurentSeries one = LaurentSeries::constant(2, x_bound, tz.one_like());
    const LaurentSeries inner = substitute_bivariate(sctx.bp().bp_law().F, u, v, one, [&](const GradedPoly& c) {
        return LaurentSeries::constant(2, x_bound, lift(c));
    });
    const LaurentSeries twisted = series_compose(g, inner);
    // invariant differential 1 / (d/dy F'(x, y))|_{y=0}
    const LaurentSeries omega = twisted.derivative(1).at_y_zero().reciprocal();

    TwistedLogReport r;
    r.x_bound = x_bound;
    r.via_bivariate = omega.integral().truncated(x_bound);
    r.via_composition = sctx.twisted_log().truncated(x_bound);
    r.pass = (r.via_bivariate - r.via_composition).is_zero();
    return r;
}

} // namespace fglforge
