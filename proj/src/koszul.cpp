#include "fglforge/koszul.hpp"

#include <algorithm>
#include <functional>

#include "fglforge/errors.hpp"

namespace fglforge {

namespace {

constexpr int kMaxN = 16;

void subsets_of_size(int universe, int size, std::vector<IndexSet>& out)
{
    IndexSet cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == size) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < universe; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

IndexSet without(const IndexSet& I, std::size_t k)
{
    IndexSet r;
    for (std::size_t i = 0; i < I.size(); ++i)
        if (i != k)
            r.push_back(I[i]);
    return r;
}

std::size_t position(const std::vector<IndexSet>& basis, const IndexSet& I)
{
    return static_cast<std::size_t>(std::lower_bound(basis.begin(), basis.end(), I) - basis.begin());
}

} // namespace

int KoszulComplex::degree(const IndexSet& I) const
{
    int d = 0;
    for (int i : I)
        d += generator_dims.at(static_cast<std::size_t>(i));
    return d;
}

std::vector<std::vector<GradedPoly>> KoszulComplex::differential(int j) const
{
    if (j < 1 || j > top_index())
        throw PreconditionError("koszul differential index out of range: " + std::to_string(j));
    const auto& src = bases[static_cast<std::size_t>(j)];
    const auto& dst = bases[static_cast<std::size_t>(j - 1)];
    const GradedPoly zero = generators.front().zero_like();
    std::vector<std::vector<GradedPoly>> m(dst.size(), std::vector<GradedPoly>(src.size(), zero));
    for (std::size_t c = 0; c < src.size(); ++c) {
        const IndexSet& I = src[c];
        for (std::size_t k = 0; k < I.size(); ++k) {
            const GradedPoly& v = generators[static_cast<std::size_t>(I[k])];
            m[position(dst, without(I, k))][c] += k % 2 == 0 ? v : -v;
        }
    }
    return m;
}

std::vector<GradedPoly> KoszulComplex::augmentation() const
{
    std::vector<GradedPoly> row;
    for (const auto& I : bases.front())
        row.push_back(generators[static_cast<std::size_t>(I.front())]);
    return row;
}

KoszulComplex build_koszul(int n, int dim_bound)
{
    if (n < 3 || n > kMaxN)
        throw ConfigError("koszul: n must lie in [3, " + std::to_string(kMaxN) + "]");
    const int top_dim = (1 << (n - 2)) - 1;
    if (dim_bound < top_dim)
        throw TruncationInsufficient("koszul: v_" + std::to_string(n - 2) + " needs dimension bound " +
                                     std::to_string(top_dim));
    KoszulComplex K;
    K.n = n;
    K.dim_bound = dim_bound;
    const Alphabet a = Alphabet::v(2);
    K.generators.push_back(GradedPoly::constant(2, a, dim_bound));
    K.generator_dims.push_back(0);
    for (int i = 1; i <= n - 2; ++i) {
        K.generators.push_back(GradedPoly::generator(i, a, dim_bound));
        K.generator_dims.push_back(a.generator_dim(i));
    }
    for (int j = 0; j <= n - 2; ++j) {
        K.bases.emplace_back();
        subsets_of_size(n - 1, j + 1, K.bases.back());
    }
    return K;
}

bool koszul_d_squared_zero(const KoszulComplex& K)
{
    const auto aug = K.augmentation();
    if (K.top_index() >= 1) {
        const auto d1 = K.differential(1);
        for (std::size_t c = 0; c < d1.front().size(); ++c) {
            GradedPoly acc = aug.front().zero_like();
            for (std::size_t r = 0; r < aug.size(); ++r)
                acc += aug[r] * d1[r][c];
            if (!acc.is_zero())
                return false;
        }
    }
    for (int j = 2; j <= K.top_index(); ++j) {
        const auto lo = K.differential(j - 1);
        const auto hi = K.differential(j);
        for (std::size_t r = 0; r < lo.size(); ++r)
            for (std::size_t c = 0; c < hi.front().size(); ++c) {
                GradedPoly acc = aug.front().zero_like();
                for (std::size_t k = 0; k < hi.size(); ++k)
                    if (!lo[r][k].is_zero() && !hi[k][c].is_zero())
                        acc += lo[r][k] * hi[k][c];
                if (!acc.is_zero())
                    return false;
            }
    }
    return true;
}

namespace {

// Exponent vectors over v_1..v_{g} of weighted dimension exactly s.
void exponent_vectors(const std::vector<int>& dims, int s, std::vector<std::vector<int>>& out)
{
    std::vector<int> cur(dims.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == dims.size()) {
            if (left == 0)
                out.push_back(cur);
            return;
        }
        for (int e = 0; e * dims[i] <= left; ++e) {
            cur[i] = e;
            rec(i + 1, left - e * dims[i]);
        }
        cur[i] = 0;
    };
    rec(0, s);
}

} // namespace

ExactnessReport koszul_exactness(const KoszulComplex& K, int stratum_bound)
{
    ExactnessReport report;
    const std::vector<int> dims(K.generator_dims.begin() + 1, K.generator_dims.end());
    const int top = K.top_index();
    for (int s = 0; s <= stratum_bound; ++s) {
        StratumExactness st;
        st.dimension = s;
        std::vector<std::vector<int>> vecs;
        exponent_vectors(dims, s, vecs);
        for (const auto& a : vecs) {
            // Block of multidegree a. Level -1 is the ring itself (one basis
            // element, the monomial v^a); level j >= 0 is term j.
            std::vector<std::vector<IndexSet>> block(static_cast<std::size_t>(top + 1));
            for (int j = 0; j <= top; ++j)
                for (const auto& I : K.bases[static_cast<std::size_t>(j)]) {
                    bool ok = true;
                    for (int i : I)
                        if (i > 0 && a[static_cast<std::size_t>(i - 1)] == 0)
                            ok = false;
                    if (ok)
                        block[static_cast<std::size_t>(j)].push_back(I);
                }
            // matrix of level j -> level j-1 restricted to the block
            auto matrix = [&](int j) {
                const auto& src = block[static_cast<std::size_t>(j)];
                if (j == 0) {
                    ZpMatrix m(1, std::vector<Rational>(src.size(), Rational(0)));
                    for (std::size_t c = 0; c < src.size(); ++c)
                        m[0][c] = src[c].front() == 0 ? 2 : 1;
                    return m;
                }
                const auto& dst = block[static_cast<std::size_t>(j - 1)];
                ZpMatrix m(dst.size(), std::vector<Rational>(src.size(), Rational(0)));
                for (std::size_t c = 0; c < src.size(); ++c)
                    for (std::size_t k = 0; k < src[c].size(); ++k) {
                        const Rational sign = k % 2 == 0 ? 1 : -1;
                        m[position(dst, without(src[c], k))][c] = sign * (src[c][k] == 0 ? 2 : 1);
                    }
                return m;
            };
            std::vector<int> ranks(static_cast<std::size_t>(top + 2), 0);
            std::vector<bool> saturated(static_cast<std::size_t>(top + 2), true);
            for (int j = 0; j <= top; ++j) {
                const ZpMatrix m = matrix(j);
                if (m.empty() || m.front().empty())
                    continue;
                const SmithValuations sv = smith_valuations(m, 2);
                ranks[static_cast<std::size_t>(j)] = sv.rank;
                saturated[static_cast<std::size_t>(j)] = sv.saturated();
            }
            for (int j = 0; j <= top; ++j) {
                const int size = static_cast<int>(block[static_cast<std::size_t>(j)].size());
                const int in_rank = j < top ? ranks[static_cast<std::size_t>(j + 1)] : 0;
                if (ranks[static_cast<std::size_t>(j)] + in_rank != size)
                    st.over_q = false;
                if (j < top && !saturated[static_cast<std::size_t>(j + 1)])
                    st.over_zp = false;
            }
        }
        st.over_zp = st.over_zp && st.over_q;
        report.pass = report.pass && st.over_zp;
        report.strata.push_back(st);
    }
    return report;
}

TorReport tor_with_residue(const KoszulComplex& K)
{
    TorReport r;
    const int top = K.top_index();
    // residue of a ring element: constant term mod 2 (all v_i map to zero)
    auto reduce = [](const std::vector<std::vector<GradedPoly>>& m) {
        ZpMatrix out;
        for (const auto& row : m) {
            std::vector<Rational> rr;
            for (const auto& x : row)
                rr.push_back(x.constant_term());
            out.push_back(std::move(rr));
        }
        return out;
    };
    std::vector<int> dranks(static_cast<std::size_t>(top + 2), 0);
    for (int j = 1; j <= top; ++j) {
        const int rk = rank_mod2(reduce(K.differential(j)));
        dranks[static_cast<std::size_t>(j)] = rk;
        if (rk != 0)
            r.differentials_vanish = false;
    }
    for (int j = 0; j <= top; ++j) {
        const int tor = K.rank(j) - dranks[static_cast<std::size_t>(j)] - dranks[static_cast<std::size_t>(j + 1)];
        r.ranks[j] = tor;
        if (tor != 0)
            r.top_nonzero = j;
    }
    return r;
}

int syzygy_codim(int n, const IndexSet& I)
{
    int c = (1 << (n - 1)) - 1;
    for (int i : I)
        c -= (1 << i) - 1;
    return c;
}

SyzygyReport syzygy_report(int n)
{
    if (n < 3 || n > kMaxN)
        throw ConfigError("syzygy report: n must lie in [3, " + std::to_string(kMaxN) + "]");
    SyzygyReport r;
    r.n = n;
    const int hi = (1 << (n - 1)) - 1;
    for (int size = 1; size <= n - 1; ++size) {
        std::vector<IndexSet> subsets;
        subsets_of_size(n - 1, size, subsets);
        for (auto& I : subsets) {
            SyzygyRow row;
            row.j = size - 1;
            row.codim = syzygy_codim(n, I);
            row.in_claimed_range = size <= row.codim && row.codim <= hi;
            row.geq_hom_index = row.codim >= row.j;
            row.I = std::move(I);
            r.all_in_range = r.all_in_range && row.in_claimed_range;
            r.rows.push_back(std::move(row));
        }
    }
    r.top_codim_formula = r.rows.back().codim;
    r.top_codim_stated = n - 2;
    r.top_codim_discrepancy = r.top_codim_formula != r.top_codim_stated;
    return r;
}

} // namespace fglforge
