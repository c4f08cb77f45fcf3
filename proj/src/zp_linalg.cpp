#include "fglforge/zp_linalg.hpp"

#include <algorithm>
#include <utility>

#include "fglforge/errors.hpp"

namespace fglforge {

namespace {

void require_local(const ZpMatrix& m, long p)
{
    for (const auto& row : m)
        for (const auto& x : row)
            if (!is_p_local(x, p))
                throw PreconditionError("Z_(p) matrix entry is not p-local: " + to_string(x));
}

std::size_t cols_of(const ZpMatrix& m)
{
    return m.empty() ? 0 : m.front().size();
}

// In-place Smith reduction. rhs (if given) receives the row operations.
// Returns the pivot valuations in pivot order.
std::vector<int> reduce(ZpMatrix& m, long p, std::vector<Rational>* rhs)
{
    const auto up = static_cast<unsigned long>(p);
    const std::size_t rows = m.size();
    const std::size_t cols = cols_of(m);
    std::vector<int> vals;
    for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
        int best = kInfiniteValuation;
        std::size_t bi = k;
        std::size_t bj = k;
        for (std::size_t i = k; i < rows && best > 0; ++i)
            for (std::size_t j = k; j < cols; ++j)
                if (m[i][j] != 0) {
                    const int v = padic_valuation(m[i][j], up);
                    if (v < best) {
                        best = v;
                        bi = i;
                        bj = j;
                        if (v == 0)
                            break;
                    }
                }
        if (best == kInfiniteValuation)
            break;
        std::swap(m[k], m[bi]);
        if (rhs)
            std::swap((*rhs)[k], (*rhs)[bi]);
        if (bj != k)
            for (auto& row : m)
                std::swap(row[k], row[bj]);
        const Rational piv = m[k][k];
        for (std::size_t i = k + 1; i < rows; ++i) {
            if (m[i][k] == 0)
                continue;
            const Rational f = m[i][k] / piv;
            for (std::size_t j = k; j < cols; ++j)
                if (m[k][j] != 0)
                    m[i][j] -= f * m[k][j];
            if (rhs)
                (*rhs)[i] -= f * (*rhs)[k];
        }
        for (std::size_t j = k + 1; j < cols; ++j)
            m[k][j] = 0; // column operations only touch row k below the pivot, already cleared
        vals.push_back(best);
    }
    return vals;
}

} // namespace

SmithValuations smith_valuations(ZpMatrix m, long p)
{
    require_local(m, p);
    SmithValuations r;
    r.valuations = reduce(m, p, nullptr);
    r.rank = static_cast<int>(r.valuations.size());
    std::sort(r.valuations.begin(), r.valuations.end());
    return r;
}

int rank_over_q(const ZpMatrix& m, long p)
{
    return smith_valuations(m, p).rank;
}

bool in_zp_column_span(ZpMatrix m, std::vector<Rational> w, long p)
{
    require_local(m, p);
    if (w.size() != m.size())
        throw PreconditionError("in_zp_column_span: vector length does not match the matrix");
    for (const auto& x : w)
        if (!is_p_local(x, p))
            return false;
    const auto up = static_cast<unsigned long>(p);
    const std::vector<int> vals = reduce(m, p, &w);
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] == 0)
            continue;
        if (k >= vals.size() || padic_valuation(w[k], up) < vals[k])
            return false;
    }
    return true;
}

int rank_mod2(const ZpMatrix& m)
{
    std::vector<std::vector<int>> a;
    for (const auto& row : m) {
        std::vector<int> r;
        for (const auto& x : row) {
            if (x.get_den() != 1)
                throw PreconditionError("rank_mod2: entries must be integers");
            r.push_back(mpz_odd_p(x.get_num_mpz_t()) ? 1 : 0);
        }
        a.push_back(std::move(r));
    }
    const std::size_t cols = cols_of(m);
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
        std::size_t piv = row;
        while (piv < a.size() && a[piv][c] == 0)
            ++piv;
        if (piv == a.size())
            continue;
        std::swap(a[row], a[piv]);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (i != row && a[i][c])
                for (std::size_t j = c; j < cols; ++j)
                    a[i][j] ^= a[row][j];
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace fglforge
