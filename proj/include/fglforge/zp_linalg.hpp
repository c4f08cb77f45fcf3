#ifndef FGLFORGE_ZP_LINALG_HPP
#define FGLFORGE_ZP_LINALG_HPP

#include <vector>

#include "fglforge/rational.hpp"

namespace fglforge {

// Dense matrix over Z_(p), row major; entries must be p-local.
using ZpMatrix = std::vector<std::vector<Rational>>;

struct SmithValuations {
    int rank = 0;
    // p-adic valuations of the elementary divisors, ascending.
    std::vector<int> valuations;
    bool saturated() const
    {
        for (int v : valuations)
            if (v != 0)
                return false;
        return true;
    }
};

// Elementary divisors of m over the DVR Z_(p): repeatedly pivot on an entry
// of least valuation and clear its row and column.
SmithValuations smith_valuations(ZpMatrix m, long p);

// Rank over Q.
int rank_over_q(const ZpMatrix& m, long p);

// Is w in the Z_(p)-span of the columns of m?
bool in_zp_column_span(ZpMatrix m, std::vector<Rational> w, long p);

// Rank over F_2 of an integer-valued matrix reduced mod 2.
int rank_mod2(const ZpMatrix& m);

} // namespace fglforge

#endif
