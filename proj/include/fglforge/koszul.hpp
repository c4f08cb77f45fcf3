#ifndef FGLFORGE_KOSZUL_HPP
#define FGLFORGE_KOSZUL_HPP

#include <map>
#include <vector>

#include "fglforge/graded_poly.hpp"
#include "fglforge/zp_linalg.hpp"

namespace fglforge {

using IndexSet = std::vector<int>; // strictly increasing

// Koszul resolution of the ideal (2, v_1, ..., v_{n-2}) at p = 2.
// Term j has basis e_I with |I| = j + 1, I in {0, ..., n-2}; the top term is
// j = n - 2. d(e_I) = sum_k (-1)^k v_{i_k} e_{I - i_k}, and the augmentation
// sends e_{i} to v_i (v_0 = 2).
struct KoszulComplex {
    int n = 0;
    int dim_bound = 0;
    std::vector<GradedPoly> generators;   // v_0 = 2, v_1, ..., v_{n-2}
    std::vector<int> generator_dims;      // 0, 1, 3, ..., 2^{n-2} - 1
    std::vector<std::vector<IndexSet>> bases; // bases[j], canonical (lexicographic) order

    int top_index() const { return static_cast<int>(bases.size()) - 1; }
    int rank(int j) const { return static_cast<int>(bases.at(j).size()); }
    // Internal degree of e_I: sum of the generator dimensions.
    int degree(const IndexSet& I) const;
    // Matrix of d_j : term j -> term j-1 (rows: term j-1, cols: term j); j >= 1.
    std::vector<std::vector<GradedPoly>> differential(int j) const;
    // Augmentation term 0 -> ring as a single row.
    std::vector<GradedPoly> augmentation() const;
};

KoszulComplex build_koszul(int n, int dim_bound);

// d o d = 0 exactly, and augmentation o d_1 = 0.
bool koszul_d_squared_zero(const KoszulComplex& K);

struct StratumExactness {
    int dimension = 0;
    bool over_q = true;   // rank(d_j) + rank(d_{j+1}) = dim term_j for all j
    bool over_zp = true;  // additionally every d_{j+1} has unit elementary divisors
};

struct ExactnessReport {
    bool pass = true;
    std::vector<StratumExactness> strata;
};

// Exactness of ... -> term_1 -> term_0 -> ring at every internal dimension
// s <= stratum_bound, over the polynomial ring Z_(2)[v_1, ..., v_{n-2}].
// Each stratum is split further by the exponent vector in v_1..v_{n-2},
// which the differential preserves.
ExactnessReport koszul_exactness(const KoszulComplex& K, int stratum_bound);

struct TorReport {
    std::map<int, int> ranks; // j -> rank of Tor_j over Z/2
    bool differentials_vanish = true;
    int top_nonzero = -1;
};

// Tensor with the residue field Z/2 (kill 2 and every v_i) and take homology.
TorReport tor_with_residue(const KoszulComplex& K);

struct SyzygyRow {
    IndexSet I;
    int j = 0;
    int codim = 0;
    bool in_claimed_range = false; // |I| <= codim <= 2^{n-1} - 1
    bool geq_hom_index = false;  // codim >= j
};

struct SyzygyReport {
    int n = 0;
    std::vector<SyzygyRow> rows;
    int top_codim_formula = 0;  // formula value at I = {0, ..., n-2}
    int top_codim_stated = 0;   // the value stated in prose, n - 2
    bool top_codim_discrepancy = false;
    bool all_in_range = true;
};

int syzygy_codim(int n, const IndexSet& I);
SyzygyReport syzygy_report(int n);

} // namespace fglforge

#endif
