#ifndef FGLFORGE_DESCENT_HPP
#define FGLFORGE_DESCENT_HPP

#include <string>
#include <vector>

#include "fglforge/steenrod.hpp"

namespace fglforge {

struct Cycle {
    std::string label;
    int codim = 0; // r > 0
};

// alpha = sum_j z_j (x) u_j. Homogeneous: r_j - dim(u_j) = c for every
// nonzero u_j. The filtration claim m (u_j in I(p)^m) is checked on construction.
class FormalRelation {
public:
    FormalRelation(std::vector<Cycle> support, std::vector<GradedPoly> coefficients, int m);

    const std::vector<Cycle>& support() const { return support_; }
    const std::vector<GradedPoly>& coefficients() const { return coeffs_; }
    int level() const { return m_; }
    // r - d; nullopt when every coefficient is zero.
    std::optional<int> codimension() const { return codim_; }
    bool is_zero() const;

private:
    std::vector<Cycle> support_;
    std::vector<GradedPoly> coeffs_;
    int m_;
    std::optional<int> codim_;
};

// Relations among the z_j as a submodule of the free module on the support,
// given by a finite generating set. Membership is decided degreewise by
// Z_(p)-linear algebra over the monomial basis.
class RelationPresentation {
public:
    RelationPresentation(std::vector<Cycle> support, std::vector<std::vector<GradedPoly>> generators);

    const std::vector<Cycle>& support() const { return support_; }
    const std::vector<std::vector<GradedPoly>>& generators() const { return gens_; }
    bool contains(const std::vector<GradedPoly>& vec) const;

private:
    std::vector<Cycle> support_;
    std::vector<std::vector<GradedPoly>> gens_;
};

// Support {e_0} in codimension 2^{n-1} - 1 with relations I(2, n-2) e_0,
// generated by 2 e_0, v_1 e_0, ..., v_{n-2} e_0.
RelationPresentation rost_presentation(int n, int dim_bound);

struct DescentReport {
    FormalRelation alpha;
    FormalRelation alpha1;
    FormalRelation beta1;
    // Phi(alpha) per support element, already twisted and sliced.
    std::vector<TLaurent> phi;
    // t^{c(p-1)} component of St(alpha), per support element.
    std::vector<GradedPoly> st_component;
    bool support_preserved = false;
    bool beta_in_level = false;        // beta_1 in I(p)^m
    bool congruence = false;           // alpha - p alpha_1 - beta_1 in I(p)^{m+1}
    bool st_component_matches = false; // st_component == eps^r alpha mod I(p)^{m+1}
    bool pass() const { return support_preserved && beta_in_level && congruence && st_component_matches; }
};

// One step alpha == p alpha_1 + beta_1 (mod I(p)^{m+1}) of the descent:
//   St(z u) = z eps^r t^{r(p-1)} St(u),
//   Phi(z u) = z eps^r t^{r(p-1)} Phi(u)_{<= -r(p-1)},
// then St(alpha)_{<=0} = -([p] Phi(alpha))_{<=0} read at t^{c(p-1)}.
// Throws OracleInconsistency if a component of Phi(alpha) is not a relation.
DescentReport descent_step(const SteenrodContext& sctx, const FormalRelation& alpha,
                           const RelationPresentation& oracle);

} // namespace fglforge

#endif
