#include "doctest.h"

#include "fglforge/descent.hpp"
#include "fglforge/koszul.hpp"
#include "fglforge/zp_linalg.hpp"
#include "support.hpp"

using namespace fglforge;
using fglforge::testing::Gen;

namespace {

long binomial(int n, int k)
{
    long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

ZpMatrix mat(std::initializer_list<std::initializer_list<long>> rows)
{
    ZpMatrix m;
    for (const auto& r : rows) {
        std::vector<Rational> row;
        for (long x : r)
            row.emplace_back(x);
        m.push_back(std::move(row));
    }
    return m;
}

} // namespace

TEST_CASE("smith valuations over Z_(p)")
{
    CHECK(smith_valuations(mat({{2, 0}, {0, 4}}), 2).valuations == std::vector<int>{1, 2});
    // gcd of entries 2, determinant -8
    CHECK(smith_valuations(mat({{2, 4}, {6, 8}}), 2).valuations == std::vector<int>{1, 2});
    CHECK(smith_valuations(mat({{2, 4}, {6, 8}}), 3).valuations == std::vector<int>{0, 0});
    CHECK(smith_valuations(mat({{1, 2}, {2, 4}}), 2).rank == 1);
    CHECK(smith_valuations(mat({{0, 0}}), 2).rank == 0);
    CHECK_THROWS_AS(smith_valuations({{Rational(1, 2)}}, 2), PreconditionError);

    // product of elementary divisors matches the determinant valuation
    Gen gen(71);
    for (int trial = 0; trial < 20; ++trial) {
        ZpMatrix m(3, std::vector<Rational>(3));
        for (auto& row : m)
            for (auto& x : row)
                x = gen.uniform(-12, 12);
        const Rational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                             m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        const SmithValuations sv = smith_valuations(m, 2);
        if (det != 0) {
            int sum = 0;
            for (int v : sv.valuations)
                sum += v;
            CHECK(sv.rank == 3);
            CHECK(sum == padic_valuation(det, 2));
        } else {
            CHECK(sv.rank < 3);
        }
    }
}

TEST_CASE("Z_(p) span membership")
{
    const ZpMatrix two = mat({{2}});
    CHECK(in_zp_column_span(two, {Rational(4)}, 2));
    CHECK(in_zp_column_span(two, {Rational(2, 3)}, 2));
    CHECK_FALSE(in_zp_column_span(two, {Rational(1)}, 2));
    CHECK_FALSE(in_zp_column_span(two, {Rational(1, 2)}, 2));
    CHECK(in_zp_column_span(two, {Rational(1)}, 3));

    const ZpMatrix m = mat({{2, 0}, {1, 1}, {0, 0}});
    CHECK(in_zp_column_span(m, {Rational(2), Rational(3), Rational(0)}, 2));
    CHECK_FALSE(in_zp_column_span(m, {Rational(1), Rational(0), Rational(0)}, 2));
    CHECK_FALSE(in_zp_column_span(m, {Rational(0), Rational(0), Rational(1)}, 2));
    CHECK(rank_mod2(mat({{2, 4}, {6, 8}})) == 0);
    CHECK(rank_mod2(mat({{1, 1}, {1, 1}})) == 1);
    CHECK(rank_mod2(mat({{1, 0}, {1, 1}})) == 2);
}

TEST_CASE("koszul complex shape")
{
    const KoszulComplex K3 = build_koszul(3, 10);
    CHECK(K3.rank(0) == 2);
    CHECK(K3.rank(1) == 1);
    CHECK(K3.generators[0] == GradedPoly::constant(2, Alphabet::v(2), 10));
    const KoszulComplex K4 = build_koszul(4, 10);
    CHECK(K4.rank(0) == 3);
    CHECK(K4.rank(1) == 3);
    CHECK(K4.rank(2) == 1);
    CHECK(K4.generator_dims == std::vector<int>{0, 1, 3});

    // d(e_{01}) = 2 e_1 - v1 e_0
    const auto d1 = K3.differential(1);
    CHECK(d1[0][0] == -GradedPoly::generator(1, Alphabet::v(2), 10));
    CHECK(d1[1][0] == GradedPoly::constant(2, Alphabet::v(2), 10));

    CHECK_THROWS_AS(build_koszul(2, 10), ConfigError);
    CHECK_THROWS_AS(build_koszul(5, 6), TruncationInsufficient);
}

TEST_CASE("koszul d^2, exactness and Tor for n = 3..8")
{
    for (int n = 3; n <= 8; ++n) {
        const int D = std::max(10, (1 << (n - 2)) - 1);
        const KoszulComplex K = build_koszul(n, D);
        CHECK(koszul_d_squared_zero(K));
        for (int j = 0; j <= K.top_index(); ++j)
            CHECK(K.rank(j) == binomial(n - 1, j + 1));
        const ExactnessReport ex = koszul_exactness(K, n <= 6 ? D : 20);
        CHECK(ex.pass);
        const TorReport tor = tor_with_residue(K);
        CHECK(tor.differentials_vanish);
        CHECK(tor.top_nonzero == n - 2);
        CHECK(tor.ranks.at(n - 2) == 1);
        for (const auto& [j, r] : tor.ranks)
            CHECK(r == binomial(n - 1, j + 1));
    }
}

TEST_CASE("exactness fails on a truncated resolution")
{
    // without its top term the complex has homology at j = 1
    KoszulComplex K = build_koszul(4, 10);
    K.bases.pop_back();
    CHECK(K.top_index() == 1);
    CHECK(koszul_d_squared_zero(K));
    const ExactnessReport ex = koszul_exactness(K, 6);
    CHECK_FALSE(ex.pass);
    CHECK(ex.strata[0].over_q);
    CHECK_FALSE(ex.strata[4].over_q);
}

TEST_CASE("syzygy report")
{
    CHECK(syzygy_codim(4, {0}) == 7);
    CHECK(syzygy_codim(4, {0, 1, 2}) == 3);
    CHECK(syzygy_codim(3, {0, 1}) == 2);
    for (int n = 3; n <= 8; ++n) {
        const SyzygyReport r = syzygy_report(n);
        CHECK(r.all_in_range);
        CHECK(static_cast<long>(r.rows.size()) == (1L << (n - 1)) - 1);
        CHECK(r.top_codim_formula == n - 1);
        CHECK(r.top_codim_stated == n - 2);
        CHECK(r.top_codim_discrepancy);
        for (const auto& row : r.rows) {
            CHECK(row.geq_hom_index);
            CHECK(row.j == static_cast<int>(row.I.size()) - 1);
        }
    }
    const SyzygyReport r3 = syzygy_report(3);
    CHECK(r3.rows.front().I == IndexSet{0});
    CHECK(r3.rows.back().I == IndexSet{0, 1});
}

TEST_CASE("relation presentation")
{
    const RelationPresentation rost = rost_presentation(3, 10);
    const auto v = [](int k) { return GradedPoly::generator(k, Alphabet::v(2), 10); };
    const GradedPoly two = GradedPoly::constant(2, Alphabet::v(2), 10);
    CHECK(rost.contains({v(1) * v(1) * v(1)}));
    CHECK(rost.contains({two * v(2) * v(1) + v(1) * v(2) * Rational(3, 5)}));
    CHECK_FALSE(rost.contains({v(2)}));
    CHECK_FALSE(rost.contains({v(2) + v(1).pow(3)}));
    CHECK(rost.contains({two.zero_like()}));
    CHECK_THROWS_AS(rost.contains({v(1) + v(2)}), PreconditionError);
}

TEST_CASE("formal relation invariants")
{
    const auto v = [](int k) { return GradedPoly::generator(k, Alphabet::v(2), 10); };
    CHECK(FormalRelation({{"e0", 3}}, {v(2)}, 1).codimension() == 0);
    CHECK_THROWS_AS(FormalRelation({{"e0", 3}}, {v(2)}, 2), PreconditionError);
    CHECK_THROWS_AS(FormalRelation({{"a", 3}, {"b", 3}}, {v(2), v(1)}, 1), PreconditionError);
    CHECK_THROWS_AS(FormalRelation({{"a", 0}}, {v(1)}, 1), PreconditionError);
    CHECK(FormalRelation({{"a", 3}, {"b", 6}}, {v(1), v(1) * v(2)}, 1).codimension() == 2);
}

TEST_CASE("descent step on the Rost model")
{
    const auto ctx = std::make_shared<const BPContext>(2, 10);
    const SteenrodContext s(ctx);
    const RelationPresentation rost = rost_presentation(3, 10);
    const std::vector<Cycle> e0{{"e0", 3}};
    const auto v = [&](int k) { return ctx->v(k); };

    const DescentReport z = descent_step(s, FormalRelation(e0, {ctx->v_zero()}, 2), rost);
    CHECK(z.pass());
    CHECK(z.alpha1.is_zero());
    CHECK(z.beta1.is_zero());

    const std::vector<std::pair<GradedPoly, int>> samples{
        {v(1).pow(3) * Rational(2), 3}, {v(1).pow(3), 3}, {v(2) * Rational(2), 1}, {v(1) * v(2), 2},
        {v(1).pow(3) * Rational(4), 4}, {v(1).pow(4), 4}, {v(1).pow(3) + v(2) * Rational(2), 1}};
    for (const auto& [u, m] : samples) {
        const DescentReport r = descent_step(s, FormalRelation(e0, {u}, m), rost);
        CHECK(r.support_preserved);
        CHECK(r.beta_in_level);
        CHECK(r.congruence);
        CHECK(r.st_component_matches);
        // alpha_1 and beta_1 stay relations
        CHECK(rost.contains(r.alpha1.coefficients()));
        CHECK(rost.contains(r.beta1.coefficients()));
        // independent recomputation of the congruence
        const GradedPoly rest = u - r.alpha1.coefficients()[0] * Rational(2) - r.beta1.coefficients()[0];
        CHECK(ideal_membership(rest, m + 1));
    }

    CHECK_THROWS_AS(descent_step(s, FormalRelation(e0, {v(1) * Rational(2)}, 2), rost), PreconditionError);
    CHECK_THROWS_AS(descent_step(s, FormalRelation(e0, {v(2)}, 1), rost), PreconditionError);
}

TEST_CASE("descent step reports an inconsistent oracle")
{
    const auto ctx = std::make_shared<const BPContext>(2, 10);
    const SteenrodContext s(ctx);
    // a submodule that is not closed under the operations
    const RelationPresentation narrow({{"e0", 3}}, {{ctx->v(1).pow(3)}});
    CHECK_THROWS_AS(descent_step(s, FormalRelation({{"e0", 3}}, {ctx->v(1).pow(3)}, 3), narrow),
                    OracleInconsistency);
}
