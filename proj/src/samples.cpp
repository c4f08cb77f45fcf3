#include "fglforge/samples.hpp"

#include "fglforge/errors.hpp"

namespace fglforge {

namespace {

std::vector<int> usable_dims(const BPContext& ctx, int max_dim)
{
    std::vector<int> dims;
    for (int d = 1; d <= max_dim; ++d)
        if (!monomials_of_dimension(ctx.v_alphabet(), d).empty())
            dims.push_back(d);
    if (dims.empty())
        throw TruncationInsufficient("no BP generator fits in sample dimension " + std::to_string(max_dim));
    return dims;
}

GradedPoly random_homogeneous(const BPContext& ctx, SampleSource& src, int d, int level)
{
    const auto monos = monomials_of_dimension(ctx.v_alphabet(), d);
    for (;;) {
        GradedPoly x = ctx.v_zero();
        const long terms = src.uniform(1, 3);
        for (long t = 0; t < terms; ++t) {
            const Monomial& m = monos[static_cast<std::size_t>(src.uniform(0, static_cast<long>(monos.size()) - 1))];
            long c = src.uniform(1, 5) * (src.uniform(0, 1) ? 1 : -1);
            for (int k = m.degree(); k < level; ++k)
                c *= ctx.prime();
            x.add_term(m, Rational(c));
        }
        if (!x.is_zero())
            return x;
    }
}

} // namespace

std::vector<GradedPoly> ideal_power_samples(const BPContext& ctx, int level, int count, std::uint64_t seed,
                                            int max_dim)
{
    const std::vector<int> dims = usable_dims(ctx, max_dim);
    SampleSource src(seed);
    std::vector<GradedPoly> out;
    for (int i = 0; i < count; ++i) {
        const int d = dims[static_cast<std::size_t>(src.uniform(0, static_cast<long>(dims.size()) - 1))];
        out.push_back(random_homogeneous(ctx, src, d, level));
    }
    return out;
}

std::vector<std::pair<GradedPoly, GradedPoly>> homogeneous_pairs(const BPContext& ctx, int count,
                                                                 std::uint64_t seed, int max_dim)
{
    const std::vector<int> dims = usable_dims(ctx, max_dim);
    SampleSource src(seed);
    std::vector<std::pair<GradedPoly, GradedPoly>> out;
    while (static_cast<int>(out.size()) < count) {
        const int d = dims[static_cast<std::size_t>(src.uniform(0, static_cast<long>(dims.size()) - 1))];
        GradedPoly x = random_homogeneous(ctx, src, d, 0);
        GradedPoly y = random_homogeneous(ctx, src, d, 0);
        if ((x + y).is_zero())
            continue;
        out.emplace_back(std::move(x), std::move(y));
    }
    return out;
}

} // namespace fglforge
