#ifndef FGLFORGE_SAMPLES_HPP
#define FGLFORGE_SAMPLES_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "fglforge/bp.hpp"

namespace fglforge {

// Deterministic sample source. Uses raw mt19937_64 output reduced modulo the
// range so sequences agree across standard libraries (the std distributions
// are implementation defined).
class SampleSource {
public:
    explicit SampleSource(std::uint64_t seed) : rng_(seed) {}
    long uniform(long lo, long hi)
    {
        return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 rng_;
};

// Nonzero homogeneous elements of I(p)^level with dimensions in [1, max_dim]:
// random monomial terms whose coefficients are scaled by p^{level - |a|}.
std::vector<GradedPoly> ideal_power_samples(const BPContext& ctx, int level, int count, std::uint64_t seed,
                                            int max_dim);

// Pairs of nonzero homogeneous integral elements of a common dimension in [1, max_dim].
std::vector<std::pair<GradedPoly, GradedPoly>> homogeneous_pairs(const BPContext& ctx, int count,
                                                                 std::uint64_t seed, int max_dim);

} // namespace fglforge

#endif
