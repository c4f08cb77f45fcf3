#ifndef FGLFORGE_TESTS_SUPPORT_HPP
#define FGLFORGE_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "fglforge/graded_poly.hpp"

namespace fglforge::testing {

// Hand-rolled generators; std distributions are not portable across
// standard libraries, so everything is derived from raw mt19937_64 output.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long uniform(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

    Rational small_rational()
    {
        long num = uniform(-9, 9);
        long den = uniform(1, 4);
        return make_rational(num, den);
    }

    // Random polynomial with up to `terms` terms of dimension <= max_dim.
    GradedPoly poly(const Alphabet& a, int max_dim, int terms, int dim_bound, bool integral = false)
    {
        GradedPoly p(a, dim_bound);
        for (int i = 0; i < terms; ++i) {
            int d = static_cast<int>(uniform(0, max_dim));
            auto monos = monomials_of_dimension(a, d);
            if (monos.empty())
                continue;
            const Monomial& m = monos[static_cast<std::size_t>(uniform(0, static_cast<long>(monos.size()) - 1))];
            p.add_term(m, integral ? Rational(uniform(-5, 5)) : small_rational());
        }
        return p;
    }

    // Random homogeneous polynomial of dimension d.
    GradedPoly homogeneous(const Alphabet& a, int d, int terms, int dim_bound, bool integral = true)
    {
        GradedPoly p(a, dim_bound);
        auto monos = monomials_of_dimension(a, d);
        if (monos.empty())
            return p;
        for (int i = 0; i < terms; ++i) {
            const Monomial& m = monos[static_cast<std::size_t>(uniform(0, static_cast<long>(monos.size()) - 1))];
            p.add_term(m, integral ? Rational(uniform(-5, 5)) : small_rational());
        }
        return p;
    }

private:
    std::mt19937_64 rng_;
};

inline GradedPoly b(int i, int D = kUnbounded) { return GradedPoly::generator(i, Alphabet::b(), D); }
inline GradedPoly bconst(long c, int D = kUnbounded) { return GradedPoly::constant(c, Alphabet::b(), D); }

} // namespace fglforge::testing

#endif
