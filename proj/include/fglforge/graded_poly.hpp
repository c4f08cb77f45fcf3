#ifndef FGLFORGE_GRADED_POLY_HPP
#define FGLFORGE_GRADED_POLY_HPP

#include <climits>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "fglforge/rational.hpp"

namespace fglforge {

// Effectively "no truncation" for dimension bounds and t-windows. Kept well
// inside int range so sums of two bounds cannot overflow.
inline constexpr int kUnbounded = 1 << 28;

inline int sat_add(int a, int b)
{
    long s = static_cast<long>(a) + b;
    if (s >= kUnbounded)
        return kUnbounded;
    if (s <= -kUnbounded)
        return -kUnbounded;
    return static_cast<int>(s);
}

// Generator alphabet of a polynomial ring.
//   B: Hurewicz coordinates b_i, dim b_i = i.
//   M: logarithm coordinates m_i, dim m_i = i (used for rewriting in L (x) Q).
//   V: BP generators v_i at a prime p, dim v_i = p^i - 1; v_0 = p is a scalar.
struct Alphabet {
    enum class Kind { B, M, V };

    Kind kind = Kind::B;
    long prime = 0;

    static Alphabet b() { return {Kind::B, 0}; }
    static Alphabet m() { return {Kind::M, 0}; }
    static Alphabet v(long p);

    int generator_dim(int index) const;
    // Largest index whose generator has dimension <= dim.
    int max_index_within(int dim) const;
    char symbol() const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

// Sparse exponent vector: (generator index >= 1, exponent >= 1), sorted by index.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<int, int>> exps);
    static Monomial generator(int index, int exponent = 1);

    const std::vector<std::pair<int, int>>& exponents() const { return exps_; }
    bool is_one() const { return exps_.empty(); }
    int exponent(int index) const;
    // Number of generator factors counted with multiplicity.
    int degree() const;
    int dimension(const Alphabet& alphabet) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::pair<int, int>> exps_;
};

// Graded order: by dimension, then lexicographically by (index, exponent).
struct MonomialOrder {
    Alphabet alphabet;
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse polynomial with exact rational coefficients in a graded alphabet,
// truncated above dimension dim_bound(). Products are re-truncated to the
// smaller bound of their operands.
class GradedPoly {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    explicit GradedPoly(Alphabet alphabet = Alphabet::b(), int dim_bound = kUnbounded);

    static GradedPoly constant(const Rational& c, Alphabet alphabet, int dim_bound = kUnbounded);
    static GradedPoly generator(int index, Alphabet alphabet, int dim_bound = kUnbounded);
    static GradedPoly term(const Rational& c, const Monomial& m, Alphabet alphabet,
                           int dim_bound = kUnbounded);

    GradedPoly zero_like() const { return GradedPoly(alphabet_, dim_bound_); }
    GradedPoly one_like() const { return constant(1, alphabet_, dim_bound_); }
    GradedPoly constant_like(const Rational& c) const { return constant(c, alphabet_, dim_bound_); }

    const Alphabet& alphabet() const { return alphabet_; }
    int dim_bound() const { return dim_bound_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;

    // Adds c*m, dropping it when above the bound and erasing cancelled terms.
    void add_term(const Monomial& m, const Rational& c);

    bool is_homogeneous() const;
    // Dimension of a nonzero homogeneous polynomial.
    std::optional<int> dimension() const;
    // Component of exactly the given dimension.
    GradedPoly component(int dim) const;
    GradedPoly truncated(int dim_bound) const;
    GradedPoly with_bound(int dim_bound) const { return truncated(dim_bound); }

    bool is_p_local(long p) const;
    bool is_integral() const;

    GradedPoly operator-() const;
    GradedPoly& operator+=(const GradedPoly& o);
    GradedPoly& operator-=(const GradedPoly& o);
    GradedPoly& operator*=(const Rational& c);

    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
    friend GradedPoly operator*(GradedPoly a, const Rational& c) { return a *= c; }
    friend GradedPoly operator*(const Rational& c, GradedPoly a) { return a *= c; }

    // Structural equality of alphabet and terms (bounds are not compared).
    friend bool operator==(const GradedPoly& a, const GradedPoly& b);

    GradedPoly pow(unsigned n) const;

    std::string to_string() const;

private:
    void check_alphabet(const GradedPoly& o, const char* op) const;

    Alphabet alphabet_;
    int dim_bound_;
    TermMap terms_;
};

GradedPoly poly_mul(const GradedPoly& a, const GradedPoly& b);

std::ostream& operator<<(std::ostream& os, const GradedPoly& p);

// Ring homomorphism out of a polynomial ring: sends generator i to image(i)
// and rational scalars through embed(c). R needs +, * and a copyable one.
template <class R>
R evaluate(const GradedPoly& p, const std::function<R(int)>& image,
           const std::function<R(const Rational&)>& embed)
{
    R acc = embed(Rational(0));
    std::map<int, std::vector<R>> powers;
    for (const auto& [mono, c] : p.terms()) {
        R term = embed(c);
        for (const auto& [idx, e] : mono.exponents()) {
            auto& table = powers[idx];
            if (table.empty())
                table.push_back(image(idx));
            while (static_cast<int>(table.size()) < e)
                table.push_back(table.back() * table.front());
            term = term * table[e - 1];
        }
        acc = acc + term;
    }
    return acc;
}

// Polynomial-to-polynomial substitution g_i -> image(i) (possibly in another alphabet).
GradedPoly substitute(const GradedPoly& p, const std::function<GradedPoly(int)>& image,
                      const GradedPoly& target_zero);

// Dimension-d monomials of an alphabet, indices limited to generators of
// dimension >= 1, in canonical order.
std::vector<Monomial> monomials_of_dimension(const Alphabet& alphabet, int dim);

} // namespace fglforge

#endif
