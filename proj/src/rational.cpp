#include "fglforge/rational.hpp"

#include <stdexcept>

namespace fglforge {

Rational make_rational(std::string_view text)
{
    std::string s(text);
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational: '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

Rational make_rational(long num, long den)
{
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_str(10);
}

int padic_valuation(const Integer& n, unsigned long p)
{
    if (n == 0)
        return kInfiniteValuation;
    Integer m = abs(n);
    int v = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++v;
    }
    return v;
}

int padic_valuation(const Rational& q, unsigned long p)
{
    if (q == 0)
        return kInfiniteValuation;
    return padic_valuation(q.get_num(), p) - padic_valuation(q.get_den(), p);
}

bool is_p_local(const Rational& q, unsigned long p)
{
    return mpz_divisible_ui_p(q.get_den_mpz_t(), p) == 0;
}

bool is_integral(const Rational& q)
{
    return q.get_den() == 1;
}

bool is_prime(long n)
{
    if (n < 2)
        return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

} // namespace fglforge
