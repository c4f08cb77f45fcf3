#ifndef FGLFORGE_RATIONAL_HPP
#define FGLFORGE_RATIONAL_HPP

#include <climits>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fglforge {

// Exact rational coefficient. gmpxx keeps values canonical (reduced, positive
// denominator) after every arithmetic operation; values built from strings go
// through make_rational(), which canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

// Sentinel valuation of zero.
inline constexpr int kInfiniteValuation = INT_MAX;

Rational make_rational(std::string_view text);
Rational make_rational(long num, long den = 1);

// "num/den", or "num" when den == 1.
std::string to_string(const Rational& q);

// p-adic valuation of a nonzero integer / rational; kInfiniteValuation for 0.
int padic_valuation(const Integer& n, unsigned long p);
int padic_valuation(const Rational& q, unsigned long p);

// Denominator coprime to p.
bool is_p_local(const Rational& q, unsigned long p);
bool is_integral(const Rational& q);

bool is_prime(long n);

} // namespace fglforge

#endif
