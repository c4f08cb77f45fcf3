#include "fglforge/tlaurent.hpp"

#include <algorithm>
#include <sstream>

#include "fglforge/errors.hpp"

namespace fglforge {

TLaurent::TLaurent(GradedPoly zero, int low, int high)
    : zero_(zero.zero_like()), low_(low), high_(high)
{
    if (low > high && high != -kUnbounded)
        throw std::invalid_argument("empty t-window");
}

TLaurent TLaurent::constant(const GradedPoly& c)
{
    return monomial(c, 0);
}

TLaurent TLaurent::monomial(const GradedPoly& c, int k)
{
    TLaurent r(c);
    r.add_coefficient(k, c);
    return r;
}

std::optional<int> TLaurent::valuation() const
{
    if (coeffs_.empty())
        return std::nullopt;
    return coeffs_.begin()->first;
}

std::optional<int> TLaurent::top_degree() const
{
    if (coeffs_.empty())
        return std::nullopt;
    return coeffs_.rbegin()->first;
}

GradedPoly TLaurent::coefficient(int k) const
{
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? zero_ : it->second;
}

void TLaurent::add_coefficient(int k, const GradedPoly& c)
{
    if (c.is_zero() || k > high_)
        return;
    if (k < low_)
        throw WindowOverflow("t-degree " + std::to_string(k) + " below window floor " +
                             std::to_string(low_));
    auto it = coeffs_.find(k);
    if (it == coeffs_.end()) {
        GradedPoly v = c.dim_bound() > zero_.dim_bound() ? c.truncated(zero_.dim_bound()) : c;
        if (!v.is_zero())
            coeffs_.emplace(k, std::move(v));
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        coeffs_.erase(it);
}

std::optional<int> TLaurent::total_dimension() const
{
    std::optional<int> total;
    for (const auto& [k, c] : coeffs_) {
        auto d = c.dimension();
        if (!d)
            return std::nullopt;
        if (total && *total != *d - k)
            return std::nullopt;
        total = *d - k;
    }
    return total;
}

bool TLaurent::is_homogeneous_of(int total_dim) const
{
    if (coeffs_.empty())
        return true;
    auto t = total_dimension();
    return t && *t == total_dim;
}

bool TLaurent::is_p_local(long p) const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [p](const auto& kv) { return kv.second.is_p_local(p); });
}

TLaurent TLaurent::operator-() const
{
    TLaurent r(*this);
    for (auto& [k, c] : r.coeffs_)
        c = -c;
    return r;
}

TLaurent& TLaurent::operator+=(const TLaurent& o)
{
    low_ = std::min(low_, o.low_);
    high_ = std::min(high_, o.high_);
    if (o.zero_.dim_bound() < zero_.dim_bound())
        *this = with_dim_bound(o.zero_.dim_bound());
    while (!coeffs_.empty() && coeffs_.rbegin()->first > high_)
        coeffs_.erase(std::prev(coeffs_.end()));
    for (const auto& [k, c] : o.coeffs_)
        add_coefficient(k, c);
    return *this;
}

TLaurent& TLaurent::operator-=(const TLaurent& o)
{
    return *this += -o;
}

TLaurent& TLaurent::operator*=(const Rational& c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [k, v] : coeffs_)
        v *= c;
    return *this;
}

TLaurent operator*(const TLaurent& a, const TLaurent& b)
{
    // A zero factor has valuation beyond its known precision.
    const int va = a.valuation().value_or(sat_add(a.high_, 1));
    const int vb = b.valuation().value_or(sat_add(b.high_, 1));
    const int low = sat_add(a.low_, b.low_);
    const int high = std::min(sat_add(a.high_, vb), sat_add(b.high_, va));
    GradedPoly zero = a.zero_.dim_bound() <= b.zero_.dim_bound() ? a.zero_ : b.zero_;
    TLaurent r(zero, low, std::max(low, high));
    for (const auto& [ka, ca] : a.coeffs_) {
        for (const auto& [kb, cb] : b.coeffs_) {
            if (ka + kb > r.high_)
                break;
            r.add_coefficient(ka + kb, ca * cb);
        }
    }
    return r;
}

TLaurent operator*(const GradedPoly& c, const TLaurent& a)
{
    TLaurent r(a.zero_.dim_bound() <= c.dim_bound() ? a.zero_ : c.zero_like(), a.low_, a.high_);
    if (c.is_zero())
        return r;
    for (const auto& [k, v] : a.coeffs_)
        r.add_coefficient(k, c * v);
    return r;
}

bool operator==(const TLaurent& a, const TLaurent& b)
{
    return a.coeffs_ == b.coeffs_;
}

TLaurent TLaurent::shifted(int k) const
{
    TLaurent r(zero_, sat_add(low_, k), sat_add(high_, k));
    for (const auto& [d, c] : coeffs_)
        r.coeffs_.emplace(d + k, c);
    return r;
}

TLaurent TLaurent::slice_leq(int bound) const
{
    TLaurent r(zero_, low_, high_);
    for (const auto& [k, c] : coeffs_)
        if (k <= bound)
            r.coeffs_.emplace(k, c);
    return r;
}

TLaurent TLaurent::restricted(int low, int high) const
{
    TLaurent r(zero_, low, std::min(high, high_));
    for (const auto& [k, c] : coeffs_)
        r.add_coefficient(k, c);
    return r;
}

TLaurent TLaurent::with_dim_bound(int dim_bound) const
{
    TLaurent r(zero_.truncated(dim_bound), low_, high_);
    for (const auto& [k, c] : coeffs_)
        r.add_coefficient(k, c.truncated(dim_bound));
    return r;
}

TLaurent TLaurent::pow(unsigned n) const
{
    TLaurent result = one_like();
    for (unsigned i = 0; i < n; ++i)
        result = result * *this;
    return result;
}

TLaurent TLaurent::inverse() const
{
    if (coeffs_.empty())
        throw NonInvertible("inverse of zero Laurent object");
    const int k = coeffs_.begin()->first;
    const GradedPoly& lead = coeffs_.begin()->second;
    if (!lead.is_constant())
        throw NonInvertible("leading t-coefficient is not a scalar: " + lead.to_string());
    const Rational c = lead.constant_term();
    const long p = zero_.alphabet().prime;
    if (p != 0 && padic_valuation(c, static_cast<unsigned long>(p)) != 0)
        throw NonInvertible("leading coefficient " + fglforge::to_string(c) + " is not a " +
                            std::to_string(p) + "-local unit");

    // a = c t^k (1 + tail); tail has t-degrees >= 1 and known up to high - k.
    const Rational cinv = 1 / c;
    const int rel_high = sat_add(high_, -k);
    TLaurent tail(zero_, 1, rel_high);
    bool nilpotent = true;
    for (auto it = std::next(coeffs_.begin()); it != coeffs_.end(); ++it) {
        tail.add_coefficient(it->first - k, it->second * cinv);
        if (it->second.constant_term() != 0)
            nilpotent = false;
    }
    if (!nilpotent && rel_high >= kUnbounded)
        throw NonInvertible("inverse does not terminate: tail is not nilpotent and the t-window is unbounded");

    // (1 + tail)^{-1} = sum (-tail)^n
    TLaurent sum = TLaurent(zero_, 0, rel_high);
    sum.add_coefficient(0, zero_.one_like());
    TLaurent term = sum;
    TLaurent neg_tail = -tail;
    for (;;) {
        term = term * neg_tail;
        term = term.restricted(0, rel_high);
        if (term.is_zero())
            break;
        sum += term;
    }
    TLaurent r = sum.shifted(-k) * cinv;
    r.low_ = -k;
    r.high_ = sat_add(high_, -2 * k);
    if (high_ >= kUnbounded)
        r.high_ = kUnbounded;
    return r;
}

TLaurent tlaurent_mul_invert(const TLaurent& a)
{
    return a.inverse();
}

std::string TLaurent::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        if (!first)
            os << " + ";
        first = false;
        os << '(' << c.to_string() << ")";
        if (k != 0)
            os << "*t^" << k;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const TLaurent& a)
{
    return os << a.to_string();
}

} // namespace fglforge
