#ifndef FGLFORGE_POWER_SERIES_HPP
#define FGLFORGE_POWER_SERIES_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fglforge/errors.hpp"
#include "fglforge/graded_poly.hpp"
#include "fglforge/tlaurent.hpp"

namespace fglforge {

// Units of the coefficient rings, used for series reversion and reciprocals.
// A GradedPoly is a unit when its constant term is nonzero and the rest is
// nilpotent under its dimension bound.
inline GradedPoly invert_unit(const GradedPoly& u)
{
    const Rational c = u.constant_term();
    if (c == 0)
        throw NonInvertible("polynomial with zero constant term is not invertible: " + u.to_string());
    if (u.is_constant())
        return u.constant_like(1 / c);
    if (u.dim_bound() >= kUnbounded)
        throw NonInvertible("inverse of non-constant polynomial needs a finite dimension bound");
    GradedPoly neg_tail = (u - u.constant_like(c)) * (-1 / c);
    GradedPoly sum = u.one_like();
    GradedPoly term = sum;
    for (;;) {
        term = term * neg_tail;
        if (term.is_zero())
            break;
        sum += term;
    }
    return sum * (1 / c);
}

inline TLaurent invert_unit(const TLaurent& u)
{
    return u.inverse();
}

// Truncated power series in one (x) or two (x, y) variables over a
// coefficient ring C (GradedPoly or TLaurent). Terms of total degree above
// x_bound() are discarded; zero coefficients are never stored.
template <class C>
class PowerSeries {
public:
    using Key = std::pair<int, int>;

    PowerSeries(int vars, int x_bound, C zero) : vars_(vars), x_bound_(x_bound), zero_(zero.zero_like())
    {
        if (vars != 1 && vars != 2)
            throw std::invalid_argument("power series must have 1 or 2 variables");
        if (x_bound < 0)
            throw std::invalid_argument("negative series bound");
    }

    // x (which = 0) or y (which = 1).
    static PowerSeries variable(int vars, int x_bound, const C& zero, int which = 0)
    {
        PowerSeries s(vars, x_bound, zero);
        s.add_coefficient(which == 0 ? 1 : 0, which == 0 ? 0 : 1, zero.one_like());
        return s;
    }

    static PowerSeries constant(int vars, int x_bound, const C& c)
    {
        PowerSeries s(vars, x_bound, c);
        s.add_coefficient(0, 0, c);
        return s;
    }

    PowerSeries zero_like() const { return PowerSeries(vars_, x_bound_, zero_); }
    PowerSeries one_like() const { return constant(vars_, x_bound_, zero_.one_like()); }

    int vars() const { return vars_; }
    int x_bound() const { return x_bound_; }
    const C& coefficient_zero() const { return zero_; }
    const std::map<Key, C>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    C coefficient(int i, int j = 0) const
    {
        auto it = coeffs_.find({i, j});
        return it == coeffs_.end() ? zero_ : it->second;
    }

    void add_coefficient(int i, int j, const C& c)
    {
        if (vars_ == 1 && j != 0)
            throw std::invalid_argument("y-exponent on a univariate series");
        if (i + j > x_bound_ || c.is_zero())
            return;
        auto it = coeffs_.find({i, j});
        if (it == coeffs_.end()) {
            coeffs_.emplace(Key{i, j}, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero())
            coeffs_.erase(it);
    }

    bool has_zero_constant_term() const { return coeffs_.find({0, 0}) == coeffs_.end(); }

    PowerSeries truncated(int x_bound) const
    {
        PowerSeries r(vars_, std::min(x_bound, x_bound_), zero_);
        for (const auto& [k, c] : coeffs_)
            r.add_coefficient(k.first, k.second, c);
        return r;
    }

    PowerSeries operator-() const
    {
        PowerSeries r(*this);
        for (auto& [k, c] : r.coeffs_)
            c = -c;
        return r;
    }

    PowerSeries& operator+=(const PowerSeries& o)
    {
        check_vars(o);
        if (o.x_bound_ < x_bound_)
            *this = truncated(o.x_bound_);
        for (const auto& [k, c] : o.coeffs_)
            add_coefficient(k.first, k.second, c);
        return *this;
    }

    PowerSeries& operator-=(const PowerSeries& o) { return *this += -o; }

    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }

    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b)
    {
        a.check_vars(b);
        PowerSeries r(a.vars_, std::min(a.x_bound_, b.x_bound_), a.zero_);
        for (const auto& [ka, ca] : a.coeffs_) {
            for (const auto& [kb, cb] : b.coeffs_) {
                const int i = ka.first + kb.first;
                const int j = ka.second + kb.second;
                if (i + j <= r.x_bound_)
                    r.add_coefficient(i, j, ca * cb);
            }
        }
        return r;
    }

    friend PowerSeries operator*(const C& c, const PowerSeries& a)
    {
        PowerSeries r(a.vars_, a.x_bound_, a.zero_);
        for (const auto& [k, v] : a.coeffs_)
            r.add_coefficient(k.first, k.second, c * v);
        return r;
    }

    friend PowerSeries operator*(const Rational& q, PowerSeries a)
    {
        for (auto it = a.coeffs_.begin(); it != a.coeffs_.end();) {
            it->second *= q;
            it = it->second.is_zero() ? a.coeffs_.erase(it) : std::next(it);
        }
        return a;
    }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b)
    {
        return a.vars_ == b.vars_ && a.coeffs_ == b.coeffs_;
    }

    template <class D, class F>
    PowerSeries<D> map_coefficients(const D& zero, F&& f) const
    {
        PowerSeries<D> r(vars_, x_bound_, zero);
        for (const auto& [k, c] : coeffs_)
            r.add_coefficient(k.first, k.second, f(c));
        return r;
    }

    // d/dx or d/dy.
    PowerSeries derivative(int which = 0) const
    {
        PowerSeries r(vars_, x_bound_, zero_);
        for (const auto& [k, c] : coeffs_) {
            const int e = which == 0 ? k.first : k.second;
            if (e == 0)
                continue;
            if (which == 0)
                r.add_coefficient(k.first - 1, k.second, c * Rational(e));
            else
                r.add_coefficient(k.first, k.second - 1, c * Rational(e));
        }
        return r;
    }

    // Antiderivative in x of a univariate series, zero constant term.
    PowerSeries integral() const
    {
        require_univariate("integral");
        PowerSeries r(vars_, x_bound_, zero_);
        for (const auto& [k, c] : coeffs_)
            r.add_coefficient(k.first + 1, 0, c * Rational(1, k.first + 1));
        return r;
    }

    // Multiplicative inverse of a univariate series with unit constant term.
    PowerSeries reciprocal() const
    {
        require_univariate("reciprocal");
        const C r0 = invert_unit(coefficient(0));
        std::vector<C> r{r0};
        PowerSeries out(1, x_bound_, zero_);
        out.add_coefficient(0, 0, r0);
        for (int n = 1; n <= x_bound_; ++n) {
            C s = zero_;
            for (int k = 1; k <= n; ++k) {
                auto it = coeffs_.find({k, 0});
                if (it != coeffs_.end())
                    s += it->second * r[n - k];
            }
            C rn = -(r0 * s);
            r.push_back(rn);
            out.add_coefficient(n, 0, rn);
        }
        return out;
    }

    // Evaluation at y = 0 of a bivariate series, as a univariate series in x.
    PowerSeries at_y_zero() const
    {
        PowerSeries r(1, x_bound_, zero_);
        for (const auto& [k, c] : coeffs_)
            if (k.second == 0)
                r.add_coefficient(k.first, 0, c);
        return r;
    }

    // Bivariate series with x and y exchanged.
    PowerSeries swapped() const
    {
        PowerSeries r(vars_, x_bound_, zero_);
        for (const auto& [k, c] : coeffs_)
            r.add_coefficient(k.second, k.first, c);
        return r;
    }

    // Univariate series viewed as a bivariate one in x (which = 0) or y (which = 1).
    PowerSeries as_bivariate(int which) const
    {
        require_univariate("as_bivariate");
        PowerSeries r(2, x_bound_, zero_);
        for (const auto& [k, c] : coeffs_)
            r.add_coefficient(which == 0 ? k.first : 0, which == 0 ? 0 : k.first, c);
        return r;
    }

    std::string to_string() const
    {
        if (coeffs_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : coeffs_) {
            os << (first ? "" : " + ") << '(' << c.to_string() << ')';
            first = false;
            if (k.first > 0)
                os << "*x" << (k.first > 1 ? "^" + std::to_string(k.first) : "");
            if (k.second > 0)
                os << "*y" << (k.second > 1 ? "^" + std::to_string(k.second) : "");
        }
        return os.str();
    }

    void require_univariate(const char* op) const
    {
        if (vars_ != 1)
            throw std::invalid_argument(std::string(op) + " needs a univariate series");
    }

private:
    void check_vars(const PowerSeries& o) const
    {
        if (vars_ != o.vars_)
            throw std::invalid_argument("series variable count mismatch");
    }

    int vars_;
    int x_bound_;
    C zero_;
    std::map<Key, C> coeffs_;
};

using Series = PowerSeries<GradedPoly>;
using LaurentSeries = PowerSeries<TLaurent>;

// Univariate series in t viewed as a Laurent object (exact window).
inline TLaurent to_tlaurent(const Series& s)
{
    s.require_univariate("to_tlaurent");
    TLaurent r(s.coefficient_zero());
    for (const auto& [k, c] : s.coeffs())
        r.add_coefficient(k.first, c);
    return r;
}

// outer(inner(x)) for univariate series; inner must have zero constant term.
template <class C>
PowerSeries<C> series_compose(const PowerSeries<C>& outer, const PowerSeries<C>& inner)
{
    outer.require_univariate("series_compose");
    if (!inner.has_zero_constant_term())
        throw PreconditionError("series_compose: inner series has a nonzero constant term");
    const int bound = std::min(outer.x_bound(), inner.x_bound());
    PowerSeries<C> result(inner.vars(), bound, inner.coefficient_zero());
    PowerSeries<C> power = PowerSeries<C>::constant(inner.vars(), bound, inner.coefficient_zero().one_like());
    for (int k = 0; k <= bound; ++k) {
        if (k > 0)
            power = power * inner;
        if (power.is_zero())
            break;
        auto it = outer.coeffs().find({k, 0});
        if (it != outer.coeffs().end())
            result += it->second * power;
    }
    return result;
}

// Compositional inverse g of f = u*x + ..., u a unit: f(g(x)) = x = g(f(x)).
template <class C>
PowerSeries<C> series_invert_composition(const PowerSeries<C>& f)
{
    f.require_univariate("series_invert_composition");
    if (!f.has_zero_constant_term())
        throw PreconditionError("series_invert_composition: nonzero constant term");
    const int n_max = f.x_bound();
    const C zero = f.coefficient_zero();
    PowerSeries<C> g(1, n_max, zero);
    if (n_max == 0)
        return g;
    C lead;
    try {
        lead = invert_unit(f.coefficient(1));
    } catch (const NonInvertible& e) {
        throw NonInvertible(std::string("series_invert_composition: ") + e.what());
    }
    // powers[k][m] = [x^m] g^k, filled column by column.
    std::vector<std::vector<C>> powers(n_max + 1, std::vector<C>(n_max + 1, zero));
    powers[1][1] = lead;
    g.add_coefficient(1, 0, lead);
    for (int n = 2; n <= n_max; ++n) {
        C s = zero;
        for (int k = 2; k <= n; ++k) {
            C acc = zero;
            for (int a = 1; a <= n - k + 1; ++a)
                if (!powers[1][a].is_zero() && !powers[k - 1][n - a].is_zero())
                    acc += powers[1][a] * powers[k - 1][n - a];
            powers[k][n] = acc;
            auto it = f.coeffs().find({k, 0});
            if (it != f.coeffs().end() && !acc.is_zero())
                s += it->second * acc;
        }
        C gn = -(lead * s);
        powers[1][n] = gn;
        g.add_coefficient(n, 0, gn);
    }
    return g;
}

// Evaluates a bivariate series F at (a, b) in a ring R, lifting coefficients
// through lift(). R is a univariate/bivariate PowerSeries or a TLaurent.
template <class R, class C, class Lift>
R substitute_bivariate(const PowerSeries<C>& F, const R& a, const R& b, const R& one, Lift&& lift)
{
    int max_i = 0;
    int max_j = 0;
    for (const auto& [k, c] : F.coeffs()) {
        max_i = std::max(max_i, k.first);
        max_j = std::max(max_j, k.second);
    }
    std::vector<R> pa{one};
    std::vector<R> pb{one};
    for (int i = 1; i <= max_i; ++i)
        pa.push_back(pa.back() * a);
    for (int j = 1; j <= max_j; ++j)
        pb.push_back(pb.back() * b);
    R acc = one - one;
    for (const auto& [k, c] : F.coeffs())
        acc += lift(c) * (pa[k.first] * pb[k.second]);
    return acc;
}

} // namespace fglforge

#endif
