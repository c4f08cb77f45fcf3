#include "fglforge/graded_poly.hpp"

#include <algorithm>
#include <sstream>

#include "fglforge/errors.hpp"

namespace fglforge {

Alphabet Alphabet::v(long p)
{
    if (!is_prime(p))
        throw ConfigError("prime expected, got " + std::to_string(p));
    return {Kind::V, p};
}

int Alphabet::generator_dim(int index) const
{
    if (kind != Kind::V)
        return index;
    long d = 1;
    for (int i = 0; i < index; ++i) {
        d *= prime;
        if (d > kUnbounded)
            return kUnbounded;
    }
    return static_cast<int>(d - 1);
}

int Alphabet::max_index_within(int dim) const
{
    if (dim < 1)
        return 0;
    if (kind != Kind::V)
        return dim;
    int i = 0;
    while (generator_dim(i + 1) <= dim)
        ++i;
    return i;
}

char Alphabet::symbol() const
{
    switch (kind) {
    case Kind::B:
        return 'b';
    case Kind::M:
        return 'm';
    case Kind::V:
        return 'v';
    }
    return '?';
}

Monomial::Monomial(std::vector<std::pair<int, int>> exps)
{
    std::sort(exps.begin(), exps.end());
    for (const auto& [idx, e] : exps) {
        if (idx < 1)
            throw std::invalid_argument("generator index must be >= 1");
        if (e < 0)
            throw std::invalid_argument("negative exponent");
        if (e == 0)
            continue;
        if (!exps_.empty() && exps_.back().first == idx)
            exps_.back().second += e;
        else
            exps_.emplace_back(idx, e);
    }
}

Monomial Monomial::generator(int index, int exponent)
{
    return Monomial({{index, exponent}});
}

int Monomial::exponent(int index) const
{
    for (const auto& [idx, e] : exps_)
        if (idx == index)
            return e;
    return 0;
}

int Monomial::degree() const
{
    int k = 0;
    for (const auto& [idx, e] : exps_)
        k += e;
    return k;
}

int Monomial::dimension(const Alphabet& alphabet) const
{
    int d = 0;
    for (const auto& [idx, e] : exps_)
        d = sat_add(d, e * alphabet.generator_dim(idx));
    return d;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial r;
    auto& out = r.exps_;
    out.reserve(a.exps_.size() + b.exps_.size());
    auto i = a.exps_.begin();
    auto j = b.exps_.begin();
    while (i != a.exps_.end() || j != b.exps_.end()) {
        if (j == b.exps_.end() || (i != a.exps_.end() && i->first < j->first))
            out.push_back(*i++);
        else if (i == a.exps_.end() || j->first < i->first)
            out.push_back(*j++);
        else {
            out.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return r;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const
{
    int da = a.dimension(alphabet);
    int db = b.dimension(alphabet);
    if (da != db)
        return da < db;
    return a.exponents() < b.exponents();
}

GradedPoly::GradedPoly(Alphabet alphabet, int dim_bound)
    : alphabet_(alphabet), dim_bound_(dim_bound), terms_(MonomialOrder{alphabet})
{
}

GradedPoly GradedPoly::constant(const Rational& c, Alphabet alphabet, int dim_bound)
{
    GradedPoly p(alphabet, dim_bound);
    p.add_term(Monomial(), c);
    return p;
}

GradedPoly GradedPoly::generator(int index, Alphabet alphabet, int dim_bound)
{
    GradedPoly p(alphabet, dim_bound);
    p.add_term(Monomial::generator(index), 1);
    return p;
}

GradedPoly GradedPoly::term(const Rational& c, const Monomial& m, Alphabet alphabet, int dim_bound)
{
    GradedPoly p(alphabet, dim_bound);
    p.add_term(m, c);
    return p;
}

bool GradedPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational GradedPoly::constant_term() const
{
    return coefficient(Monomial());
}

Rational GradedPoly::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GradedPoly::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0 || m.dimension(alphabet_) > dim_bound_)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

bool GradedPoly::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    return terms_.begin()->first.dimension(alphabet_) == terms_.rbegin()->first.dimension(alphabet_);
}

std::optional<int> GradedPoly::dimension() const
{
    if (terms_.empty() || !is_homogeneous())
        return std::nullopt;
    return terms_.begin()->first.dimension(alphabet_);
}

GradedPoly GradedPoly::component(int dim) const
{
    GradedPoly r(alphabet_, dim_bound_);
    for (const auto& [m, c] : terms_)
        if (m.dimension(alphabet_) == dim)
            r.terms_.emplace_hint(r.terms_.end(), m, c);
    return r;
}

GradedPoly GradedPoly::truncated(int dim_bound) const
{
    GradedPoly r(alphabet_, dim_bound);
    for (const auto& [m, c] : terms_)
        if (m.dimension(alphabet_) <= dim_bound)
            r.terms_.emplace_hint(r.terms_.end(), m, c);
    return r;
}

bool GradedPoly::is_p_local(long p) const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [p](const auto& t) { return fglforge::is_p_local(t.second, p); });
}

bool GradedPoly::is_integral() const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return fglforge::is_integral(t.second); });
}

void GradedPoly::check_alphabet(const GradedPoly& o, const char* op) const
{
    if (!(alphabet_ == o.alphabet_))
        throw AlphabetMismatch(std::string("alphabet mismatch in ") + op);
}

GradedPoly GradedPoly::operator-() const
{
    GradedPoly r(*this);
    for (auto& [m, c] : r.terms_)
        c = -c;
    return r;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o)
{
    check_alphabet(o, "addition");
    if (o.dim_bound_ < dim_bound_)
        *this = truncated(o.dim_bound_);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o)
{
    check_alphabet(o, "subtraction");
    if (o.dim_bound_ < dim_bound_)
        *this = truncated(o.dim_bound_);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

GradedPoly& GradedPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_)
        coeff *= c;
    return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b)
{
    a.check_alphabet(b, "multiplication");
    const int bound = std::min(a.dim_bound_, b.dim_bound_);
    GradedPoly r(a.alphabet_, bound);
    if (a.is_zero() || b.is_zero())
        return r;
    // Both maps are sorted by dimension, so the inner loop can stop early.
    std::vector<std::pair<int, const std::pair<const Monomial, Rational>*>> bs;
    bs.reserve(b.terms_.size());
    for (const auto& t : b.terms_)
        bs.emplace_back(t.first.dimension(b.alphabet_), &t);
    Rational prod;
    for (const auto& ta : a.terms_) {
        const int da = ta.first.dimension(a.alphabet_);
        if (da > bound)
            break;
        for (const auto& [db, tb] : bs) {
            if (da + db > bound)
                break;
            prod = ta.second * tb->second;
            r.add_term(ta.first * tb->first, prod);
        }
    }
    return r;
}

GradedPoly poly_mul(const GradedPoly& a, const GradedPoly& b)
{
    return a * b;
}

bool operator==(const GradedPoly& a, const GradedPoly& b)
{
    if (!(a.alphabet_ == b.alphabet_) || a.terms_.size() != b.terms_.size())
        return false;
    return std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                      [](const auto& x, const auto& y) { return x.first == y.first && x.second == y.second; });
}

GradedPoly GradedPoly::pow(unsigned n) const
{
    GradedPoly result = one_like();
    GradedPoly base = *this;
    while (n > 0) {
        if (n & 1U)
            result = result * base;
        n >>= 1U;
        if (n > 0)
            base = base * base;
    }
    return result;
}

std::string GradedPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        bool unit = (mag == 1);
        if (!unit || m.is_one())
            os << fglforge::to_string(mag);
        bool need_star = !unit;
        for (const auto& [idx, e] : m.exponents()) {
            os << (need_star ? "*" : "") << alphabet_.symbol() << idx;
            if (e > 1)
                os << '^' << e;
            need_star = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GradedPoly& p)
{
    return os << p.to_string();
}

GradedPoly substitute(const GradedPoly& p, const std::function<GradedPoly(int)>& image,
                      const GradedPoly& target_zero)
{
    return evaluate<GradedPoly>(
        p, image, [&](const Rational& c) { return target_zero.constant_like(c); });
}

namespace {

void enumerate(const Alphabet& alphabet, int remaining, int max_index,
               std::vector<std::pair<int, int>>& current, std::vector<Monomial>& out)
{
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int idx = max_index; idx >= 1; --idx) {
        const int g = alphabet.generator_dim(idx);
        if (g > remaining || g == 0)
            continue;
        for (int e = 1; e * g <= remaining; ++e) {
            current.emplace_back(idx, e);
            enumerate(alphabet, remaining - e * g, idx - 1, current, out);
            current.pop_back();
        }
    }
}

} // namespace

std::vector<Monomial> monomials_of_dimension(const Alphabet& alphabet, int dim)
{
    std::vector<Monomial> out;
    if (dim < 0)
        return out;
    std::vector<std::pair<int, int>> current;
    enumerate(alphabet, dim, alphabet.max_index_within(dim), current, out);
    std::sort(out.begin(), out.end(), MonomialOrder{alphabet});
    return out;
}

} // namespace fglforge
