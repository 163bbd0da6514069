#include <dorth/poly.hpp>

#include <algorithm>
#include <sstream>

namespace dorth
{

Poly::Poly(const Rat &c) : c_{c}
{
    trim();
}

Poly::Poly(std::initializer_list<Rat> coeffs) : c_(coeffs)
{
    trim();
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs))
{
    trim();
}

Poly Poly::monomial(std::size_t k, const Rat &c)
{
    std::vector<Rat> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
}

void Poly::trim()
{
    while (!c_.empty() && c_.back().is_zero()) {
        c_.pop_back();
    }
}

std::optional<std::size_t> Poly::degree() const
{
    if (c_.empty()) {
        return std::nullopt;
    }
    return c_.size() - 1;
}

Rat Poly::eval(const Rat &x) const
{
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Poly Poly::derivative() const
{
    if (c_.size() <= 1) {
        return {};
    }
    std::vector<Rat> out(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) {
        out[k - 1] = c_[k] * Rat(static_cast<long>(k));
    }
    return Poly(std::move(out));
}

Poly Poly::shift(const Rat &h) const
{
    // Horner in the polynomial ring: f(x + h).
    const Poly xh{h, Rat(1)};
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * xh + Poly(*it);
    }
    return acc;
}

Poly Poly::mul_power(std::size_t k) const
{
    if (c_.empty()) {
        return {};
    }
    std::vector<Rat> out(k, Rat(0));
    out.insert(out.end(), c_.begin(), c_.end());
    return Poly(std::move(out));
}

Poly &Poly::operator+=(const Poly &o)
{
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size());
    }
    for (std::size_t k = 0; k < o.c_.size(); ++k) {
        c_[k] += o.c_[k];
    }
    trim();
    return *this;
}

Poly &Poly::operator-=(const Poly &o)
{
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size());
    }
    for (std::size_t k = 0; k < o.c_.size(); ++k) {
        c_[k] -= o.c_[k];
    }
    trim();
    return *this;
}

Poly operator*(const Poly &a, const Poly &b)
{
    if (a.c_.empty() || b.c_.empty()) {
        return {};
    }
    std::vector<Rat> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            out[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Poly(std::move(out));
}

Poly &Poly::operator*=(const Poly &o)
{
    *this = *this * o;
    return *this;
}

Poly &Poly::operator*=(const Rat &s)
{
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto &c : c_) {
        c *= s;
    }
    return *this;
}

Poly operator-(Poly a)
{
    for (auto &c : a.c_) {
        c = -c;
    }
    return a;
}

std::string Poly::str(char var) const
{
    if (c_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rat &c = c_[k];
        if (c.is_zero()) {
            continue;
        }
        const Rat mag = c.abs();
        if (first) {
            if (c.sign() < 0) {
                os << "-";
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != Rat(1)) {
            os << mag;
            if (k > 0) {
                os << "*";
            }
        }
        if (k >= 1) {
            os << var;
        }
        if (k >= 2) {
            os << "^" << k;
        }
    }
    return os.str();
}

Poly pow(const Poly &p, unsigned e)
{
    Poly result(Rat(1)), b = p;
    while (e > 0) {
        if (e & 1U) {
            result *= b;
        }
        b *= b;
        e >>= 1U;
    }
    return result;
}

} // namespace dorth
