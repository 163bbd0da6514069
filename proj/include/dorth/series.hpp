#ifndef DORTH_SERIES_HPP
#define DORTH_SERIES_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <dorth/poly.hpp>
#include <dorth/rat.hpp>

namespace dorth
{

/// Raised by series operations whose preconditions fail (order mismatch,
/// wrong constant term, non-invertible leading term).
class SeriesError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// Commutative Q-algebra usable as a series coefficient: Rat itself, or Poly
/// when a series carries an extra polynomial variable.
template <typename R>
concept CoefficientRing = requires(R a, R b, Rat s) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { a * s } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { is_zero(a) } -> std::convertible_to<bool>;
    R(s);
};

inline Rat ring_inverse(const Rat &r)
{
    if (r.is_zero()) {
        throw SeriesError("constant term is not invertible");
    }
    return r.inverse();
}

inline Poly ring_inverse(const Poly &p)
{
    if (p.degree() != std::size_t{0}) {
        throw SeriesError("constant term is not invertible");
    }
    return Poly(p[0].inverse());
}

/// Formal power series c_0 + c_1 t + ... + c_N t^N, exact modulo t^{N+1}.
template <CoefficientRing R>
class Series
{
public:
    explicit Series(std::size_t order = 0) : c_(order + 1, R(Rat(0))) {}

    /// Pads with zeros or truncates to the requested order.
    Series(std::vector<R> coeffs, std::size_t order) : c_(std::move(coeffs))
    {
        c_.resize(order + 1, R(Rat(0)));
    }

    static Series constant(const R &c, std::size_t order)
    {
        Series s(order);
        s.c_[0] = c;
        return s;
    }

    /// The series t.
    static Series variable(std::size_t order)
    {
        Series s(order);
        if (order >= 1) {
            s.c_[1] = R(Rat(1));
        }
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }
    const R &operator[](std::size_t k) const { return c_.at(k); }
    R &operator[](std::size_t k) { return c_.at(k); }
    const std::vector<R> &coeffs() const { return c_; }

    /// Same series viewed at a different order (zero-padded or cut).
    Series truncated(std::size_t order) const { return Series(c_, order); }

    /// Multiplication by t^k.
    Series shifted(std::size_t k) const
    {
        Series out(order());
        for (std::size_t i = 0; i + k <= order(); ++i) {
            out.c_[i + k] = c_[i];
        }
        return out;
    }

    Series &operator+=(const Series &o)
    {
        check_order(o);
        for (std::size_t k = 0; k < c_.size(); ++k) {
            c_[k] = c_[k] + o.c_[k];
        }
        return *this;
    }

    Series &operator-=(const Series &o)
    {
        check_order(o);
        for (std::size_t k = 0; k < c_.size(); ++k) {
            c_[k] = c_[k] - o.c_[k];
        }
        return *this;
    }

    Series &operator*=(const Rat &s)
    {
        for (auto &c : c_) {
            c = c * s;
        }
        return *this;
    }

    friend Series operator+(Series a, const Series &b) { return a += b; }
    friend Series operator-(Series a, const Series &b) { return a -= b; }
    friend Series operator*(Series a, const Rat &s) { return a *= s; }
    friend Series operator*(const Rat &s, Series a) { return a *= s; }
    friend Series operator-(Series a)
    {
        for (auto &c : a.c_) {
            c = -c;
        }
        return a;
    }

    /// Truncated Cauchy product.
    friend Series operator*(const Series &a, const Series &b)
    {
        a.check_order(b);
        const std::size_t n = a.order();
        Series out(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (is_zero(a.c_[i])) {
                continue;
            }
            for (std::size_t j = 0; i + j <= n; ++j) {
                if (!is_zero(b.c_[j])) {
                    out.c_[i + j] = out.c_[i + j] + a.c_[i] * b.c_[j];
                }
            }
        }
        return out;
    }

    friend bool operator==(const Series &, const Series &) = default;

private:
    void check_order(const Series &o) const
    {
        if (o.order() != order()) {
            throw SeriesError("series order mismatch: " + std::to_string(order()) + " vs "
                              + std::to_string(o.order()));
        }
    }

    std::vector<R> c_;
};

using RatSeries = Series<Rat>;

/// Lifts a Rat series to a series with constant-polynomial coefficients.
inline Series<Poly> lift(const RatSeries &s)
{
    std::vector<Poly> c;
    c.reserve(s.order() + 1);
    for (const auto &v : s.coeffs()) {
        c.emplace_back(v);
    }
    return Series<Poly>(std::move(c), s.order());
}

/// Coefficient of t^{k+1} becomes c_k / (k+1); c_N falls off the end.
template <CoefficientRing R>
Series<R> integrate(const Series<R> &s)
{
    Series<R> out(s.order());
    for (std::size_t k = 0; k < s.order(); ++k) {
        out[k + 1] = s[k] * Rat(1, static_cast<long>(k + 1));
    }
    return out;
}

/// Formal derivative at the same order. The top coefficient would need
/// c_{N+1}, so it is set to zero and must be treated as unknown.
template <CoefficientRing R>
Series<R> derivative(const Series<R> &s)
{
    Series<R> out(s.order());
    for (std::size_t k = 1; k <= s.order(); ++k) {
        out[k - 1] = s[k] * Rat(static_cast<long>(k));
    }
    return out;
}

/// Multiplicative inverse; needs an invertible constant term.
template <CoefficientRing R>
Series<R> invert_mul(const Series<R> &s)
{
    if (is_zero(s[0])) {
        throw SeriesError("invert_mul: zero constant term");
    }
    const R inv0 = ring_inverse(s[0]);
    Series<R> out(s.order());
    out[0] = inv0;
    for (std::size_t n = 1; n <= s.order(); ++n) {
        R acc(Rat(0));
        for (std::size_t k = 1; k <= n; ++k) {
            if (!is_zero(s[k])) {
                acc = acc + s[k] * out[n - k];
            }
        }
        out[n] = -(acc * inv0);
    }
    return out;
}

/// exp of a series with zero constant term, via e_n = (1/n) sum k s_k e_{n-k}.
template <CoefficientRing R>
Series<R> exp_series(const Series<R> &s)
{
    if (!is_zero(s[0])) {
        throw SeriesError("exp_series: constant term must be 0");
    }
    Series<R> out(s.order());
    out[0] = R(Rat(1));
    for (std::size_t n = 1; n <= s.order(); ++n) {
        R acc(Rat(0));
        for (std::size_t k = 1; k <= n; ++k) {
            if (!is_zero(s[k])) {
                acc = acc + s[k] * out[n - k] * Rat(static_cast<long>(k));
            }
        }
        out[n] = acc * Rat(1, static_cast<long>(n));
    }
    return out;
}

template <CoefficientRing R>
bool has_unit_constant(const Series<R> &s)
{
    return is_zero(s[0] - R(Rat(1)));
}

/// log of a series with constant term 1, as the integral of s'/s.
template <CoefficientRing R>
Series<R> log_series(const Series<R> &s)
{
    if (!has_unit_constant(s)) {
        throw SeriesError("log_series: constant term must be 1");
    }
    return integrate(derivative(s) * invert_mul(s));
}

/// s^r for a series with constant term 1.
template <CoefficientRing R>
Series<R> pow_rat(const Series<R> &s, const Rat &r)
{
    if (!has_unit_constant(s)) {
        throw SeriesError("pow_rat: constant term must be 1");
    }
    if (r.is_zero()) {
        return Series<R>::constant(R(Rat(1)), s.order());
    }
    return exp_series(log_series(s) * r);
}

/// outer(inner(t)) by Horner's scheme in the series ring.
template <CoefficientRing R>
Series<R> compose(const Series<R> &outer, const Series<Rat> &inner)
{
    if (!inner[0].is_zero()) {
        throw SeriesError("compose: inner series must have zero constant term");
    }
    if (outer.order() != inner.order()) {
        throw SeriesError("compose: order mismatch");
    }
    const std::size_t n = outer.order();
    Series<R> inner_r(n);
    for (std::size_t k = 0; k <= n; ++k) {
        inner_r[k] = R(inner[k]);
    }
    Series<R> acc = Series<R>::constant(outer[n], n);
    for (std::size_t k = n; k-- > 0;) {
        acc = acc * inner_r;
        acc[0] = acc[0] + outer[k];
    }
    return acc;
}

/// Compositional inverse g with s(g(t)) = g(s(t)) = t, by Newton iteration
/// g <- g - (s(g) - t) / s'(g), which doubles the number of correct terms
/// per step.
inline RatSeries reversion(const RatSeries &s)
{
    if (!s[0].is_zero()) {
        throw SeriesError("reversion: constant term must be 0");
    }
    const std::size_t n = s.order();
    if (n == 0) {
        return RatSeries(0);
    }
    if (s[1].is_zero()) {
        throw SeriesError("reversion: linear coefficient must be nonzero");
    }
    const RatSeries t = RatSeries::variable(n);
    const RatSeries ds = derivative(s);
    RatSeries g = t * s[1].inverse();
    std::size_t correct = 1; // g is exact modulo t^{correct+1}
    while (correct < n) {
        const RatSeries residual = compose(s, g) - t;
        g -= residual * invert_mul(compose(ds, g));
        correct = 2 * correct + 1;
    }
    return g;
}

} // namespace dorth

#endif
