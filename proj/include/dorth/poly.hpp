#ifndef DORTH_POLY_HPP
#define DORTH_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <dorth/rat.hpp>

namespace dorth
{

/// Dense univariate polynomial over Rat, lowest degree first, trailing zeros
/// trimmed. The zero polynomial has no coefficients and no degree.
class Poly
{
public:
    Poly() = default;
    Poly(const Rat &c);
    Poly(long c) : Poly(Rat(c)) {}
    Poly(int c) : Poly(Rat(c)) {}
    Poly(std::initializer_list<Rat> coeffs);
    explicit Poly(std::vector<Rat> coeffs);

    static Poly x() { return Poly{Rat(0), Rat(1)}; }
    static Poly monomial(std::size_t k, const Rat &c = Rat(1));

    std::optional<std::size_t> degree() const;
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat> &coeffs() const { return c_; }
    /// Coefficient of x^k, zero past the degree.
    Rat operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

    Rat eval(const Rat &x) const;

    Poly derivative() const;
    /// x -> x + h.
    Poly shift(const Rat &h) const;
    /// Multiplication by t^k.
    Poly mul_power(std::size_t k) const;

    Poly &operator+=(const Poly &o);
    Poly &operator-=(const Poly &o);
    Poly &operator*=(const Poly &o);
    Poly &operator*=(const Rat &s);

    friend Poly operator+(Poly a, const Poly &b) { return a += b; }
    friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
    friend Poly operator*(const Poly &a, const Poly &b);
    friend Poly operator*(Poly a, const Rat &s) { return a *= s; }
    friend Poly operator*(const Rat &s, Poly a) { return a *= s; }
    friend Poly operator-(Poly a);

    friend bool operator==(const Poly &, const Poly &) = default;

    std::string str(char var = 'x') const;
    friend std::ostream &operator<<(std::ostream &os, const Poly &p) { return os << p.str(); }

private:
    void trim();

    std::vector<Rat> c_;
};

inline bool is_zero(const Poly &p) { return p.is_zero(); }

Poly pow(const Poly &p, unsigned e);

} // namespace dorth

#endif
