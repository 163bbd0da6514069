#ifndef DORTH_RAT_HPP
#define DORTH_RAT_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dorth
{

using BigInt = mpz_class;

/// Thrown when a string is not a canonical "p/q" or "p" rational literal.
class ParseError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rat
{
public:
    Rat() = default;
    Rat(long v) : v_(v) {}
    Rat(int v) : v_(static_cast<long>(v)) {}
    Rat(const BigInt &v) : v_(v) {}
    Rat(const BigInt &num, const BigInt &den);
    Rat(long num, long den) : Rat(BigInt(num), BigInt(den)) {}

    /// Accepts "p", "-p", "p/q"; rejects decimals, exponents and whitespace.
    static Rat parse(std::string_view s);

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat inverse() const;
    Rat abs() const { return Rat(mpq_class(::abs(v_))); }
    double to_double() const { return v_.get_d(); }

    /// "p/q", or "p" for integers.
    std::string str() const;

    Rat &operator+=(const Rat &o) { v_ += o.v_; return *this; }
    Rat &operator-=(const Rat &o) { v_ -= o.v_; return *this; }
    Rat &operator*=(const Rat &o) { v_ *= o.v_; return *this; }
    Rat &operator/=(const Rat &o);

    friend Rat operator+(Rat a, const Rat &b) { return a += b; }
    friend Rat operator-(Rat a, const Rat &b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat &b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat &b) { return a /= b; }
    friend Rat operator-(const Rat &a) { return Rat(mpq_class(-a.v_)); }

    friend bool operator==(const Rat &a, const Rat &b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rat &a, const Rat &b)
    {
        return cmp(a.v_, b.v_) <=> 0;
    }

    friend std::ostream &operator<<(std::ostream &os, const Rat &r) { return os << r.str(); }

    const mpq_class &raw() const { return v_; }

private:
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    mpq_class v_;
};

inline bool is_zero(const Rat &r) { return r.is_zero(); }

/// Integer power; negative exponents invert.
Rat pow(const Rat &base, long e);

/// Rising factorial a(a+1)...(a+n-1); 1 when n == 0.
Rat pochhammer(const Rat &a, unsigned n);

/// Stirling numbers of the second kind.
BigInt stirling2(unsigned m, unsigned k);

BigInt binomial(unsigned n, unsigned k);

BigInt factorial(unsigned n);

} // namespace dorth

#endif
