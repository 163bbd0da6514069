#include <dorth/rat.hpp>

#include <cctype>
#include <vector>

namespace dorth
{

Rat::Rat(const BigInt &num, const BigInt &den)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

namespace
{

bool valid_integer(std::string_view s)
{
    if (!s.empty() && s.front() == '-') {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rat Rat::parse(std::string_view s)
{
    const auto slash = s.find('/');
    const auto num = s.substr(0, slash);
    if (!valid_integer(num)) {
        throw ParseError("not a rational literal: '" + std::string(s) + "'");
    }
    if (slash == std::string_view::npos) {
        return Rat(BigInt(std::string(num)));
    }
    const auto den = s.substr(slash + 1);
    if (!valid_integer(den) || den.front() == '-') {
        throw ParseError("not a rational literal: '" + std::string(s) + "'");
    }
    BigInt d(std::string{den});
    if (d == 0) {
        throw ParseError("zero denominator in '" + std::string(s) + "'");
    }
    return Rat(BigInt(std::string(num)), d);
}

Rat Rat::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("inverse of zero");
    }
    return Rat(mpq_class(1 / v_));
}

Rat &Rat::operator/=(const Rat &o)
{
    if (o.is_zero()) {
        throw std::domain_error("division by zero");
    }
    v_ /= o.v_;
    return *this;
}

std::string Rat::str() const
{
    if (is_integer()) {
        return v_.get_num().get_str();
    }
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat pow(const Rat &base, long e)
{
    if (e < 0) {
        return pow(base.inverse(), -e);
    }
    Rat result(1), b = base;
    while (e > 0) {
        if (e & 1) {
            result *= b;
        }
        b *= b;
        e >>= 1;
    }
    return result;
}

Rat pochhammer(const Rat &a, unsigned n)
{
    Rat result(1);
    for (unsigned i = 0; i < n; ++i) {
        result *= a + Rat(static_cast<long>(i));
    }
    return result;
}

BigInt stirling2(unsigned m, unsigned k)
{
    if (k > m) {
        return 0;
    }
    // Row-by-row triangle; row[j] holds S(i, j).
    std::vector<BigInt> row(k + 1, 0);
    row[0] = 1;
    for (unsigned i = 1; i <= m; ++i) {
        for (unsigned j = std::min(i, k); j >= 1; --j) {
            row[j] = BigInt(j) * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    return row[k];
}

BigInt binomial(unsigned n, unsigned k)
{
    if (k > n) {
        return 0;
    }
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt factorial(unsigned n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace dorth
