#include <dorth/sheffer.hpp>

namespace dorth
{

void CoupleSpec::validate() const
{
    if (d < 1) {
        throw ContractError("couple: d must be a positive integer");
    }
    const auto du = static_cast<std::size_t>(d);
    if (gamma.size() != du + 1) {
        throw ContractError("couple: gamma needs exactly d+1 coefficients");
    }
    if (sigma.size() != du + 2) {
        throw ContractError("couple: sigma needs exactly d+2 coefficients");
    }
    if (gamma.back().is_zero()) {
        throw ContractError("couple: gamma must have exact degree d (beta_d != 0)");
    }
    if (sigma.front().is_zero()) {
        throw ContractError("couple: sigma must have nonzero constant term (alpha_0 != 0)");
    }
}

CoupleSpec make_couple(int d, const Poly &gamma, const Poly &sigma)
{
    const auto du = static_cast<std::size_t>(d);
    if (gamma.degree().value_or(0) > du || sigma.degree().value_or(0) > du + 1) {
        throw ContractError("make_couple: polynomial degree exceeds couple shape");
    }
    CoupleSpec c;
    c.d = d;
    for (std::size_t k = 0; k <= du; ++k) {
        c.gamma.push_back(gamma[k]);
    }
    for (std::size_t k = 0; k <= du + 1; ++k) {
        c.sigma.push_back(sigma[k]);
    }
    return c;
}

void ShefferPair::validate() const
{
    if (a.order() != hx.order()) {
        throw ContractError("sheffer pair: A and H orders differ");
    }
    if (a[0] != Rat(1)) {
        throw ContractError("sheffer pair: A(0) must be 1");
    }
    if (!hx[0].is_zero()) {
        throw ContractError("sheffer pair: H(0) must be 0");
    }
    if (a.order() >= 1 && hx[1].is_zero()) {
        throw ContractError("sheffer pair: H'(0) must be nonzero");
    }
}

ShefferPair pair_from_newton(const RatSeries &a, const RatSeries &h, const Rat &omega)
{
    if (omega.is_zero()) {
        throw ContractError("newton form: step must be nonzero");
    }
    const auto one = RatSeries::constant(Rat(1), h.order());
    ShefferPair p{a, log_series(one + h * omega) * omega.inverse(), NewtonForm{h, omega}};
    p.validate();
    return p;
}

ShefferPair pair_from_couple(const CoupleSpec &c, std::size_t order)
{
    c.validate();
    const RatSeries sigma(c.sigma, order);
    const RatSeries gamma(c.gamma, order);
    const RatSeries inv = invert_mul(sigma);
    return ShefferPair{exp_series(integrate(gamma * inv)), integrate(inv), std::nullopt};
}

std::vector<std::size_t> ConditionReport::failing() const
{
    std::vector<std::size_t> out;
    for (const auto &e : entries) {
        if (!e.ok) {
            out.push_back(e.n);
        }
    }
    return out;
}

ConditionReport check_conditions(const CoupleSpec &c, std::size_t order)
{
    ConditionReport r;
    const Rat alpha0 = c.sigma.empty() ? Rat(0) : c.sigma.front();
    const auto du = static_cast<std::size_t>(std::max(c.d, 0));
    const Rat alpha_top = du + 1 < c.sigma.size() ? c.sigma[du + 1] : Rat(0);
    const Rat beta_d = du < c.gamma.size() ? c.gamma[du] : Rat(0);
    r.alpha0_nonzero = !alpha0.is_zero();
    r.beta_d_nonzero = !beta_d.is_zero();
    r.pass = r.alpha0_nonzero && r.beta_d_nonzero;
    for (std::size_t n = 1; n <= order; ++n) {
        const Rat v = Rat(static_cast<long>(n)) * alpha_top - beta_d;
        r.entries.push_back({n, v, !v.is_zero()});
        r.pass = r.pass && !v.is_zero();
    }
    return r;
}

PolySequence expand_polynomials(const ShefferPair &p, std::size_t order)
{
    p.validate();
    if (p.order() < order) {
        throw ContractError("expand_polynomials: pair order below requested order");
    }
    const auto a = p.a.truncated(order);
    const auto h = p.hx.truncated(order);
    Series<Poly> xh(order);
    for (std::size_t k = 0; k <= order; ++k) {
        xh[k] = Poly{Rat(0), h[k]};
    }
    const auto g = lift(a) * exp_series(xh);
    PolySequence seq;
    for (std::size_t n = 0; n <= order; ++n) {
        seq.polys.push_back(g[n] * Rat(factorial(static_cast<unsigned>(n))));
        if (seq.polys.back().degree() != n) {
            throw ContractError("expand_polynomials: P_" + std::to_string(n) + " has wrong degree");
        }
    }
    return seq;
}

CoupleSpec couple_from_pair(const ShefferPair &p, int d)
{
    p.validate();
    if (d < 1) {
        throw ContractError("couple_from_pair: d must be positive");
    }
    const auto du = static_cast<std::size_t>(d);
    const std::size_t n = p.order();
    if (n <= 2 * (du + 1)) {
        throw ContractError("couple_from_pair: order must exceed 2(d+1) to certify polynomiality");
    }
    // The derivatives lose the top coefficient, so everything below is exact
    // only through t^{N-1}.
    const RatSeries sigma = invert_mul(derivative(p.hx));
    const RatSeries gamma = derivative(p.a) * invert_mul(p.a) * sigma;
    for (std::size_t k = du + 2; k < n; ++k) {
        if (!sigma[k].is_zero()) {
            throw NotDOrthogonalSheffer("1/H' is not a polynomial of degree <= " + std::to_string(d + 1)
                                        + " (t^" + std::to_string(k) + " coefficient " + sigma[k].str()
                                        + ")");
        }
    }
    for (std::size_t k = du + 1; k < n; ++k) {
        if (!gamma[k].is_zero()) {
            throw NotDOrthogonalSheffer("A'/(A H') is not a polynomial of degree <= " + std::to_string(d)
                                        + " (t^" + std::to_string(k) + " coefficient " + gamma[k].str()
                                        + ")");
        }
    }
    if (gamma[du].is_zero()) {
        throw NotDOrthogonalSheffer("A'/(A H') has degree below " + std::to_string(d));
    }
    CoupleSpec c;
    c.d = d;
    c.gamma.assign(gamma.coeffs().begin(), gamma.coeffs().begin() + static_cast<long>(du + 1));
    c.sigma.assign(sigma.coeffs().begin(), sigma.coeffs().begin() + static_cast<long>(du + 2));
    return c;
}

} // namespace dorth
