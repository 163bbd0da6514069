#ifndef DORTH_SHEFFER_HPP
#define DORTH_SHEFFER_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <dorth/poly.hpp>
#include <dorth/rat.hpp>
#include <dorth/series.hpp>

namespace dorth
{

/// Violated contract on a couple, a pair or a family (bad degree, zero
/// leading coefficient, insufficient order).
class ContractError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// The Sheffer pair does not come from any couple with the requested d: 1/H'
/// or A'/(A H') is not a polynomial of the right degree.
class NotDOrthogonalSheffer : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// Couple [gamma_d, sigma_{d+1}]: gamma has exact degree d, sigma has degree
/// at most d+1 and nonzero constant term.
struct CoupleSpec {
    int d = 1;
    std::vector<Rat> gamma; // beta_0..beta_d
    std::vector<Rat> sigma; // alpha_0..alpha_{d+1}

    /// Throws ContractError when the invariants fail.
    void validate() const;

    Poly gamma_poly() const { return Poly(gamma); }
    Poly sigma_poly() const { return Poly(sigma); }

    friend bool operator==(const CoupleSpec &, const CoupleSpec &) = default;
};

/// Builds a couple from polynomials, padding gamma to d+1 and sigma to d+2
/// coefficients.
CoupleSpec make_couple(int d, const Poly &gamma, const Poly &sigma);

/// Newton form A(t) (1 + w H(t))^{x/w}; kept alongside the exponential form
/// because its lowering operator is H*(Delta_w) rather than H*(D).
struct NewtonForm {
    RatSeries h;
    Rat omega;
};

/// Generating function A(t) exp(x hx(t)).
struct ShefferPair {
    RatSeries a;
    RatSeries hx;
    std::optional<NewtonForm> newton;

    std::size_t order() const { return a.order(); }
    /// Throws ContractError unless A(0) = 1, hx(0) = 0, hx'(0) != 0.
    void validate() const;
};

/// Converts A(t)(1 + w H(t))^{x/w} to exponential form with
/// hx = log(1 + w H) / w, retaining (H, w).
ShefferPair pair_from_newton(const RatSeries &a, const RatSeries &h, const Rat &omega);

/// P_0..P_N with P_n exactly of degree n.
struct PolySequence {
    std::vector<Poly> polys;

    std::size_t size() const { return polys.size(); }
    /// Honors P_{-n} = 0.
    Poly at(long n) const { return n < 0 ? Poly() : polys.at(static_cast<std::size_t>(n)); }
};

/// H = int_0^t ds / sigma(s), A = exp int_0^t gamma(s)/sigma(s) ds.
ShefferPair pair_from_couple(const CoupleSpec &c, std::size_t order);

struct ConditionEntry {
    std::size_t n;
    Rat value; // n alpha_{d+1} - beta_d
    bool ok;
};

struct ConditionReport {
    bool alpha0_nonzero = false;
    bool beta_d_nonzero = false;
    std::vector<ConditionEntry> entries; // n = 1..N
    bool pass = false;

    std::vector<std::size_t> failing() const;
};

/// alpha_0 (n alpha_{d+1} - beta_d) != 0 for n = 1..N, plus beta_d != 0.
ConditionReport check_conditions(const CoupleSpec &c, std::size_t order);

/// P_n(x) = n! [t^n] A(t) exp(x hx(t)).
PolySequence expand_polynomials(const ShefferPair &p, std::size_t order);

/// Recovers sigma = 1/H' and gamma = A'/(A H') and requires them to be
/// polynomials of degree <= d+1 and exactly d. Needs order > 2(d+1).
CoupleSpec couple_from_pair(const ShefferPair &p, int d);

} // namespace dorth

#endif
