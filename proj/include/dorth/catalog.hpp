#ifndef DORTH_CATALOG_HPP
#define DORTH_CATALOG_HPP

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <dorth/poly.hpp>
#include <dorth/rat.hpp>
#include <dorth/sheffer.hpp>

namespace dorth
{

enum class Family {
    LaguerreEq9,
    LaguerreEq10,
    LaguerreEq11,
    HermiteEq12,
    CharlierEq13,
    MeixnerEq14,
    MeixnerEq16,
    MeixnerEq21,
};

inline constexpr std::array<Family, 8> all_families{
    Family::LaguerreEq9,  Family::LaguerreEq10, Family::LaguerreEq11, Family::HermiteEq12,
    Family::CharlierEq13, Family::MeixnerEq14,  Family::MeixnerEq16,  Family::MeixnerEq21,
};

/// CLI name, e.g. "meixner-eq16".
std::string family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Parameters read by the family ("alpha", "beta", "c", "omega").
std::vector<std::string> family_parameters(Family f);
/// Degree of the auxiliary polynomial pi as a function of d, or nullopt when
/// the family has none.
std::optional<int> aux_degree(Family f, int d);
int min_d(Family f);
/// Whether the lowering operator is a forward difference.
bool is_difference_family(Family f);

struct FamilySpec {
    Family family = Family::LaguerreEq9;
    int d = 1;
    std::map<std::string, Rat> params;
    std::vector<Rat> aux; // a_0..a_deg of pi

    Rat param(const std::string &name) const;
    Poly aux_poly() const { return Poly(aux); }
};

/// Test-suite sample: alpha = 1/2, (c, beta) = (1/2, 1), omega = 1, every
/// coefficient of pi equal to 1.
FamilySpec default_spec(Family f, int d);

struct ValidationReport {
    std::vector<std::string> violations;
    bool pass() const { return violations.empty(); }
    std::string message() const;
};

class InvalidParams : public std::invalid_argument
{
public:
    explicit InvalidParams(ValidationReport r)
        : std::invalid_argument(r.message()), report_(std::move(r))
    {
    }
    const ValidationReport &report() const { return report_; }

private:
    ValidationReport report_;
};

ValidationReport validate_params(const FamilySpec &fs);

/// The family's couple [gamma_d, sigma_{d+1}], expanded exactly.
CoupleSpec family_couple(const FamilySpec &fs);

/// (A, H) built from the closed-form generating function. exp(pi(t)) factors
/// are normalised to exp(pi(t) - pi(0)) so that A(0) = 1.
ShefferPair family_generating(const FamilySpec &fs, std::size_t order);

/// Series form of the two functionals of the 2-orthogonal Laguerre-type set
/// with A = (1-t)^{-alpha-1}, H = (t^2-2t)/(2(1-t)^2):
///   <u_0, f> = sum_k ((alpha+1)/2)_k 2^k f^(k)(0)/k!
///   <u_1, f> = <u_0, f> - sum_k ((alpha+2)/2)_k 2^k f^(k)(0)/k!
Rat laguerre2_functionals(const Rat &alpha, int i, const Poly &f);

class DivergentParameters : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

/// Ratio w = dc / (1 + c(d-1)) governing convergence of the Meixner-type
/// j-sums.
Rat meixner_convergence_ratio(int d, const Rat &c);

/// Exact <u_r, f> for the Meixner-type d-orthogonal set, via
///   <u_r, x^m> = (1/r!) sum_i C(r,i) (-1)^i sum_k S(m,k) (beta+i/d)_k
///                w^k (1-w)^{-k}.
/// Throws DivergentParameters when |w| >= 1.
Rat meixner_functional_exact(int d, const Rat &c, const Rat &beta, int r, const Poly &f);

struct NumericValue {
    HighPrecision value;
    HighPrecision tail_bound;
    std::size_t terms;
};

/// Partial sums of the defining infinite j-series
///   (1/r!) sum_i C(r,i)(-1)^i sum_j (b_i)_j z^j f(j) / ((1+z)^{b_i+j} j!),
/// b_i = beta + i/d, z = dc/(1-c), run until a geometric tail bound falls
/// below `tolerance`.
NumericValue meixner_functional_numeric(int d, const Rat &c, const Rat &beta, int r, const Poly &f,
                                        const HighPrecision &tolerance = HighPrecision("1e-40"));

/// <u_0, f> = (1-c)^beta sum_j (beta)_j c^j f(j) / j! for 0 < c < 1,
/// evaluated in closed form.
Rat meixner_classical_functional(const Rat &c, const Rat &beta, const Poly &f);

} // namespace dorth

#endif
