#ifndef DORTH_OPERATORS_HPP
#define DORTH_OPERATORS_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <dorth/poly.hpp>
#include <dorth/rat.hpp>
#include <dorth/series.hpp>
#include <dorth/sheffer.hpp>

namespace dorth
{

enum class BaseKind { derivative, difference };

/// D, or the forward difference (f(x+w) - f(x)) / w.
struct BaseOperator {
    BaseKind kind = BaseKind::derivative;
    Rat step{1};

    static BaseOperator derivative() { return {BaseKind::derivative, Rat(1)}; }
    static BaseOperator difference(const Rat &w) { return {BaseKind::difference, w}; }
};

/// sigma = H*(B): the lowering operator of a Sheffer set, stored as the
/// compositional inverse H* and the base operator B.
struct LoweringOp {
    BaseOperator base;
    RatSeries hstar;
};

LoweringOp lowering_from_H(const RatSeries &h, BaseOperator base);

/// Lowering operator of a pair: H*(Delta_w) for Newton forms, H*(D) otherwise.
LoweringOp lowering_for(const ShefferPair &p);

Poly apply_base(const BaseOperator &b, const Poly &f);

/// sum_k c_k B^k f for an operator series in B; terms past deg f vanish.
Poly apply_operator_series(const BaseOperator &b, const RatSeries &c, const Poly &f);

/// [sum_k c_k B^k f](0) without materialising the intermediate polynomial.
Rat eval_operator_series_at_zero(const BaseOperator &b, const RatSeries &c, const Poly &f);

Poly apply_lowering(const LoweringOp &op, const Poly &f);

/// Functionals u_0..u_{d-1} with <u_i, f> = (1/i!) [sigma^i / A(sigma) f](0).
///
/// For each i the operator sigma^i / A(sigma) is expanded once, at the
/// vector's order, into a series in the base operator B by composing
/// t^i / A(t) with H*. Polynomials of degree up to that order can then be
/// evaluated with a single pass of B.
class FunctionalVector
{
public:
    FunctionalVector(RatSeries a, LoweringOp lowering, int d);

    const RatSeries &a() const { return a_; }
    const LoweringOp &lowering() const { return lowering_; }
    int d() const { return d_; }
    /// Largest polynomial degree the vector can evaluate exactly.
    std::size_t order() const { return a_.order(); }

    /// Coefficients of sigma^i / A(sigma) as a series in B.
    const RatSeries &operator_series(int i) const;

private:
    RatSeries a_;
    LoweringOp lowering_;
    int d_;
    std::vector<RatSeries> ops_;
};

/// Builds the functional vector of a pair, re-expanded at the given order.
FunctionalVector functional_vector_for(const ShefferPair &p, int d);

/// <u_i, f>. Throws std::out_of_range when i is not in 0..d-1 and
/// ContractError when deg f exceeds the vector's order.
Rat functional_eval(const FunctionalVector &v, int i, const Poly &f);

} // namespace dorth

#endif
