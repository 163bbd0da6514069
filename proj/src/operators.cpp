#include <dorth/operators.hpp>

#include <algorithm>
#include <string>

namespace dorth
{

LoweringOp lowering_from_H(const RatSeries &h, BaseOperator base)
{
    if (base.kind == BaseKind::difference && base.step.is_zero()) {
        throw ContractError("difference operator needs a nonzero step");
    }
    return LoweringOp{base, reversion(h)};
}

LoweringOp lowering_for(const ShefferPair &p)
{
    if (p.newton) {
        return lowering_from_H(p.newton->h, BaseOperator::difference(p.newton->omega));
    }
    return lowering_from_H(p.hx, BaseOperator::derivative());
}

Poly apply_base(const BaseOperator &b, const Poly &f)
{
    if (b.kind == BaseKind::derivative) {
        return f.derivative();
    }
    if (b.step.is_zero()) {
        throw ContractError("difference operator needs a nonzero step");
    }
    return (f.shift(b.step) - f) * b.step.inverse();
}

Poly apply_operator_series(const BaseOperator &b, const RatSeries &c, const Poly &f)
{
    Poly acc;
    Poly g = f;
    for (std::size_t k = 0; k <= c.order() && !g.is_zero(); ++k) {
        if (!c[k].is_zero()) {
            acc += g * c[k];
        }
        g = apply_base(b, g);
    }
    return acc;
}

Rat eval_operator_series_at_zero(const BaseOperator &b, const RatSeries &c, const Poly &f)
{
    if (f.is_zero()) {
        return Rat(0);
    }
    const std::size_t deg = std::min(*f.degree(), c.order());
    Rat acc(0);
    if (b.kind == BaseKind::derivative) {
        // D^k f(0) = k! a_k
        Rat k_fact(1);
        for (std::size_t k = 0; k <= deg; ++k) {
            if (k > 0) {
                k_fact *= Rat(static_cast<long>(k));
            }
            acc += c[k] * k_fact * f[k];
        }
        return acc;
    }
    // Delta_w^k f(0) is the k-th forward difference of f(0), f(w), f(2w), ...
    // divided by w^k.
    std::vector<Rat> values;
    values.reserve(*f.degree() + 1);
    for (std::size_t j = 0; j <= *f.degree(); ++j) {
        values.push_back(f.eval(b.step * Rat(static_cast<long>(j))));
    }
    const Rat inv_step = b.step.inverse();
    Rat scale(1);
    for (std::size_t k = 0; k <= deg; ++k) {
        acc += c[k] * values[0] * scale;
        for (std::size_t j = 0; j + 1 < values.size() - k; ++j) {
            values[j] = values[j + 1] - values[j];
        }
        scale *= inv_step;
    }
    return acc;
}

Poly apply_lowering(const LoweringOp &op, const Poly &f)
{
    const std::size_t deg = f.degree().value_or(0);
    if (deg > op.hstar.order()) {
        throw ContractError("apply_lowering: polynomial degree exceeds H* order");
    }
    return apply_operator_series(op.base, op.hstar, f);
}

FunctionalVector::FunctionalVector(RatSeries a, LoweringOp lowering, int d)
    : a_(std::move(a)), lowering_(std::move(lowering)), d_(d)
{
    if (d_ < 1) {
        throw ContractError("functional vector: d must be positive");
    }
    if (a_[0] != Rat(1)) {
        throw ContractError("functional vector: A(0) must be 1");
    }
    if (lowering_.hstar.order() != a_.order()) {
        throw ContractError("functional vector: A and H* orders differ");
    }
    const RatSeries inv_a = invert_mul(a_);
    for (int i = 0; i < d_; ++i) {
        ops_.push_back(compose(inv_a.shifted(static_cast<std::size_t>(i)), lowering_.hstar));
    }
}

const RatSeries &FunctionalVector::operator_series(int i) const
{
    if (i < 0 || i >= d_) {
        throw std::out_of_range("functional index " + std::to_string(i) + " outside 0.."
                                + std::to_string(d_ - 1));
    }
    return ops_[static_cast<std::size_t>(i)];
}

FunctionalVector functional_vector_for(const ShefferPair &p, int d)
{
    return FunctionalVector(p.a, lowering_for(p), d);
}

Rat functional_eval(const FunctionalVector &v, int i, const Poly &f)
{
    const RatSeries &op = v.operator_series(i);
    if (f.is_zero()) {
        return Rat(0);
    }
    if (*f.degree() > v.order()) {
        throw ContractError("functional_eval: degree " + std::to_string(*f.degree())
                            + " exceeds functional order " + std::to_string(v.order()));
    }
    return eval_operator_series_at_zero(v.lowering().base, op, f)
           * Rat(factorial(static_cast<unsigned>(i))).inverse();
}

} // namespace dorth
