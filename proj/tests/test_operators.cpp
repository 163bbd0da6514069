#include <doctest.h>

#include <random>

#include <dorth/operators.hpp>

#include "oracles.hpp"

using dorth::BaseOperator;
using dorth::Poly;
using dorth::Rat;
using dorth::RatSeries;

namespace
{

RatSeries geometric(std::size_t n) { return RatSeries(std::vector<Rat>(n + 1, Rat(1)), n); }

RatSeries hermite_a(std::size_t n)
{
    RatSeries e(n);
    e[2] = Rat(-1, 2);
    return exp_series(e);
}

Poly random_poly(std::mt19937 &rng, std::size_t deg)
{
    std::vector<Rat> c;
    for (std::size_t k = 0; k <= deg; ++k) {
        c.push_back(oracle::random_rat(rng, 6, 3));
    }
    return Poly(c);
}

} // namespace

TEST_CASE("lowering_from_H examples")
{
    const std::size_t n = 10;
    const auto appell = dorth::lowering_from_H(RatSeries::variable(n), BaseOperator::derivative());
    CHECK(appell.hstar == RatSeries::variable(n));

    const auto t = RatSeries::variable(n);
    const auto omt = RatSeries::constant(Rat(1), n) - t;
    const auto h11 = (t * t - t * Rat(2)) * invert_mul(omt * omt * Rat(2));
    const auto l11 = dorth::lowering_from_H(h11, BaseOperator::derivative());
    CHECK(l11.hstar == RatSeries::constant(Rat(1), n) - pow_rat(RatSeries(std::vector<Rat>{1, -2}, n), Rat(-1, 2)));

    // H = ((c-1)/(dc)) [(1-t)^{-d} - 1] at d=2, c=1/2: hstar = 1 - (1 - 2t)^{-1/2}
    const Rat c(1, 2);
    const int d = 2;
    const Rat k = (c - Rat(1)) / (Rat(d) * c);
    const auto h16 = (pow_rat(omt, Rat(-d)) - RatSeries::constant(Rat(1), n)) * k;
    const auto l16 = dorth::lowering_from_H(h16, BaseOperator::difference(Rat(1)));
    CHECK(l16.base.kind == dorth::BaseKind::difference);
    const Rat z = Rat(d) * c / (Rat(1) - c);
    CHECK(l16.hstar == RatSeries::constant(Rat(1), n) - pow_rat(RatSeries(std::vector<Rat>{1, -z}, n), Rat(-1, d)));
}

TEST_CASE("apply_base examples")
{
    const Poly x2{0, 0, 1};
    CHECK(dorth::apply_base(BaseOperator::derivative(), x2) == Poly{0, 2});
    CHECK(dorth::apply_base(BaseOperator::difference(Rat(1)), x2) == Poly{1, 2});
    CHECK(dorth::apply_base(BaseOperator::difference(Rat(1, 3)), Poly{5}) == Poly());
    CHECK(dorth::apply_base(BaseOperator::difference(Rat(1, 2)), x2) == Poly{Rat(1, 2), 2});
    CHECK_THROWS_AS(dorth::apply_base(BaseOperator::difference(Rat(0)), x2), dorth::ContractError);
}

TEST_CASE("apply_lowering examples")
{
    const std::size_t n = 6;
    const dorth::LoweringOp appell{BaseOperator::derivative(), RatSeries::variable(n)};
    CHECK(dorth::apply_lowering(appell, Poly{0, 0, 0, 1}) == Poly{0, 0, 3});
    const dorth::LoweringOp lag{BaseOperator::derivative(), -(RatSeries::variable(n) * geometric(n))};
    CHECK(dorth::apply_lowering(lag, Poly{0, 1}) == Poly{-1});
    CHECK(dorth::apply_lowering(lag, Poly{7}) == Poly());
    CHECK_THROWS_AS(dorth::apply_lowering(lag, Poly::monomial(7, Rat(1))), dorth::ContractError);
}

TEST_CASE("functional_eval examples")
{
    const std::size_t n = 8;
    const dorth::LoweringOp lag{BaseOperator::derivative(), -(RatSeries::variable(n) * geometric(n))};
    const dorth::FunctionalVector vl(geometric(n), lag, 1);
    CHECK(dorth::functional_eval(vl, 0, Poly{1}) == Rat(1));
    CHECK(dorth::functional_eval(vl, 0, Poly{0, 1}) == Rat(1));
    // Gamma moments: int x^m e^{-x} = m!
    for (std::size_t m = 0; m <= n; ++m) {
        CHECK(dorth::functional_eval(vl, 0, Poly::monomial(m, Rat(1))) == oracle::factorial(static_cast<int>(m)));
    }

    const dorth::FunctionalVector vh(hermite_a(n), {BaseOperator::derivative(), RatSeries::variable(n)}, 1);
    CHECK(dorth::functional_eval(vh, 0, Poly{0, 0, 1}) == Rat(1));
    CHECK_THROWS_AS(dorth::functional_eval(vh, 1, Poly{1}), std::out_of_range);
    CHECK_THROWS_AS(dorth::functional_eval(vh, 0, Poly::monomial(9, Rat(1))), dorth::ContractError);
    CHECK_THROWS_AS(dorth::FunctionalVector(geometric(n) * Rat(2), lag, 1), dorth::ContractError);
}

TEST_CASE("lowering_for picks the base by form")
{
    const std::size_t n = 8;
    const auto charlier = dorth::pair_from_newton(exp_series(-RatSeries::variable(n)), RatSeries::variable(n), Rat(1));
    const auto op = dorth::lowering_for(charlier);
    CHECK(op.base.kind == dorth::BaseKind::difference);
    CHECK(op.hstar == RatSeries::variable(n));
    const auto seq = dorth::expand_polynomials(charlier, n);
    CHECK(dorth::apply_lowering(op, seq.at(2)) == seq.at(1) * Rat(2));

    const dorth::ShefferPair hermite{hermite_a(n), RatSeries::variable(n), std::nullopt};
    CHECK(dorth::lowering_for(hermite).base.kind == dorth::BaseKind::derivative);
}

TEST_CASE("property: lowering lowers random Sheffer sets")
{
    std::mt19937 rng(31);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t n = 10;
        auto a = oracle::random_series(rng, n);
        a[0] = Rat(1);
        auto h = oracle::random_series(rng, n);
        h[0] = Rat(0);
        if (h[1].is_zero()) {
            h[1] = Rat(1, 2);
        }
        const bool newton = trial % 2 == 1;
        const dorth::ShefferPair p = newton ? dorth::pair_from_newton(a, h, Rat(trial + 1, 3))
                                            : dorth::ShefferPair{a, h, std::nullopt};
        const auto seq = dorth::expand_polynomials(p, n);
        const auto op = dorth::lowering_for(p);
        CHECK(dorth::apply_lowering(op, seq.at(0)) == Poly());
        for (std::size_t k = 1; k <= n; ++k) {
            CHECK(dorth::apply_lowering(op, seq.at(static_cast<long>(k))) == seq.at(static_cast<long>(k) - 1) * Rat(static_cast<long>(k)));
        }
        // duality for d = 1
        const auto v = dorth::functional_vector_for(p, 1);
        for (std::size_t k = 0; k <= n; ++k) {
            CHECK(dorth::functional_eval(v, 0, seq.polys[k]) == (k == 0 ? Rat(1) : Rat(0)));
        }
    }
}

TEST_CASE("property: fast evaluation at 0 matches full application")
{
    std::mt19937 rng(32);
    for (int trial = 0; trial < 30; ++trial) {
        const auto c = oracle::random_series(rng, 8);
        const auto f = random_poly(rng, 8);
        for (const auto &b : {BaseOperator::derivative(), BaseOperator::difference(Rat(1)), BaseOperator::difference(Rat(-2, 3))}) {
            CHECK(dorth::eval_operator_series_at_zero(b, c, f) == dorth::apply_operator_series(b, c, f).eval(Rat(0)));
        }
    }
}

TEST_CASE("property: functional values do not depend on truncation order")
{
    std::mt19937 rng(33);
    for (int trial = 0; trial < 8; ++trial) {
        auto a = oracle::random_series(rng, 14);
        a[0] = Rat(1);
        auto h = oracle::random_series(rng, 14);
        h[0] = Rat(0);
        h[1] = Rat(1 + trial);
        const int d = 1 + trial % 3;
        const dorth::ShefferPair big{a, h, std::nullopt};
        const dorth::ShefferPair small{a.truncated(8), h.truncated(8), std::nullopt};
        const auto vb = dorth::functional_vector_for(big, d);
        const auto vs = dorth::functional_vector_for(small, d);
        const auto f = random_poly(rng, 8);
        for (int i = 0; i < d; ++i) {
            CHECK(dorth::functional_eval(vb, i, f) == dorth::functional_eval(vs, i, f));
        }
    }
}
