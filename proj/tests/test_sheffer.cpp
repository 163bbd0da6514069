#include <doctest.h>

#include <random>

#include <dorth/sheffer.hpp>

#include "oracles.hpp"

using dorth::CoupleSpec;
using dorth::Poly;
using dorth::Rat;
using dorth::RatSeries;

namespace
{

const Poly one_minus_t{1, -1};

CoupleSpec laguerre_couple(int d, const Rat &alpha)
{
    return dorth::make_couple(d, pow(one_minus_t, static_cast<unsigned>(d)) * (-(alpha + Rat(1))),
                              pow(one_minus_t, static_cast<unsigned>(d + 1)) * Rat(-1, d));
}

RatSeries geometric(std::size_t n) { return RatSeries(std::vector<Rat>(n + 1, Rat(1)), n); }

RatSeries from_poly(const Poly &p, std::size_t n)
{
    RatSeries s(n);
    for (std::size_t k = 0; k < p.coeffs().size() && k <= n; ++k) {
        s[k] = p[k];
    }
    return s;
}

// Random couple with coefficients in [-5, 5]; may violate the conditions.
CoupleSpec random_couple(std::mt19937 &rng, int d)
{
    std::uniform_int_distribution<int> coef(-5, 5);
    CoupleSpec c;
    c.d = d;
    for (int k = 0; k <= d; ++k) {
        c.gamma.emplace_back(coef(rng));
    }
    for (int k = 0; k <= d + 1; ++k) {
        c.sigma.emplace_back(coef(rng));
    }
    return c;
}

bool couple_ok(const CoupleSpec &c)
{
    try {
        c.validate();
    } catch (const dorth::ContractError &) {
        return false;
    }
    return dorth::check_conditions(c, 16).pass;
}

} // namespace

TEST_CASE("couple contracts")
{
    CHECK_NOTHROW(laguerre_couple(1, Rat(0)).validate());
    CoupleSpec bad = laguerre_couple(1, Rat(0));
    bad.sigma[0] = Rat(0);
    CHECK_THROWS_AS(bad.validate(), dorth::ContractError);
    bad = laguerre_couple(1, Rat(0));
    bad.gamma[1] = Rat(0);
    CHECK_THROWS_AS(bad.validate(), dorth::ContractError);
    bad = laguerre_couple(1, Rat(0));
    bad.sigma.push_back(Rat(1));
    CHECK_THROWS_AS(bad.validate(), dorth::ContractError);
    CHECK_THROWS_AS(dorth::make_couple(1, Poly{1, 1, 1}, Poly{1}), dorth::ContractError);
}

TEST_CASE("pair_from_couple: Laguerre d=1, alpha=0")
{
    const std::size_t n = 10;
    const auto c = laguerre_couple(1, Rat(0));
    CHECK(c.gamma == std::vector<Rat>{-1, 1});
    CHECK(c.sigma == std::vector<Rat>{-1, 2, -1});
    const auto p = dorth::pair_from_couple(c, n);
    CHECK(p.a == geometric(n));
    CHECK(p.hx == -(RatSeries::variable(n) * geometric(n)));
}

TEST_CASE("pair_from_couple: Hermite")
{
    const std::size_t n = 8;
    const auto c = dorth::make_couple(1, Poly{0, -1}, Poly{1});
    const auto p = dorth::pair_from_couple(c, n);
    CHECK(p.hx == RatSeries::variable(n));
    RatSeries e(n);
    e[2] = Rat(-1, 2);
    CHECK(p.a == exp_series(e));
}

TEST_CASE("check_conditions")
{
    const auto ok = dorth::check_conditions(laguerre_couple(2, Rat(1, 2)), 30);
    CHECK(ok.pass);
    CHECK(ok.entries.size() == 30);

    const auto c = dorth::make_couple(1, Poly{1, 3}, Poly{1, 0, 1});
    const auto r = dorth::check_conditions(c, 8);
    CHECK_FALSE(r.pass);
    CHECK(r.failing() == std::vector<std::size_t>{3});

    CoupleSpec zero_alpha = laguerre_couple(1, Rat(0));
    zero_alpha.sigma[0] = Rat(0);
    const auto z = dorth::check_conditions(zero_alpha, 5);
    CHECK_FALSE(z.pass);
    CHECK_FALSE(z.alpha0_nonzero);
}

TEST_CASE("expand_polynomials examples")
{
    const std::size_t n = 6;
    RatSeries e(n);
    e[2] = Rat(-1, 2);
    const dorth::ShefferPair hermite{exp_series(e), RatSeries::variable(n), std::nullopt};
    const auto h = dorth::expand_polynomials(hermite, n);
    CHECK(h.at(2) == Poly{-1, 0, 1});
    CHECK(h.at(3) == Poly{0, -3, 0, 1});
    CHECK(h.at(-1) == Poly());

    RatSeries cube(n);
    cube[3] = Rat(1);
    const dorth::ShefferPair app4{exp_series(cube), RatSeries::variable(n), std::nullopt};
    CHECK(dorth::expand_polynomials(app4, n).at(3) == Poly{6, 0, 0, 1});

    const auto charlier = dorth::pair_from_newton(exp_series(-RatSeries::variable(n)), RatSeries::variable(n), Rat(1));
    CHECK(charlier.newton.has_value());
    CHECK(dorth::expand_polynomials(charlier, n).at(1) == Poly{-1, 1});
    // (1+t)^x: hx = log(1+t)
    CHECK(charlier.hx == log_series(RatSeries(std::vector<Rat>{1, 1}, n)));
}

TEST_CASE("expand_polynomials rejects bad pairs")
{
    const dorth::ShefferPair bad{RatSeries::constant(Rat(2), 4), RatSeries::variable(4), std::nullopt};
    CHECK_THROWS_AS(dorth::expand_polynomials(bad, 4), dorth::ContractError);
    const dorth::ShefferPair flat{RatSeries::constant(Rat(1), 4), RatSeries(4), std::nullopt};
    CHECK_THROWS_AS(dorth::expand_polynomials(flat, 4), dorth::ContractError);
}

TEST_CASE("couple_from_pair examples")
{
    const std::size_t n = 12;
    const dorth::ShefferPair lag{geometric(n), -(RatSeries::variable(n) * geometric(n)), std::nullopt};
    const auto c = dorth::couple_from_pair(lag, 1);
    CHECK(c.gamma == std::vector<Rat>{-1, 1});
    CHECK(c.sigma == std::vector<Rat>{-1, 2, -1});

    RatSeries h = RatSeries::variable(n);
    h[3] = Rat(1);
    const dorth::ShefferPair cubic{RatSeries::constant(Rat(1), n), h, std::nullopt};
    CHECK_THROWS_AS(dorth::couple_from_pair(cubic, 1), dorth::NotDOrthogonalSheffer);

    // too short to decide
    const dorth::ShefferPair tiny{geometric(3), -(RatSeries::variable(3) * geometric(3)), std::nullopt};
    CHECK_THROWS_AS(dorth::couple_from_pair(tiny, 1), dorth::ContractError);
}

TEST_CASE("property: couple -> pair -> couple round trip")
{
    std::mt19937 rng(21);
    int accepted = 0;
    for (int trial = 0; trial < 200 && accepted < 40; ++trial) {
        const int d = 1 + trial % 4;
        const auto c = random_couple(rng, d);
        if (!couple_ok(c)) {
            continue;
        }
        ++accepted;
        const auto p = dorth::pair_from_couple(c, 16);
        CHECK(dorth::couple_from_pair(p, d) == c);
    }
    CHECK(accepted >= 20);
}

TEST_CASE("property: expansion agrees with the naive sum over H^k")
{
    std::mt19937 rng(22);
    for (int trial = 0; trial < 10; ++trial) {
        const int d = 1 + trial % 3;
        auto c = random_couple(rng, d);
        if (!couple_ok(c)) {
            continue;
        }
        const std::size_t n = 9;
        const auto p = dorth::pair_from_couple(c, n);
        const auto seq = dorth::expand_polynomials(p, n);
        const auto naive = oracle::naive_sheffer(p.a, p.hx, n);
        for (std::size_t k = 0; k <= n; ++k) {
            CHECK(seq.polys[k] == naive[k]);
            CHECK(seq.polys[k].degree() == k);
        }
    }
}

TEST_CASE("property: H' sigma = 1 and A' sigma = A gamma")
{
    std::mt19937 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 1 + trial % 4;
        auto c = random_couple(rng, d);
        if (!couple_ok(c)) {
            continue;
        }
        const std::size_t n = 12;
        const auto p = dorth::pair_from_couple(c, n);
        const auto sigma = from_poly(c.sigma_poly(), n);
        const auto gamma = from_poly(c.gamma_poly(), n);
        // derivative() leaves the top coefficient unknown
        auto lhs1 = derivative(p.hx) * sigma;
        auto lhs2 = derivative(p.a) * sigma;
        auto rhs2 = p.a * gamma;
        for (std::size_t k = 0; k < n; ++k) {
            CHECK(lhs1[k] == (k == 0 ? Rat(1) : Rat(0)));
            CHECK(lhs2[k] == rhs2[k]);
        }
    }
}
