#include <dorth/catalog.hpp>

#include <algorithm>

#include <dorth/series.hpp>

namespace dorth
{

namespace
{

struct FamilyInfo {
    Family family;
    const char *name;
    std::vector<std::string> params;
    int min_d;
    bool difference;
};

const std::vector<FamilyInfo> &family_table()
{
    static const std::vector<FamilyInfo> table{
        {Family::LaguerreEq9, "laguerre-eq9", {"alpha"}, 1, false},
        {Family::LaguerreEq10, "laguerre-eq10", {"alpha"}, 1, false},
        {Family::LaguerreEq11, "laguerre-eq11", {"alpha"}, 2, false},
        {Family::HermiteEq12, "hermite-eq12", {}, 1, false},
        {Family::CharlierEq13, "charlier-eq13", {"omega"}, 1, true},
        {Family::MeixnerEq14, "meixner-eq14", {"beta", "c"}, 1, true},
        {Family::MeixnerEq16, "meixner-eq16", {"beta", "c"}, 1, true},
        {Family::MeixnerEq21, "meixner-eq21", {"beta", "c"}, 2, true},
    };
    return table;
}

const FamilyInfo &info(Family f)
{
    for (const auto &i : family_table()) {
        if (i.family == f) {
            return i;
        }
    }
    throw std::logic_error("unknown family");
}

// v = -n for some integer n >= 0.
bool is_nonpositive_integer(const Rat &v)
{
    return v.is_integer() && v.sign() <= 0;
}

Poly one_minus_t() { return Poly{Rat(1), Rat(-1)}; }

Poly one_minus_t_pow(int k) { return pow(one_minus_t(), static_cast<unsigned>(k)); }

RatSeries as_series(const Poly &p, std::size_t order) { return RatSeries(p.coeffs(), order); }

// exp(pi(t) - pi(0)).
RatSeries exp_aux(const FamilySpec &fs, std::size_t order)
{
    auto s = as_series(fs.aux_poly(), order);
    s[0] = Rat(0);
    return exp_series(s);
}

} // namespace

std::string family_name(Family f) { return info(f).name; }

std::optional<Family> parse_family(std::string_view name)
{
    for (const auto &i : family_table()) {
        if (name == i.name) {
            return i.family;
        }
    }
    return std::nullopt;
}

std::vector<std::string> family_parameters(Family f) { return info(f).params; }

int min_d(Family f) { return info(f).min_d; }

bool is_difference_family(Family f) { return info(f).difference; }

std::optional<int> aux_degree(Family f, int d)
{
    switch (f) {
    case Family::LaguerreEq10:
    case Family::MeixnerEq14:
        return d - 1;
    case Family::LaguerreEq11:
    case Family::MeixnerEq21:
        return d - 2;
    case Family::HermiteEq12:
        return d + 1;
    case Family::CharlierEq13:
        return d;
    case Family::LaguerreEq9:
    case Family::MeixnerEq16:
        return std::nullopt;
    }
    return std::nullopt;
}

Rat FamilySpec::param(const std::string &name) const
{
    const auto it = params.find(name);
    if (it == params.end()) {
        throw InvalidParams(ValidationReport{{"missing parameter '" + name + "'"}});
    }
    return it->second;
}

FamilySpec default_spec(Family f, int d)
{
    FamilySpec fs;
    fs.family = f;
    fs.d = d;
    for (const auto &p : family_parameters(f)) {
        if (p == "alpha") {
            fs.params[p] = Rat(1, 2);
        } else if (p == "c") {
            fs.params[p] = Rat(1, 2);
        } else {
            fs.params[p] = Rat(1);
        }
    }
    if (const auto deg = aux_degree(f, d); deg && *deg >= 0) {
        fs.aux.assign(static_cast<std::size_t>(*deg + 1), Rat(1));
    }
    return fs;
}

std::string ValidationReport::message() const
{
    std::string s;
    for (const auto &v : violations) {
        s += (s.empty() ? "" : "; ") + v;
    }
    return s.empty() ? "ok" : s;
}

ValidationReport validate_params(const FamilySpec &fs)
{
    ValidationReport r;
    auto fail = [&](std::string what) { r.violations.push_back(std::move(what)); };
    const int d = fs.d;
    if (d < min_d(fs.family)) {
        fail("d >= " + std::to_string(min_d(fs.family)) + " required");
        return r;
    }
    for (const auto &p : family_parameters(fs.family)) {
        if (!fs.params.contains(p)) {
            fail("missing parameter '" + p + "'");
        }
    }
    for (const auto &[k, v] : fs.params) {
        const auto names = family_parameters(fs.family);
        if (std::find(names.begin(), names.end(), k) == names.end()) {
            fail("unknown parameter '" + k + "'");
        }
    }
    const auto deg = aux_degree(fs.family, d);
    if (!deg) {
        if (!fs.aux.empty()) {
            fail("family takes no auxiliary polynomial");
        }
    } else if (fs.aux.size() != static_cast<std::size_t>(*deg + 1)) {
        fail("auxiliary polynomial needs " + std::to_string(*deg + 1) + " coefficients a_0..a_"
             + std::to_string(*deg));
    } else if (fs.aux.back().is_zero()) {
        fail("a_" + std::to_string(*deg) + " != 0");
    }
    if (!r.pass()) {
        return r;
    }
    const Rat dr(static_cast<long>(d));
    switch (fs.family) {
    case Family::LaguerreEq9: {
        const Rat alpha = fs.param("alpha");
        if (alpha == Rat(-1)) {
            fail("alpha != -1");
        } else if (const Rat n = -dr * (alpha + Rat(1)); n.is_integer() && n.sign() > 0) {
            fail("n/d + alpha + 1 != 0 fails at n = " + n.str());
        }
        break;
    }
    case Family::LaguerreEq10:
        if (d == 1 && is_nonpositive_integer(fs.param("alpha") + Rat(1))) {
            fail("alpha + n + 1 != 0 (n >= 0) required at d = 1");
        }
        break;
    case Family::LaguerreEq11:
        if (d == 2 && is_nonpositive_integer(fs.param("alpha") + Rat(1))) {
            fail("alpha + n + 1 != 0 (n >= 0)");
        }
        break;
    case Family::HermiteEq12:
        break;
    case Family::CharlierEq13:
        if (fs.param("omega").is_zero()) {
            fail("omega != 0");
        }
        break;
    case Family::MeixnerEq14: {
        const Rat c = fs.param("c");
        if (c.is_zero() || c == Rat(1)) {
            fail("c not in {0, 1}");
        }
        if (d == 1 && is_nonpositive_integer(fs.param("beta"))) {
            fail("beta != -n (n >= 0) required at d = 1");
        }
        break;
    }
    case Family::MeixnerEq16: {
        const Rat c = fs.param("c");
        if (c.is_zero() || c == Rat(1)) {
            fail("c not in {0, 1}");
        } else if (d >= 2 && c == Rat(1, 1 - d)) {
            fail("c != 1/(1-d)");
        }
        if (is_nonpositive_integer(fs.param("beta") * dr)) {
            fail("beta != -n/d (n >= 0)");
        }
        break;
    }
    case Family::MeixnerEq21: {
        const Rat c = fs.param("c");
        if (c.is_zero() || c == Rat(1, 3) || c == Rat(1)) {
            fail("c not in {0, 1/3, 1}");
        }
        if (d == 2 && is_nonpositive_integer(fs.param("beta"))) {
            fail("beta != -n (n >= 0) required at d = 2");
        }
        break;
    }
    }
    return r;
}

namespace
{

void require_valid(const FamilySpec &fs)
{
    auto r = validate_params(fs);
    if (!r.pass()) {
        throw InvalidParams(std::move(r));
    }
}

} // namespace

CoupleSpec family_couple(const FamilySpec &fs)
{
    require_valid(fs);
    const int d = fs.d;
    const Rat dr(static_cast<long>(d));
    const Poly dpi = fs.aux_poly().derivative();
    Poly gamma, sigma;
    switch (fs.family) {
    case Family::LaguerreEq9: {
        const Rat alpha = fs.param("alpha");
        gamma = -(alpha + Rat(1)) * one_minus_t_pow(d);
        sigma = -dr.inverse() * one_minus_t_pow(d + 1);
        break;
    }
    case Family::LaguerreEq10: {
        const Rat alpha = fs.param("alpha");
        gamma = -(one_minus_t_pow(2) * dpi) - (alpha + Rat(1)) * one_minus_t();
        sigma = -one_minus_t_pow(2);
        break;
    }
    case Family::LaguerreEq11: {
        const Rat alpha = fs.param("alpha");
        gamma = -(one_minus_t_pow(3) * dpi) - (alpha + Rat(1)) * one_minus_t_pow(2);
        sigma = -one_minus_t_pow(3);
        break;
    }
    case Family::HermiteEq12:
        gamma = dpi;
        sigma = Poly(Rat(1));
        break;
    case Family::CharlierEq13: {
        const Poly lin{Rat(1), fs.param("omega")};
        gamma = lin * dpi;
        sigma = lin;
        break;
    }
    case Family::MeixnerEq14: {
        const Rat c = fs.param("c");
        const Rat beta = fs.param("beta");
        const Rat k = (c - Rat(1)).inverse();
        const Poly c_minus_t{c, Rat(-1)};
        gamma = k * (c_minus_t * one_minus_t() * dpi) + (beta * k) * c_minus_t;
        sigma = k * (c_minus_t * one_minus_t());
        break;
    }
    case Family::MeixnerEq16: {
        const Rat c = fs.param("c");
        const Rat beta = fs.param("beta");
        const Poly q = one_minus_t_pow(d) + ((c - Rat(1)) / (dr * c)) * (Poly(Rat(1)) - one_minus_t_pow(d));
        gamma = (dr * c * beta / (c - Rat(1))) * q;
        sigma = (c / (c - Rat(1))) * (one_minus_t() * q);
        break;
    }
    case Family::MeixnerEq21: {
        const Rat c = fs.param("c");
        const Rat beta = fs.param("beta");
        const Rat k = c / (c - Rat(1));
        const Poly r =
            one_minus_t_pow(2) + ((c - Rat(1)) / (Rat(2) * c)) * (one_minus_t_pow(2) - Poly(Rat(1)));
        gamma = -k * (one_minus_t() * r * dpi) - (beta * k) * r;
        sigma = -k * (one_minus_t() * r);
        break;
    }
    }
    auto couple = make_couple(d, gamma, sigma);
    couple.validate();
    return couple;
}

ShefferPair family_generating(const FamilySpec &fs, std::size_t order)
{
    require_valid(fs);
    const int d = fs.d;
    const Rat dr(static_cast<long>(d));
    const auto one = RatSeries::constant(Rat(1), order);
    const auto t = RatSeries::variable(order);
    const auto omt = one - t;
    // t^2 - 2t
    const auto t2_minus_2t = t * t - t * Rat(2);
    switch (fs.family) {
    case Family::LaguerreEq9: {
        const Rat alpha = fs.param("alpha");
        return {pow_rat(omt, -(alpha + Rat(1)) * dr), -(pow_rat(omt, -dr) - one), std::nullopt};
    }
    case Family::LaguerreEq10: {
        const Rat alpha = fs.param("alpha");
        return {exp_aux(fs, order) * pow_rat(omt, -alpha - Rat(1)), -(t * invert_mul(omt)), std::nullopt};
    }
    case Family::LaguerreEq11: {
        const Rat alpha = fs.param("alpha");
        return {exp_aux(fs, order) * pow_rat(omt, -alpha - Rat(1)),
                t2_minus_2t * invert_mul(omt * omt * Rat(2)), std::nullopt};
    }
    case Family::HermiteEq12:
        return {exp_aux(fs, order), t, std::nullopt};
    case Family::CharlierEq13:
        return pair_from_newton(exp_aux(fs, order), t, fs.param("omega"));
    case Family::MeixnerEq14: {
        const Rat c = fs.param("c");
        const auto h = t * invert_mul(omt) * ((c - Rat(1)) / c);
        return pair_from_newton(exp_aux(fs, order) * pow_rat(omt, -fs.param("beta")), h, Rat(1));
    }
    case Family::MeixnerEq16: {
        const Rat c = fs.param("c");
        const auto h = (pow_rat(omt, -dr) - one) * ((c - Rat(1)) / (dr * c));
        return pair_from_newton(pow_rat(omt, -fs.param("beta") * dr), h, Rat(1));
    }
    case Family::MeixnerEq21: {
        const Rat c = fs.param("c");
        const auto h = t2_minus_2t * invert_mul(omt * omt) * ((c - Rat(1)) / (Rat(2) * c));
        return pair_from_newton(exp_aux(fs, order) * pow_rat(omt, -fs.param("beta")), h, Rat(1));
    }
    }
    throw std::logic_error("unknown family");
}

Rat laguerre2_functionals(const Rat &alpha, int i, const Poly &f)
{
    if (i < 0 || i > 1) {
        throw std::out_of_range("laguerre2_functionals: index must be 0 or 1");
    }
    if (alpha == Rat(-1)) {
        throw InvalidParams(ValidationReport{{"alpha != -1"}});
    }
    // f^(k)(0)/k! is the k-th coefficient.
    auto u = [&](const Rat &a) {
        Rat acc(0);
        Rat two_k(1);
        for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
            acc += pochhammer(a, static_cast<unsigned>(k)) * two_k * f[k];
            two_k *= Rat(2);
        }
        return acc;
    };
    const Rat u0 = u((alpha + Rat(1)) / Rat(2));
    if (i == 0) {
        return u0;
    }
    return u0 - u((alpha + Rat(2)) / Rat(2));
}

Rat meixner_convergence_ratio(int d, const Rat &c)
{
    const Rat dr(static_cast<long>(d));
    return dr * c / (Rat(1) + c * (dr - Rat(1)));
}

namespace
{

void require_meixner16(int d, const Rat &c, const Rat &beta, int r)
{
    FamilySpec fs{Family::MeixnerEq16, d, {{"c", c}, {"beta", beta}}, {}};
    require_valid(fs);
    if (r < 0 || r >= d) {
        throw std::out_of_range("functional index " + std::to_string(r) + " outside 0.."
                                + std::to_string(d - 1));
    }
}

} // namespace

Rat meixner_functional_exact(int d, const Rat &c, const Rat &beta, int r, const Poly &f)
{
    require_meixner16(d, c, beta, r);
    const Rat w = meixner_convergence_ratio(d, c);
    if (w.abs() >= Rat(1)) {
        throw DivergentParameters("divergent parameters: |dc/(1+c(d-1))| = " + w.abs().str() + " >= 1");
    }
    const Rat ratio = w / (Rat(1) - w);
    const Rat dr(static_cast<long>(d));
    const auto ru = static_cast<unsigned>(r);
    Rat total(0);
    for (unsigned i = 0; i <= ru; ++i) {
        const Rat b = beta + Rat(static_cast<long>(i)) / dr;
        Rat inner(0);
        for (std::size_t m = 0; m < f.coeffs().size(); ++m) {
            if (f[m].is_zero()) {
                continue;
            }
            // <., x^m> = sum_k S(m,k) (b)_k ratio^k
            Rat moment(0);
            for (unsigned k = 0; k <= m; ++k) {
                const BigInt s = stirling2(static_cast<unsigned>(m), k);
                if (s != 0) {
                    moment += Rat(s) * pochhammer(b, k) * pow(ratio, k);
                }
            }
            inner += f[m] * moment;
        }
        const Rat sign = (i % 2 == 0) ? Rat(1) : Rat(-1);
        total += sign * Rat(binomial(ru, i)) * inner;
    }
    return total / Rat(factorial(ru));
}

namespace
{

HighPrecision to_hp(const Rat &r)
{
    return HighPrecision(r.numerator().get_str()) / HighPrecision(r.denominator().get_str());
}

} // namespace

NumericValue meixner_functional_numeric(int d, const Rat &c, const Rat &beta, int r, const Poly &f,
                                        const HighPrecision &tolerance)
{
    using boost::multiprecision::abs;
    using boost::multiprecision::pow;
    require_meixner16(d, c, beta, r);
    const Rat w_exact = meixner_convergence_ratio(d, c);
    if (w_exact.abs() >= Rat(1)) {
        throw DivergentParameters("divergent parameters: |dc/(1+c(d-1))| = " + w_exact.abs().str()
                                  + " >= 1");
    }
    const HighPrecision z = to_hp(Rat(static_cast<long>(d)) * c / (Rat(1) - c));
    const HighPrecision w = to_hp(w_exact);
    const HighPrecision abs_w = abs(w);
    const std::size_t m = f.coeffs().empty() ? 0 : f.coeffs().size() - 1;
    std::vector<HighPrecision> fc;
    HighPrecision fabs_sum = 0;
    for (const auto &a : f.coeffs()) {
        fc.push_back(to_hp(a));
        fabs_sum += abs(fc.back());
    }
    auto f_at = [&](std::size_t j) {
        HighPrecision acc = 0;
        const HighPrecision x = static_cast<unsigned long>(j);
        for (std::size_t k = fc.size(); k-- > 0;) {
            acc = acc * x + fc[k];
        }
        return acc;
    };
    NumericValue out{0, 0, 0};
    const unsigned ru = static_cast<unsigned>(r);
    HighPrecision r_fact = 1;
    for (unsigned k = 2; k <= ru; ++k) {
        r_fact *= k;
    }
    for (unsigned i = 0; i <= ru; ++i) {
        const Rat b_exact = beta + Rat(static_cast<long>(i), d);
        const HighPrecision b = to_hp(b_exact);
        const HighPrecision weight =
            HighPrecision(binomial(ru, i).get_str()) * ((i % 2 == 0) ? 1 : -1) / r_fact;
        // term_j = (b)_j z^j / ((1+z)^{b+j} j!)
        HighPrecision term = pow(1 + z, -b);
        HighPrecision sum = 0;
        HighPrecision tail = 0;
        const std::size_t j_min = static_cast<std::size_t>(b_exact.abs().to_double()) + 2;
        for (std::size_t j = 0;; ++j) {
            sum += term * f_at(j);
            // |term_{j+1} f(j+1)| <= rho |term_j| F(j), F(j) = sum |a_k| j^k, and
            // rho is nonincreasing once j exceeds |b|.
            const HighPrecision jj = static_cast<unsigned long>(j);
            const HighPrecision growth = pow((jj + 2) / (jj + 1), static_cast<int>(m));
            const HighPrecision step = abs(b + jj) / (jj + 1);
            const HighPrecision rho = abs_w * (step > 1 ? step : HighPrecision(1)) * growth;
            const HighPrecision bound_now = abs(term) * fabs_sum * pow(jj + 1, static_cast<int>(m));
            if (j >= j_min && rho < 1) {
                const HighPrecision candidate = bound_now * rho / (1 - rho);
                if (candidate < tolerance) {
                    tail = candidate;
                    out.terms = std::max(out.terms, j + 1);
                    break;
                }
            }
            term *= (b + jj) * w / (jj + 1);
        }
        out.value += weight * sum;
        out.tail_bound += abs(weight) * tail;
    }
    return out;
}

Rat meixner_classical_functional(const Rat &c, const Rat &beta, const Poly &f)
{
    if (c.sign() <= 0 || c >= Rat(1)) {
        throw DivergentParameters("classical Meixner functional needs 0 < c < 1, got c = " + c.str());
    }
    const Rat ratio = c / (Rat(1) - c);
    Rat total(0);
    for (std::size_t m = 0; m < f.coeffs().size(); ++m) {
        if (f[m].is_zero()) {
            continue;
        }
        Rat moment(0);
        for (unsigned k = 0; k <= m; ++k) {
            const BigInt s = stirling2(static_cast<unsigned>(m), k);
            if (s != 0) {
                moment += Rat(s) * pochhammer(beta, k) * pow(ratio, k);
            }
        }
        total += f[m] * moment;
    }
    return total;
}

} // namespace dorth
