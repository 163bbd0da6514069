#include <dorth/dorth.hpp>

namespace dorth
{

std::vector<Rat> expand_x_times(const PolySequence &seq, std::size_t n)
{
    if (n + 1 >= seq.size()) {
        throw ContractError("expand_x_times: P_{n+1} not available");
    }
    Poly rest = Poly::x() * seq.polys[n];
    std::vector<Rat> coef(n + 2);
    for (std::size_t j = n + 2; j-- > 0;) {
        const Poly &pj = seq.polys[j];
        coef[j] = rest[j] / pj.leading();
        if (!coef[j].is_zero()) {
            rest -= pj * coef[j];
        }
    }
    if (!rest.is_zero()) {
        throw ContractError("expand_x_times: sequence is not triangular");
    }
    return coef;
}

RecurrenceTable extract_recurrence(const PolySequence &seq, int d)
{
    if (d < 1) {
        throw ContractError("extract_recurrence: d must be positive");
    }
    const auto du = static_cast<std::size_t>(d);
    if (seq.size() < du + 3) {
        throw ContractError("extract_recurrence: need N >= d+2");
    }
    const std::size_t n_rows = seq.size() - 1;
    RecurrenceTable table{d, {}};
    std::vector<std::size_t> window_bad, regular_bad;
    for (std::size_t n = 0; n < n_rows; ++n) {
        const auto full = expand_x_times(seq, n);
        for (std::size_t j = 0; j + du < n; ++j) {
            if (!full[j].is_zero()) {
                window_bad.push_back(n);
                break;
            }
        }
        std::vector<Rat> row(du + 2);
        for (std::size_t k = 0; k <= du + 1; ++k) {
            const long j = static_cast<long>(n) - d + static_cast<long>(k);
            if (j >= 0) {
                row[k] = full[static_cast<std::size_t>(j)];
            }
        }
        if (n >= du && (row[du + 1] * row[0]).is_zero()) {
            regular_bad.push_back(n);
        }
        table.rows.push_back(std::move(row));
    }
    auto list = [](const std::vector<std::size_t> &ns) {
        std::string s;
        for (auto n : ns) {
            s += (s.empty() ? "" : ", ") + std::to_string(n);
        }
        return s;
    };
    if (!window_bad.empty()) {
        throw RecurrenceError(RecurrenceFailure::window, window_bad,
                              "window violation: x P_n involves P_j with j < n-" + std::to_string(d)
                                  + " for n = " + list(window_bad));
    }
    if (!regular_bad.empty()) {
        throw RecurrenceError(RecurrenceFailure::regularity, regular_bad,
                              "regularity violation at n = " + list(regular_bad));
    }
    return table;
}

std::vector<OrthogonalityCell> OrthogonalityReport::failures() const
{
    std::vector<OrthogonalityCell> out;
    for (const auto &c : cells) {
        if (!c.ok) {
            out.push_back(c);
        }
    }
    return out;
}

std::size_t OrthogonalityReport::constrained_count() const
{
    std::size_t count = 0;
    for (const auto &c : cells) {
        count += c.status != CellStatus::unconstrained ? 1 : 0;
    }
    return count;
}

OrthogonalityReport verify_d_orthogonality(const PolySequence &seq, const FunctionalVector &v)
{
    if (seq.size() == 0) {
        throw ContractError("verify_d_orthogonality: empty sequence");
    }
    const std::size_t top = seq.size() - 1;
    if (2 * top > v.order()) {
        throw ContractError("verify_d_orthogonality: functional order " + std::to_string(v.order())
                            + " cannot evaluate products of degree " + std::to_string(2 * top));
    }
    OrthogonalityReport r;
    r.d = v.d();
    r.order = top;
    r.pass = true;
    const auto du = static_cast<std::size_t>(v.d());
    for (int k = 0; k < v.d(); ++k) {
        const auto ku = static_cast<std::size_t>(k);
        for (std::size_t n = 0; n <= top; ++n) {
            const std::size_t boundary = n * du + ku;
            if (boundary > top) {
                r.unchecked.emplace_back(k, n);
            }
            for (std::size_t m = 0; m <= top; ++m) {
                const Rat value = functional_eval(v, k, seq.polys[n] * seq.polys[m]);
                CellStatus status = CellStatus::unconstrained;
                bool ok = true;
                if (m > boundary) {
                    status = CellStatus::must_be_zero;
                    ok = value.is_zero();
                } else if (m == boundary) {
                    status = CellStatus::must_be_nonzero;
                    ok = !value.is_zero();
                }
                r.pass = r.pass && ok;
                r.cells.push_back({k, n, m, value, status, ok});
            }
        }
    }
    return r;
}

CheckReport verify_duality(const PolySequence &seq, const FunctionalVector &v)
{
    CheckReport r;
    for (int i = 0; i < v.d(); ++i) {
        for (std::size_t k = 0; k < seq.size(); ++k) {
            const Rat value = functional_eval(v, i, seq.polys[k]);
            const Rat expected(static_cast<std::size_t>(i) == k ? 1 : 0);
            r.record(value == expected, "<u_" + std::to_string(i) + ", P_" + std::to_string(k)
                                            + "> = " + value.str());
        }
    }
    return r;
}

CheckReport verify_lowering(const PolySequence &seq, const LoweringOp &op)
{
    CheckReport r;
    for (std::size_t n = 0; n < seq.size(); ++n) {
        const Poly lowered = apply_lowering(op, seq.polys[n]);
        const Poly expected = n == 0 ? Poly() : seq.polys[n - 1] * Rat(static_cast<long>(n));
        r.record(lowered == expected, "sigma P_" + std::to_string(n) + " = " + lowered.str());
    }
    return r;
}

} // namespace dorth
