#ifndef DORTH_DORTH_HPP
#define DORTH_DORTH_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <dorth/operators.hpp>
#include <dorth/rat.hpp>
#include <dorth/sheffer.hpp>

namespace dorth
{

/// x P_n = sum_{k=0}^{d+1} rows[n][k] P_{n-d+k}, with P_{<0} = 0.
struct RecurrenceTable {
    int d = 1;
    std::vector<std::vector<Rat>> rows;
};

enum class RecurrenceFailure { window, regularity };

/// extract_recurrence failure; `offending` lists the n at fault.
class RecurrenceError : public std::runtime_error
{
public:
    RecurrenceError(RecurrenceFailure kind, std::vector<std::size_t> offending, const std::string &what)
        : std::runtime_error(what), kind_(kind), offending_(std::move(offending))
    {
    }

    RecurrenceFailure kind() const { return kind_; }
    const std::vector<std::size_t> &offending() const { return offending_; }

private:
    RecurrenceFailure kind_;
    std::vector<std::size_t> offending_;
};

/// Expands x P_n in {P_0..P_{n+1}} for n = 0..N-1 by triangular
/// back-substitution. Throws RecurrenceError when a coefficient below
/// P_{n-d} is nonzero ("window violation") or when
/// alpha_{d+1}(n) alpha_0(n) = 0 for some d <= n < N ("regularity violation").
RecurrenceTable extract_recurrence(const PolySequence &seq, int d);

/// Full expansion of x P_n over P_0..P_{n+1}, no window assumption.
std::vector<Rat> expand_x_times(const PolySequence &seq, std::size_t n);

enum class CellStatus { must_be_zero, must_be_nonzero, unconstrained };

struct OrthogonalityCell {
    int k;
    std::size_t n;
    std::size_t m;
    Rat value;
    CellStatus status;
    bool ok;
};

struct OrthogonalityReport {
    int d = 1;
    std::size_t order = 0;
    std::vector<OrthogonalityCell> cells;
    /// (k, n) whose boundary index nd+k lies beyond the sequence.
    std::vector<std::pair<int, std::size_t>> unchecked;
    bool pass = false;

    std::vector<OrthogonalityCell> failures() const;
    std::size_t constrained_count() const;
};

/// <u_k, P_n P_m> for k < d and n, m <= N: zero when m > nd+k, nonzero when
/// m = nd+k.
OrthogonalityReport verify_d_orthogonality(const PolySequence &seq, const FunctionalVector &v);

/// Generic pass/fail listing for the simpler checks.
struct CheckReport {
    bool pass = true;
    std::size_t checked = 0;
    std::vector<std::string> failures;

    void record(bool ok, const std::string &what)
    {
        ++checked;
        if (!ok) {
            pass = false;
            failures.push_back(what);
        }
    }
};

/// <u_i, P_k> = delta_ik for i < d, k <= N.
CheckReport verify_duality(const PolySequence &seq, const FunctionalVector &v);

/// sigma P_n = n P_{n-1} for n <= N (sigma P_0 = 0).
CheckReport verify_lowering(const PolySequence &seq, const LoweringOp &op);

} // namespace dorth

#endif
