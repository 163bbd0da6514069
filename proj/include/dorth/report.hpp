#ifndef DORTH_REPORT_HPP
#define DORTH_REPORT_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <dorth/catalog.hpp>
#include <dorth/dorth.hpp>
#include <dorth/sheffer.hpp>

namespace dorth
{

/// Malformed input document or unreadable file.
class FormatError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

/// {"d": int, "gamma": ["p/q", ...], "sigma": ["p/q", ...]}. Integers may be
/// given as JSON numbers; floating-point numbers are rejected.
CoupleSpec couple_from_json(const Json &j);
Json couple_to_json(const CoupleSpec &c);
CoupleSpec load_couple_file(const std::filesystem::path &path);

/// "1,-1/2,3" -> rationals; throws ParseError on bad entries.
std::vector<Rat> parse_rat_list(std::string_view csv);

Json rats_to_json(const std::vector<Rat> &v);
Json series_to_json(const RatSeries &s);

enum class TableFormat { json, csv, latex };
std::optional<TableFormat> parse_format(std::string_view s);

std::string render_polynomials(const PolySequence &seq, TableFormat fmt);
std::string render_recurrence(const RecurrenceTable &t, TableFormat fmt);

struct MomentRow {
    int i;
    std::size_t m;
    Rat value;
    std::string evaluator;
    std::string cross_check; // "agree", "n/a", or a mismatch description
};

std::string render_moments(const std::vector<MomentRow> &rows, TableFormat fmt);

Json orthogonality_to_json(const OrthogonalityReport &r);

/// What to build and check: a catalog family, or a bare couple.
struct VerifyInput {
    std::optional<FamilySpec> family;
    std::optional<CoupleSpec> couple;
    std::size_t order = 16;
    /// d used by the recurrence, duality and orthogonality checks; defaults
    /// to the construction's d.
    std::optional<int> check_d;
};

struct VerifyResult {
    Json report;
    bool pass = false;
};

/// Runs conditions, two-path equality (families only), recurrence, duality,
/// d-orthogonality and lowering checks. Output is deterministic.
VerifyResult run_verification(const VerifyInput &in);

/// <u_i, x^m> for i in `indices`, m <= order, with every evaluator that
/// applies to the construction and their agreement.
std::vector<MomentRow> moment_table(const VerifyInput &in, const std::vector<int> &indices);

} // namespace dorth

#endif
