#include <dorth/report.hpp>

#include <fstream>
#include <sstream>

#include <dorth/operators.hpp>

namespace dorth
{

namespace
{

Rat rat_from_json(const Json &j)
{
    if (j.is_string()) {
        return Rat::parse(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rat(j.get<long>());
    }
    throw FormatError("expected a rational string \"p/q\" or an integer, got " + j.dump());
}

std::vector<Rat> rat_list_from_json(const Json &j, const char *key)
{
    if (!j.contains(key) || !j.at(key).is_array()) {
        throw FormatError(std::string("couple spec: '") + key + "' must be an array");
    }
    std::vector<Rat> out;
    for (const auto &e : j.at(key)) {
        out.push_back(rat_from_json(e));
    }
    return out;
}

} // namespace

CoupleSpec couple_from_json(const Json &j)
{
    if (!j.is_object()) {
        throw FormatError("couple spec must be a JSON object");
    }
    if (!j.contains("d") || !j.at("d").is_number_integer()) {
        throw FormatError("couple spec: 'd' must be an integer");
    }
    CoupleSpec c;
    try {
        c.d = j.at("d").get<int>();
        c.gamma = rat_list_from_json(j, "gamma");
        c.sigma = rat_list_from_json(j, "sigma");
    } catch (const ParseError &e) {
        throw FormatError(std::string("couple spec: ") + e.what());
    }
    return c;
}

Json couple_to_json(const CoupleSpec &c)
{
    return Json{{"d", c.d}, {"gamma", rats_to_json(c.gamma)}, {"sigma", rats_to_json(c.sigma)}};
}

CoupleSpec load_couple_file(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open " + path.string());
    }
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::exception &e) {
        throw FormatError(path.string() + ": " + e.what());
    }
    return couple_from_json(j);
}

std::vector<Rat> parse_rat_list(std::string_view csv)
{
    std::vector<Rat> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        const auto comma = csv.find(',', start);
        const auto end = comma == std::string_view::npos ? csv.size() : comma;
        out.push_back(Rat::parse(csv.substr(start, end - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

Json rats_to_json(const std::vector<Rat> &v)
{
    Json a = Json::array();
    for (const auto &r : v) {
        a.push_back(r.str());
    }
    return a;
}

Json series_to_json(const RatSeries &s) { return rats_to_json(s.coeffs()); }

std::optional<TableFormat> parse_format(std::string_view s)
{
    if (s == "json") {
        return TableFormat::json;
    }
    if (s == "csv") {
        return TableFormat::csv;
    }
    if (s == "latex") {
        return TableFormat::latex;
    }
    return std::nullopt;
}

namespace
{

std::string latex_rat(const Rat &r)
{
    if (r.is_integer()) {
        return r.str();
    }
    const std::string sign = r.sign() < 0 ? "-" : "";
    const Rat a = r.abs();
    return sign + "\\frac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() + "}";
}

std::string latex_poly(const Poly &p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string s;
    bool first = true;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        const Rat &c = p.coeffs()[k];
        if (c.is_zero()) {
            continue;
        }
        if (!first) {
            s += c.sign() < 0 ? " - " : " + ";
        } else if (c.sign() < 0) {
            s += "-";
        }
        first = false;
        const Rat a = c.abs();
        if (k == 0 || a != Rat(1)) {
            s += latex_rat(a);
        }
        if (k >= 1) {
            s += "x";
        }
        if (k >= 2) {
            s += "^{" + std::to_string(k) + "}";
        }
    }
    return s;
}

} // namespace

std::string render_polynomials(const PolySequence &seq, TableFormat fmt)
{
    std::ostringstream os;
    switch (fmt) {
    case TableFormat::json: {
        Json rows = Json::array();
        for (std::size_t n = 0; n < seq.size(); ++n) {
            rows.push_back(Json{{"n", n}, {"coeffs", rats_to_json(seq.polys[n].coeffs())},
                                {"text", seq.polys[n].str()}});
        }
        os << Json{{"polynomials", rows}}.dump(2) << "\n";
        break;
    }
    case TableFormat::csv:
        os << "n,k,coefficient\n";
        for (std::size_t n = 0; n < seq.size(); ++n) {
            const auto &c = seq.polys[n].coeffs();
            for (std::size_t k = 0; k < c.size(); ++k) {
                os << n << "," << k << "," << c[k] << "\n";
            }
        }
        break;
    case TableFormat::latex:
        os << "\\begin{tabular}{rl}\n\\hline\n$n$ & $P_n(x)$ \\\\\n\\hline\n";
        for (std::size_t n = 0; n < seq.size(); ++n) {
            os << n << " & $" << latex_poly(seq.polys[n]) << "$ \\\\\n";
        }
        os << "\\hline\n\\end{tabular}\n";
        break;
    }
    return os.str();
}

std::string render_recurrence(const RecurrenceTable &t, TableFormat fmt)
{
    const std::size_t width = static_cast<std::size_t>(t.d) + 2;
    std::ostringstream os;
    switch (fmt) {
    case TableFormat::json: {
        Json rows = Json::array();
        for (std::size_t n = 0; n < t.rows.size(); ++n) {
            rows.push_back(Json{{"n", n}, {"alpha", rats_to_json(t.rows[n])}});
        }
        os << Json{{"d", t.d}, {"rows", rows}}.dump(2) << "\n";
        break;
    }
    case TableFormat::csv:
        os << "n";
        for (std::size_t k = 0; k < width; ++k) {
            os << ",alpha_" << k;
        }
        os << "\n";
        for (std::size_t n = 0; n < t.rows.size(); ++n) {
            os << n;
            for (const auto &v : t.rows[n]) {
                os << "," << v;
            }
            os << "\n";
        }
        break;
    case TableFormat::latex:
        os << "\\begin{tabular}{r" << std::string(width, 'c') << "}\n\\hline\n$n$";
        for (std::size_t k = 0; k < width; ++k) {
            os << " & $\\alpha_{" << k << "," << t.d << "}(n)$";
        }
        os << " \\\\\n\\hline\n";
        for (std::size_t n = 0; n < t.rows.size(); ++n) {
            os << n;
            for (const auto &v : t.rows[n]) {
                os << " & $" << latex_rat(v) << "$";
            }
            os << " \\\\\n";
        }
        os << "\\hline\n\\end{tabular}\n";
        break;
    }
    return os.str();
}

std::string render_moments(const std::vector<MomentRow> &rows, TableFormat fmt)
{
    std::ostringstream os;
    switch (fmt) {
    case TableFormat::json: {
        Json a = Json::array();
        for (const auto &r : rows) {
            a.push_back(Json{{"i", r.i}, {"m", r.m}, {"value", r.value.str()}, {"evaluator", r.evaluator},
                             {"cross_check", r.cross_check}});
        }
        os << Json{{"moments", a}}.dump(2) << "\n";
        break;
    }
    case TableFormat::csv:
        os << "i,m,value,evaluator,cross_check\n";
        for (const auto &r : rows) {
            os << r.i << "," << r.m << "," << r.value << "," << r.evaluator << "," << r.cross_check << "\n";
        }
        break;
    case TableFormat::latex:
        os << "\\begin{tabular}{rrl}\n\\hline\n$i$ & $m$ & $\\langle u_i, x^m\\rangle$ \\\\\n\\hline\n";
        for (const auto &r : rows) {
            os << r.i << " & " << r.m << " & $" << latex_rat(r.value) << "$ \\\\\n";
        }
        os << "\\hline\n\\end{tabular}\n";
        break;
    }
    return os.str();
}

namespace
{

const char *status_name(CellStatus s)
{
    switch (s) {
    case CellStatus::must_be_zero:
        return "must_be_zero";
    case CellStatus::must_be_nonzero:
        return "must_be_nonzero";
    case CellStatus::unconstrained:
        return "unconstrained";
    }
    return "?";
}

Json cell_json(const OrthogonalityCell &c)
{
    return Json{{"k", c.k}, {"n", c.n}, {"m", c.m}, {"value", c.value.str()}, {"status", status_name(c.status)}};
}

Json section(bool pass, Json details)
{
    return Json{{"status", pass ? "pass" : "fail"}, {"details", std::move(details)}};
}

Json skipped(const std::string &why)
{
    return Json{{"status", "skipped"}, {"details", {{"reason", why}}}};
}

Json check_json(const CheckReport &r)
{
    return Json{{"checked", r.checked}, {"failures", r.failures}};
}

} // namespace

Json orthogonality_to_json(const OrthogonalityReport &r)
{
    Json failures = Json::array();
    Json boundary = Json::array();
    for (const auto &c : r.cells) {
        if (!c.ok) {
            failures.push_back(cell_json(c));
        }
        if (c.status == CellStatus::must_be_nonzero) {
            boundary.push_back(cell_json(c));
        }
    }
    Json unchecked = Json::array();
    for (const auto &[k, n] : r.unchecked) {
        unchecked.push_back(Json{{"k", k}, {"n", n}});
    }
    return Json{{"d", r.d},
                {"order", r.order},
                {"constrained", r.constrained_count()},
                {"failures", failures},
                {"boundary_values", boundary},
                {"unchecked_boundary", unchecked}};
}

namespace
{

struct Construction {
    CoupleSpec couple;
    ShefferPair pair;      // at the functional order 2N
    int d;
};

Construction construct(const VerifyInput &in, std::size_t functional_order)
{
    if (in.family.has_value() == in.couple.has_value()) {
        throw ContractError("exactly one of family or couple must be given");
    }
    if (in.family) {
        return {family_couple(*in.family), family_generating(*in.family, functional_order), in.family->d};
    }
    in.couple->validate();
    return {*in.couple, pair_from_couple(*in.couple, functional_order), in.couple->d};
}

} // namespace

VerifyResult run_verification(const VerifyInput &in)
{
    const std::size_t n = in.order;
    const std::size_t functional_order = 2 * n;
    const Construction c = construct(in, functional_order);
    const int check_d = in.check_d.value_or(c.d);
    if (check_d < 1) {
        throw ContractError("check d must be positive");
    }
    Json report;
    report["order"] = n;
    report["d"] = c.d;
    report["check_d"] = check_d;
    report["couple"] = couple_to_json(c.couple);
    if (in.family) {
        report["family"] = family_name(in.family->family);
        Json params = Json::object();
        for (const auto &[k, v] : in.family->params) {
            params[k] = v.str();
        }
        report["params"] = params;
        report["aux"] = rats_to_json(in.family->aux);
    }
    bool all = true;

    const auto cond = check_conditions(c.couple, n);
    {
        Json failing = Json::array();
        for (auto k : cond.failing()) {
            failing.push_back(k);
        }
        report["conditions"] = section(cond.pass, {{"alpha0_nonzero", cond.alpha0_nonzero},
                                                   {"beta_d_nonzero", cond.beta_d_nonzero},
                                                   {"failing_n", failing}});
        all = all && cond.pass;
    }

    const PolySequence seq = expand_polynomials(c.pair, n);
    if (in.family) {
        const auto via_couple = expand_polynomials(pair_from_couple(c.couple, n), n);
        Json mismatches = Json::array();
        for (std::size_t k = 0; k <= n; ++k) {
            if (via_couple.polys[k] != seq.polys[k]) {
                mismatches.push_back(k);
            }
        }
        report["two_path"] = section(mismatches.empty(), {{"compared_up_to", n}, {"mismatches", mismatches}});
        all = all && mismatches.empty();
    } else {
        report["two_path"] = skipped("no closed form for a bare couple");
    }

    try {
        const auto table = extract_recurrence(seq, check_d);
        Json rows = Json::array();
        for (const auto &row : table.rows) {
            rows.push_back(rats_to_json(row));
        }
        report["recurrence"] = section(true, {{"d", check_d}, {"rows", rows}});
    } catch (const RecurrenceError &e) {
        report["recurrence"] = section(false, {{"d", check_d},
                                               {"error", e.kind() == RecurrenceFailure::window
                                                             ? "window violation"
                                                             : "regularity violation"},
                                               {"message", e.what()},
                                               {"offending_n", e.offending()}});
        all = false;
    }

    const FunctionalVector fv = functional_vector_for(c.pair, check_d);
    const auto duality = verify_duality(seq, fv);
    report["duality"] = section(duality.pass, check_json(duality));
    all = all && duality.pass;

    const auto orth = verify_d_orthogonality(seq, fv);
    report["orthogonality"] = section(orth.pass, orthogonality_to_json(orth));
    all = all && orth.pass;

    const auto lowering = verify_lowering(seq, lowering_for(c.pair));
    Json low = check_json(lowering);
    low["kind"] = c.pair.newton ? "difference" : "derivative";
    report["lowering"] = section(lowering.pass, low);
    all = all && lowering.pass;

    report["overall"] = all ? "pass" : "fail";
    return {report, all};
}

std::vector<MomentRow> moment_table(const VerifyInput &in, const std::vector<int> &indices)
{
    const std::size_t n = in.order;
    const Construction c = construct(in, std::max<std::size_t>(n, 1));
    const int d = in.check_d.value_or(c.d);
    const FunctionalVector fv = functional_vector_for(c.pair, d);
    std::vector<MomentRow> rows;
    for (int i : indices) {
        if (i < 0 || i >= d) {
            throw std::out_of_range("functional index " + std::to_string(i) + " outside 0.."
                                    + std::to_string(d - 1));
        }
        for (std::size_t m = 0; m <= n; ++m) {
            const Poly xm = Poly::monomial(m);
            MomentRow row{i, m, functional_eval(fv, i, xm), "lowering-operator", "n/a"};
            std::vector<std::pair<std::string, Rat>> others;
            if (in.family) {
                const auto &fs = *in.family;
                if (fs.family == Family::LaguerreEq11 && fs.d == 2 && d == 2) {
                    others.emplace_back("laguerre2-series", laguerre2_functionals(fs.param("alpha"), i, xm));
                }
                if ((fs.family == Family::MeixnerEq16 || (fs.family == Family::MeixnerEq14 && fs.d == 1))
                    && d == fs.d) {
                    const Rat cc = fs.param("c");
                    const Rat beta = fs.param("beta");
                    if (meixner_convergence_ratio(fs.d, cc).abs() < Rat(1)) {
                        others.emplace_back("meixner-stirling", meixner_functional_exact(fs.d, cc, beta, i, xm));
                    }
                    if (fs.d == 1 && cc.sign() > 0 && cc < Rat(1)) {
                        others.emplace_back("meixner-classical", meixner_classical_functional(cc, beta, xm));
                    }
                }
            }
            if (!others.empty()) {
                std::string status = "agree";
                for (const auto &[name, v] : others) {
                    row.evaluator += "+" + name;
                    if (v != row.value) {
                        status = "mismatch: " + name + " = " + v.str();
                    }
                }
                row.cross_check = status;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

} // namespace dorth
