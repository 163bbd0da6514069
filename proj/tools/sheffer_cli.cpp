// sheffer-dorth: build d-orthogonal Sheffer sets and verify them exactly.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 parameter or
// contract violation, 3 I/O or parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <dorth/catalog.hpp>
#include <dorth/dorth.hpp>
#include <dorth/report.hpp>
#include <dorth/sheffer.hpp>

namespace
{

using namespace dorth;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_contract = 2;
constexpr int exit_io = 3;

struct RunConfig {
    std::string command;
    std::size_t order = 16;
    std::string family;
    std::string couple_file;
    std::optional<int> d;
    std::optional<int> check_d;
    std::vector<std::string> params;
    std::string aux;
    std::string format = "json";
    std::string out;
    std::optional<int> index;
};

class Output
{
public:
    explicit Output(const std::string &path)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw FormatError("cannot write " + path);
            }
        }
    }
    std::ostream &stream() { return file_.is_open() ? static_cast<std::ostream &>(file_) : std::cout; }

private:
    std::ofstream file_;
};

FamilySpec family_from_config(const RunConfig &cfg)
{
    const auto family = parse_family(cfg.family);
    if (!family) {
        throw InvalidParams(ValidationReport{{"unknown family '" + cfg.family + "'"}});
    }
    const int d = cfg.d.value_or(min_d(*family));
    FamilySpec fs = default_spec(*family, d);
    for (const auto &kv : cfg.params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) {
            throw InvalidParams(ValidationReport{{"--param expects name=value, got '" + kv + "'"}});
        }
        fs.params[kv.substr(0, eq)] = Rat::parse(kv.substr(eq + 1));
    }
    if (!cfg.aux.empty()) {
        fs.aux = parse_rat_list(cfg.aux);
    }
    auto report = validate_params(fs);
    if (!report.pass()) {
        throw InvalidParams(std::move(report));
    }
    return fs;
}

VerifyInput input_from_config(const RunConfig &cfg)
{
    if (cfg.family.empty() == cfg.couple_file.empty()) {
        throw ContractError("exactly one of --family or --couple-file is required");
    }
    VerifyInput in;
    in.order = cfg.order;
    in.check_d = cfg.check_d;
    if (!cfg.family.empty()) {
        in.family = family_from_config(cfg);
    } else {
        in.couple = load_couple_file(cfg.couple_file);
        if (cfg.d && *cfg.d != in.couple->d) {
            throw ContractError("--d disagrees with the couple file");
        }
        in.couple->validate();
    }
    return in;
}

ShefferPair build_pair(const VerifyInput &in, std::size_t order)
{
    if (in.family) {
        return family_generating(*in.family, order);
    }
    return pair_from_couple(*in.couple, order);
}

TableFormat format_of(const RunConfig &cfg)
{
    const auto f = parse_format(cfg.format);
    if (!f) {
        throw ContractError("unknown format '" + cfg.format + "'");
    }
    return *f;
}

int cmd_expand(const RunConfig &cfg)
{
    const auto fmt = format_of(cfg);
    const auto in = input_from_config(cfg);
    const auto seq = expand_polynomials(build_pair(in, cfg.order), cfg.order);
    Output out(cfg.out);
    out.stream() << render_polynomials(seq, fmt);
    return exit_ok;
}

int cmd_recurrence(const RunConfig &cfg)
{
    const auto fmt = format_of(cfg);
    const auto in = input_from_config(cfg);
    const int d = in.check_d.value_or(in.family ? in.family->d : in.couple->d);
    const auto seq = expand_polynomials(build_pair(in, cfg.order), cfg.order);
    try {
        const auto table = extract_recurrence(seq, d);
        Output out(cfg.out);
        out.stream() << render_recurrence(table, fmt);
        return exit_ok;
    } catch (const RecurrenceError &e) {
        std::cerr << e.what() << "\n";
        return exit_failed;
    }
}

int cmd_verify(const RunConfig &cfg)
{
    const auto in = input_from_config(cfg);
    const auto result = run_verification(in);
    Output out(cfg.out);
    out.stream() << result.report.dump(2) << "\n";
    return result.pass ? exit_ok : exit_failed;
}

int cmd_functionals(const RunConfig &cfg)
{
    const auto fmt = format_of(cfg);
    const auto in = input_from_config(cfg);
    const int d = in.check_d.value_or(in.family ? in.family->d : in.couple->d);
    std::vector<int> indices;
    if (cfg.index) {
        indices.push_back(*cfg.index);
    } else {
        for (int i = 0; i < d; ++i) {
            indices.push_back(i);
        }
    }
    const auto rows = moment_table(in, indices);
    Output out(cfg.out);
    out.stream() << render_moments(rows, fmt);
    for (const auto &r : rows) {
        if (r.cross_check.rfind("mismatch", 0) == 0) {
            return exit_failed;
        }
    }
    return exit_ok;
}

// Auxiliary degree as an expression in d, e.g. "d-1".
std::string aux_degree_text(Family f)
{
    const auto deg = aux_degree(f, 0);
    if (!deg) {
        return "none";
    }
    if (*deg == 0) {
        return "d";
    }
    return std::string("d") + (*deg > 0 ? "+" : "-") + std::to_string(std::abs(*deg));
}

int cmd_catalog_list(const RunConfig &cfg)
{
    Json list = Json::array();
    for (const auto f : all_families) {
        list.push_back(Json{{"family", family_name(f)},
                            {"params", family_parameters(f)},
                            {"min_d", min_d(f)},
                            {"aux_degree", aux_degree_text(f)},
                            {"operator", is_difference_family(f) ? "difference" : "derivative"}});
    }
    Output out(cfg.out);
    out.stream() << list.dump(2) << "\n";
    return exit_ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact construction and verification of d-orthogonal Sheffer polynomial sets"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App *sub, bool with_format) {
        sub->add_option("--family", cfg.family, "catalog family, e.g. meixner-eq16");
        sub->add_option("--couple-file", cfg.couple_file, "JSON couple {d, gamma, sigma}");
        sub->add_option("--d", cfg.d, "d of the construction");
        sub->add_option("--check-d", cfg.check_d, "d used by the checks (defaults to --d)");
        sub->add_option("--param", cfg.params, "name=p/q, repeatable");
        sub->add_option("--aux", cfg.aux, "coefficients a_0,...,a_k of the auxiliary polynomial");
        sub->add_option("--order", cfg.order, "truncation order N")->check(CLI::Range(1, 200));
        sub->add_option("--out", cfg.out, "output path (default stdout)");
        if (with_format) {
            sub->add_option("--format", cfg.format, "json | csv | latex");
        }
    };

    auto *expand = app.add_subcommand("expand", "tabulate P_0..P_N");
    add_common(expand, true);
    auto *verify = app.add_subcommand("verify", "run every check and write a JSON report");
    add_common(verify, false);
    auto *recurrence = app.add_subcommand("recurrence", "tabulate the (d+1)-order recurrence");
    add_common(recurrence, true);
    auto *functionals = app.add_subcommand("functionals", "tabulate <u_i, x^m>");
    add_common(functionals, true);
    functionals->add_option("--index", cfg.index, "only functional u_i");
    auto *list = app.add_subcommand("catalog-list", "list catalog families");
    list->add_option("--out", cfg.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_contract;
    }

    try {
        if (*expand) {
            return cmd_expand(cfg);
        }
        if (*verify) {
            return cmd_verify(cfg);
        }
        if (*recurrence) {
            return cmd_recurrence(cfg);
        }
        if (*functionals) {
            return cmd_functionals(cfg);
        }
        return cmd_catalog_list(cfg);
    } catch (const FormatError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_io;
    } catch (const InvalidParams &e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return exit_contract;
    } catch (const ParseError &e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return exit_contract;
    } catch (const ContractError &e) {
        std::cerr << "contract violation: " << e.what() << "\n";
        return exit_contract;
    } catch (const DivergentParameters &e) {
        std::cerr << "contract violation: " << e.what() << "\n";
        return exit_contract;
    } catch (const std::out_of_range &e) {
        std::cerr << "contract violation: " << e.what() << "\n";
        return exit_contract;
    } catch (const SeriesError &e) {
        std::cerr << "contract violation: " << e.what() << "\n";
        return exit_contract;
    }
}
