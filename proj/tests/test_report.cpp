#include <doctest.h>

#include <cstdio>
#include <fstream>

#include <dorth/report.hpp>

using dorth::FormatError;
using dorth::Json;
using dorth::Poly;
using dorth::Rat;

namespace
{

dorth::VerifyInput family_input(dorth::Family f, int d, std::size_t order)
{
    dorth::VerifyInput in;
    in.family = dorth::default_spec(f, d);
    in.order = order;
    return in;
}

} // namespace

TEST_CASE("couple JSON parsing")
{
    const auto c = dorth::couple_from_json(Json::parse(R"({"d": 1, "gamma": ["-1", 1], "sigma": ["-1", "2", "-1"]})"));
    CHECK(c.d == 1);
    CHECK(c.gamma == std::vector<Rat>{-1, 1});
    CHECK(dorth::couple_from_json(dorth::couple_to_json(c)) == c);

    CHECK_THROWS_AS(dorth::couple_from_json(Json::parse(R"({"d": 1, "gamma": [0.5, 1], "sigma": ["1", "0", "0"]})")), FormatError);
    CHECK_THROWS_AS(dorth::couple_from_json(Json::parse(R"({"gamma": ["1", "1"], "sigma": ["1", "0", "0"]})")), FormatError);
    CHECK_THROWS_AS(dorth::couple_from_json(Json::parse(R"([1, 2])")), FormatError);
    CHECK_THROWS_AS(dorth::couple_from_json(Json::parse(R"({"d": 1, "gamma": ["1/x", "1"], "sigma": ["1", "0", "0"]})")), FormatError);
    CHECK_THROWS_AS(dorth::load_couple_file("/nonexistent/couple.json"), FormatError);
}

TEST_CASE("couple file round trip")
{
    const std::string path = "report_test_couple.json";
    {
        std::ofstream out(path);
        out << R"({"d": 2, "gamma": ["0", "0", "3"], "sigma": ["1", "0", "0", "0"]})";
    }
    const auto c = dorth::load_couple_file(path);
    CHECK(c.d == 2);
    CHECK(c.gamma.back() == Rat(3));
    std::remove(path.c_str());
}

TEST_CASE("rational lists")
{
    CHECK(dorth::parse_rat_list("0,0,-1/2") == std::vector<Rat>{0, 0, Rat(-1, 2)});
    CHECK(dorth::parse_rat_list("7") == std::vector<Rat>{7});
    CHECK_THROWS_AS(dorth::parse_rat_list("1,,2"), dorth::ParseError);
    CHECK_THROWS_AS(dorth::parse_rat_list("0.5"), dorth::ParseError);
    CHECK(dorth::rats_to_json({Rat(1, 2), Rat(-3)}) == Json::array({"1/2", "-3"}));
}

TEST_CASE("table formats")
{
    CHECK(dorth::parse_format("csv") == dorth::TableFormat::csv);
    CHECK(dorth::parse_format("latex") == dorth::TableFormat::latex);
    CHECK(dorth::parse_format("json") == dorth::TableFormat::json);
    CHECK_FALSE(dorth::parse_format("xml").has_value());

    dorth::PolySequence seq{{Poly{1}, Poly{Rat(-1, 2), 1}, Poly{-1, 0, 1}}};
    const auto js = Json::parse(dorth::render_polynomials(seq, dorth::TableFormat::json));
    CHECK(js["polynomials"][1]["coeffs"] == Json::array({"-1/2", "1"}));
    const auto csv = dorth::render_polynomials(seq, dorth::TableFormat::csv);
    CHECK(csv.rfind("n,k,coefficient\n", 0) == 0);
    CHECK(csv.find("1,0,-1/2\n") != std::string::npos);
    const auto tex = dorth::render_polynomials(seq, dorth::TableFormat::latex);
    CHECK(tex.find("x - \\frac{1}{2}") != std::string::npos);
    CHECK(tex.find("x^{2} - 1") != std::string::npos);

    dorth::RecurrenceTable t{1, {{0, 0, 1}, {1, 0, 1}}};
    CHECK(dorth::render_recurrence(t, dorth::TableFormat::csv) == "n,alpha_0,alpha_1,alpha_2\n0,0,0,1\n1,1,0,1\n");

    const std::vector<dorth::MomentRow> rows{{0, 2, Rat(3, 4), "operator", "agree"}};
    CHECK(dorth::render_moments(rows, dorth::TableFormat::csv) == "i,m,value,evaluator,cross_check\n0,2,3/4,operator,agree\n");
}

TEST_CASE("verification report")
{
    const auto r = dorth::run_verification(family_input(dorth::Family::MeixnerEq16, 2, 10));
    CHECK(r.pass);
    for (const char *section : {"conditions", "two_path", "recurrence", "duality", "orthogonality", "lowering"}) {
        CAPTURE(section);
        CHECK(r.report[section]["status"] == "pass");
    }
    CHECK(r.report["overall"] == "pass");

    auto neg = family_input(dorth::Family::LaguerreEq11, 2, 10);
    neg.check_d = 1;
    const auto rn = dorth::run_verification(neg);
    CHECK_FALSE(rn.pass);
    CHECK(rn.report["recurrence"]["status"] == "fail");
    CHECK(rn.report["orthogonality"]["status"] == "fail");

    dorth::VerifyInput bare;
    bare.couple = dorth::make_couple(1, Poly{1, 3}, Poly{1, 0, 1});
    bare.order = 8;
    const auto rb = dorth::run_verification(bare);
    CHECK_FALSE(rb.pass);
    CHECK(rb.report["conditions"]["status"] == "fail");
    CHECK(rb.report["two_path"]["status"] == "skipped");
}

TEST_CASE("reports are deterministic")
{
    const auto in = family_input(dorth::Family::CharlierEq13, 2, 8);
    CHECK(dorth::run_verification(in).report.dump() == dorth::run_verification(in).report.dump());
}

TEST_CASE("moment table cross-checks")
{
    const auto rows = dorth::moment_table(family_input(dorth::Family::MeixnerEq16, 2, 6), {0, 1});
    CHECK(rows.size() == 14);
    for (const auto &row : rows) {
        CHECK(row.cross_check == "agree");
    }
    const auto lag = dorth::moment_table(family_input(dorth::Family::LaguerreEq11, 2, 6), {0, 1});
    for (const auto &row : lag) {
        CHECK(row.cross_check == "agree");
    }
}
