#include "schurlab/runner.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>

using namespace schurlab;

namespace {

run_config base(run_config::command cmd)
{
    run_config cfg;
    cfg.cmd = cmd;
    cfg.workers = 1;
    return cfg;
}

} // namespace

TEST_CASE("identity suite report")
{
    auto cfg = base(run_config::command::verify_identity);
    cfg.r_max = 6;
    const auto res = run(cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.report.find("check main-identity r=3: ok") != std::string::npos);
    CHECK(res.report.find("status: PASS") != std::string::npos);
}

TEST_CASE("json reports parse and carry the schema")
{
    auto cfg = base(run_config::command::verify_identity);
    cfg.r_max = 4;
    cfg.output = run_config::format::json;
    const auto res = run(cfg);
    CHECK(res.exit_code == 0);
    const auto doc = nlohmann::json::parse(res.report);
    CHECK(doc.at("schema") == 1);
    CHECK(doc.at("command") == "verify-identity");
    CHECK(doc.at("status") == "pass");
    REQUIRE(doc.at("checks").is_array());
    CHECK(doc.at("checks").size() == 4);
    for (const auto& c : doc.at("checks")) {
        CHECK(c.contains("lemma"));
        CHECK(c.contains("parameter"));
        CHECK(c.contains("passed"));
        CHECK(c.contains("lhs"));
        CHECK(c.contains("rhs"));
        CHECK(c.contains("discrepancy"));
    }
}

TEST_CASE("reports are byte-identical across worker counts")
{
    for (auto cmd : {run_config::command::verify_identity, run_config::command::verify_lemmas,
                     run_config::command::verify_qlc}) {
        auto cfg = base(cmd);
        cfg.r_max = 8;
        cfg.t_max = 2;
        cfg.qlc_n_max = 12;
        cfg.workers = 1;
        const auto one = run(cfg);
        cfg.workers = 8;
        const auto eight = run(cfg);
        CHECK(one.exit_code == eight.exit_code);
        CHECK(one.report == eight.report);
    }
}

TEST_CASE("exit codes")
{
    {
        auto cfg = base(run_config::command::verify_identity);
        cfg.r_max = 0;
        CHECK(run(cfg).exit_code == 2);
    }
    {
        auto cfg = base(run_config::command::verify_lemmas);
        cfg.lemma_filter = "9.9";
        CHECK(run(cfg).exit_code == 2);
    }
    {
        // failing search: no counterexample below the bound
        auto cfg = base(run_config::command::counterexample);
        cfg.power_m = 3;
        cfg.power_n_max = 1;
        CHECK(run(cfg).exit_code == 1);
    }
    {
        auto cfg = base(run_config::command::counterexample);
        cfg.power_m = 2;
        CHECK(run(cfg).exit_code == 2);
    }
    {
        auto cfg = base(run_config::command::expand);
        CHECK(run(cfg).exit_code == 2);
        cfg.eproduct_expr = "e2*e2";
        cfg.family_expr = "E1";
        CHECK(run(cfg).exit_code == 2);
    }
    {
        // a custom array too short for the requested sweeps is invalid usage
        const char* path = "test_short_array.json";
        {
            std::ofstream out(path);
            out << "[[\"1\"],[\"1\",\"1\"]]";
        }
        auto cfg = base(run_config::command::verify_transform);
        cfg.array_path = path;
        cfg.n_sign = 10;
        CHECK(run(cfg).exit_code == 2);
        std::remove(path);
    }
}

TEST_CASE("expand command")
{
    {
        auto cfg = base(run_config::command::expand);
        cfg.eproduct_expr = "e2*e2";
        const auto res = run(cfg);
        CHECK(res.exit_code == 0);
        CHECK(res.report == "s[2,2] + s[2,1,1] + s[1,1,1,1]\n");
    }
    {
        auto cfg = base(run_config::command::expand);
        cfg.family_expr = "E1";
        cfg.family_t = 0;
        const auto res = run(cfg);
        CHECK(res.report == "s[4] + s[3,1]\n");
    }
    {
        auto cfg = base(run_config::command::expand);
        cfg.family_expr = "E1";
        cfg.minus_family = "E4";
        cfg.family_t = 2;
        const auto res = run(cfg);
        CHECK(res.report == "s[4,4,4]\n");
    }
    {
        auto cfg = base(run_config::command::expand);
        cfg.eproduct_expr = "x3";
        CHECK(run(cfg).exit_code == 2);
    }
}

TEST_CASE("counterexample report carries the witness")
{
    auto cfg = base(run_config::command::counterexample);
    cfg.power_m = 3;
    cfg.power_n_max = 20;
    const auto res = run(cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.report.find("note: witness n=2 r=2 coefficient=-12") != std::string::npos);
}

TEST_CASE("reports can be written to a file")
{
    auto cfg = base(run_config::command::verify_identity);
    cfg.r_max = 3;
    cfg.out_path = "test_report_out.txt";
    const auto res = run(cfg);
    CHECK(res.exit_code == 0);
    std::ifstream in(cfg.out_path, std::ios::binary);
    REQUIRE(in.good());
    std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(contents == res.report);
    in.close();
    std::remove(cfg.out_path.c_str());
}

TEST_CASE("user sequence file feeds verify-qlc")
{
    const char* path = "test_seq_in.json";
    {
        std::ofstream out(path);
        // the narayana-like rows 1, 1+q, 1+3q+q^2, 1+6q+6q^2+q^3
        out << "[[1],[1,1],[1,3,1],[1,6,6,1]]";
    }
    auto cfg = base(run_config::command::verify_qlc);
    cfg.qlc_n_max = 4;
    cfg.sequences_path = path;
    const auto res = run(cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.report.find("qlc-user n=1: ok") != std::string::npos);
    CHECK(res.report.find("qlc-user n=2: ok") != std::string::npos);
    std::remove(path);
}

TEST_CASE("custom array and corpus files feed verify-transform")
{
    const char* apath = "test_array_in.json";
    const char* cpath = "test_corpus_in.json";
    {
        std::ofstream out(apath);
        out << "[[\"1\"],[\"1\",\"1\"],[\"1\",\"4\",\"1\"],[\"1\",\"9\",\"9\",\"1\"],"
               "[\"1\",\"16\",\"36\",\"16\",\"1\"],[\"1\",\"25\",\"100\",\"100\",\"25\",\"1\"],"
               "[\"1\",\"36\",\"225\",\"400\",\"225\",\"36\",\"1\"]]";
    }
    {
        std::ofstream out(cpath);
        out << "[[\"1\",\"1\",\"2\",\"6\",\"24\",\"120\"],[\"1\",\"1/2\",\"1/3\",\"1/4\",\"1/5\",\"1/6\"]]";
    }
    auto cfg = base(run_config::command::verify_transform);
    cfg.array_path = apath;
    cfg.corpus_path = cpath;
    cfg.n_sign = 4;
    cfg.n_preserve = 4;
    const auto res = run(cfg);
    CHECK(res.report.find("sign-change") != std::string::npos);
    CHECK(res.report.find("preservation sequence=seq0") != std::string::npos);
    std::remove(apath);
    std::remove(cpath);
}
