#include "doctest.h"

#include <atomic>
#include <cstdlib>

#include "gtrskit/commands.hpp"
#include "gtrskit/report.hpp"

using namespace gtrskit;

namespace {
RunConfig verify_config(uint32_t q, const std::string& suite, uint64_t seed) {
    RunConfig rc;
    rc.command = "verify";
    rc.params["suite"] = suite;
    rc.params["q"] = q;
    rc.seed = seed;
    return rc;
}
}  // namespace

TEST_CASE("identical run configs produce byte-identical reports") {
    RunConfig rc = verify_config(11, "oracle", 5);
    rc.params["samples"] = 20;
    std::string a = cmd_verify(rc).to_json_text(false);
    std::string b = cmd_verify(rc).to_json_text(false);
    CHECK(a == b);
}

TEST_CASE("worker count does not change the report bytes") {
    RunConfig rc = verify_config(11, "L34", 3);
    rc.workers = 1;
    std::string serial = cmd_verify(rc).to_json_text(false);
    rc.workers = 4;
    std::string parallel = cmd_verify(rc).to_json_text(false);
    CHECK(serial == parallel);
}

TEST_CASE("reports round-trip through JSON to an equal value") {
    RunConfig rc = verify_config(13, "rsdual", 0);
    Report rep = cmd_verify(rc);
    Report back = Report::from_json(rep.to_json(false));
    CHECK(back == rep);
    CHECK(back.to_json_text(false) == rep.to_json_text(false));
}

TEST_CASE("the report embeds a recomputable field spec") {
    RunConfig rc = verify_config(9, "powersum", 0);
    Report rep = cmd_verify(rc);
    CHECK(rep.config.at("params").at("p") == 3);
    CHECK(rep.config.at("params").at("m") == 2);
    CHECK(rep.config.at("params").at("modulus") == ojson({1, 0, 1}));
    CHECK(rep.config.at("seed") == 0);
    CHECK(rep.command == "verify");
}

TEST_CASE("CSV output has a header plus one row per result") {
    RunConfig rc = verify_config(13, "rsdual", 0);
    Report rep = cmd_verify(rc);
    std::string csv = rep.to_csv(false);
    size_t lines = 0;
    for (char c : csv)
        if (c == '\n') ++lines;
    CHECK(lines == rep.results.size() + 1);
    CHECK(csv.substr(0, 2) == "k,");
    CHECK(csv.find("verdict,ok") != std::string::npos);
}

TEST_CASE("verify suites pass on their default grids") {
    for (const char* suite : {"L31", "L32", "L34"}) {
        RunConfig rc = verify_config(8, suite, 0);
        Report rep = cmd_verify(rc);
        CAPTURE(suite);
        CHECK(rep.all_ok());
        CHECK(rep.failures() == 0);
        CHECK(rep.results.size() > 0);
    }
    Report rs = cmd_verify(verify_config(13, "rsdual", 0));
    CHECK(rs.all_ok());
    CHECK(rs.results.size() == 12);
}

TEST_CASE("oracle suite records agreement per instance") {
    RunConfig rc = verify_config(13, "oracle", 1);
    rc.params["samples"] = 25;
    Report rep = cmd_verify(rc);
    CHECK(rep.results.size() == 25);
    CHECK(rep.all_ok());
    for (const auto& e : rep.results) {
        CHECK(e.verdict == "agree");
        CHECK(e.certificate.contains("feasible"));
        CHECK(e.certificate.contains("gram_zero"));
    }
}

TEST_CASE("construct command emits a complete certificate") {
    RunConfig rc;
    rc.command = "construct";
    rc.params["family"] = "tc1";
    rc.params["q"] = 13;
    rc.params["k"] = 5;
    rc.params["t"] = 3;
    rc.params["h"] = 0;
    rc.params["l"] = 0;
    Report rep = cmd_construct(rc);
    REQUIRE(rep.results.size() == 1);
    const ResultEntry& e = rep.results[0];
    CHECK(e.ok);
    CHECK(e.verdict == "self_orthogonal");
    for (const char* key : {"points", "multipliers", "code", "witness",
                            "gram_hash", "classification", "square_dim"})
        CHECK(e.certificate.contains(key));
    CHECK(e.certificate.at("gram_hash").get<std::string>().substr(0, 8) ==
          "fnv1a64:");
    CHECK(e.certificate.at("code").at("k") == 5);
    CHECK(e.certificate.at("code").at("n") == 13);
}

TEST_CASE("construct command surfaces window violations as typed errors") {
    RunConfig rc;
    rc.command = "construct";
    rc.params["family"] = "tc1";
    rc.params["q"] = 13;
    rc.params["k"] = 6;
    rc.params["t"] = 3;
    rc.params["h"] = 0;
    rc.params["l"] = 0;
    CHECK_THROWS_AS(cmd_construct(rc), ParamWindowError);
}

TEST_CASE("search reports per-cell verdicts with certificates") {
    RunConfig rc;
    rc.command = "search";
    rc.params["q"] = 13;
    rc.params["n"] = 13;
    rc.params["samples"] = 4;
    rc.seed = 2;
    Report rep = cmd_search(rc);
    CHECK(rep.all_ok());
    CHECK(rep.results.size() > 0);
    bool saw_trivial_dual = false, saw_found = false;
    for (const auto& e : rep.results) {
        CHECK(e.verdict.substr(0, 6) == "found ");
        if (e.certificate.at("corollary41").get<bool>()) {
            saw_trivial_dual = true;
            CHECK(e.verdict == "found 0/0");
            CHECK(e.certificate.at("reason") == "dual space empty");
        }
        if (e.certificate.contains("found") && !e.certificate.at("found").empty()) {
            saw_found = true;
            const auto& hit = e.certificate.at("found").front();
            CHECK(hit.contains("eta"));
            CHECK(hit.contains("points"));
            CHECK(hit.contains("multipliers"));
        }
    }
    CHECK(saw_trivial_dual);
    CHECK(saw_found);

    // identical search twice is byte-identical
    CHECK(cmd_search(rc).to_json_text(false) == rep.to_json_text(false));
}

TEST_CASE("search rejects infeasible explicit dimensions") {
    RunConfig rc;
    rc.command = "search";
    rc.params["q"] = 13;
    rc.params["n"] = 5;
    rc.params["k"] = 3;  // 2k > n
    CHECK_THROWS_AS(cmd_search(rc), ParamWindowError);
}

TEST_CASE("run_indexed preserves index order and propagates exceptions") {
    std::vector<int> out(20, -1);
    run_indexed(20, 4, [&](size_t i) { out[i] = int(i) * 2; });
    for (size_t i = 0; i < 20; ++i) CHECK(out[i] == int(i) * 2);

    std::atomic<int> ran{0};
    auto boom = [&](size_t i) {
        ran.fetch_add(1);
        if (i == 3) throw std::runtime_error("deliberate failure");
    };
    CHECK_THROWS_AS(run_indexed(8, 2, boom), std::runtime_error);
    CHECK_THROWS_AS(run_indexed(8, 1, boom), std::runtime_error);
}

TEST_CASE("worker count comes from the environment with clamping") {
    unsetenv("GTRSKIT_WORKERS");
    CHECK(workers_from_env() == 1);
    setenv("GTRSKIT_WORKERS", "4", 1);
    CHECK(workers_from_env() == 4);
    setenv("GTRSKIT_WORKERS", "0", 1);
    CHECK(workers_from_env() == 1);
    setenv("GTRSKIT_WORKERS", "9999", 1);
    CHECK(workers_from_env() == 256);
    setenv("GTRSKIT_WORKERS", "notanumber", 1);
    CHECK(workers_from_env() == 1);
    unsetenv("GTRSKIT_WORKERS");
}

TEST_CASE("matrix hashes are stable, prefixed and content-sensitive") {
    const FieldCtx& F = make_field_order(7);
    Matrix A = Matrix::from_value_rows(F, {{1, 2}, {3, 4}});
    Matrix B = Matrix::from_value_rows(F, {{1, 2}, {3, 5}});
    CHECK(matrix_hash(A) == matrix_hash(A));
    CHECK(matrix_hash(A) != matrix_hash(B));
    CHECK(matrix_hash(A).substr(0, 8) == "fnv1a64:");
    // shape is part of the hash: a 1x4 with the same values differs
    Matrix C = Matrix::from_value_rows(F, {{1, 2, 3, 4}});
    CHECK(matrix_hash(A) != matrix_hash(C));
}

TEST_CASE("timing fields appear only when requested") {
    RunConfig rc = verify_config(13, "rsdual", 0);
    Report rep = cmd_verify(rc);
    std::string without = rep.to_json_text(false);
    std::string with = rep.to_json_text(true);
    CHECK(without.find("timing_ms") == std::string::npos);
    CHECK(with.find("timing_ms") != std::string::npos);
    std::string csv_with = rep.to_csv(true);
    CHECK(csv_with.find("timing_ms") != std::string::npos);
}
