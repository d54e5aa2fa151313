#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>

#include "lmcf/report.hpp"

using namespace lmcf;

namespace {

VerificationReport sample_report() {
    VerificationReport rep;
    rep.subject = "model:torus";
    rep.seed = 424242;
    rep.config["alpha"] = "-1";
    rep.config["grid"] = "64";
    rep.add("legendrian_max", 3.0e-13, 1e-10);
    rep.add("shrinker_max", 1.0 / 3.0, 5e-5);
    rep.add("holonomy_u", -4.0 * M_PI, 0.0, false);
    return rep;
}

}  // namespace

TEST_CASE("pass logic: gated rows only") {
    VerificationReport rep = sample_report();
    CHECK(rep.rows[0].pass);
    CHECK_FALSE(rep.rows[1].pass);
    CHECK_FALSE(rep.all_pass());
    rep.rows[1].pass = true;
    CHECK(rep.all_pass());
}

TEST_CASE("seventeen significant digits survive a round trip") {
    double x = M_PI * 1e-7;
    CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
    CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("JSON round trip preserves every field") {
    VerificationReport rep = sample_report();
    VerificationReport back = parse_report_json(serialize_report_json(rep));
    CHECK(back.tool_version == rep.tool_version);
    CHECK(back.subject == rep.subject);
    CHECK(back.seed == rep.seed);
    CHECK(back.config == rep.config);
    REQUIRE(back.rows.size() == rep.rows.size());
    for (size_t i = 0; i < rep.rows.size(); ++i) {
        CHECK(back.rows[i].name == rep.rows[i].name);
        CHECK(back.rows[i].value == rep.rows[i].value);
        CHECK(back.rows[i].gate == rep.rows[i].gate);
        CHECK(back.rows[i].gated == rep.rows[i].gated);
        CHECK(back.rows[i].pass == rep.rows[i].pass);
    }
}

TEST_CASE("serialization is byte-deterministic") {
    CHECK(serialize_report_json(sample_report()) ==
          serialize_report_json(sample_report()));
    CHECK(serialize_report_csv(sample_report()) ==
          serialize_report_csv(sample_report()));
}

TEST_CASE("CSV schema") {
    std::string csv = serialize_report_csv(sample_report());
    CHECK(csv.rfind("name,value,gate,gated,pass\n", 0) == 0);
    CHECK(csv.find("legendrian_max,") != std::string::npos);
    CHECK(csv.find(format_double(-4.0 * M_PI)) != std::string::npos);
}

TEST_CASE("output path resolution honors LSL_OUTPUT_DIR") {
    setenv("LSL_OUTPUT_DIR", "/tmp/lmcf_out", 1);
    CHECK(resolve_output_path("r.json") == "/tmp/lmcf_out/r.json");
    CHECK(resolve_output_path("/abs/r.json") == "/abs/r.json");
    unsetenv("LSL_OUTPUT_DIR");
    CHECK(resolve_output_path("r.json") == "r.json");
}

TEST_CASE("file round trip") {
    std::string path = "/tmp/lmcf_report_test.json";
    VerificationReport rep = sample_report();
    write_file(path, serialize_report_json(rep));
    CHECK(read_file(path) == serialize_report_json(rep));
}
