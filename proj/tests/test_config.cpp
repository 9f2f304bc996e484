#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>

#include "dqlab/config.hpp"
#include "dqlab/io.hpp"
#include "dqlab/rng.hpp"

using namespace dqlab;
using namespace dqlab::cli;

namespace {

const char* kExample = R"(# annotated example
scenario = classical

[params]
m = 1.0
gamma = 0.2
k = 1.0

[numerics]
dt = 0.001
t_end = 10.0
x1 = 1.0

[output]
directory = out/classical
formats = csv
)";

} // namespace

TEST_CASE("parse a full config") {
    const auto cfg = parse_config_text(kExample);
    CHECK(cfg.scenario == "classical");
    CHECK(cfg.params.gamma == doctest::Approx(0.2));
    CHECK(cfg.params.m == 1.0);
    CHECK(cfg.num("dt", 0.0) == doctest::Approx(0.001));
    CHECK(cfg.num("t_end", 0.0) == doctest::Approx(10.0));
    CHECK(cfg.num("x1", 0.0) == 1.0);
    CHECK(cfg.num("x2", -7.0) == -7.0); // fallback
    CHECK(cfg.output.directory == std::filesystem::path("out/classical"));
    CHECK(cfg.output.csv);
    CHECK(!cfg.output.json);
    CHECK(!cfg.config_hash.empty());
}

TEST_CASE("unknown keys are rejected with the offending name") {
    CHECK_THROWS_WITH_AS(parse_config_text("scenario = classical\nbogus = 1\n"),
                         doctest::Contains("bogus"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config_text("scenario = x\n[params]\nmass = 1\n"),
                         doctest::Contains("mass"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config_text("scenario = x\n[numerics]\nwibble = 1\n"),
                         doctest::Contains("wibble"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config_text("scenario = x\n[misc]\n"),
                         doctest::Contains("misc"), ConfigError);
}

TEST_CASE("malformed lines and missing scenario") {
    CHECK_THROWS_AS(parse_config_text("scenario classical\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[params]\nm = 1\n"), ConfigError); // no scenario
    CHECK_THROWS_AS(parse_config_text("scenario = x\n[params\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("scenario = x\n[params]\nm = abc\n"), ConfigError);
}

TEST_CASE("typed getters") {
    const auto cfg = parse_config_text(
        "scenario = langevin\n[numerics]\nn_paths = 250\nseed = 12345\nwith_spring = true\n");
    CHECK(cfg.num_int("n_paths", 0) == 250);
    CHECK(cfg.num_u64("seed", 0) == 12345u);
    CHECK(cfg.flag("with_spring", false));
    CHECK(!cfg.flag("record_stride_missing_uses_fallback", false));
    CHECK_THROWS_AS(cfg.num_required("dt"), ConfigError);
}

TEST_CASE("hash is stable and content-sensitive") {
    const auto a = parse_config_text(kExample);
    const auto b = parse_config_text(kExample);
    CHECK(a.config_hash == b.config_hash);
    const auto c = parse_config_text(std::string(kExample) + "# trailing\n");
    CHECK(a.config_hash != c.config_hash);
}

TEST_CASE("inline comments are stripped") {
    const auto cfg = parse_config_text("scenario = spectral  # run the action\n"
                                       "[numerics]\nlambda = 2.0 # scale\n");
    CHECK(cfg.scenario == "spectral");
    CHECK(cfg.num("lambda", 0.0) == 2.0);
}

TEST_CASE("17-significant-digit formatting round-trips doubles exactly") {
    rng::SplitMix64 gen(61);
    for (int i = 0; i < 2000; ++i) {
        // Mix magnitudes from 1e-12 to 1e12.
        const double mag = std::pow(10.0, 24.0 * gen.next_unit() - 12.0);
        const double v = gen.next_symmetric() * mag;
        const double back = std::stod(io::format_g17(v));
        CHECK(std::memcmp(&v, &back, sizeof(double)) == 0);
    }
    CHECK(io::format_g17(0.0) == "0");
    CHECK(std::stod(io::format_g17(0.1)) == 0.1);
}
