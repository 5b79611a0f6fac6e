#include "doctest.h"
#include "json.hpp"
#include "lidx/gen.hpp"
#include "lidx/suites.hpp"

using namespace lidx;

namespace {

const RingConfig S2{2, RingKind::PowerSeries, 24};

RunConfig small_config() {
    RunConfig cfg;
    cfg.cases = 5;
    cfg.seed = 7;
    cfg.degree = 3;
    return cfg;
}

std::string stripped(const SuiteReport& r) {
    // everything except timing
    nlohmann::json j = nlohmann::json::parse(report_json(r));
    j.erase("elapsed_ms");
    return j.dump();
}

}  // namespace

TEST_CASE("every suite runs green on a small budget") {
    for (const auto& name : suite_names()) {
        auto rep = run_suite(name, small_config());
        INFO(name << ": " << (rep.failures.empty() ? "" : rep.failures.front().payload));
        CHECK(rep.ok());
        CHECK(rep.cases > 0);
        CHECK(rep.suite == name);
    }
}

TEST_CASE("the aggregate suite covers all suites and stays deterministic") {
    auto cfg = small_config();
    auto a = run_suite("all", cfg);
    auto b = run_suite("all", cfg);
    CHECK(a.ok());
    CHECK(stripped(a) == stripped(b));

    long total = 0;
    for (const auto& name : suite_names()) total += run_suite(name, cfg).cases;
    CHECK(a.cases == total);
}

TEST_CASE("unknown suite names are rejected") {
    CHECK_THROWS_AS(run_suite("nope", small_config()), UnknownSuite);
}

TEST_CASE("report JSON carries the config and the generator id") {
    auto cfg = small_config();
    cfg.p = 5;
    cfg.kind = RingKind::PAdic;
    auto rep = run_suite("cocycle", cfg);
    auto j = nlohmann::json::parse(report_json(rep));
    CHECK(j["suite"] == "cocycle");
    CHECK(j["rng"] == Rng::algorithm);
    CHECK(j["config"]["p"] == 5);
    CHECK(j["config"]["ring"] == "padic");
    CHECK(j["config"]["seed"] == 7);
    CHECK(j["ok"] == true);
    CHECK(j["failures"].is_array());
    CHECK(j["failures"].empty());
}

TEST_CASE("a zero case budget is trivially green") {
    auto cfg = small_config();
    cfg.cases = 0;
    auto rep = run_suite("additivity", cfg);
    CHECK(rep.ok());
    CHECK(rep.cases == 0);
}

TEST_CASE("minor-valuation oracle: pinned examples and random agreement") {
    // diag(t, t^3): minors give d_1 = 1, d_2 = 4
    CHECK(smith_minor_oracle(MatrixF::pi_diagonal(S2, {1, 3})) == std::vector<long>{1, 3});
    CHECK(smith_minor_oracle(MatrixF::identity(S2, 3)) == std::vector<long>{0, 0, 0});

    auto m = parse_matrix(S2, "t, 1+t; t^2, t^3");
    CHECK(smith_minor_oracle(m) == smith_over_dvr(m).exponents);

    Rng rng(11);
    for (int c = 0; c < 25; ++c) {
        int k = static_cast<int>(rng.uniform(1, 4));
        std::vector<long> exps;
        for (int i = 0; i < k; ++i) exps.push_back(rng.uniform(0, 3));
        auto M = random_integral_gl(rng, S2, k, 1)
                     .mul(MatrixF::pi_diagonal(S2, exps))
                     .mul(random_integral_gl(rng, S2, k, 1));
        CHECK(smith_minor_oracle(M) == smith_over_dvr(M).exponents);
    }
}
