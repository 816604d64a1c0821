#include <doctest.h>

#include <set>

#include "abelkit/errors.hpp"
#include "abelkit/harness.hpp"
#include "abelkit/json_io.hpp"

using namespace abelkit;

namespace {

HarnessConfig small_cfg(long max_order) {
    HarnessConfig cfg;
    cfg.max_order = max_order;
    cfg.sample_count = 25;
    return cfg;
}

}  // namespace

TEST_CASE("the suite catalog is complete and well formed") {
    const auto& catalog = suite_catalog();
    CHECK(catalog.size() == 25);
    std::set<std::string> ids;
    for (const auto& [id, summary] : catalog) {
        CHECK(ids.insert(id).second);  // unique
        CHECK_FALSE(summary.empty());
        for (char c : id) CHECK((std::islower(c) || std::isdigit(c) || c == '-'));
    }
    CHECK(ids.count("smith-normal-form") == 1);
    CHECK(ids.count("classification-audit") == 1);
    CHECK(ids.count("resource-budgets") == 1);
    CHECK_THROWS_AS(run_suite("bogus-suite"), UnknownSuiteError);
}

TEST_CASE("reduced-order runs of the core suites pass") {
    HarnessConfig cfg = small_cfg(8);
    for (const char* id : {"group-canonical-forms", "hom-group-structure",
                           "kernel-cokernel-exactness", "split-decider-agreement",
                           "kernel-invariance-duality", "split-idempotent-laws",
                           "semicentral-orientation", "weak-duo-laws",
                           "self-rickart-equivalences", "direct-sum-closure",
                           "hom-vanishing-decompositions", "relative-rickart-pairs",
                           "classification-audit", "known-cases", "endo-ring-transfer",
                           "quasi-retractability", "epi-mono-criteria", "resource-budgets"}) {
        CAPTURE(id);
        SuiteResult r = run_suite(id, cfg);
        CHECK(r.suite == id);
        CHECK(r.passed());
        CHECK(r.failures.empty());
        CHECK(r.instances >= 1);
    }
}

TEST_CASE("sampled suites pass at reduced size") {
    HarnessConfig cfg = small_cfg(8);
    for (const char* id : {"invariant-composition", "product-closure-ssip",
                           "finite-coproduct-closure", "image-epi-restriction",
                           "extension-closure", "summand-inheritance"}) {
        CAPTURE(id);
        SuiteResult r = run_suite(id, cfg);
        CHECK(r.passed());
        CHECK(r.instances >= 1);
    }
}

TEST_CASE("a starved budget surfaces as skips, never as false passes") {
    HarnessConfig cfg = small_cfg(8);
    cfg.hom_budget = 1;
    SuiteResult r = run_suite("kernel-invariance-duality", cfg);
    CHECK(r.failures.empty());
    CHECK_FALSE(r.skipped.empty());
    SuiteResult r2 = run_suite("self-rickart-equivalences", cfg);
    CHECK(r2.failures.empty());
    CHECK_FALSE(r2.skipped.empty());
}

TEST_CASE("order cap one leaves only the zero group and still counts instances") {
    HarnessConfig cfg = small_cfg(1);
    SuiteResult r = run_suite("self-rickart-equivalences", cfg);
    CHECK(r.passed());
    CHECK(r.instances >= 1);
}

TEST_CASE("one config gives one result") {
    HarnessConfig cfg = small_cfg(6);
    cfg.random_seed = 99;
    for (const char* id : {"image-epi-restriction", "finite-coproduct-closure"}) {
        CAPTURE(id);
        SuiteResult a = run_suite(id, cfg);
        SuiteResult b = run_suite(id, cfg);
        CHECK(a.instances == b.instances);
        CHECK(a.failures.size() == b.failures.size());
        CHECK(a.skipped == b.skipped);
        CHECK(a.notes == b.notes);
    }
}

TEST_CASE("suite results serialize with replayable failures") {
    HarnessConfig cfg = small_cfg(6);
    SuiteResult r = run_suite("known-cases", cfg);
    Json j = suite_result_to_json(r);
    CHECK(j["suite"] == "known-cases");
    CHECK(j["passed"] == true);
    CHECK(j["instances"].get<long>() == r.instances);
    CHECK(j["failures"].is_array());
    CHECK(j["config"]["max_order"] == 6);

    // Force a failure to inspect the failure shape: semicentral checks against
    // a deliberately wrong expectation is not accessible from outside, so pin
    // the replay format on a fabricated failure instead.
    SuiteFailure f{"Z/4", "demo", std::nullopt, "abelkit decide rickart 'Z/4'"};
    r.failures.push_back(f);
    Json jf = suite_result_to_json(r);
    CHECK(jf["passed"] == false);
    CHECK(jf["failures"][0]["replay"].get<std::string>().rfind("abelkit ", 0) == 0);
}

TEST_CASE("the dossier names the canonical form and the verdicts") {
    HarnessConfig cfg;
    std::string z4 = explain_group("Z/4", cfg);
    CHECK(z4.find("group: Z/4") != std::string::npos);
    CHECK(z4.find("order: 4") != std::string::npos);
    CHECK(z4.find("endomorphisms: 4") != std::string::npos);
    CHECK(z4.find("self-Rickart: no") != std::string::npos);
    CHECK(z4.find("witness") != std::string::npos);

    std::string z = explain_group("Z", cfg);
    CHECK(z.find("order: infinite (free rank 1)") != std::string::npos);
    CHECK(z.find("strongly self-Rickart yes") != std::string::npos);
    CHECK(z.find("not applicable (infinite morphism set)") != std::string::npos);

    std::string glued = explain_group("Z/2 + Z/3", cfg);
    CHECK(glued.find("group: Z/6") != std::string::npos);
    CHECK(glued.find("(canonicalized)") != std::string::npos);
    CHECK(glued.find("weak duo: yes") != std::string::npos);

    CHECK_THROWS_AS(explain_group("Z/banana", cfg), ParseError);
}

TEST_CASE("run_all covers the catalog in order") {
    HarnessConfig cfg = small_cfg(4);
    cfg.sample_count = 5;
    std::vector<SuiteResult> all = run_all(cfg);
    const auto& catalog = suite_catalog();
    REQUIRE(all.size() == catalog.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        CAPTURE(all[i].suite);
        CHECK(all[i].suite == catalog[i].first);
        CHECK(all[i].passed());
    }
}
