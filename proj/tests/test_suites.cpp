// The named verification suites: structure, determinism, and outcomes of the
// fast ones.  Slow suites are exercised by the acceptance runner.

#include <catch_amalgamated.hpp>

#include "cmreg/cmreg.hpp"

using namespace cmreg;

TEST_CASE("suite registry") {
    auto names = suite_names();
    std::vector<std::string> expect = {"ex21",     "ex22", "lemma24", "ex25",
                                       "appendix", "ex34", "ex35",    "properties"};
    CHECK(names == expect);
    CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
}

TEST_CASE("base example suite passes clean") {
    SuiteReport rep = run_suite("ex21");
    CHECK(rep.suite == "ex21");
    CHECK(rep.checks.size() == 7);
    CHECK(rep.ok());
    CHECK(rep.deviations() == 0);
    CHECK(rep.failed() == 0);
    std::string text = report_to_text(rep);
    CHECK(text.rfind("suite ex21\n", 0) == 0);
    CHECK(text.find("summary checks=7 passed=7 failed=0 deviations=0") != std::string::npos);
}

TEST_CASE("curve example suite passes clean") {
    SuiteReport rep = run_suite("ex22");
    CHECK(rep.checks.size() == 7);
    CHECK(rep.ok());
    CHECK(rep.deviations() == 0);
}

TEST_CASE("property suite passes clean") {
    SuiteReport rep = run_suite("properties");
    CHECK(rep.checks.size() == 5);
    CHECK(rep.ok());
    CHECK(rep.deviations() == 0);
}

TEST_CASE("suites with documented deviations still gate green") {
    // Two checks compare against external reference values that exact
    // computation refutes; they report DEVIATION (not FAIL) and each carries
    // a companion check pinning the computed truth.
    SuiteReport ex25 = run_suite("ex25");
    CHECK(ex25.ok());
    CHECK(ex25.deviations() == 1);
    bool found_pin = false, found_dev = false;
    for (const auto& c : ex25.checks) {
        if (c.name == "6_reg_intersection_reference") {
            found_dev = true;
            CHECK(c.documented_deviation);
            CHECK(!c.pass);
        }
        if (c.name == "7_reg_intersection_computed") {
            found_pin = true;
            CHECK(c.pass);
        }
    }
    CHECK(found_dev);
    CHECK(found_pin);

    SuiteReport app = run_suite("appendix");
    CHECK(app.ok());
    CHECK(app.deviations() == 1);
    found_pin = found_dev = false;
    for (const auto& c : app.checks) {
        if (c.name == "7_h1_total_reference") {
            found_dev = true;
            CHECK(c.documented_deviation);
        }
        if (c.name == "8_h1_total_computed") {
            found_pin = true;
            CHECK(c.pass);
        }
    }
    CHECK(found_dev);
    CHECK(found_pin);
}

TEST_CASE("suite reports are deterministic") {
    std::string a = report_to_text(run_suite("ex21"));
    std::string b = report_to_text(run_suite("ex21"));
    CHECK(a == b);
}
