#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include <json.hpp>

#include "bk/verifier.hpp"

using namespace bk;

namespace {

SuiteConfig tiny(const std::string& suite) {
    SuiteConfig cfg;
    cfg.suite = suite;
    cfg.max_cells = 3;
    cfg.max_entry = 4;  // >= 4 so the triple-index families are nonempty
    cfg.max_word_len = 3;
    cfg.max_index = 4;
    return cfg;
}

}  // namespace

TEST_CASE("every suite passes at tiny bounds") {
    for (const auto& name : suite_names()) {
        if (name == "self-test") continue;
        Report report = run_suite(tiny(name));
        CHECK_MESSAGE(report.passed(), name);
        CHECK(report.instances > 0);
        CHECK(report.suite == name);
    }
}

TEST_CASE("unknown suites are rejected") {
    CHECK_THROWS(run_suite(tiny("no-such-suite")));
}

TEST_CASE("the harness reports deliberate failures") {
    Report report = run_suite(tiny("self-test"));
    CHECK_FALSE(report.passed());
    CHECK_FALSE(report.failures.empty());
    // Failures are sorted so the least counterexample comes first.
    CHECK(std::is_sorted(report.failures.begin(), report.failures.end(),
                         [](const Failure& a, const Failure& b) {
                             return std::tie(a.input, a.lhs, a.rhs) <
                                    std::tie(b.input, b.lhs, b.rhs);
                         }));
    CHECK(report.failures.front().input.find("t1 = t2") != std::string::npos);
}

TEST_CASE("reports serialize to the documented schema") {
    Report report = run_suite(tiny("bk-basic"));
    nlohmann::json parsed = nlohmann::json::parse(report.to_json());
    CHECK(parsed["suite"] == "bk-basic");
    CHECK(parsed["instances"] == report.instances);
    CHECK(parsed["failures"].is_array());
    CHECK(parsed["millis"].is_number());
    CHECK(parsed["config"]["max_cells"] == 3);
    CHECK(parsed["config"]["max_entry"] == 4);
    CHECK(parsed["config"]["max_word_len"] == 3);
    CHECK(parsed["config"]["max_index"] == 4);
    CHECK(parsed["config"]["seed"] == 1);
    Report failing = run_suite(tiny("self-test"));
    nlohmann::json bad = nlohmann::json::parse(failing.to_json());
    CHECK(bad["failures"].size() == failing.failures.size());
    for (const auto& f : bad["failures"]) {
        CHECK(f.contains("input"));
        CHECK(f.contains("lhs"));
        CHECK(f.contains("rhs"));
    }
}

TEST_CASE("reports are byte-identical across runs") {
    for (const auto& name : {"golden", "cactus-q", "dual-route", "group-words"}) {
        Report a = run_suite(tiny(name));
        Report b = run_suite(tiny(name));
        CHECK(a.to_json() == b.to_json());
    }
}

TEST_CASE("golden replay passes") {
    Report report = golden_examples();
    for (const auto& f : report.failures)
        MESSAGE(f.input, " lhs=", f.lhs, " rhs=", f.rhs);
    CHECK(report.passed());
    CHECK(report.instances >= 80);  // the hexagon example alone has 60 labels
}

TEST_CASE("text rendering mentions counts") {
    Report report = run_suite(tiny("bk-basic"));
    std::string text = report.to_text();
    CHECK(text.find("bk-basic") != std::string::npos);
    CHECK(text.find("0 failures") != std::string::npos);
}
