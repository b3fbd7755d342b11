#include <doctest.h>

#include "carleman/classify.hpp"
#include "carleman/presets.hpp"

using namespace carleman;

TEST_CASE("all presets pass their golden checks") {
    for (const auto& name : preset_names()) {
        CAPTURE(name);
        auto result = run_preset(name);
        for (const auto& c : result.checks) {
            CAPTURE(c.name);
            INFO(c.detail);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("unknown preset names are rejected") {
    CHECK_THROWS_AS(run_preset("nope"), Error);
}

TEST_CASE("preset reports account for every product row") {
    for (const auto& name : preset_names()) {
        CAPTURE(name);
        auto result = run_preset(name);
        // the report groups re-merge to the reduced rows
        CHECK(merged_difference(result.report.all_input(), merge(result.reduced)).empty());
        CHECK(!emit_table(result.report).empty());
        CHECK(!emit_latex(result.report).empty());
    }
}

TEST_CASE("poly leading energies have a positive sign verdict") {
    auto result = run_preset("thm1-poly");
    SignContext ctx = SignContext::defaults(Schema::Poly);
    for (const auto& [order, group] : result.report.energy) {
        auto verdicts = sign_report(group.leading, ctx);
        for (const auto& [term, sign] : verdicts) {
            CAPTURE(order);
            // even mu powers and positive coefficients: all leading energies positive
            CHECK(sign == Sign::Positive);
        }
    }
}
