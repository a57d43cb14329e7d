#include <catch2/catch_amalgamated.hpp>

#include <rktrace/report.hpp>

using namespace rktrace;

TEST_CASE("json numbers switch to decimal strings past the exact range", "[report]") {
    CHECK(big_json(BigInt(0)).is_number());
    CHECK(big_json((BigInt(1) << 53) - 1).is_number());
    CHECK(big_json(BigInt(1) << 53).is_string());
    CHECK(big_json(BigInt(1) << 99).get<std::string>() == (BigInt(1) << 99).str());
    CHECK(big_json(BigInt(-5)).get<std::int64_t>() == -5);
}

TEST_CASE("the full claim suite passes at the smallest parameters", "[report]") {
    const VerifyReport r = run_verify(2, 1);
    CHECK(r.all_verified);
    REQUIRE(r.claims.size() == 8);
    const std::vector<std::string> order{
        "code-enumeration", "weight-spectrum",  "weight-cases", "griesmer-optimality",
        "minimality",       "nondegeneracy",    "dual-distance", "group-action",
    };
    for (std::size_t i = 0; i < order.size(); ++i) {
        CHECK(r.claims[i].claim == order[i]);
        INFO(r.claims[i].claim << ": " << r.claims[i].witness);
        CHECK(r.claims[i].verified);
    }
    CHECK(r.observed.entries.at(12) == 12);

    const Json j = r.to_json();
    CHECK(j.at("all_verified").get<bool>());
    CHECK(j.at("claims").size() == 8);
    CHECK(j.at("claims")[0].at("status") == "verified");
    CHECK(j.at("claims")[0].contains("elapsed"));
    CHECK(j.at("claims")[0].at("parameters").at("m") == 2);
}

TEST_CASE("verification accepts threads and stays deterministic", "[report]") {
    const VerifyReport a = run_verify(2, 2, std::nullopt, 1);
    const VerifyReport b = run_verify(2, 2, std::nullopt, 4);
    CHECK(a.all_verified);
    CHECK(b.all_verified);
    CHECK(a.observed == b.observed);
}

TEST_CASE("the two cubic moduli give identical spectra and verdicts", "[report]") {
    const VerifyReport a = run_verify(3, 1, 0xbu);
    const VerifyReport b = run_verify(3, 1, 0xdu);
    CHECK(a.observed == b.observed);
    REQUIRE(a.claims.size() == b.claims.size());
    for (std::size_t i = 0; i < a.claims.size(); ++i) {
        CHECK(a.claims[i].claim == b.claims[i].claim);
        CHECK(a.claims[i].verified == b.claims[i].verified);
    }
    CHECK(a.all_verified);
    CHECK(b.all_verified);
}

TEST_CASE("verification rejects unusable parameters", "[report]") {
    CHECK_THROWS_AS(run_verify(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(run_verify(2, 4), std::out_of_range);  // enumeration guardrail
    CHECK_THROWS_AS(run_verify(2, 1, 0xbu), std::invalid_argument); // degree mismatch
}

TEST_CASE("info reports carry closed forms and the gap verdict", "[report]") {
    const InfoReport i = make_info_report(2, 1);
    CHECK(i.ok);
    CHECK(i.params.N == 24);
    REQUIRE(i.gap_identity.has_value());
    CHECK(*i.gap_identity == 2);
    CHECK(i.to_json().at("optimal").get<bool>());
    CHECK(i.to_json().at("gap_identity") == 2);

    // at (2, 4) the direct gap is 20 while the closed form says 19; the
    // report keeps the verdict honest instead of normalizing it away
    const InfoReport bad = make_info_report(2, 4);
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.gap_identity.has_value());
    CHECK(bad.gap_witness.find("direct gap 20") != std::string::npos);
    CHECK(bad.to_json().contains("gap_identity_violation"));
    CHECK(bad.optimality.optimal); // the distance certificate itself still holds
}

TEST_CASE("distribution reports round-trip the observed table", "[report]") {
    WeightDistribution d;
    d.add(0, 1);
    d.add(12, 12);
    d.add(16, 3);
    const Json j = code_report_json(2, 1, 12, 24, 4, d, true);
    CHECK(j.at("matches_prediction").get<bool>());
    CHECK(j.at("distribution").size() == 3);
    CHECK(j.at("distribution")[0].at("weight") == 0);
    CHECK(j.at("distribution")[2].at("frequency") == 3);
    CHECK(j.at("N") == 24);
}
