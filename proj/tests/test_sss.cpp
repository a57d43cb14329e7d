#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>

#include <rktrace/sss.hpp>

using namespace rktrace;

namespace {

std::map<std::uint32_t, int> shares_map(const std::vector<std::uint8_t>& word) {
    std::map<std::uint32_t, int> out;
    for (std::size_t p = 1; p < word.size(); ++p)
        out[static_cast<std::uint32_t>(p)] = word[p];
    return out;
}

} // namespace

TEST_CASE("scheme construction produces a full-rank orthogonal dealer matrix", "[sss]") {
    const SharingScheme s = build_scheme(2, 1, 0);
    CHECK(s.dealer_matrix.rows == 20);
    CHECK(s.dealer_matrix.cols == 24);
    CHECK(s.participants() == 23);
    CHECK(rank(s.dealer_matrix) == 20);
    CHECK(s.rng_id == "mt19937_64");
    CHECK_THROWS_AS(build_scheme(1, 1, 0), std::invalid_argument);
}

TEST_CASE("dealt words always lie in the dual and carry the secret", "[sss]") {
    const SharingScheme s = build_scheme(2, 1, 123);
    for (int secret = 0; secret <= 1; ++secret) {
        const auto word = deal(s, secret);
        REQUIRE(word.size() == 24);
        CHECK(static_cast<int>(word[0]) == secret);
        // orthogonality against every generator row
        for (std::size_t r = 0; r < s.generator.rows; ++r) {
            int parity = 0;
            for (std::size_t c = 0; c < s.generator.cols; ++c)
                parity ^= static_cast<int>(s.generator.get(r, c)) & word[c];
            REQUIRE(parity == 0);
        }
    }
    CHECK_THROWS_AS(deal(s, 2), std::invalid_argument);
}

TEST_CASE("dealing is reproducible from the seed", "[sss]") {
    const SharingScheme a = build_scheme(2, 1, 7);
    const SharingScheme b = build_scheme(2, 1, 7);
    CHECK(deal(a, 1) == deal(b, 1));
    const SharingScheme c = build_scheme(2, 1, 8);
    CHECK(deal(a, 1) != deal(c, 1)); // a different seed moves at least one share
}

TEST_CASE("the minimal access structure at the smallest code is pinned", "[sss]") {
    const SharingScheme s = build_scheme(2, 1, 0);
    const AccessStructure a = minimal_access_sets(s);
    const std::vector<std::vector<std::uint32_t>> expect{
        {1, 3, 4, 6, 7, 9, 10, 12, 13, 15, 16, 18, 19, 21, 22},
        {1, 3, 4, 8, 11, 12, 14, 15, 17, 19, 22},
        {1, 5, 6, 7, 11, 13, 14, 15, 19, 20, 21},
        {1, 5, 8, 9, 10, 15, 16, 17, 18, 19, 20},
        {2, 3, 5, 6, 8, 9, 11, 12, 14, 15, 17, 18, 20, 21, 23},
        {2, 3, 5, 7, 10, 12, 13, 15, 16, 20, 23},
        {2, 4, 6, 8, 10, 15, 16, 17, 21, 22, 23},
        {2, 4, 7, 9, 11, 13, 14, 15, 18, 22, 23},
    };
    CHECK(a.minimal_sets == expect);
    CHECK(a.dictators == std::vector<std::uint32_t>{15});
}

TEST_CASE("larger parameter sets stay dictatorial", "[sss]") {
    const AccessStructure a = minimal_access_sets(build_scheme(3, 1, 0));
    CHECK(a.minimal_sets.size() == 32);
    CHECK(a.dictators == std::vector<std::uint32_t>{63});

    const AccessStructure b = minimal_access_sets(build_scheme(2, 2, 0));
    CHECK_FALSE(b.minimal_sets.empty());
    CHECK_FALSE(b.dictators.empty());
    for (const auto& set : b.minimal_sets)
        for (std::uint32_t d : b.dictators)
            REQUIRE(std::binary_search(set.begin(), set.end(), d));
}

TEST_CASE("every minimal coalition reconstructs both secret values", "[sss]") {
    const SharingScheme s = build_scheme(2, 1, 99);
    const AccessStructure a = minimal_access_sets(s);
    for (int secret = 0; secret <= 1; ++secret) {
        const auto shares = shares_map(deal(s, secret));
        for (const auto& coalition : a.minimal_sets) {
            const auto got = reconstruct(s, coalition, shares);
            REQUIRE(got.has_value());
            REQUIRE(*got == secret);
        }
        // a superset of a minimal coalition is still authorized
        std::vector<std::uint32_t> superset = a.minimal_sets[1];
        superset.push_back(2);
        const auto got = reconstruct(s, superset, shares);
        REQUIRE(got.has_value());
        CHECK(*got == secret);
    }
}

TEST_CASE("small coalitions are never authorized at the smallest code", "[sss]") {
    const SharingScheme s = build_scheme(2, 1, 1);
    const auto shares = shares_map(deal(s, 1));
    CHECK_FALSE(reconstruct(s, {1}, shares).has_value());
    CHECK_FALSE(reconstruct(s, {1, 2, 3}, shares).has_value());
    CHECK_FALSE(reconstruct(s, {4, 9, 15, 23}, shares).has_value());
    CHECK_FALSE(reconstruct(s, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, shares).has_value());
}

TEST_CASE("reconstruction validates its inputs", "[sss]") {
    const SharingScheme s = build_scheme(2, 1, 1);
    const auto shares = shares_map(deal(s, 0));
    CHECK_THROWS_AS(reconstruct(s, {0}, shares), std::invalid_argument);
    CHECK_THROWS_AS(reconstruct(s, {24}, shares), std::invalid_argument);
    std::map<std::uint32_t, int> missing(shares);
    missing.erase(5);
    CHECK_THROWS_AS(reconstruct(s, {5, 6}, missing), std::invalid_argument);
}

TEST_CASE("unauthorized views are consistent with both secrets equally often", "[sss]") {
    const SharingScheme s = build_scheme(2, 1, 5);
    const BigInt expect = pow2(18); // free message bits once two constraints pin down
    for (const auto& coalition :
         {std::vector<std::uint32_t>{1}, std::vector<std::uint32_t>{7}, std::vector<std::uint32_t>{23}}) {
        const ProbeReport r = perfectness_probe(s, coalition, 4);
        CHECK(r.uniform);
        CHECK(r.count_secret0 == expect);
        CHECK(r.count_secret1 == expect);
        CHECK(r.trials_run == 4);
    }
    const ProbeReport wide = perfectness_probe(s, {2, 4, 6, 8}, 4);
    CHECK(wide.uniform);
    CHECK(wide.count_secret0 == wide.count_secret1);
    CHECK(wide.count_secret0 > 0);
}

TEST_CASE("probing an authorized coalition is rejected", "[sss]") {
    const SharingScheme s = build_scheme(2, 1, 5);
    const AccessStructure a = minimal_access_sets(s);
    CHECK_THROWS_AS(perfectness_probe(s, a.minimal_sets[0], 2), std::invalid_argument);
}
