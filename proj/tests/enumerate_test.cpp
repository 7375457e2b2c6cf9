#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shknot/core.hpp"
#include "shknot/enumerate.hpp"
#include "shknot/knot_id.hpp"
#include "support/gen.hpp"

using namespace shknot;

TEST_CASE("config validation") {
    SearchConfig cfg;
    cfg.w_pattern = {{1, 2}, {1, 2}, {3, 4}, {3, 4}};  // two 2-cycles
    CHECK(!search(cfg).ok());

    SearchConfig cfg2;
    cfg2.level_heights = {0, 1, 2};  // wrong size
    CHECK(!search(cfg2).ok());

    SearchConfig cfg3;
    cfg3.census_set = {{1, 1, 1}};  // does not sum to 7
    CHECK(!search(cfg3).ok());
}

TEST_CASE("unit stick budget yields no nontrivial types") {
    SearchConfig cfg;
    cfg.max_stick_len = 1;
    auto res = search(cfg);
    REQUIRE(res.ok());
    CHECK(res->nontrivial_types().empty());
}

TEST_CASE("census outputs validate, level properly, and honor the census set") {
    SearchConfig cfg;
    cfg.max_stick_len = 2;
    int checked = 0;
    // hook: verify every emitted polygon
    // (search itself validates; re-verify independently on exemplars)
    auto res = search(cfg);
    REQUIRE(res.ok());
    for (auto& [type, words] : res->polys) {
        for (const std::string& w : words) {
            Polygon p = test::poly(w, Lattice::Sh);
            REQUIRE(validate(p).ok());
            CHECK(properly_leveled(p));
            auto counts = stick_census(p);
            REQUIRE(counts.ok());
            CHECK(counts->nw == 4);
            CHECK(counts->total() == 11);
            if (type != "unknot") {
                // Lemma atleastone: nontrivial 11-stick polygons use all three
                // planar directions
                CHECK(counts->nx >= 1);
                CHECK(counts->ny >= 1);
                CHECK(counts->nz >= 1);
            }
            if (++checked > 200) break;
        }
        if (checked > 200) break;
    }
    CHECK(checked > 0);
    CHECK(res->max_stick_len_seen <= 2);
}

TEST_CASE("shard merge equals the unsharded census") {
    SearchConfig cfg;
    cfg.max_stick_len = 2;
    auto whole = search(cfg);
    REQUIRE(whole.ok());
    for (int n : {1, 3, 8}) {
        Census merged;
        for (const SearchConfig& part : shard(cfg, n)) {
            auto r = search(part);
            REQUIRE(r.ok());
            merged = merge_census(merged, *r);
        }
        CHECK(merged.polys == whole->polys);
        CHECK(merged.explored == whole->explored);
        CHECK(merged.closed_found == whole->closed_found);
    }
    // shards beyond the number of first arcs stay consistent (empty shards)
    Census wide;
    for (const SearchConfig& part : shard(cfg, 4096)) {
        auto r = search(part);
        REQUIRE(r.ok());
        wide = merge_census(wide, *r);
    }
    CHECK(wide.polys == whole->polys);
}

TEST_CASE("census json is deterministic modulo seconds") {
    SearchConfig cfg;
    cfg.max_stick_len = 1;
    auto a = search(cfg);
    auto b = search(cfg);
    REQUIRE(a.ok());
    REQUIRE(b.ok());
    a->seconds = 0;
    b->seconds = 0;
    CHECK(census_json(*a, cfg) == census_json(*b, cfg));
}

TEST_CASE("relaxed patterns (a) and (b) yield only unknots") {
    for (auto pat : {std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}, {1, 4}},
                     std::vector<std::pair<int, int>>{{1, 2}, {2, 4}, {3, 4}, {1, 3}}}) {
        SearchConfig cfg;
        cfg.w_pattern = pat;
        cfg.max_stick_len = 2;
        auto res = search(cfg);
        REQUIRE(res.ok());
        CHECK(res->nontrivial_types().empty());
    }
}

TEST_CASE("search_for_type respects the budget") {
    auto none = search_for_type(KnotTag::K5_1, 11, 2, 1000);
    CHECK(!none.has_value());
}
