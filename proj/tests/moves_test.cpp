#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "shknot/core.hpp"
#include "shknot/knot_id.hpp"
#include "shknot/moves.hpp"
#include "shknot/transform.hpp"
#include "support/gen.hpp"

using namespace shknot;
using test::poly;

TEST_CASE("find_reducible_corner on the unit square") {
    Polygon sq = poly("x^1 y^1 x^-1 y^-1", Lattice::Sh);
    auto site = find_reducible_corner(sq);
    REQUIRE(site.has_value());
    CHECK(site->leg_length == 1);
    // the reducible pair is (y^1, x^-1): opposite signs spanning a z-stick
    CHECK(site->stick_index == 1);
}

TEST_CASE("corner_to_z replaces the corner and keeps closure") {
    Polygon sq = poly("x^1 y^1 x^-1 y^-1", Lattice::Sh);
    auto site = find_reducible_corner(sq);
    REQUIRE(site.has_value());
    auto out = corner_to_z(sq, *site);
    REQUIRE(out.ok());
    CHECK(out->result.sticks.size() == 3);
    CHECK(out->sticks_delta == -1);
    CHECK(out->edges_delta == -1);
    CHECK(validate(out->result).ok());

    Polygon big = poly("x^3 y^3 x^-3 y^-3", Lattice::Sh);
    auto site2 = find_reducible_corner(big);
    REQUIRE(site2.has_value());
    CHECK(site2->leg_length == 3);
    auto out2 = corner_to_z(big, *site2);
    REQUIRE(out2.ok());
    CHECK(out2->edges_delta == -3);
    CHECK(out2->sticks_delta == -1);
}

TEST_CASE("obstructed corner triangles are rejected") {
    // w-stick piercing level 0 inside the candidate triangle of the corner
    // (y^2, x^-2): pick a big square with a tower in the triangle interior
    Polygon p = poly("x^3 y^3 x^-1 w^1 x^-1 w^-1 x^-1 y^-3", Lattice::Sh);
    REQUIRE(validate(p).ok());
    // corner between y^3 (index 1) and x^-1 (index 2) has legs 3 and 1; the
    // equal-leg finder skips it, so hand-build a unit site there and one
    // deeper site; unit apex triangles at index 2..6 may or may not clear.
    // Just assert: every site the finder returns replays cleanly.
    auto site = find_reducible_corner(p);
    if (site) {
        auto out = corner_to_z(p, *site);
        REQUIRE(out.ok());
        CHECK(validate(out->result).ok());
    }
}

TEST_CASE("unit corner bevel reduces edge length by one") {
    Polygon sq = poly("x^1 y^1 x^-1 y^-1", Lattice::Sh);
    auto out = unit_corner_bevel(sq);
    REQUIRE(out.ok());
    CHECK(out->edges_delta == -1);
    CHECK(out->result.sticks.size() == 3);
    CHECK(edge_length(out->result) == 3);

    Polygon big = poly("x^2 y^2 x^-2 y^-2", Lattice::Sh);
    auto out2 = unit_corner_bevel(big);
    REQUIRE(out2.ok());
    CHECK(out2->edges_delta == -1);
    CHECK(edge_length(out2->result) == 7);
    CHECK(out2->result.sticks.size() == 5);
    CHECK(out2->sticks_delta == 1);
}

TEST_CASE("bevel reports NoXYCorner on the regular hexagon") {
    // every corner of the hexagon is a 60-degree turn; no sign pattern spans
    // a z trajectory, in any rotation
    Polygon hex = poly("x^1 y^1 z^1 x^-1 y^-1 z^-1", Lattice::Sh);
    auto out = unit_corner_bevel(hex);
    REQUIRE(!out.ok());
    CHECK(out.code() == ErrCode::NoXYCorner);
}

TEST_CASE("r_move exchanges rectangle sides and is an involution") {
    // merge-free instance: neighbors of the pair are y-sticks
    Polygon p = poly("y^1 x^1 w^1 y^1 x^-2 w^-1 y^-2 x^1", Lattice::Sh);
    REQUIRE(validate(p).ok());
    auto out = r_move(p, 1, 2);
    REQUIRE(out.ok());
    CHECK(validate(out->result).ok());
    CHECK(out->result.sticks.size() == 8);
    CHECK(out->sticks_delta == 0);
    // the output word starts at the moved pair; redo the move there
    auto back = r_move(out->result, 0, 1);
    REQUIRE(back.ok());
    CHECK(canonicalize(back->result) == canonicalize(p));

    // in a bare rectangle the opposite sides are other polygon sticks, so the
    // move is obstructed by definition
    Polygon rect = poly("x^2 y^1 x^-2 y^-1", Lattice::Sh);
    CHECK(r_move(rect, 0, 1).code() == ErrCode::RectangleObstructed);

    // merging case: the moved sides join collinear neighbors
    Polygon ell = poly("x^2 y^1 x^-1 y^1 x^-1 y^-2", Lattice::Sh);
    REQUIRE(validate(ell).ok());
    auto merged = r_move(ell, 2, 3);
    REQUIRE(merged.ok());
    CHECK(merged->result.sticks.size() == 4);
    CHECK(merged->sticks_delta == -2);

    // obstructed: another strand inside the rectangle
    Polygon blocked = poly("x^2 y^2 x^-1 y^-1 x^-1 y^-1", Lattice::Sh);
    REQUIRE(validate(blocked).ok());
    CHECK(r_move(blocked, 0, 1).code() == ErrCode::RectangleObstructed);
}

TEST_CASE("r_move rejects non-adjacent and non-perpendicular pairs") {
    Polygon rect = poly("x^2 y^1 x^-2 y^-1", Lattice::Sh);
    CHECK(r_move(rect, 0, 2).code() == ErrCode::NotAdjacent);
    Polygon zz = poly("x^1 z^1 x^-1 z^-1", Lattice::Sh);
    REQUIRE(validate(zz).ok());
    CHECK(r_move(zz, 0, 1).code() == ErrCode::NotPerpendicular);
    // w is perpendicular to everything, including z
    Polygon zw = poly("z^1 w^1 y^1 z^-1 w^-1 y^-1", Lattice::Sh);
    REQUIRE(validate(zw).ok());
    CHECK(r_move(zw, 0, 1).ok());
}

TEST_CASE("replacement square of an isolated z-stick is empty") {
    Polygon hex = poly("x^1 y^1 z^1 x^-1 y^-1 z^-1", Lattice::Sh);
    auto sq = find_replacement_square(hex, 2);
    REQUIRE(sq.ok());
    CHECK(sq->obstructions.empty());
    CHECK(sq->other_z.empty());
    CHECK(find_replacement_square(hex, 0).code() == ErrCode::NotAZStick);
}

TEST_CASE("z_replace through an empty square adds at most one stick") {
    Polygon hex = poly("x^1 y^1 z^1 x^-1 y^-1 z^-1", Lattice::Sh);
    auto out = z_replace(hex, 2);
    REQUIRE(out.ok());
    CHECK(out->sticks_delta <= 1);
    CHECK(validate(out->result).ok());
    auto counts = stick_census(out->result);
    REQUIRE(counts.ok());
    CHECK(counts->nz == 1);  // one z-stick remains (the other one)
    auto k = classify(out->result);
    REQUIRE(k.ok());
    CHECK(k->tag == KnotTag::Unknot);
}

TEST_CASE("z_replace eliminates all z sticks from random polygons") {
    std::mt19937 rng(4242);
    int replaced = 0, bounded = 0;
    for (int iter = 0; iter < 150 && replaced < 50; ++iter) {
        Polygon p = test::random_polygon(Lattice::Sh, 9, 2, rng);
        auto counts = stick_census(p);
        REQUIRE(counts.ok());
        if (counts->nz == 0) continue;
        int zi = -1;
        for (int i = 0; i < (int)p.sticks.size(); ++i)
            if (p.sticks[i].dir == Dir::Z) zi = i;
        auto before = classify(p);
        REQUIRE(before.ok());
        auto sq = find_replacement_square(p, zi);
        REQUIRE(sq.ok());
        if (!sq->other_z.empty()) {
            CHECK(z_replace(p, zi).code() == ErrCode::OtherZInSquare);
            continue;
        }
        auto out = z_replace(p, zi);
        if (!out.ok()) continue;  // p-case style failures surface as errors
        replaced++;
        CHECK(out->sticks_delta <= 3);
        int wcount = 0;
        for (auto& ob : sq->obstructions)
            if (ob.is_w) wcount++;
        if (sq->obstructions.empty()) CHECK(out->sticks_delta <= 1);
        if (wcount <= 2 && sq->obstructions.size() <= 2) CHECK(out->sticks_delta <= 2);
        bounded++;
        auto after = classify(out->result);
        REQUIRE(after.ok());
        CHECK(before->alex == after->alex);
        auto c2 = stick_census(out->result);
        REQUIRE(c2.ok());
        CHECK(c2->nz == counts->nz - 1);
    }
    CHECK(replaced >= 30);
}

TEST_CASE("squeeze_y_band pushes obstructions past the hypotenuse") {
    // corner legs of length 5 from the origin; interior vertices at y = 1
    Polygon p = poly("x^5 y^5 z^1 x^-2 y^-4 z^-1 x^-3 y^-1", Lattice::Cubic);
    Polygon sq = squeeze_y_band(p, 5, 2);
    std::vector<Vec3> before = vertices(p);
    std::vector<Vec3> after = vertices(sq);
    REQUIRE(before.size() == after.size());
    for (size_t i = 0; i < before.size(); ++i) {
        CHECK(after[i].a == 5 * before[i].a);
        i64 b = before[i].b;
        if (b > 0 && b < 5)
            CHECK(after[i].b == 25 - 10 + 2 * b);
        else
            CHECK(after[i].b == 5 * b);
        // the displacement claim: interior points land strictly above the
        // scaled hypotenuse offset b_y - p_x
        if (b > 0 && b < 5) CHECK(after[i].b > (5 - 2) * 5);
    }
}

TEST_CASE("squeeze_and_reduce on the cubic unit square") {
    Polygon sq = poly("x^1 y^1 x^-1 y^-1", Lattice::Cubic);
    auto out = squeeze_and_reduce(sq);
    REQUIRE(out.ok());
    CHECK(out->result.lattice == Lattice::Sh);
    CHECK(out->result.sticks.size() == 3);
    CHECK(out->sticks_delta == -1);
    CHECK(validate(out->result).ok());
}

TEST_CASE("squeeze_and_reduce drops exactly one stick on random cubic polygons") {
    std::mt19937 rng(555);
    for (int iter = 0; iter < 40; ++iter) {
        Polygon p = test::random_polygon(Lattice::Cubic, 10, 3, rng);
        auto before = classify(p);
        REQUIRE(before.ok());
        auto out = squeeze_and_reduce(p);
        REQUIRE(out.ok());
        CHECK(out->result.sticks.size() == p.sticks.size() - 1);
        CHECK(validate(out->result).ok());
        auto after = classify(out->result);
        REQUIRE(after.ok());
        CHECK(before->alex == after->alex);
    }
}
