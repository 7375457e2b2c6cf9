#pragma once

// Knot-type-preserving rewriting moves: corner-to-z reduction, unit-corner
// bevel, the squeeze-and-reduce pipeline (cubic -> sh, one stick fewer),
// R-moves, and z-stick replacement through squares of replacement.
//
// All sh geometry here works in the T^-1 view: basis coefficients (a, b, c)
// with step vectors x=(1,0,0), y=(0,1,0), z=(-1,1,0), w=(0,0,1). That view is
// a linear bijection of the true sh embedding, so incidence tests agree.

#include <optional>
#include <vector>

#include "shknot/core.hpp"
#include "shknot/result.hpp"

namespace shknot {

enum class MoveTag { CornerToZ, UnitCornerBevel, SqueezeReduce, RMove, ZReplace };
const char* move_name(MoveTag t);

struct MoveOutcome {
    Polygon result;
    int sticks_delta = 0;
    i64 edges_delta = 0;
    MoveTag tag{};
};

// An xy corner: sticks (stick_index, stick_index+1) cyclically adjacent, one
// x-directed and one y-directed, with opposite displacement signs so the
// corner spans a z-stick trajectory. leg_length is the length replaced at
// the apex (the full common length for find_reducible_corner, 1 for bevels).
struct CornerSite {
    int stick_index = -1;
    bool x_first = false;  // true when the first stick of the pair is the x-leg
    i64 leg_length = 0;
};

// First equal-leg xy corner whose replacement triangle (apex triangle of side
// leg_length, hypotenuse along the would-be z-stick) meets no other part of
// the polygon at the corner's level: no same-level stick and no vertical
// stick crossing the level inside the closed triangle, except the legs
// themselves and their far endpoints.
std::optional<CornerSite> find_reducible_corner(const Polygon& sh);

// Replace length-c apex portions of the corner legs by z^{+-c}. Full legs
// consume both sticks (sticks_delta -1 before merges); longer legs keep their
// remainders. Errors: ObstructedTriangle.
Result<MoveOutcome> corner_to_z(const Polygon& sh, const CornerSite& site);

// Bevel a unit isosceles triangle at some xy corner: edge length drops by
// exactly 1. Errors: NoXYCorner (callers rotate the polygon first).
Result<MoveOutcome> unit_corner_bevel(const Polygon& sh);

// Thm 4.4 pipeline: pick an xy corner (trying all 24 cubic rotations,
// corners ordered by obstruction count, leg length, word index), equalize
// legs by stretching, squeeze the obstructed band, rescale, apply T and
// reduce the corner. Result: sh polygon with exactly one stick fewer.
Result<MoveOutcome> squeeze_and_reduce(const Polygon& cubic);

// R-move on adjacent perpendicular sticks (s_index, t_index = s_index+1
// cyclically): replace them by the opposite sides of their spanned rectangle.
// Errors: NotAdjacent, NotPerpendicular, RectangleObstructed.
Result<MoveOutcome> r_move(const Polygon& p, int s_index, int t_index);

struct SquareObstruction {
    int stick_index = -1;
    Vec3 point{};      // T^-1-view coordinates of the contact
    bool is_w = false;
    bool upper = false;      // strictly above the diagonal (a+b greater side)
    bool on_border = false;  // on the square's boundary edges
};

struct ReplacementSquare {
    int z_index = -1;
    Vec3 corner_lo{}, corner_hi{};  // (min a, min b) and (max a, max b), level c
    std::vector<SquareObstruction> obstructions;  // w-sticks and same-level x/y
    std::vector<int> other_z;                     // other z-sticks meeting the square
};

// The axis-aligned square having the chosen z-stick as diagonal in the T^-1
// view, with every obstruction inside it. Errors: NotAZStick.
Result<ReplacementSquare> find_replacement_square(const Polygon& sh, int z_index);

// Replace the z-stick by an x/y staircase route through its square, scaling
// the whole knot by 2 (at most twice) when obstructions force it, and moving
// border w-sticks onto the z endpoints by R-moves when that unblocks a route.
// Net stick gain is at most +3 (+1 on empty squares, +2 with two
// obstructions). Errors: OtherZInSquare, PCaseUnresolvable.
Result<MoveOutcome> z_replace(const Polygon& sh, int z_index);

// Internal squeeze step of Thm 4.4, exposed for direct testing: remap every
// vertex with 0 < b < b_y by b' = b_y - p_x + (p_x/b_y) b, then scale all
// planar coordinates by b_y to restore integrality.
Polygon squeeze_y_band(const Polygon& cubic, i64 b_y, i64 p_x);

}  // namespace shknot
