#pragma once

// The lattice transformation T (cubic -> sh), its inverse, the sh -> cubic
// unit-edge rewrite, and evaluators for the two lower-bound formulas.

#include <string>

#include "shknot/core.hpp"
#include "shknot/result.hpp"

namespace shknot {

// Word-level relabeling x->x, y->y, z->w; preserves stick count, stick order
// and lengths, and edge length. Pre: p a valid cubic polygon.
Result<Polygon> apply_T(const Polygon& cubic);

// w->z relabeling. Pre: stick_census(p).nz == 0 (else ZSticksPresent).
Result<Polygon> apply_T_inv(const Polygon& sh);

struct RewriteReport {
    Polygon result;           // valid cubic polygon
    int scalings = 0;         // planar x2 scalings applied before success
    // edge statistics of the polygon actually rewritten (after scalings)
    i64 input_edges = 0;
    i64 input_edges_x = 0;
    i64 input_edges_w = 0;
};

// Unit-edge rewrite of a properly leveled sh polygon into the cubic lattice:
// planar positions map by (u, v) -> (u, 2v), so each x-edge becomes x^2, each
// y-edge x y^2, each z-edge y^2 x^-1, and w-edges become cubic z-edges.
// Adjacent inverse edge pairs cancel cyclically and the result is re-merged
// into maximal sticks. On self-intersection the input is scaled by 2 in the
// plane and retried (at most twice).
Result<RewriteReport> sh_to_cubic_rewrite(const Polygon& sh);

// The planar rotation image (among the 6 rotations permuting +-x, +-y, +-z)
// maximizing the x edge total; ties pick the smallest rotation index.
Polygon rotate_for_x_majority(const Polygon& sh);

enum class BoundFormula { EdgeLower, StickLower };

struct BoundReport {
    BoundFormula formula;
    i64 input = 0;
    // EdgeLower: bound = num/den exactly.
    // StickLower: bound = sqrt(radicand) - 3 exactly (radicand = 4*input + 9).
    i64 num = 0, den = 1;
    i64 radicand = 0;
    i64 ceil_bound = 0;
    std::string exact_text;
    double approx = 0.0;
};

// e_sh[K] >= (3 e_L[K] + 30) / 8. Pre: e_L >= 1.
BoundReport edge_lower_bound(i64 e_L);
// s_sh[K] >= 2 sqrt(s_L[K] + 9/4) - 3 = sqrt(4 s_L + 9) - 3. Pre: s_L >= 1.
// The ceiling is computed by integer squaring, never through floating point.
BoundReport stick_lower_bound(i64 s_L);

}  // namespace shknot
