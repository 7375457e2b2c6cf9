#pragma once

// Exact representation of stick polygons in the cubic lattice and the simple
// hexagonal (sh) lattice, with validation, censuses, leveling predicates and
// symmetry canonicalization.
//
// Coordinates are always integer basis coefficients (a, b, c):
//   cubic: a*x + b*y + c*z with x=(1,0,0), y=(0,1,0), z=(0,0,1)
//   sh:    a*x + b*y + c*w with x=(1,0,0), y=(1/2,sqrt3/2,0), w=(0,0,1),
//          and the planar diagonal z = y - x.
// All sh planar geometry runs in derived integer coordinates
// (u, v) = (2a+b, b); every pairwise crossing of lattice lines in the three
// planar directions lands on integer (u, v), so no irrational arithmetic is
// ever needed.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shknot/result.hpp"

namespace shknot {

using i64 = long long;

enum class Lattice { Cubic, Sh };

// Cubic polygons use {X, Y, Z} with Z vertical; sh polygons use {X, Y, Z, W}
// with W vertical and Z the planar diagonal y - x.
enum class Dir : int { X = 0, Y = 1, Z = 2, W = 3 };

char dir_char(Dir d);
bool dir_legal(Lattice lat, Dir d);
bool dir_vertical(Lattice lat, Dir d);

struct Vec3 {
    i64 a = 0, b = 0, c = 0;

    friend Vec3 operator+(Vec3 p, Vec3 q) { return {p.a + q.a, p.b + q.b, p.c + q.c}; }
    friend Vec3 operator-(Vec3 p, Vec3 q) { return {p.a - q.a, p.b - q.b, p.c - q.c}; }
    friend Vec3 operator*(i64 k, Vec3 p) { return {k * p.a, k * p.b, k * p.c}; }
    friend bool operator==(Vec3 p, Vec3 q) = default;
    bool zero() const { return a == 0 && b == 0 && c == 0; }
};

// Unit step of a direction in basis coefficients.
Vec3 dir_step(Lattice lat, Dir d);

// Integer geometric embedding used by all exact intersection tests:
// cubic -> (a, b, c); sh -> (2a+b, b, c). Both are linear bijections of the
// true Euclidean embedding, so incidence questions are answered faithfully.
Vec3 geom_point(Lattice lat, Vec3 basis);
Vec3 geom_step(Lattice lat, Dir d);

struct Stick {
    Dir dir;
    i64 len;  // nonzero, sign = orientation

    friend bool operator==(Stick, Stick) = default;
};

struct Polygon {
    Lattice lattice = Lattice::Sh;
    std::vector<Stick> sticks;
    Vec3 base{};

    friend bool operator==(const Polygon&, const Polygon&) = default;
};

struct StickCounts {
    i64 nx = 0, ny = 0, nz = 0, nw = 0;
    i64 total() const { return nx + ny + nz + nw; }
    i64 of(Dir d) const;
};

struct Violation {
    int stick_i = -1;
    int stick_j = -1;
    Vec3 point{};  // geometric coordinates of (a point of) the offence
    std::string what;
};

struct ValidationReport {
    bool closed = false;
    bool maximal = false;
    bool embedded = false;
    std::optional<Violation> first_violation;
    bool ok() const { return closed && maximal && embedded; }
};

// ---- basic operations -------------------------------------------------

// n+1 points for n sticks; last equals first iff the polygon is closed.
std::vector<Vec3> vertices(const Polygon& p);
bool is_closed(const Polygon& p);

ValidationReport validate(const Polygon& p);

// Pre: p maximal (counts are ambiguous otherwise).
Result<StickCounts> stick_census(const Polygon& p);

// Total unit edges (sum of |len|); per-direction totals via edge_census.
i64 edge_length(const Polygon& p);
std::array<i64, 4> edge_census(const Polygon& p);  // indexed by Dir

// Distinct c-values carrying planar sticks, sorted ascending. Sh only.
std::vector<i64> w_levels(const Polygon& p);
// True iff every w-level's planar sticks form a single connected arc.
bool properly_leveled(const Polygon& p);

// Cyclic merge of adjacent same-direction sticks; zero-sum merges delete
// both sticks. Base is kept at the same geometric vertex.
Polygon normalized(Polygon p);

// Remap occupied w-levels to consecutive integers starting at 0 (empty gaps
// removed). Knot type and planar structure are unchanged. Sh only.
Polygon compact_levels(Polygon p);

// Minimal representative under cyclic rotation, reversal, translation to the
// origin and the lattice symmetry group (order 24 for sh, 48 for cubic).
// Pre: p closed.
Polygon canonicalize(const Polygon& p);

// ---- symmetries --------------------------------------------------------

// A lattice symmetry: acts on directions as dir -> (dir', sign) and on basis
// coordinates linearly.
struct Symmetry {
    std::array<Dir, 4> dir_map{};
    std::array<int, 4> sign_map{};
    // basis action: (a,b) by 2x2 matrix for sh planar part, c by csign;
    // cubic uses the full signed permutation encoded in the same fields.
    std::array<std::array<i64, 3>, 3> mat{};  // basis coords, row-major

    Vec3 apply(Vec3 v) const;
    Stick apply(Stick s) const;
    Polygon apply(const Polygon& p) const;
};

std::span<const Symmetry> symmetries(Lattice lat);
// The 6 planar rotations of the sh lattice (x->y->z->-x), identity first.
std::span<const Symmetry> sh_planar_rotations();

Polygon translated(Polygon p, Vec3 delta);
// Scale planar directions by k (sh: x,y,z lengths; cubic: x,y lengths).
Polygon scaled_planar(Polygon p, i64 k);
// Scale every stick length by k.
Polygon scaled_all(Polygon p, i64 k);

// ---- stick-word file format (.knotw) ------------------------------------
//
// UTF-8 text: optional header lines `lattice: cubic|sh` and `base: a b c`,
// then whitespace-separated `d^n` tokens with d in {x,y,z,w} and n a nonzero
// integer. `#` starts a comment running to end of line. Emission is
// bit-stable: lowercase directions, no redundant plus signs.

Result<Polygon> parse_word(std::string_view text, Lattice lat);
// Uses the `lattice:` header if present, otherwise `fallback`.
Result<Polygon> parse_knotw(std::string_view text,
                            std::optional<Lattice> fallback = std::nullopt);
std::string emit_knotw(const Polygon& p);
std::string word_string(const Polygon& p);  // tokens only, no headers

// ---- exact segment predicates (shared by validation and the moves) -----

enum class SegHit { None, Point, Overlap };

struct SegIntersection {
    SegHit kind = SegHit::None;
    Vec3 point{};       // valid for Point and Overlap (one witness point)
    bool point_exact = true;
};

// Closed-segment intersection of [p1,q1] and [p2,q2], exact over integers.
SegIntersection segments_intersect(Vec3 p1, Vec3 q1, Vec3 p2, Vec3 q2);

// Visit the x2-resolution lattice points covered by a stick starting at
// `start` (basis coords). Used for fast incremental self-avoidance.
void raster_points(Lattice lat, Vec3 start, Stick s,
                   const std::function<void(Vec3)>& fn);

}  // namespace shknot
