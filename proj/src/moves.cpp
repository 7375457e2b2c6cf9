#include "shknot/moves.hpp"

#include "shknot/transform.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace shknot {

namespace {
using i128 = __int128;

i128 cross2(i64 ax, i64 ay, i64 bx, i64 by) { return (i128)ax * by - (i128)ay * bx; }

// Planar point strictly inside / on boundary of triangle ABC (2D, a/b coords).
struct TriClass {
    bool inside = false;    // strictly
    bool boundary = false;  // on an edge or vertex
};

TriClass classify_point_triangle(Vec3 P, Vec3 A, Vec3 B, Vec3 C) {
    i128 d1 = cross2(B.a - A.a, B.b - A.b, P.a - A.a, P.b - A.b);
    i128 d2 = cross2(C.a - B.a, C.b - B.b, P.a - B.a, P.b - B.b);
    i128 d3 = cross2(A.a - C.a, A.b - C.b, P.a - C.a, P.b - C.b);
    bool has_neg = d1 < 0 || d2 < 0 || d3 < 0;
    bool has_pos = d1 > 0 || d2 > 0 || d3 > 0;
    TriClass out;
    if (has_neg && has_pos) return out;  // outside
    if (d1 != 0 && d2 != 0 && d3 != 0) {
        out.inside = true;
        return out;
    }
    // on the supporting boundary; confirm within the closed triangle
    out.boundary = true;
    return out;
}

Vec3 planar(Vec3 v) { return {v.a, v.b, 0}; }

// Contact of a planar segment with the closed triangle ABC, all at one level.
// Returns true when the segment meets the triangle anywhere outside `allowed`.
bool segment_hits_triangle(Vec3 P, Vec3 Q, Vec3 A, Vec3 B, Vec3 C,
                           const std::vector<Vec3>& allowed) {
    auto allowed_pt = [&](Vec3 x) {
        for (const Vec3& a : allowed)
            if (x.a == a.a && x.b == a.b) return true;
        return false;
    };
    Vec3 p = planar(P), q = planar(Q), a = planar(A), b = planar(B), c = planar(C);
    // endpoint strictly inside
    for (Vec3 e : {p, q}) {
        TriClass tc = classify_point_triangle(e, a, b, c);
        if (tc.inside) return true;
        if (tc.boundary && !allowed_pt(e)) return true;
    }
    // boundary crossings
    const Vec3 edges[3][2] = {{a, b}, {b, c}, {c, a}};
    for (auto& ed : edges) {
        SegIntersection hit = segments_intersect(p, q, ed[0], ed[1]);
        if (hit.kind == SegHit::Overlap) return true;
        if (hit.kind == SegHit::Point) {
            if (!hit.point_exact) return true;  // irrational touch cannot be allowed
            if (!allowed_pt(hit.point)) return true;
        }
    }
    return false;
}

struct TriangleScan {
    bool obstructed = false;
    bool clean = true;                 // every contact reduced to lattice points
    std::vector<Vec3> points;          // in-triangle obstruction points (a,b,c0)
};

// Obstructions of the apex triangle with vertices A, B(apex), C at level c0:
// vertical sticks crossing the level inside the closed triangle and
// same-level planar sticks meeting it, excluding legs `li`, `lj` and contacts
// at the far endpoints A and C.
TriangleScan scan_triangle(const Polygon& p, const std::vector<Vec3>& vs, int li,
                           int lj, Vec3 A, Vec3 B, Vec3 C) {
    TriangleScan out;
    const i64 c0 = B.c;
    const int n = (int)p.sticks.size();
    std::vector<Vec3> allowed = {A, C};
    for (int k = 0; k < n; ++k) {
        if (k == li || k == lj) continue;
        Vec3 s0 = vs[k], s1 = vs[k + 1];
        if (dir_vertical(p.lattice, p.sticks[k].dir)) {
            if (std::min(s0.c, s1.c) > c0 || std::max(s0.c, s1.c) < c0) continue;
            TriClass tc = classify_point_triangle(planar(s0), planar(A), planar(B),
                                                  planar(C));
            if (!tc.inside && !tc.boundary) continue;
            bool at_far = (s0.a == A.a && s0.b == A.b) || (s0.a == C.a && s0.b == C.b);
            if (at_far) continue;
            out.obstructed = true;
            out.points.push_back({s0.a, s0.b, c0});
        } else {
            if (s0.c != c0) continue;
            if (segment_hits_triangle(s0, s1, A, B, C, allowed)) {
                out.obstructed = true;
                // same-level sticks meet the triangle at an endpoint (or touch
                // the hypotenuse at an endpoint); record in-triangle endpoints
                bool found = false;
                for (Vec3 e : {s0, s1}) {
                    TriClass tc = classify_point_triangle(planar(e), planar(A),
                                                          planar(B), planar(C));
                    bool at_far =
                        (e.a == A.a && e.b == A.b) || (e.a == C.a && e.b == C.b);
                    if ((tc.inside || tc.boundary) && !at_far) {
                        out.points.push_back({e.a, e.b, c0});
                        found = true;
                    }
                }
                if (!found) out.clean = false;
            }
        }
    }
    return out;
}

// rotate the word so stick `i` becomes index 0 (base moves to vertex i)
Polygon rotated_word(const Polygon& p, int i) {
    Polygon out = p;
    std::vector<Vec3> vs = vertices(p);
    out.base = vs[i];
    out.sticks.clear();
    const int n = (int)p.sticks.size();
    for (int k = 0; k < n; ++k) out.sticks.push_back(p.sticks[(i + k) % n]);
    return out;
}

struct CornerGeometry {
    bool valid = false;
    int xi = -1, yi = -1;  // indices of the x- and y-legs
    i64 xlen = 0, ylen = 0;  // absolute lengths
    int xsign = 0, ysign = 0;
    Vec3 A, B, C;  // far end of leg i, apex, far end of leg j
};

CornerGeometry corner_geometry(const Polygon& p, const std::vector<Vec3>& vs, int i) {
    CornerGeometry g;
    const int n = (int)p.sticks.size();
    int j = (i + 1) % n;
    Dir di = p.sticks[i].dir, dj = p.sticks[j].dir;
    bool xy = (di == Dir::X && dj == Dir::Y) || (di == Dir::Y && dj == Dir::X);
    if (!xy) return g;
    int si = p.sticks[i].len > 0 ? 1 : -1;
    int sj = p.sticks[j].len > 0 ? 1 : -1;
    if (si == sj) return g;  // aligned corners do not span a z trajectory
    g.valid = true;
    g.A = vs[i];
    g.B = vs[i + 1];
    // vertices() has n+1 entries; index i+2 wraps past the end only at i=n-1
    g.C = (i + 2 <= n) ? vs[i + 2] : vs[1];
    if (di == Dir::X) {
        g.xi = i;
        g.yi = j;
        g.xlen = std::abs(p.sticks[i].len);
        g.ylen = std::abs(p.sticks[j].len);
        g.xsign = si;
        g.ysign = sj;
    } else {
        g.xi = j;
        g.yi = i;
        g.xlen = std::abs(p.sticks[j].len);
        g.ylen = std::abs(p.sticks[i].len);
        g.xsign = sj;
        g.ysign = si;
    }
    return g;
}

}  // namespace

const char* move_name(MoveTag t) {
    switch (t) {
        case MoveTag::CornerToZ: return "corner_to_z";
        case MoveTag::UnitCornerBevel: return "unit_corner_bevel";
        case MoveTag::SqueezeReduce: return "squeeze_and_reduce";
        case MoveTag::RMove: return "r_move";
        case MoveTag::ZReplace: return "z_replace";
    }
    return "?";
}

// ---- find_reducible_corner / corner_to_z ---------------------------------

std::optional<CornerSite> find_reducible_corner(const Polygon& sh) {
    if (sh.lattice != Lattice::Sh) return std::nullopt;
    const int n = (int)sh.sticks.size();
    std::vector<Vec3> vs = vertices(sh);
    for (int i = 0; i < n; ++i) {
        CornerGeometry g = corner_geometry(sh, vs, i);
        if (!g.valid) continue;
        if (g.xlen != g.ylen) continue;
        TriangleScan scan = scan_triangle(sh, vs, i, (i + 1) % n, g.A, g.B, g.C);
        if (scan.obstructed) continue;
        return CornerSite{i, sh.sticks[i].dir == Dir::X, g.xlen};
    }
    return std::nullopt;
}

Result<MoveOutcome> corner_to_z(const Polygon& sh, const CornerSite& site) {
    if (sh.lattice != Lattice::Sh)
        return Error{ErrCode::InvalidPolygon, "corner_to_z expects an sh polygon"};
    const int n = (int)sh.sticks.size();
    if (n < 3 || site.stick_index < 0 || site.stick_index >= n)
        return Error{ErrCode::InvalidPolygon, "bad corner site"};
    std::vector<Vec3> vs = vertices(sh);
    const int i = site.stick_index;
    CornerGeometry g = corner_geometry(sh, vs, i);
    const i64 c = site.leg_length;
    if (!g.valid || c < 1 || g.xlen < c || g.ylen < c)
        return Error{ErrCode::InvalidPolygon, "site does not name a reducible corner"};

    // apex triangle of side c: the leg portions adjacent to the apex
    Vec3 dA = g.A - g.B;
    Vec3 uA{dA.a == 0 ? 0 : (dA.a > 0 ? 1 : -1), dA.b == 0 ? 0 : (dA.b > 0 ? 1 : -1), 0};
    Vec3 dC = g.C - g.B;
    Vec3 uC{dC.a == 0 ? 0 : (dC.a > 0 ? 1 : -1), dC.b == 0 ? 0 : (dC.b > 0 ? 1 : -1), 0};
    Vec3 Aprime = g.B + c * uA;
    Vec3 Cprime = g.B + c * uC;

    TriangleScan scan = scan_triangle(sh, vs, i, (i + 1) % n, Aprime, g.B, Cprime);
    if (scan.obstructed)
        return Error{ErrCode::ObstructedTriangle, "replacement triangle is obstructed"};

    // splice: rotate so the pair sits at the word start
    Polygon rot = rotated_word(sh, i);
    Stick leg1 = rot.sticks[0], leg2 = rot.sticks[1];
    int xsign = g.xsign;
    i64 zlen = -c * xsign;

    std::vector<Stick> frag;
    if (std::abs(leg1.len) > c)
        frag.push_back({leg1.dir, leg1.len > 0 ? leg1.len - c : leg1.len + c});
    frag.push_back({Dir::Z, zlen});
    if (std::abs(leg2.len) > c)
        frag.push_back({leg2.dir, leg2.len > 0 ? leg2.len - c : leg2.len + c});

    Polygon out = rot;
    out.sticks.erase(out.sticks.begin(), out.sticks.begin() + 2);
    out.sticks.insert(out.sticks.begin(), frag.begin(), frag.end());
    out = normalized(out);

    if (!validate(out).ok())
        return Error{ErrCode::ObstructedTriangle, "corner replacement self-intersects"};

    MoveOutcome mo;
    mo.result = out;
    mo.tag = MoveTag::CornerToZ;
    mo.sticks_delta = (int)out.sticks.size() - n;
    mo.edges_delta = edge_length(out) - edge_length(sh);
    return mo;
}

Result<MoveOutcome> unit_corner_bevel(const Polygon& sh) {
    if (sh.lattice != Lattice::Sh)
        return Error{ErrCode::InvalidPolygon, "bevel expects an sh polygon"};
    const int n = (int)sh.sticks.size();
    std::vector<Vec3> vs = vertices(sh);
    bool any_corner = false;
    for (int i = 0; i < n; ++i) {
        CornerGeometry g = corner_geometry(sh, vs, i);
        if (!g.valid) continue;
        any_corner = true;
        Result<MoveOutcome> out =
            corner_to_z(sh, CornerSite{i, sh.sticks[i].dir == Dir::X, 1});
        if (out) {
            out->tag = MoveTag::UnitCornerBevel;
            return out;
        }
    }
    if (!any_corner)
        return Error{ErrCode::NoXYCorner,
                     "no xy corner with opposing legs; rotate the polygon first"};
    return Error{ErrCode::ObstructedTriangle, "every unit xy corner is obstructed"};
}

// ---- R-move ----------------------------------------------------------------

namespace {

// T^-1-view direction vector of a stick (basis coords; sh z = (-1,1,0))
Vec3 view_step(const Polygon& p, Dir d) { return dir_step(p.lattice, d); }

bool perpendicular(const Polygon& p, Dir d1, Dir d2) {
    Vec3 u = view_step(p, d1), v = view_step(p, d2);
    return u.a * v.a + u.b * v.b + u.c * v.c == 0;
}

}  // namespace

Result<MoveOutcome> r_move(const Polygon& p, int s_index, int t_index) {
    const int n = (int)p.sticks.size();
    if (n < 3) return Error{ErrCode::InvalidPolygon, "polygon too small"};
    if (t_index != (s_index + 1) % n)
        return Error{ErrCode::NotAdjacent, "sticks are not cyclically adjacent"};
    Dir ds = p.sticks[s_index].dir, dt = p.sticks[t_index].dir;
    if (ds == dt || !perpendicular(p, ds, dt))
        return Error{ErrCode::NotPerpendicular, "sticks are not perpendicular"};

    std::vector<Vec3> vs = vertices(p);
    Vec3 A = vs[s_index];
    Vec3 B = vs[s_index + 1];
    Vec3 C = vs[(s_index + 2 <= n) ? s_index + 2 : 1];
    Vec3 u = A - B, v = C - B;

    // rectangle obstruction: every other stick may touch only at A or C
    Vec3 nrm{u.b * v.c - u.c * v.b, u.c * v.a - u.a * v.c, u.a * v.b - u.b * v.a};
    i64 uu = u.a * u.a + u.b * u.b + u.c * u.c;
    i64 vv = v.a * v.a + v.b * v.b + v.c * v.c;
    auto dotv = [](Vec3 x, Vec3 y) {
        return (i128)x.a * y.a + (i128)x.b * y.b + (i128)x.c * y.c;
    };
    for (int k = 0; k < n; ++k) {
        if (k == s_index || k == t_index) continue;
        Vec3 P = vs[k], Q = vs[k + 1];
        i128 dP = dotv(P - B, nrm), dQ = dotv(Q - B, nrm);
        if ((dP > 0 && dQ > 0) || (dP < 0 && dQ < 0)) continue;
        if (dP != 0 || dQ != 0) {
            // transversal plane crossing at rational tau = dP / (dP - dQ)
            i128 num = dP, den = dP - dQ;
            if (den < 0) {
                num = -num;
                den = -den;
            }
            if (num < 0 || num > den) continue;  // crossing outside the segment
            // alpha/beta at the crossing, scaled by den
            Vec3 d = Q - P;
            i128 alpha = dotv(P - B, u) * den + dotv(d, u) * num;
            i128 beta = dotv(P - B, v) * den + dotv(d, v) * num;
            if (alpha < 0 || alpha > (i128)uu * den || beta < 0 || beta > (i128)vv * den)
                continue;
            // inside the closed rectangle; allowed only at A or C exactly
            bool atA = alpha == (i128)uu * den && beta == 0;
            bool atC = alpha == 0 && beta == (i128)vv * den;
            if (!(atA || atC))
                return Error{ErrCode::RectangleObstructed, "rectangle meets the polygon"};
            continue;
        }
        // in-plane segment: clip tau by alpha,beta in [0,1]
        i128 a0 = dotv(P - B, u), a1 = dotv(Q - B, u);
        i128 b0 = dotv(P - B, v), b1 = dotv(Q - B, v);
        // tau interval [0,1] scaled by L = 1 (rational endpoints); use exact
        // interval intersection with denominators da = a1-a0, db = b1-b0
        // Clip: 0 <= a0 + tau*(a1-a0) <= uu ; same for b.
        // Track tau interval as fractions lo = Lnum/Lden, hi = Hnum/Hden.
        struct Frac {
            i128 num, den;  // den > 0
        };
        Frac lo{0, 1}, hi{1, 1};
        auto tighten = [&](i128 c0, i128 c1, i128 limit) -> bool {
            // constrain 0 <= c0 + tau*(c1-c0) <= limit
            i128 d = c1 - c0;
            if (d == 0) return c0 >= 0 && c0 <= limit;
            // tau >= (0 - c0)/d or <= ..., depending on sign
            Frac t0{-c0, d}, t1{limit - c0, d};
            if (d < 0) {
                t0 = {c0, -d};
                t1 = {c0 - limit, -d};
                std::swap(t0, t1);
            }
            // now tau in [t0, t1]
            if (t0.num * lo.den > lo.num * t0.den) lo = t0;
            if (t1.num * hi.den < hi.num * t1.den) hi = t1;
            return true;
        };
        if (!tighten(a0, a1, uu)) continue;
        if (!tighten(b0, b1, vv)) continue;
        if (lo.num * hi.den > hi.num * lo.den) continue;  // empty
        bool single = lo.num * hi.den == hi.num * lo.den;
        if (!single)
            return Error{ErrCode::RectangleObstructed, "stick runs through the rectangle"};
        // single contact point: alpha,beta at tau = lo
        i128 alpha = a0 * lo.den + (a1 - a0) * lo.num;
        i128 beta = b0 * lo.den + (b1 - b0) * lo.num;
        bool atA = alpha == (i128)uu * lo.den && beta == 0;
        bool atC = alpha == 0 && beta == (i128)vv * lo.den;
        if (!(atA || atC))
            return Error{ErrCode::RectangleObstructed, "rectangle meets the polygon"};
    }

    Polygon rot = rotated_word(p, s_index);
    Stick s = rot.sticks[0], t = rot.sticks[1];
    rot.sticks[0] = t;
    rot.sticks[1] = s;
    Polygon out = normalized(rot);
    if (!validate(out).ok())
        return Error{ErrCode::RectangleObstructed, "r-move result self-intersects"};

    MoveOutcome mo;
    mo.result = out;
    mo.tag = MoveTag::RMove;
    mo.sticks_delta = (int)out.sticks.size() - n;
    mo.edges_delta = edge_length(out) - edge_length(p);
    return mo;
}

// ---- squares of replacement ------------------------------------------------

Result<ReplacementSquare> find_replacement_square(const Polygon& sh, int z_index) {
    if (sh.lattice != Lattice::Sh)
        return Error{ErrCode::InvalidPolygon, "expects an sh polygon"};
    const int n = (int)sh.sticks.size();
    if (z_index < 0 || z_index >= n || sh.sticks[z_index].dir != Dir::Z)
        return Error{ErrCode::NotAZStick, "stick is not a z-stick"};

    std::vector<Vec3> vs = vertices(sh);
    Vec3 P = vs[z_index], Q = vs[z_index + 1];
    const i64 c0 = P.c;
    ReplacementSquare sq;
    sq.z_index = z_index;
    sq.corner_lo = {std::min(P.a, Q.a), std::min(P.b, Q.b), c0};
    sq.corner_hi = {std::max(P.a, Q.a), std::max(P.b, Q.b), c0};
    const i64 diag = P.a + P.b;

    auto in_square = [&](i64 a, i64 b) {
        return a >= sq.corner_lo.a && a <= sq.corner_hi.a && b >= sq.corner_lo.b &&
               b <= sq.corner_hi.b;
    };
    auto is_endpoint = [&](i64 a, i64 b) {
        return (a == P.a && b == P.b) || (a == Q.a && b == Q.b);
    };
    auto on_border = [&](i64 a, i64 b) {
        return a == sq.corner_lo.a || a == sq.corner_hi.a || b == sq.corner_lo.b ||
               b == sq.corner_hi.b;
    };

    for (int k = 0; k < n; ++k) {
        if (k == z_index) continue;
        Vec3 s0 = vs[k], s1 = vs[k + 1];
        if (sh.sticks[k].dir == Dir::W) {
            if (std::min(s0.c, s1.c) > c0 || std::max(s0.c, s1.c) < c0) continue;
            if (!in_square(s0.a, s0.b) || is_endpoint(s0.a, s0.b)) continue;
            SquareObstruction ob;
            ob.stick_index = k;
            ob.point = {s0.a, s0.b, c0};
            ob.is_w = true;
            ob.upper = s0.a + s0.b > diag;
            ob.on_border = on_border(s0.a, s0.b);
            sq.obstructions.push_back(ob);
        } else if (s0.c == c0) {
            // same-level planar stick: clip against the closed square
            i64 alo = std::min(s0.a, s1.a), ahi = std::max(s0.a, s1.a);
            i64 blo = std::min(s0.b, s1.b), bhi = std::max(s0.b, s1.b);
            // quick reject via bounding boxes
            if (ahi < sq.corner_lo.a || alo > sq.corner_hi.a || bhi < sq.corner_lo.b ||
                blo > sq.corner_hi.b)
                continue;
            // exact: sample both endpoints plus square-edge crossings
            bool contact = false;
            Vec3 witness{};
            for (Vec3 e : {s0, s1}) {
                if (in_square(e.a, e.b) && !is_endpoint(e.a, e.b)) {
                    contact = true;
                    witness = {e.a, e.b, c0};
                    break;
                }
            }
            if (!contact) {
                // crossing through: intersect with the 4 square edges
                Vec3 c1{sq.corner_lo.a, sq.corner_lo.b, 0}, c2{sq.corner_hi.a, sq.corner_lo.b, 0},
                    c3{sq.corner_hi.a, sq.corner_hi.b, 0}, c4{sq.corner_lo.a, sq.corner_hi.b, 0};
                const Vec3 edges[4][2] = {{c1, c2}, {c2, c3}, {c3, c4}, {c4, c1}};
                for (auto& ed : edges) {
                    SegIntersection hit =
                        segments_intersect(planar(s0), planar(s1), ed[0], ed[1]);
                    if (hit.kind == SegHit::None) continue;
                    if (hit.kind == SegHit::Point && hit.point_exact &&
                        is_endpoint(hit.point.a, hit.point.b))
                        continue;
                    contact = true;
                    witness = {hit.point.a, hit.point.b, c0};
                    break;
                }
            }
            if (!contact) continue;
            if (sh.sticks[k].dir == Dir::Z) {
                sq.other_z.push_back(k);
            } else {
                SquareObstruction ob;
                ob.stick_index = k;
                ob.point = witness;
                ob.is_w = false;
                ob.upper = witness.a + witness.b > diag;
                ob.on_border = on_border(witness.a, witness.b);
                sq.obstructions.push_back(ob);
            }
        }
    }
    return sq;
}

// ---- z_replace --------------------------------------------------------------

namespace {

// point strictly inside the closed even-odd region bounded by `loop`
// (planar integer polyline, closed); point must not lie on the boundary.
bool point_on_polyline(Vec3 pt, const std::vector<Vec3>& loop) {
    for (size_t i = 0; i + 1 < loop.size(); ++i) {
        SegIntersection hit = segments_intersect(planar(loop[i]), planar(loop[i + 1]),
                                                 planar(pt), planar(pt));
        if (hit.kind != SegHit::None) return true;
    }
    return false;
}

bool point_inside_evenodd(Vec3 pt, const std::vector<Vec3>& loop) {
    int crossings = 0;
    for (size_t i = 0; i + 1 < loop.size(); ++i) {
        Vec3 e1 = loop[i], e2 = loop[i + 1];
        if ((e1.b > pt.b) == (e2.b > pt.b)) continue;
        // x coordinate of the edge at height pt.b (exact rational compare)
        // x = e1.a + (pt.b - e1.b) * (e2.a - e1.a) / (e2.b - e1.b)
        i128 num = (i128)e1.a * (e2.b - e1.b) + (i128)(pt.b - e1.b) * (e2.a - e1.a);
        i128 den = e2.b - e1.b;
        if (den < 0) {
            num = -num;
            den = -den;
        }
        if (num > (i128)pt.a * den) crossings++;
    }
    return crossings % 2 == 1;
}

struct RouteAttempt {
    std::vector<Stick> sticks;
};

std::vector<RouteAttempt> candidate_routes(i64 le) {
    std::vector<RouteAttempt> out;
    const i64 m = std::abs(le);
    const i64 sgn = le > 0 ? 1 : -1;
    // one bend
    out.push_back({{{Dir::X, -le}, {Dir::Y, le}}});
    out.push_back({{{Dir::Y, le}, {Dir::X, -le}}});
    // two bends
    for (i64 t = 1; t < m; ++t) {
        out.push_back({{{Dir::Y, sgn * t}, {Dir::X, -le}, {Dir::Y, le - sgn * t}}});
        out.push_back({{{Dir::X, -sgn * t}, {Dir::Y, le}, {Dir::X, -(le - sgn * t)}}});
    }
    // three bends
    for (i64 t1 = 1; t1 < m; ++t1)
        for (i64 t2 = 1; t2 < m; ++t2) {
            out.push_back({{{Dir::Y, sgn * t1},
                            {Dir::X, -sgn * t2},
                            {Dir::Y, le - sgn * t1},
                            {Dir::X, -(le - sgn * t2)}}});
            out.push_back({{{Dir::X, -sgn * t1},
                            {Dir::Y, sgn * t2},
                            {Dir::X, -(le - sgn * t1)},
                            {Dir::Y, le - sgn * t2}}});
        }
    return out;
}

Result<MoveOutcome> z_replace_at_scale(const Polygon& sh, int z_index,
                                       const Polygon& original) {
    Result<ReplacementSquare> rsq = find_replacement_square(sh, z_index);
    if (!rsq) return rsq.error();
    const ReplacementSquare& sq = *rsq;
    if (!sq.other_z.empty())
        return Error{ErrCode::OtherZInSquare, "another z-stick meets the square"};

    std::vector<Vec3> vs = vertices(sh);
    Vec3 P = vs[z_index], Q = vs[z_index + 1];
    const i64 le = sh.sticks[z_index].len;
    const int n = (int)sh.sticks.size();

    for (const RouteAttempt& route : candidate_routes(le)) {
        // region between route and diagonal must avoid all obstructions
        std::vector<Vec3> loop;
        loop.push_back(P);
        Vec3 cur = P;
        for (const Stick& s : route.sticks) {
            cur = cur + s.len * dir_step(Lattice::Sh, s.dir);
            loop.push_back(cur);
        }
        assert(cur == Q);
        loop.push_back(P);  // diagonal back

        bool blocked = false;
        for (const SquareObstruction& ob : sq.obstructions) {
            if (ob.is_w) {
                if (point_on_polyline(ob.point, loop) ||
                    point_inside_evenodd(ob.point, loop)) {
                    blocked = true;
                    break;
                }
            } else {
                // planar stick: reject if it meets the route anywhere except
                // the shared endpoints P, Q, or pokes inside the region
                Vec3 s0 = vs[ob.stick_index], s1 = vs[ob.stick_index + 1];
                for (size_t i = 0; i + 2 < loop.size() && !blocked; ++i) {
                    SegIntersection hit = segments_intersect(
                        planar(loop[i]), planar(loop[i + 1]), planar(s0), planar(s1));
                    if (hit.kind == SegHit::None) continue;
                    if (hit.kind == SegHit::Point && hit.point_exact &&
                        ((hit.point.a == P.a && hit.point.b == P.b) ||
                         (hit.point.a == Q.a && hit.point.b == Q.b)))
                        continue;
                    blocked = true;
                }
                if (!blocked &&
                    (point_inside_evenodd(s0, loop) || point_inside_evenodd(s1, loop)))
                    blocked = true;
                if (blocked) break;
            }
        }
        if (blocked) continue;

        Polygon rot = rotated_word(sh, z_index);
        Polygon out = rot;
        out.sticks.erase(out.sticks.begin());
        out.sticks.insert(out.sticks.begin(), route.sticks.begin(), route.sticks.end());
        out = normalized(out);
        if (!validate(out).ok()) continue;

        MoveOutcome mo;
        mo.result = out;
        mo.tag = MoveTag::ZReplace;
        mo.sticks_delta = (int)out.sticks.size() - (int)original.sticks.size();
        mo.edges_delta = edge_length(out) - edge_length(original);
        return mo;
    }
    (void)n;
    return Error{ErrCode::PCaseUnresolvable, "no unobstructed route at this scale"};
}

// Move a border w-stick onto a z endpoint when it is joined to the z-stick
// through a single planar stick (the Lemma normalization).
std::optional<Polygon> normalize_border_w(const Polygon& sh, int z_index) {
    Result<ReplacementSquare> rsq = find_replacement_square(sh, z_index);
    if (!rsq) return std::nullopt;
    const int n = (int)sh.sticks.size();
    for (const SquareObstruction& ob : rsq->obstructions) {
        if (!ob.is_w || !ob.on_border) continue;
        int k = ob.stick_index;
        // pattern [z, planar, w] : r_move(planar, w)
        if ((z_index + 2) % n == k % n) {
            Result<MoveOutcome> rm = r_move(sh, (z_index + 1) % n, k);
            if (rm) return rm->result;
        }
        // pattern [w, planar, z] : r_move(w, planar)
        if ((k + 2) % n == z_index) {
            Result<MoveOutcome> rm = r_move(sh, k, (k + 1) % n);
            if (rm) return rm->result;
        }
    }
    return std::nullopt;
}

int relocate_z(const Polygon& sh, Vec3 P, Vec3 Q) {
    std::vector<Vec3> vs = vertices(sh);
    for (int i = 0; i < (int)sh.sticks.size(); ++i) {
        if (sh.sticks[i].dir != Dir::Z) continue;
        if ((vs[i] == P && vs[i + 1] == Q) || (vs[i] == Q && vs[i + 1] == P)) return i;
    }
    return -1;
}

}  // namespace

Result<MoveOutcome> z_replace(const Polygon& sh, int z_index) {
    if (sh.lattice != Lattice::Sh)
        return Error{ErrCode::InvalidPolygon, "z_replace expects an sh polygon"};
    const int n = (int)sh.sticks.size();
    if (z_index < 0 || z_index >= n || sh.sticks[z_index].dir != Dir::Z)
        return Error{ErrCode::NotAZStick, "stick is not a z-stick"};
    {
        Result<ReplacementSquare> rsq = find_replacement_square(sh, z_index);
        if (!rsq) return rsq.error();
        if (!rsq->other_z.empty())
            return Error{ErrCode::OtherZInSquare, "another z-stick meets the square"};
    }

    Polygon work = sh;
    int zi = z_index;
    Error last{ErrCode::PCaseUnresolvable, "unresolved"};
    for (int scale_step = 0; scale_step <= 2; ++scale_step) {
        // up to four border normalizations per scale
        Polygon attempt = work;
        int azi = zi;
        for (int norm = 0; norm <= 4; ++norm) {
            Result<MoveOutcome> res = z_replace_at_scale(attempt, azi, sh);
            if (res) return res;
            last = res.error();
            if (last.code == ErrCode::OtherZInSquare) return res;
            std::optional<Polygon> moved = normalize_border_w(attempt, azi);
            if (!moved) break;
            std::vector<Vec3> vs = vertices(attempt);
            Vec3 P = vs[azi], Q = vs[azi + 1];
            attempt = *moved;
            azi = relocate_z(attempt, P, Q);
            if (azi < 0) break;
        }
        if (scale_step < 2) {
            std::vector<Vec3> vs = vertices(work);
            Vec3 P = vs[zi], Q = vs[zi + 1];
            work = scaled_all(work, 2);
            zi = relocate_z(work, 2 * P, 2 * Q);
            if (zi < 0) break;
        }
    }
    return last;
}

// ---- squeeze and reduce ------------------------------------------------------

namespace {

Polygon rebuild_from_vertices(Lattice lat, const std::vector<Vec3>& vs) {
    Polygon out;
    out.lattice = lat;
    out.base = vs[0];
    for (size_t i = 0; i + 1 < vs.size(); ++i) {
        Vec3 d = vs[i + 1] - vs[i];
        Stick s{};
        if (d.a != 0 && d.b == 0 && d.c == 0) s = {Dir::X, d.a};
        else if (d.a == 0 && d.b != 0 && d.c == 0) s = {Dir::Y, d.b};
        else if (d.a == 0 && d.b == 0 && d.c != 0) s = {Dir::Z, d.c};
        else assert(false && "non-axis displacement");
        out.sticks.push_back(s);
    }
    return out;
}

// stretch: vertices with a > level shift right by amount (cubic x direction)
Polygon stretch_x_after(const Polygon& p, i64 level, i64 amount) {
    std::vector<Vec3> vs = vertices(p);
    for (auto& v : vs)
        if (v.a > level) v.a += amount;
    return rebuild_from_vertices(p.lattice, vs);
}

Polygon stretch_y_after(const Polygon& p, i64 level, i64 amount) {
    std::vector<Vec3> vs = vertices(p);
    for (auto& v : vs)
        if (v.b > level) v.b += amount;
    return rebuild_from_vertices(p.lattice, vs);
}

struct SqueezeCandidate {
    i64 obstructions;
    i64 leg;
    int word_index;
    int rotation;
    bool clean;
};

}  // namespace

Polygon squeeze_y_band(const Polygon& cubic, i64 b_y, i64 p_x) {
    assert(b_y > 0 && p_x > 0 && p_x < b_y);
    std::vector<Vec3> vs = vertices(cubic);
    for (auto& v : vs) {
        i64 b = v.b;
        v.a *= b_y;
        if (b > 0 && b < b_y)
            v.b = b_y * b_y - p_x * b_y + p_x * b;
        else
            v.b = b_y * b;
    }
    return rebuild_from_vertices(cubic.lattice, vs);
}

Result<MoveOutcome> squeeze_and_reduce(const Polygon& cubic) {
    if (cubic.lattice != Lattice::Cubic)
        return Error{ErrCode::InvalidPolygon, "squeeze expects a cubic polygon"};
    if (!validate(cubic).ok())
        return Error{ErrCode::InvalidPolygon, "squeeze expects a valid polygon"};
    const int n = (int)cubic.sticks.size();

    // rotations: the 24 orientation-preserving cubic symmetries
    std::vector<const Symmetry*> rots;
    for (const Symmetry& s : symmetries(Lattice::Cubic)) {
        i64 det = s.mat[0][0] * (s.mat[1][1] * s.mat[2][2] - s.mat[1][2] * s.mat[2][1]) -
                  s.mat[0][1] * (s.mat[1][0] * s.mat[2][2] - s.mat[1][2] * s.mat[2][0]) +
                  s.mat[0][2] * (s.mat[1][0] * s.mat[2][1] - s.mat[1][1] * s.mat[2][0]);
        if (det == 1) rots.push_back(&s);
    }
    assert(rots.size() == 24);

    // enumerate candidate corners over all rotations
    struct Prepared {
        Polygon poly;   // rotated + equalized + translated, apex at origin
        int corner;     // stick index of the corner pair
        i64 leg;        // equalized leg length
        TriangleScan scan;
    };
    std::vector<std::pair<SqueezeCandidate, Prepared>> cands;
    for (int ri = 0; ri < (int)rots.size(); ++ri) {
        Polygon q = rots[ri]->apply(cubic);
        std::vector<Vec3> vs = vertices(q);
        for (int i = 0; i < n; ++i) {
            int j = (i + 1) % n;
            Dir di = q.sticks[i].dir, dj = q.sticks[j].dir;
            bool xy = (di == Dir::X && dj == Dir::Y) || (di == Dir::Y && dj == Dir::X);
            if (!xy) continue;
            Vec3 B = vs[i + 1];
            Vec3 A = vs[i];
            Vec3 C = (i + 2 <= n) ? vs[i + 2] : vs[1];
            // L pattern: both legs point in +x and +y from the apex
            Vec3 dA = A - B, dC = C - B;
            bool ok = (dA.a > 0 && dA.b == 0 && dC.b > 0 && dC.a == 0) ||
                      (dA.b > 0 && dA.a == 0 && dC.a > 0 && dC.b == 0);
            if (!ok) continue;
            i64 xlen = (dA.a > 0) ? dA.a : dC.a;
            i64 ylen = (dA.b > 0) ? dA.b : dC.b;
            Polygon eq = q;
            if (xlen < ylen)
                eq = stretch_x_after(q, B.a, ylen - xlen);
            else if (ylen < xlen)
                eq = stretch_y_after(q, B.b, xlen - ylen);
            i64 L = std::max(xlen, ylen);
            std::vector<Vec3> evs = vertices(eq);
            Vec3 apex = evs[i + 1];
            Polygon tr = translated(eq, (-1) * apex);
            std::vector<Vec3> tvs = vertices(tr);
            Vec3 Aeq{L, 0, 0}, Beq{0, 0, 0}, Ceq{0, L, 0};
            // identify which of A/C is the x far end after equalization
            TriangleScan scan = scan_triangle(tr, tvs, i, j, Aeq, Beq, Ceq);
            cands.push_back({{(i64)scan.points.size() + (scan.obstructed && !scan.clean ? 1000 : 0),
                              L, i, ri, scan.clean},
                             {tr, i, L, scan}});
        }
    }
    std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
        const SqueezeCandidate &x = a.first, &y = b.first;
        if (x.obstructions != y.obstructions) return x.obstructions < y.obstructions;
        if (x.leg != y.leg) return x.leg < y.leg;
        if (x.word_index != y.word_index) return x.word_index < y.word_index;
        return x.rotation < y.rotation;
    });

    for (auto& [key, prep] : cands) {
        if (!prep.scan.clean) continue;
        Polygon stage = prep.poly;
        i64 L = prep.leg;
        const int i = prep.corner;
        const int j = (i + 1) % n;
        if (prep.scan.obstructed) {
            i64 p_x = INT64_MAX;
            for (const Vec3& pt : prep.scan.points) p_x = std::min(p_x, pt.a);
            if (p_x < 1 || p_x >= L) continue;
            stage = squeeze_y_band(stage, L, p_x);
            L = L * L;
            // verify the squeeze cleared the triangle
            std::vector<Vec3> svs = vertices(stage);
            Vec3 apex = svs[i + 1];
            if (!(apex == Vec3{0, 0, apex.c})) continue;
            TriangleScan re = scan_triangle(stage, svs, i, j, Vec3{L, 0, apex.c},
                                            apex, Vec3{0, L, apex.c});
            if (re.obstructed) continue;
        }
        Result<Polygon> timg = apply_T(stage);
        if (!timg) continue;
        CornerSite site{i, timg->sticks[i].dir == Dir::X, L};
        Result<MoveOutcome> red = corner_to_z(*timg, site);
        if (!red) continue;
        if ((int)red->result.sticks.size() != n - 1) continue;
        MoveOutcome mo;
        mo.result = red->result;
        mo.tag = MoveTag::SqueezeReduce;
        mo.sticks_delta = -1;
        mo.edges_delta = edge_length(red->result) - edge_length(cubic);
        return mo;
    }
    return Error{ErrCode::CornerSelectionFailed,
                 "no corner admits the squeeze pipeline"};
}

}  // namespace shknot
