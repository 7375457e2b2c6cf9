#include "shknot/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace shknot {

Result<Polygon> apply_T(const Polygon& cubic) {
    if (cubic.lattice != Lattice::Cubic)
        return Error{ErrCode::InvalidPolygon, "apply_T expects a cubic polygon"};
    if (!validate(cubic).ok())
        return Error{ErrCode::InvalidPolygon, "apply_T expects a valid polygon"};
    Polygon out = cubic;
    out.lattice = Lattice::Sh;
    for (auto& s : out.sticks)
        if (s.dir == Dir::Z) s.dir = Dir::W;
    return out;
}

Result<Polygon> apply_T_inv(const Polygon& sh) {
    if (sh.lattice != Lattice::Sh)
        return Error{ErrCode::InvalidPolygon, "apply_T_inv expects an sh polygon"};
    for (const auto& s : sh.sticks)
        if (s.dir == Dir::Z)
            return Error{ErrCode::ZSticksPresent,
                         "z-sticks present; run z_replace (or the rewrite) first"};
    Polygon out = sh;
    out.lattice = Lattice::Cubic;
    for (auto& s : out.sticks)
        if (s.dir == Dir::W) s.dir = Dir::Z;
    return out;
}

namespace {

// one cubic unit edge; dir in {X, Y, Z}, sign +-1
struct Edge {
    Dir dir;
    int sign;
};

void append_unit(std::vector<Edge>& edges, Dir d, int sign) {
    edges.push_back({d, sign});
}

// cyclic free reduction: cancel adjacent inverse pairs until stable
void reduce_cyclic(std::vector<Edge>& e) {
    bool changed = true;
    while (changed && e.size() >= 2) {
        changed = false;
        const size_t n = e.size();
        for (size_t i = 0; i < n; ++i) {
            size_t j = (i + 1) % n;
            if (e[i].dir == e[j].dir && e[i].sign == -e[j].sign) {
                if (j > i) {
                    e.erase(e.begin() + i, e.begin() + i + 2);
                } else {
                    e.erase(e.begin() + i);
                    e.erase(e.begin());
                }
                changed = true;
                break;
            }
        }
    }
}

}  // namespace

Result<RewriteReport> sh_to_cubic_rewrite(const Polygon& sh) {
    if (sh.lattice != Lattice::Sh)
        return Error{ErrCode::InvalidPolygon, "rewrite expects an sh polygon"};
    if (!validate(sh).ok())
        return Error{ErrCode::InvalidPolygon, "rewrite expects a valid polygon"};
    if (!properly_leveled(sh))
        return Error{ErrCode::InvalidPolygon, "rewrite expects a properly leveled polygon"};

    Polygon input = sh;
    for (int attempt = 0; attempt <= 2; ++attempt) {
        // expand to unit edges, substituting per direction
        std::vector<Edge> edges;
        for (const Stick& s : input.sticks) {
            int sign = s.len > 0 ? 1 : -1;
            for (i64 k = 0; k < std::abs(s.len); ++k) {
                switch (s.dir) {
                    case Dir::X:
                        // x-edge -> x^2 (planar map doubles the u spacing)
                        append_unit(edges, Dir::X, sign);
                        append_unit(edges, Dir::X, sign);
                        break;
                    case Dir::Y:
                        // y-edge -> x y^2 (reversed for negative edges)
                        if (sign > 0) {
                            append_unit(edges, Dir::X, 1);
                            append_unit(edges, Dir::Y, 1);
                            append_unit(edges, Dir::Y, 1);
                        } else {
                            append_unit(edges, Dir::Y, -1);
                            append_unit(edges, Dir::Y, -1);
                            append_unit(edges, Dir::X, -1);
                        }
                        break;
                    case Dir::Z:
                        // z-edge -> y^2 x^-1
                        if (sign > 0) {
                            append_unit(edges, Dir::Y, 1);
                            append_unit(edges, Dir::Y, 1);
                            append_unit(edges, Dir::X, -1);
                        } else {
                            append_unit(edges, Dir::X, 1);
                            append_unit(edges, Dir::Y, -1);
                            append_unit(edges, Dir::Y, -1);
                        }
                        break;
                    case Dir::W:
                        append_unit(edges, Dir::Z, sign);
                        break;
                }
            }
        }
        reduce_cyclic(edges);
        if (edges.empty())
            return Error{ErrCode::EmbeddingCollision, "rewrite collapsed to nothing"};

        // merge into maximal sticks
        Polygon out;
        out.lattice = Lattice::Cubic;
        out.base = {2 * input.base.a + input.base.b, 2 * input.base.b, input.base.c};
        for (const Edge& e : edges) {
            if (!out.sticks.empty() && out.sticks.back().dir == e.dir)
                out.sticks.back().len += e.sign;
            else
                out.sticks.push_back({e.dir, e.sign});
        }
        out = normalized(out);

        if (validate(out).ok()) {
            RewriteReport rep;
            rep.result = out;
            rep.scalings = attempt;
            auto ec = edge_census(input);
            rep.input_edges = edge_length(input);
            rep.input_edges_x = ec[(int)Dir::X];
            rep.input_edges_w = ec[(int)Dir::W];
            return rep;
        }
        input = scaled_planar(input, 2);
    }
    return Error{ErrCode::EmbeddingCollision,
                 "rewrite self-intersects even after two planar scalings"};
}

Polygon rotate_for_x_majority(const Polygon& sh) {
    auto rots = sh_planar_rotations();
    i64 best = -1;
    Polygon best_poly = sh;
    for (const Symmetry& r : rots) {
        Polygon img = r.apply(sh);
        i64 ex = edge_census(img)[(int)Dir::X];
        if (ex > best) {
            best = ex;
            best_poly = img;
        }
    }
    return best_poly;
}

BoundReport edge_lower_bound(i64 e_L) {
    BoundReport rep;
    rep.formula = BoundFormula::EdgeLower;
    rep.input = e_L;
    i64 num = 3 * e_L + 30;
    i64 g = std::gcd(num, (i64)8);
    rep.num = num / g;
    rep.den = 8 / g;
    rep.ceil_bound = (num + 7) / 8;
    rep.approx = (double)num / 8.0;
    std::ostringstream os;
    if (rep.den == 1)
        os << rep.num;
    else
        os << rep.num << "/" << rep.den;
    rep.exact_text = os.str();
    return rep;
}

namespace {
i64 isqrt_floor(i64 v) {
    if (v < 0) return -1;
    i64 r = (i64)std::sqrt((double)v);
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}
}  // namespace

BoundReport stick_lower_bound(i64 s_L) {
    BoundReport rep;
    rep.formula = BoundFormula::StickLower;
    rep.input = s_L;
    rep.radicand = 4 * s_L + 9;
    // smallest integer k with k >= sqrt(radicand) - 3, i.e. (k+3)^2 >= radicand
    i64 m = isqrt_floor(rep.radicand);
    i64 root_ceil = (m * m == rep.radicand) ? m : m + 1;
    rep.ceil_bound = root_ceil - 3;
    rep.approx = std::sqrt((double)rep.radicand) - 3.0;
    std::ostringstream os;
    if (m * m == rep.radicand)
        os << (m - 3);
    else
        os << "sqrt(" << rep.radicand << ")-3";
    rep.exact_text = os.str();
    return rep;
}

}  // namespace shknot
