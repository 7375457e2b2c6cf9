#include "shknot/core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace shknot {

const char* err_name(ErrCode c) {
    switch (c) {
        case ErrCode::ParseSyntax: return "ParseSyntax";
        case ErrCode::IllegalDirection: return "IllegalDirection";
        case ErrCode::NonMaximal: return "NonMaximal";
        case ErrCode::InvalidPolygon: return "InvalidPolygon";
        case ErrCode::ZSticksPresent: return "ZSticksPresent";
        case ErrCode::EmbeddingCollision: return "EmbeddingCollision";
        case ErrCode::ObstructedTriangle: return "ObstructedTriangle";
        case ErrCode::NoXYCorner: return "NoXYCorner";
        case ErrCode::CornerSelectionFailed: return "CornerSelectionFailed";
        case ErrCode::NotAdjacent: return "NotAdjacent";
        case ErrCode::NotPerpendicular: return "NotPerpendicular";
        case ErrCode::RectangleObstructed: return "RectangleObstructed";
        case ErrCode::NotAZStick: return "NotAZStick";
        case ErrCode::OtherZInSquare: return "OtherZInSquare";
        case ErrCode::PCaseUnresolvable: return "PCaseUnresolvable";
        case ErrCode::NoApplicableMove: return "NoApplicableMove";
        case ErrCode::DegeneracyUnresolved: return "DegeneracyUnresolved";
        case ErrCode::InconsistentDiagram: return "InconsistentDiagram";
        case ErrCode::ConfigInvalid: return "ConfigInvalid";
        case ErrCode::IoError: return "IoError";
    }
    return "Unknown";
}

char dir_char(Dir d) {
    switch (d) {
        case Dir::X: return 'x';
        case Dir::Y: return 'y';
        case Dir::Z: return 'z';
        case Dir::W: return 'w';
    }
    return '?';
}

bool dir_legal(Lattice lat, Dir d) {
    if (lat == Lattice::Cubic) return d != Dir::W;
    return true;
}

bool dir_vertical(Lattice lat, Dir d) {
    return lat == Lattice::Cubic ? d == Dir::Z : d == Dir::W;
}

Vec3 dir_step(Lattice lat, Dir d) {
    switch (d) {
        case Dir::X: return {1, 0, 0};
        case Dir::Y: return {0, 1, 0};
        case Dir::Z: return lat == Lattice::Cubic ? Vec3{0, 0, 1} : Vec3{-1, 1, 0};
        case Dir::W: return {0, 0, 1};
    }
    return {};
}

Vec3 geom_point(Lattice lat, Vec3 p) {
    if (lat == Lattice::Cubic) return p;
    return {2 * p.a + p.b, p.b, p.c};
}

Vec3 geom_step(Lattice lat, Dir d) {
    return geom_point(lat, dir_step(lat, d));
}

i64 StickCounts::of(Dir d) const {
    switch (d) {
        case Dir::X: return nx;
        case Dir::Y: return ny;
        case Dir::Z: return nz;
        case Dir::W: return nw;
    }
    return 0;
}

std::vector<Vec3> vertices(const Polygon& p) {
    std::vector<Vec3> out;
    out.reserve(p.sticks.size() + 1);
    Vec3 cur = p.base;
    out.push_back(cur);
    for (const Stick& s : p.sticks) {
        cur = cur + s.len * dir_step(p.lattice, s.dir);
        out.push_back(cur);
    }
    return out;
}

bool is_closed(const Polygon& p) {
    Vec3 sum{};
    for (const Stick& s : p.sticks) sum = sum + s.len * dir_step(p.lattice, s.dir);
    return sum.zero();
}

// ---- exact integer segment intersection --------------------------------

namespace {

using i128 = __int128;

struct V3 {
    i64 x, y, z;
};
V3 sub(Vec3 p, Vec3 q) { return {p.a - q.a, p.b - q.b, p.c - q.c}; }
V3 crossv(V3 u, V3 v) {
    return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}
i128 dotv(V3 u, V3 v) {
    return (i128)u.x * v.x + (i128)u.y * v.y + (i128)u.z * v.z;
}
bool zerov(V3 u) { return u.x == 0 && u.y == 0 && u.z == 0; }

Vec3 lerp_exact(Vec3 p, V3 d, i128 num, i128 den, bool& exact) {
    // p + d * num/den, only valid when all components divide evenly
    Vec3 out = p;
    exact = true;
    i128 xs[3] = {(i128)d.x * num, (i128)d.y * num, (i128)d.z * num};
    i64* comps[3] = {&out.a, &out.b, &out.c};
    for (int i = 0; i < 3; ++i) {
        if (xs[i] % den != 0) {
            exact = false;
            return p;
        }
        *comps[i] += (i64)(xs[i] / den);
    }
    return out;
}

}  // namespace

SegIntersection segments_intersect(Vec3 P1, Vec3 Q1, Vec3 P2, Vec3 Q2) {
    V3 d1 = sub(Q1, P1), d2 = sub(Q2, P2), r = sub(P2, P1);
    V3 n = crossv(d1, d2);
    SegIntersection res;
    if (zerov(n)) {
        // parallel
        if (!zerov(crossv(r, d1))) return res;
        // collinear: parameters of P2, Q2 along d1 scaled by L = d1.d1
        i128 L = dotv(d1, d1);
        i128 s0 = dotv(sub(P2, P1), d1);
        i128 s1 = dotv(sub(Q2, P1), d1);
        i128 lo = std::min(s0, s1), hi = std::max(s0, s1);
        i128 lo2 = std::max<i128>(lo, 0), hi2 = std::min<i128>(hi, L);
        if (lo2 > hi2) return res;
        res.kind = lo2 == hi2 ? SegHit::Point : SegHit::Overlap;
        // witness: an endpoint attaining lo2 if possible, else interpolate
        if (lo2 == 0)
            res.point = P1;
        else if (lo2 == L)
            res.point = Q1;
        else if (lo2 == s0)
            res.point = P2;
        else if (lo2 == s1)
            res.point = Q2;
        else
            res.point = lerp_exact(P1, d1, lo2, L, res.point_exact);
        return res;
    }
    i128 copl = dotv(r, n);
    if (copl != 0) return res;
    i128 nn = dotv(n, n);
    i128 tN = dotv(crossv(r, d2), n);
    i128 sN = dotv(crossv(r, d1), n);
    if (tN < 0 || tN > nn || sN < 0 || sN > nn) return res;
    res.kind = SegHit::Point;
    res.point = lerp_exact(P1, d1, tN, nn, res.point_exact);
    return res;
}

// ---- validation ---------------------------------------------------------

ValidationReport validate(const Polygon& p) {
    ValidationReport rep;
    rep.closed = is_closed(p);
    const int n = (int)p.sticks.size();
    rep.maximal = true;
    for (int i = 0; i < n; ++i) {
        if (p.sticks[i].len == 0) rep.maximal = false;
        if (n >= 2 && p.sticks[i].dir == p.sticks[(i + 1) % n].dir) rep.maximal = false;
    }
    rep.embedded = true;
    if (n == 0) return rep;

    std::vector<Vec3> vs = vertices(p);
    std::vector<Vec3> gs(vs.size());
    for (size_t i = 0; i < vs.size(); ++i) gs[i] = geom_point(p.lattice, vs[i]);

    auto adjacent = [&](int i, int j) {
        return j == i + 1 || (rep.closed && i == 0 && j == n - 1);
    };
    for (int i = 0; i < n && rep.embedded; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (adjacent(i, j) && p.sticks[i].dir != p.sticks[j].dir) {
                // non-parallel segments sharing an endpoint meet only there
                continue;
            }
            SegIntersection hit =
                segments_intersect(gs[i], gs[i + 1], gs[j], gs[j + 1]);
            if (adjacent(i, j) && hit.kind == SegHit::Point) continue;
            if (hit.kind != SegHit::None) {
                rep.embedded = false;
                rep.first_violation = Violation{
                    i, j, hit.point,
                    hit.kind == SegHit::Overlap ? "collinear overlap"
                                                : "segment intersection"};
                break;
            }
        }
    }
    return rep;
}

Result<StickCounts> stick_census(const Polygon& p) {
    const int n = (int)p.sticks.size();
    for (int i = 0; i < n; ++i) {
        if (p.sticks[i].len == 0 ||
            (n >= 2 && p.sticks[i].dir == p.sticks[(i + 1) % n].dir))
            return Error{ErrCode::NonMaximal, "stick census requires a maximal word"};
    }
    StickCounts c;
    for (const Stick& s : p.sticks) {
        switch (s.dir) {
            case Dir::X: c.nx++; break;
            case Dir::Y: c.ny++; break;
            case Dir::Z: c.nz++; break;
            case Dir::W: c.nw++; break;
        }
    }
    return c;
}

i64 edge_length(const Polygon& p) {
    i64 e = 0;
    for (const Stick& s : p.sticks) e += std::abs(s.len);
    return e;
}

std::array<i64, 4> edge_census(const Polygon& p) {
    std::array<i64, 4> e{0, 0, 0, 0};
    for (const Stick& s : p.sticks) e[(int)s.dir] += std::abs(s.len);
    return e;
}

std::vector<i64> w_levels(const Polygon& p) {
    std::set<i64> levels;
    std::vector<Vec3> vs = vertices(p);
    for (size_t i = 0; i < p.sticks.size(); ++i)
        if (!dir_vertical(p.lattice, p.sticks[i].dir)) levels.insert(vs[i].c);
    return {levels.begin(), levels.end()};
}

bool properly_leveled(const Polygon& p) {
    // union-find over planar sticks per level, joined by shared endpoints
    std::vector<Vec3> vs = vertices(p);
    std::map<i64, std::vector<int>> by_level;
    for (int i = 0; i < (int)p.sticks.size(); ++i)
        if (!dir_vertical(p.lattice, p.sticks[i].dir)) by_level[vs[i].c].push_back(i);

    for (auto& [lvl, idxs] : by_level) {
        const int m = (int)idxs.size();
        std::vector<int> parent(m);
        for (int i = 0; i < m; ++i) parent[i] = i;
        std::function<int(int)> find = [&](int i) {
            return parent[i] == i ? i : parent[i] = find(parent[i]);
        };
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                int si = idxs[i], sj = idxs[j];
                Vec3 a0 = geom_point(p.lattice, vs[si]);
                Vec3 a1 = geom_point(p.lattice, vs[si + 1]);
                Vec3 b0 = geom_point(p.lattice, vs[sj]);
                Vec3 b1 = geom_point(p.lattice, vs[sj + 1]);
                if (segments_intersect(a0, a1, b0, b1).kind != SegHit::None)
                    parent[find(i)] = find(j);
            }
        }
        int roots = 0;
        for (int i = 0; i < m; ++i)
            if (find(i) == i) roots++;
        if (roots > 1) return false;
    }
    return true;
}

Polygon normalized(Polygon p) {
    bool changed = true;
    while (changed && p.sticks.size() >= 2) {
        changed = false;
        const int n = (int)p.sticks.size();
        for (int i = 0; i < n; ++i) {
            int j = (i + 1) % n;
            if (i == j) break;
            if (p.sticks[i].dir != p.sticks[j].dir) continue;
            i64 sum = p.sticks[i].len + p.sticks[j].len;
            if (j == 0) {
                // merging across the word start moves the base vertex
                p.base = p.base + p.sticks[j].len * dir_step(p.lattice, p.sticks[j].dir);
            }
            if (sum == 0) {
                if (j > i)
                    p.sticks.erase(p.sticks.begin() + i, p.sticks.begin() + i + 2);
                else {
                    p.sticks.erase(p.sticks.begin() + i);
                    p.sticks.erase(p.sticks.begin());
                }
            } else {
                p.sticks[i].len = sum;
                p.sticks.erase(p.sticks.begin() + j);
            }
            changed = true;
            break;
        }
    }
    // drop any zero-length sticks defensively
    std::erase_if(p.sticks, [](const Stick& s) { return s.len == 0; });
    return p;
}

Polygon compact_levels(Polygon p) {
    if (p.lattice != Lattice::Sh) return p;
    std::vector<i64> levels = w_levels(p);
    if (levels.empty()) return p;
    std::map<i64, i64> remap;
    for (size_t i = 0; i < levels.size(); ++i) remap[levels[i]] = (i64)i;
    // rebuild: planar sticks keep length; w sticks span remapped heights
    std::vector<Vec3> vs = vertices(p);
    Polygon out = p;
    out.base.c = remap.at(vs[0].c);
    for (size_t i = 0; i < p.sticks.size(); ++i) {
        if (p.sticks[i].dir == Dir::W) {
            i64 h0 = remap.at(vs[i].c), h1 = remap.at(vs[i + 1].c);
            out.sticks[i].len = h1 - h0;
        }
    }
    return normalized(out);
}

// ---- symmetries ----------------------------------------------------------

Vec3 Symmetry::apply(Vec3 v) const {
    return {mat[0][0] * v.a + mat[0][1] * v.b + mat[0][2] * v.c,
            mat[1][0] * v.a + mat[1][1] * v.b + mat[1][2] * v.c,
            mat[2][0] * v.a + mat[2][1] * v.b + mat[2][2] * v.c};
}

Stick Symmetry::apply(Stick s) const {
    return {dir_map[(int)s.dir], sign_map[(int)s.dir] * s.len};
}

Polygon Symmetry::apply(const Polygon& p) const {
    Polygon out = p;
    out.base = apply(p.base);
    for (auto& s : out.sticks) s = apply(s);
    return out;
}

namespace {

Symmetry make_symmetry(Lattice lat, const std::array<std::array<i64, 3>, 3>& m) {
    Symmetry s;
    s.mat = m;
    for (int d = 0; d < 4; ++d) {
        if (!dir_legal(lat, (Dir)d)) {
            s.dir_map[d] = (Dir)d;
            s.sign_map[d] = 1;
            continue;
        }
        Vec3 step = dir_step(lat, (Dir)d);
        Vec3 img = s.apply(step);
        bool found = false;
        for (int e = 0; e < 4 && !found; ++e) {
            if (!dir_legal(lat, (Dir)e)) continue;
            Vec3 es = dir_step(lat, (Dir)e);
            if (img == es) {
                s.dir_map[d] = (Dir)e;
                s.sign_map[d] = 1;
                found = true;
            } else if (img == (-1) * es) {
                s.dir_map[d] = (Dir)e;
                s.sign_map[d] = -1;
                found = true;
            }
        }
        assert(found);
    }
    return s;
}

std::array<std::array<i64, 3>, 3> mat_mul(const std::array<std::array<i64, 3>, 3>& A,
                                          const std::array<std::array<i64, 3>, 3>& B) {
    std::array<std::array<i64, 3>, 3> C{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) C[i][j] += A[i][k] * B[k][j];
    return C;
}

std::vector<Symmetry> build_sh_symmetries() {
    // planar rotation r: x->y, y->z, z->-x on basis coords (a,b)
    std::array<std::array<i64, 3>, 3> R{{{0, -1, 0}, {1, 1, 0}, {0, 0, 1}}};
    // planar mirror m: x->x, y->-z, z->-y
    std::array<std::array<i64, 3>, 3> M{{{1, 1, 0}, {0, -1, 0}, {0, 0, 1}}};
    // vertical flip f: w -> -w
    std::array<std::array<i64, 3>, 3> F{{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}};
    std::array<std::array<i64, 3>, 3> I{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

    std::vector<Symmetry> out;
    std::array<std::array<i64, 3>, 3> rk = I;
    for (int k = 0; k < 6; ++k) {
        for (int use_m = 0; use_m < 2; ++use_m) {
            for (int use_f = 0; use_f < 2; ++use_f) {
                auto m2 = rk;
                if (use_m) m2 = mat_mul(m2, M);
                if (use_f) m2 = mat_mul(m2, F);
                out.push_back(make_symmetry(Lattice::Sh, m2));
            }
        }
        rk = mat_mul(R, rk);
    }
    return out;
}

std::vector<Symmetry> build_sh_rotations() {
    std::array<std::array<i64, 3>, 3> R{{{0, -1, 0}, {1, 1, 0}, {0, 0, 1}}};
    std::array<std::array<i64, 3>, 3> I{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    std::vector<Symmetry> out;
    auto rk = I;
    for (int k = 0; k < 6; ++k) {
        out.push_back(make_symmetry(Lattice::Sh, rk));
        rk = mat_mul(R, rk);
    }
    return out;
}

std::vector<Symmetry> build_cubic_symmetries() {
    std::vector<Symmetry> out;
    int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (auto& pm : perm) {
        for (int sx = -1; sx <= 1; sx += 2)
            for (int sy = -1; sy <= 1; sy += 2)
                for (int sz = -1; sz <= 1; sz += 2) {
                    std::array<std::array<i64, 3>, 3> m{};
                    int signs[3] = {sx, sy, sz};
                    for (int row = 0; row < 3; ++row) m[row][pm[row]] = signs[row];
                    // m maps e_{pm[row]} to signs[row]*e_row
                    out.push_back(make_symmetry(Lattice::Cubic, m));
                }
    }
    return out;
}

}  // namespace

std::span<const Symmetry> symmetries(Lattice lat) {
    static const std::vector<Symmetry> sh = build_sh_symmetries();
    static const std::vector<Symmetry> cubic = build_cubic_symmetries();
    return lat == Lattice::Sh ? std::span<const Symmetry>(sh)
                              : std::span<const Symmetry>(cubic);
}

std::span<const Symmetry> sh_planar_rotations() {
    static const std::vector<Symmetry> rots = build_sh_rotations();
    return rots;
}

Polygon translated(Polygon p, Vec3 delta) {
    p.base = p.base + delta;
    return p;
}

Polygon scaled_planar(Polygon p, i64 k) {
    p.base.a *= k;
    p.base.b *= k;
    for (auto& s : p.sticks)
        if (!dir_vertical(p.lattice, s.dir)) s.len *= k;
    return p;
}

Polygon scaled_all(Polygon p, i64 k) {
    p.base = k * p.base;
    for (auto& s : p.sticks) s.len *= k;
    return p;
}

// ---- canonical form -------------------------------------------------------

namespace {

bool word_less(const std::vector<Stick>& a, const std::vector<Stick>& b) {
    const size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        if ((int)a[i].dir != (int)b[i].dir) return (int)a[i].dir < (int)b[i].dir;
        if (a[i].len != b[i].len) return a[i].len < b[i].len;
    }
    return a.size() < b.size();
}

std::vector<Stick> reversed_word(const std::vector<Stick>& w) {
    std::vector<Stick> out(w.rbegin(), w.rend());
    for (auto& s : out) s.len = -s.len;
    return out;
}

}  // namespace

Polygon canonicalize(const Polygon& p) {
    Polygon q = normalized(p);
    const int n = (int)q.sticks.size();
    if (n == 0) return Polygon{q.lattice, {}, {}};

    auto stick_less = [](Stick a, Stick b) {
        if ((int)a.dir != (int)b.dir) return (int)a.dir < (int)b.dir;
        return a.len < b.len;
    };
    std::vector<Stick> best, w1(n), w2(n);
    bool have = false;
    for (const Symmetry& sym : symmetries(q.lattice)) {
        for (int i = 0; i < n; ++i) w1[i] = sym.apply(q.sticks[i]);
        for (int rev = 0; rev < 2; ++rev) {
            if (rev) {
                w2 = reversed_word(w1);
            } else {
                w2 = w1;
            }
            for (int rot = 0; rot < n; ++rot) {
                if (have) {
                    // lazy lexicographic compare of rotation `rot` vs best
                    int verdict = 0;
                    for (int k = 0; k < n; ++k) {
                        Stick a = w2[(rot + k) % n];
                        Stick b = best[k];
                        if (a == b) continue;
                        verdict = stick_less(a, b) ? -1 : 1;
                        break;
                    }
                    if (verdict >= 0) continue;
                }
                best.resize(n);
                for (int k = 0; k < n; ++k) best[k] = w2[(rot + k) % n];
                have = true;
            }
        }
    }
    return Polygon{q.lattice, best, {}};
}

// ---- parsing and emission ---------------------------------------------

namespace {

std::optional<Dir> char_dir(char c) {
    switch (c) {
        case 'x': return Dir::X;
        case 'y': return Dir::Y;
        case 'z': return Dir::Z;
        case 'w': return Dir::W;
    }
    return std::nullopt;
}

std::string strip_comments(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool comment = false;
    for (char c : text) {
        if (c == '#') comment = true;
        if (c == '\n') comment = false;
        out.push_back(comment ? ' ' : c);
    }
    return out;
}

}  // namespace

Result<Polygon> parse_word(std::string_view text, Lattice lat) {
    Polygon p;
    p.lattice = lat;
    std::string clean = strip_comments(text);
    size_t i = 0;
    const size_t n = clean.size();
    while (i < n) {
        while (i < n && std::isspace((unsigned char)clean[i])) ++i;
        if (i >= n) break;
        size_t start = i;
        while (i < n && !std::isspace((unsigned char)clean[i])) ++i;
        std::string_view tok(clean.data() + start, i - start);

        auto syntax_err = [&](const std::string& why) {
            std::ostringstream os;
            os << "malformed token `" << tok << "` at byte offset " << start << ": "
               << why;
            return Error{ErrCode::ParseSyntax, os.str()};
        };

        if (tok.size() < 3 || tok[1] != '^') return syntax_err("expected d^n");
        std::optional<Dir> d = char_dir(tok[0]);
        if (!d) return syntax_err("unknown direction");
        if (!dir_legal(lat, *d)) {
            std::ostringstream os;
            os << "direction `" << tok[0] << "` at byte offset " << start
               << " is not legal for the "
               << (lat == Lattice::Cubic ? "cubic" : "sh") << " lattice";
            return Error{ErrCode::IllegalDirection, os.str()};
        }
        i64 len = 0;
        auto [ptr, ec] =
            std::from_chars(tok.data() + 2, tok.data() + tok.size(), len);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            return syntax_err("bad exponent");
        if (len == 0) return syntax_err("zero-length stick");
        p.sticks.push_back({*d, len});
    }
    return p;
}

Result<Polygon> parse_knotw(std::string_view text, std::optional<Lattice> fallback) {
    std::optional<Lattice> lat = fallback;
    Vec3 base{};
    std::string body;
    std::string clean = strip_comments(text);
    std::istringstream ss(clean);
    std::string line;
    while (std::getline(ss, line)) {
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        std::string_view lv(line.data() + pos, line.size() - pos);
        if (lv.starts_with("lattice:")) {
            std::string val(lv.substr(8));
            std::erase_if(val, [](char c) { return std::isspace((unsigned char)c); });
            if (val == "cubic")
                lat = Lattice::Cubic;
            else if (val == "sh")
                lat = Lattice::Sh;
            else
                return Error{ErrCode::ParseSyntax, "bad lattice header: " + val};
        } else if (lv.starts_with("base:")) {
            std::istringstream bs(std::string(lv.substr(5)));
            if (!(bs >> base.a >> base.b >> base.c))
                return Error{ErrCode::ParseSyntax, "bad base header"};
        } else {
            body += line;
            body += '\n';
        }
    }
    if (!lat)
        return Error{ErrCode::ParseSyntax,
                     "no `lattice:` header and no fallback lattice given"};
    Result<Polygon> p = parse_word(body, *lat);
    if (!p) return p;
    p->base = base;
    return p;
}

std::string word_string(const Polygon& p) {
    std::ostringstream os;
    for (size_t i = 0; i < p.sticks.size(); ++i) {
        if (i) os << ' ';
        os << dir_char(p.sticks[i].dir) << '^' << p.sticks[i].len;
    }
    return os.str();
}

std::string emit_knotw(const Polygon& p) {
    std::ostringstream os;
    os << "lattice: " << (p.lattice == Lattice::Cubic ? "cubic" : "sh") << '\n';
    if (!p.base.zero()) os << "base: " << p.base.a << ' ' << p.base.b << ' ' << p.base.c << '\n';
    os << word_string(p) << '\n';
    return os.str();
}

// ---- rasterization -------------------------------------------------------

void raster_points(Lattice lat, Vec3 start, Stick s,
                   const std::function<void(Vec3)>& fn) {
    Vec3 g = geom_point(lat, start);
    g = 2 * g;
    Vec3 step = geom_step(lat, s.dir);  // doubled grid: one raster point per half step
    if (s.len < 0) step = (-1) * step;
    i64 halves = 2 * std::abs(s.len);
    for (i64 k = 0; k <= halves; ++k) fn(g + k * step);
}

}  // namespace shknot
