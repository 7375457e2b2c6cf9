#include "shknot/knot_id.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace shknot {

namespace {
using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rat make_rat128(i128 n, i128 d) {
    assert(d != 0);
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    assert(n <= INT64_MAX && n >= INT64_MIN && d <= INT64_MAX);
    Rat r;
    r.num = (i64)n;
    r.den = (i64)d;
    return r;
}

}  // namespace

Rat::Rat(i64 n, i64 d) { *this = make_rat128(n, d); }

bool operator==(Rat p, Rat q) { return (i128)p.num * q.den == (i128)q.num * p.den; }
bool operator<(Rat p, Rat q) { return (i128)p.num * q.den < (i128)q.num * p.den; }
Rat operator+(Rat p, Rat q) {
    return make_rat128((i128)p.num * q.den + (i128)q.num * p.den, (i128)p.den * q.den);
}
Rat operator-(Rat p, Rat q) {
    return make_rat128((i128)p.num * q.den - (i128)q.num * p.den, (i128)p.den * q.den);
}
Rat operator*(Rat p, Rat q) {
    return make_rat128((i128)p.num * q.num, (i128)p.den * q.den);
}

// ---- LaurentPoly ---------------------------------------------------------

LaurentPoly LaurentPoly::constant(i64 k) {
    LaurentPoly p;
    if (k != 0) p.c_[0] = k;
    return p;
}

LaurentPoly LaurentPoly::term(i64 coeff, int exp) {
    LaurentPoly p;
    if (coeff != 0) p.c_[exp] = coeff;
    return p;
}

i64 LaurentPoly::coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? 0 : it->second;
}

int LaurentPoly::min_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
int LaurentPoly::max_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }

void LaurentPoly::add_term(i64 coeff, int exp) {
    if (coeff == 0) return;
    i64& v = c_[exp];
    v += coeff;
    if (v == 0) c_.erase(exp);
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (auto& [e, k] : b.c_) out.add_term(k, e);
    return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (auto& [e, k] : b.c_) out.add_term(-k, e);
    return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (auto& [e1, k1] : a.c_)
        for (auto& [e2, k2] : b.c_) {
            i128 prod = (i128)k1 * k2;
            assert(prod <= INT64_MAX && prod >= INT64_MIN);
            out.add_term((i64)prod, e1 + e2);
        }
    return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& d) const {
    assert(!d.is_zero());
    LaurentPoly rem = *this, out;
    while (!rem.is_zero()) {
        int e = rem.max_exp() - d.max_exp();
        i64 lead_r = rem.coeff(rem.max_exp());
        i64 lead_d = d.coeff(d.max_exp());
        assert(lead_r % lead_d == 0);
        i64 q = lead_r / lead_d;
        out.add_term(q, e);
        rem = rem - d * LaurentPoly::term(q, e);
    }
    return out;
}

i64 LaurentPoly::eval(i64 t) const {
    // Laurent evaluation only used at t = -1 / +-small integers with min_exp >= 0
    // after normalization; callers normalize first.
    LaurentPoly n = normalized();
    i64 acc = 0;
    i64 p = 1;
    int last = 0;
    for (auto& [e, k] : n.c_) {
        for (int i = last; i < e; ++i) p *= t;
        last = e;
        acc += k * p;
    }
    return acc;
}

LaurentPoly LaurentPoly::normalized() const {
    if (c_.empty()) return *this;
    LaurentPoly out;
    int shift = min_exp();
    for (auto& [e, k] : c_) out.c_[e - shift] = k;
    if (out.c_.rbegin()->second < 0)
        for (auto& [e, k] : out.c_) k = -k;
    return out;
}

bool LaurentPoly::palindromic() const {
    LaurentPoly n = normalized();
    int hi = n.max_exp();
    for (auto& [e, k] : n.c_)
        if (n.coeff(hi - e) != k) return false;
    return true;
}

std::string LaurentPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        auto [e, k] = *it;
        if (!first) os << (k > 0 ? " + " : " - ");
        else if (k < 0) os << "-";
        first = false;
        i64 a = std::abs(k);
        if (a != 1 || e == 0) os << a;
        if (e != 0) {
            if (a != 1) os << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

// ---- projection ----------------------------------------------------------

namespace {

struct P2 {
    i64 x, y;
};
i128 cross2(P2 u, P2 v) { return (i128)u.x * v.y - (i128)u.y * v.x; }
P2 sub2(P2 u, P2 v) { return {u.x - v.x, u.y - v.y}; }

// Shear schedule: index 0 is the straight-down projection; the rest tilt the
// vertical axis by (1/q, 1/q^2). Coordinates are scaled by q^2 to stay
// integral.
const int kShearQ[17] = {1, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67};

struct ProjAttempt {
    bool degenerate = false;
    std::vector<Crossing> crossings;
};

ProjAttempt try_project(const Polygon& p, int tilt_index) {
    ProjAttempt out;
    const int n = (int)p.sticks.size();
    std::vector<Vec3> vs = vertices(p);
    std::vector<Vec3> gs(vs.size());
    for (size_t i = 0; i < vs.size(); ++i) gs[i] = geom_point(p.lattice, vs[i]);

    i64 q = kShearQ[tilt_index];
    auto proj = [&](Vec3 g) -> P2 {
        if (q == 1) return {g.a, g.b};
        return {q * q * g.a - q * g.c, q * q * g.b - g.c};
    };
    std::vector<P2> A(n), B(n);
    for (int i = 0; i < n; ++i) {
        A[i] = proj(gs[i]);
        B[i] = proj(gs[i + 1]);
        if (A[i].x == B[i].x && A[i].y == B[i].y) {
            out.degenerate = true;  // a stick projects to a point
            return out;
        }
    }

    const bool closed = is_closed(p);
    auto adjacent = [&](int i, int j) {
        return j == i + 1 || (closed && i == 0 && j == n - 1);
    };

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            P2 di = sub2(B[i], A[i]), dj = sub2(B[j], A[j]);
            i128 den = cross2(di, dj);
            P2 r = sub2(A[j], A[i]);
            if (den == 0) {
                if (cross2(r, di) != 0) continue;  // parallel, not collinear
                // collinear: any touching or overlap is non-generic
                i128 L = (i128)di.x * di.x + (i128)di.y * di.y;
                i128 s0 = (i128)r.x * di.x + (i128)r.y * di.y;
                P2 r2 = sub2(B[j], A[i]);
                i128 s1 = (i128)r2.x * di.x + (i128)r2.y * di.y;
                if (std::max(std::min(s0, s1), (i128)0) <= std::min(std::max(s0, s1), L)) {
                    out.degenerate = true;
                    return out;
                }
                continue;
            }
            if (adjacent(i, j)) continue;  // share exactly the joint vertex
            i128 tN = cross2(r, dj);
            i128 sN = cross2(r, di);
            if (den < 0) {
                tN = -tN;
                sN = -sN;
                den = -den;
            }
            if (tN < 0 || tN > den || sN < 0 || sN > den) continue;
            if (tN == 0 || tN == den || sN == 0 || sN == den) {
                out.degenerate = true;  // projection through a vertex
                return out;
            }
            // interior transversal crossing; decide over/under by exact height
            // height along stick k at parameter t: c0 + t*(c1-c0)
            auto height_num = [&](int k, i128 tn, i128 td) -> i128 {
                return (i128)gs[k].c * td + tn * (gs[k + 1].c - gs[k].c);
            };
            i128 hi_ = height_num(i, tN, den);  // both scaled by den
            i128 hj_ = height_num(j, sN, den);
            if (hi_ == hj_) {
                out.degenerate = true;  // would be a 3D intersection; not generic
                return out;
            }
            Crossing cr;
            bool i_over = hi_ > hj_;
            cr.over_stick = i_over ? i : j;
            cr.under_stick = i_over ? j : i;
            cr.over_t = i_over ? make_rat128(tN, den) : make_rat128(sN, den);
            cr.under_t = i_over ? make_rat128(sN, den) : make_rat128(tN, den);
            P2 dover = i_over ? di : dj;
            P2 dunder = i_over ? dj : di;
            cr.sign = cross2(dover, dunder) > 0 ? 1 : -1;
            cr.px = make_rat128((i128)A[i].x * den + tN * di.x, den);
            cr.py = make_rat128((i128)A[i].y * den + tN * di.y, den);
            out.crossings.push_back(cr);
        }
    }

    // triple points: two crossings at the same parameter of the same stick
    for (int k = 0; k < n; ++k) {
        std::vector<Rat> params;
        for (const Crossing& cr : out.crossings) {
            if (cr.over_stick == k) params.push_back(cr.over_t);
            if (cr.under_stick == k) params.push_back(cr.under_t);
        }
        std::sort(params.begin(), params.end());
        for (size_t s = 1; s < params.size(); ++s)
            if (params[s - 1] == params[s]) {
                out.degenerate = true;
                return out;
            }
    }
    return out;
}

}  // namespace

std::string pd_string(const Diagram& d) {
    std::ostringstream os;
    for (size_t i = 0; i < d.pd.size(); ++i) {
        if (i) os << " ";
        os << "X(" << d.pd[i][0] << "," << d.pd[i][1] << "," << d.pd[i][2] << ","
           << d.pd[i][3] << ")";
    }
    return os.str();
}

Result<Diagram> project(const Polygon& p) {
    if (!validate(p).ok())
        return Error{ErrCode::InvalidPolygon, "project requires a valid closed polygon"};
    const int n = (int)p.sticks.size();

    for (int tilt = 0; tilt < 17; ++tilt) {
        ProjAttempt att = try_project(p, tilt);
        if (att.degenerate) continue;

        Diagram d;
        d.tilt_index = tilt;
        d.crossings = att.crossings;
        const int nc = (int)d.crossings.size();

        // walk passes in traversal order
        struct Pass {
            int crossing;
            bool over;
            Rat t;
        };
        std::vector<std::vector<Pass>> per_stick(n);
        for (int c = 0; c < nc; ++c) {
            per_stick[d.crossings[c].over_stick].push_back({c, true, d.crossings[c].over_t});
            per_stick[d.crossings[c].under_stick].push_back(
                {c, false, d.crossings[c].under_t});
        }
        std::vector<Pass> walk;
        for (int s = 0; s < n; ++s) {
            std::sort(per_stick[s].begin(), per_stick[s].end(),
                      [](const Pass& a, const Pass& b) { return a.t < b.t; });
            for (auto& ps : per_stick[s]) walk.push_back(ps);
        }
        assert((int)walk.size() == 2 * nc);

        // crossing labels in first-encounter order
        std::vector<int> label(nc, 0);
        int next_label = 1;
        for (auto& ps : walk)
            if (label[ps.crossing] == 0) label[ps.crossing] = next_label++;

        std::ostringstream gauss;
        for (size_t k = 0; k < walk.size(); ++k) {
            if (k) gauss << ' ';
            const Crossing& cr = d.crossings[walk[k].crossing];
            gauss << (walk[k].over ? 'O' : 'U') << label[walk[k].crossing]
                  << (cr.sign > 0 ? '+' : '-');
        }
        d.gauss = gauss.str();

        // PD: edge k+1 leaves pass k; edge in of pass k is k (or 2n at k=0)
        const int m = 2 * nc;
        std::vector<int> over_pos(nc), under_pos(nc);
        for (int k = 0; k < m; ++k) {
            if (walk[k].over)
                over_pos[walk[k].crossing] = k;
            else
                under_pos[walk[k].crossing] = k;
        }
        auto edge_in = [&](int k) { return k == 0 ? m : k; };
        auto edge_out = [&](int k) { return k + 1; };
        // emit in label order for determinism
        std::vector<int> by_label(nc);
        for (int c = 0; c < nc; ++c) by_label[label[c] - 1] = c;
        for (int li = 0; li < nc; ++li) {
            int c = by_label[li];
            int a = edge_in(under_pos[c]);
            int cc = edge_out(under_pos[c]);
            int in_o = edge_in(over_pos[c]);
            int out_o = edge_out(over_pos[c]);
            if (d.crossings[c].sign > 0)
                d.pd.push_back({a, out_o, cc, in_o});
            else
                d.pd.push_back({a, in_o, cc, out_o});
        }
        d.writhe = 0;
        for (auto& cr : d.crossings) d.writhe += cr.sign;
        return d;
    }
    return Error{ErrCode::DegeneracyUnresolved,
                 "no generic projection in the shear schedule"};
}

// ---- Alexander polynomial from PD ---------------------------------------

namespace {

struct PdInfo {
    int n = 0;
    std::vector<int> sign;        // per crossing
    std::vector<int> in_over, out_over, in_under, out_under;  // edge labels
    std::vector<int> arc_of_edge;  // dense arc ids, 0..n-1
    int arcs = 0;
};

Result<PdInfo> analyze_pd(const std::vector<std::array<int, 4>>& pd) {
    PdInfo info;
    info.n = (int)pd.size();
    const int m = 2 * info.n;
    std::vector<int> seen(m + 1, 0);
    for (auto& x : pd)
        for (int e : x) {
            if (e < 1 || e > m) return Error{ErrCode::InconsistentDiagram, "edge label out of range"};
            seen[e]++;
        }
    for (int e = 1; e <= m; ++e)
        if (seen[e] != 2) return Error{ErrCode::InconsistentDiagram, "edge labels must appear twice"};

    auto next_edge = [&](int e) { return e % m + 1; };
    info.sign.resize(info.n);
    info.in_over.resize(info.n);
    info.out_over.resize(info.n);
    info.in_under.resize(info.n);
    info.out_under.resize(info.n);
    for (int c = 0; c < info.n; ++c) {
        auto [a, b, cc, dd] = pd[c];
        info.in_under[c] = a;
        info.out_under[c] = cc;
        if (next_edge(a) != cc)
            return Error{ErrCode::InconsistentDiagram, "under strand edges not consecutive"};
        if (next_edge(dd) == b) {
            info.sign[c] = 1;  // over runs d -> b
            info.in_over[c] = dd;
            info.out_over[c] = b;
        } else if (next_edge(b) == dd) {
            info.sign[c] = -1;  // over runs b -> d
            info.in_over[c] = b;
            info.out_over[c] = dd;
        } else {
            return Error{ErrCode::InconsistentDiagram, "over strand edges not consecutive"};
        }
    }

    // arcs: edges merged across over-passes
    std::vector<int> parent(m + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        return parent[v] == v ? v : parent[v] = find(parent[v]);
    };
    for (int c = 0; c < info.n; ++c) parent[find(info.in_over[c])] = find(info.out_over[c]);
    std::vector<int> dense(m + 1, -1);
    info.arc_of_edge.assign(m + 1, -1);
    for (int e = 1; e <= m; ++e) {
        int r = find(e);
        if (dense[r] < 0) dense[r] = info.arcs++;
        info.arc_of_edge[e] = dense[r];
    }
    if (info.arcs != info.n)
        return Error{ErrCode::InconsistentDiagram, "arc count mismatch"};
    return info;
}

// dense integer polynomial helpers for fraction-free elimination
struct ZPoly {
    std::vector<i64> c;  // c[i] = coeff of t^i
    bool zero() const { return c.empty(); }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

ZPoly zp_sub_mul(const ZPoly& a, const ZPoly& b, const ZPoly& x, const ZPoly& y) {
    // a*b - x*y
    size_t n = std::max(a.c.size() + b.c.size(), x.c.size() + y.c.size());
    std::vector<i128> acc(n ? n - 1 : 0, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) acc[i + j] += (i128)a.c[i] * b.c[j];
    for (size_t i = 0; i < x.c.size(); ++i)
        for (size_t j = 0; j < y.c.size(); ++j) acc[i + j] -= (i128)x.c[i] * y.c[j];
    ZPoly out;
    out.c.resize(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) {
        assert(acc[i] <= INT64_MAX && acc[i] >= INT64_MIN);
        out.c[i] = (i64)acc[i];
    }
    out.trim();
    return out;
}

ZPoly zp_div_exact(const ZPoly& a, const ZPoly& d) {
    assert(!d.zero());
    ZPoly rem = a, out;
    out.c.assign(a.c.size(), 0);
    while (!rem.zero() && rem.c.size() >= d.c.size()) {
        size_t e = rem.c.size() - d.c.size();
        i64 lr = rem.c.back(), ld = d.c.back();
        assert(lr % ld == 0);
        i64 q = lr / ld;
        out.c[e] = q;
        for (size_t i = 0; i < d.c.size(); ++i) {
            i128 v = (i128)rem.c[e + i] - (i128)q * d.c[i];
            assert(v <= INT64_MAX && v >= INT64_MIN);
            rem.c[e + i] = (i64)v;
        }
        rem.trim();
    }
    assert(rem.zero());
    out.trim();
    return out;
}

// determinant of an (m x m) matrix of integer polynomials, Bareiss scheme
ZPoly zp_det(std::vector<std::vector<ZPoly>> M) {
    const int m = (int)M.size();
    if (m == 0) return ZPoly{{1}};
    int sign = 1;
    ZPoly prev{{1}};
    for (int k = 0; k < m - 1; ++k) {
        int piv = -1;
        for (int r = k; r < m; ++r)
            if (!M[r][k].zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return ZPoly{};  // zero determinant
        if (piv != k) {
            std::swap(M[piv], M[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < m; ++i) {
            for (int j = k + 1; j < m; ++j) {
                ZPoly num = zp_sub_mul(M[i][j], M[k][k], M[i][k], M[k][j]);
                M[i][j] = zp_div_exact(num, prev);
            }
            M[i][k] = ZPoly{};
        }
        prev = M[k][k];
    }
    ZPoly det = M[m - 1][m - 1];
    if (sign < 0)
        for (auto& v : det.c) v = -v;
    return det;
}

}  // namespace

Result<LaurentPoly> alexander_from_pd(const std::vector<std::array<int, 4>>& pd) {
    Result<PdInfo> info = analyze_pd(pd);
    if (!info) return info.error();
    const int n = info->n;
    if (n == 0) return LaurentPoly::one();

    // Alexander matrix over Z[t]: one row per crossing, one column per arc.
    // positive: (1-t)*o + t*j - k ; negative (scaled by t): (t-1)*o + j - t*k
    std::vector<std::vector<ZPoly>> M(n, std::vector<ZPoly>(n));
    auto add = [&](int r, int col, std::initializer_list<i64> poly) {
        ZPoly& p = M[r][col];
        std::vector<i64> v(poly);
        if (p.c.size() < v.size()) p.c.resize(v.size(), 0);
        for (size_t i = 0; i < v.size(); ++i) p.c[i] += v[i];
        p.trim();
    };
    for (int c = 0; c < n; ++c) {
        int o = info->arc_of_edge[info->in_over[c]];
        int j = info->arc_of_edge[info->in_under[c]];
        int k = info->arc_of_edge[info->out_under[c]];
        if (info->sign[c] > 0) {
            add(c, o, {1, -1});
            add(c, j, {0, 1});
            add(c, k, {-1});
        } else {
            add(c, o, {-1, 1});
            add(c, j, {1});
            add(c, k, {0, -1});
        }
    }
    // delete last row and column
    std::vector<std::vector<ZPoly>> sub(n - 1, std::vector<ZPoly>(n - 1));
    for (int i = 0; i + 1 < n; ++i)
        for (int j = 0; j + 1 < n; ++j) sub[i][j] = M[i][j];
    ZPoly det = zp_det(std::move(sub));

    LaurentPoly out;
    for (size_t i = 0; i < det.c.size(); ++i) out.add_term(det.c[i], (int)i);
    if (out.is_zero())
        return Error{ErrCode::InconsistentDiagram, "vanishing Alexander determinant"};
    return out.normalized();
}

Result<i64> determinant_from_pd(const std::vector<std::array<int, 4>>& pd) {
    Result<LaurentPoly> a = alexander_from_pd(pd);
    if (!a) return a.error();
    return std::abs(a->eval(-1));
}

Result<LaurentPoly> alexander(const Diagram& d) { return alexander_from_pd(d.pd); }

Result<i64> determinant(const Diagram& d) { return determinant_from_pd(d.pd); }

// ---- Kauffman bracket -----------------------------------------------------

LaurentPoly kauffman_bracket(const std::vector<std::array<int, 4>>& pd) {
    const int n = (int)pd.size();
    const int m = 2 * n;
    LaurentPoly delta;
    delta.add_term(-1, 2);
    delta.add_term(-1, -2);
    LaurentPoly total;
    for (unsigned state = 0; state < (1u << n); ++state) {
        std::vector<int> parent(m + 1);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int v) {
            return parent[v] == v ? v : parent[v] = find(parent[v]);
        };
        auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
        int a_count = 0;
        for (int c = 0; c < n; ++c) {
            auto [a, b, cc, dd] = pd[c];
            if (state & (1u << c)) {  // A smoothing: join (a,b), (c,d)
                a_count++;
                unite(a, b);
                unite(cc, dd);
            } else {  // B smoothing: join (a,d), (b,c)
                unite(a, dd);
                unite(b, cc);
            }
        }
        int loops = 0;
        for (int e = 1; e <= m; ++e)
            if (find(e) == e) loops++;
        if (n == 0) loops = 1;
        LaurentPoly sterm = LaurentPoly::term(1, a_count - (n - a_count));
        for (int i = 0; i < loops - 1; ++i) sterm = sterm * delta;
        total = total + sterm;
    }
    if (n == 0) return LaurentPoly::one();
    return total;
}

LaurentPoly normalized_bracket(const std::vector<std::array<int, 4>>& pd) {
    Result<PdInfo> info = analyze_pd(pd);
    assert(info.ok());
    int w = 0;
    for (int s : info->sign) w += s;
    LaurentPoly br = kauffman_bracket(pd);
    // (-A)^(-3w) = (-1)^w * A^(-3w)
    LaurentPoly f = LaurentPoly::term((w % 2 == 0) ? 1 : -1, -3 * w);
    return f * br;
}

// ---- classification -------------------------------------------------------

const char* knot_name(KnotTag t) {
    switch (t) {
        case KnotTag::Unknot: return "unknot";
        case KnotTag::K3_1: return "3_1";
        case KnotTag::K4_1: return "4_1";
        case KnotTag::K5_1: return "5_1";
        case KnotTag::K5_2: return "5_2";
        case KnotTag::Unknown: return "unknown";
    }
    return "?";
}

const LaurentPoly& reference_alexander(KnotTag t) {
    static const LaurentPoly unknot = LaurentPoly::one();
    static const LaurentPoly k31 = [] {
        LaurentPoly p;
        p.add_term(1, 0);
        p.add_term(-1, 1);
        p.add_term(1, 2);
        return p;
    }();
    static const LaurentPoly k41 = [] {
        LaurentPoly p;
        p.add_term(1, 0);
        p.add_term(-3, 1);
        p.add_term(1, 2);
        return p;
    }();
    static const LaurentPoly k51 = [] {
        LaurentPoly p;
        p.add_term(1, 0);
        p.add_term(-1, 1);
        p.add_term(1, 2);
        p.add_term(-1, 3);
        p.add_term(1, 4);
        return p;
    }();
    static const LaurentPoly k52 = [] {
        LaurentPoly p;
        p.add_term(2, 0);
        p.add_term(-3, 1);
        p.add_term(2, 2);
        return p;
    }();
    switch (t) {
        case KnotTag::K3_1: return k31;
        case KnotTag::K4_1: return k41;
        case KnotTag::K5_1: return k51;
        case KnotTag::K5_2: return k52;
        default: return unknot;
    }
}

const std::vector<std::array<int, 4>>& reference_pd(KnotTag t) {
    static const std::vector<std::array<int, 4>> k31 = {
        {1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}};
    static const std::vector<std::array<int, 4>> k41 = {
        {4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}};
    static const std::vector<std::array<int, 4>> k51 = {
        {2, 8, 3, 7}, {4, 10, 5, 9}, {6, 2, 7, 1}, {8, 4, 9, 3}, {10, 6, 1, 5}};
    static const std::vector<std::array<int, 4>> k52 = {
        {1, 4, 2, 5}, {3, 8, 4, 9}, {5, 10, 6, 1}, {9, 6, 10, 7}, {7, 2, 8, 3}};
    static const std::vector<std::array<int, 4>> none = {};
    switch (t) {
        case KnotTag::K3_1: return k31;
        case KnotTag::K4_1: return k41;
        case KnotTag::K5_1: return k51;
        case KnotTag::K5_2: return k52;
        default: return none;
    }
}

Result<KnotType> classify(const Polygon& p) {
    Result<Diagram> d = project(p);
    if (!d) return d.error();
    Result<LaurentPoly> alex = alexander(*d);
    if (!alex) return alex.error();
    KnotType out;
    out.alex = alex->normalized();
    out.det = std::abs(out.alex.eval(-1));
    out.crossings = (int)d->crossings.size();

    static const KnotTag nontrivial[] = {KnotTag::K3_1, KnotTag::K4_1, KnotTag::K5_1,
                                         KnotTag::K5_2};
    if (out.alex == reference_alexander(KnotTag::Unknot)) {
        if (out.crossings <= kUnknotCrossingCap) {
            out.tag = KnotTag::Unknot;
        } else {
            out.tag = KnotTag::Unknown;
            out.caveat_alexander_trivial_high_crossing = true;
        }
        return out;
    }
    for (KnotTag t : nontrivial) {
        if (out.alex == reference_alexander(t)) {
            out.tag = t;
            return out;
        }
    }
    out.tag = KnotTag::Unknown;
    return out;
}

}  // namespace shknot
