#include "shknot/enumerate.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

namespace shknot {

std::vector<std::array<int, 3>> SearchConfig::default_census_set() {
    std::set<std::array<int, 3>> out;
    for (std::array<int, 3> base : {std::array<int, 3>{4, 2, 1},
                                    std::array<int, 3>{3, 3, 1},
                                    std::array<int, 3>{3, 2, 2}}) {
        std::sort(base.begin(), base.end());
        do {
            out.insert(base);
        } while (std::next_permutation(base.begin(), base.end()));
    }
    return {out.begin(), out.end()};
}

i64 Census::count(const std::string& type) const {
    auto it = polys.find(type);
    return it == polys.end() ? 0 : (i64)it->second.size();
}

std::vector<std::string> Census::exemplars(const std::string& type, int k) const {
    std::vector<std::string> out;
    auto it = polys.find(type);
    if (it == polys.end()) return out;
    for (const std::string& w : it->second) {
        if ((int)out.size() >= k) break;
        out.push_back(w);
    }
    return out;
}

std::vector<std::string> Census::nontrivial_types() const {
    std::vector<std::string> out;
    for (auto& [t, s] : polys)
        if (t != "unknot" && !s.empty()) out.push_back(t);
    return out;
}

Census merge_census(Census a, const Census& b) {
    for (auto& [t, s] : b.polys) a.polys[t].insert(s.begin(), s.end());
    a.explored += b.explored;
    a.pruned += b.pruned;
    a.closed_found += b.closed_found;
    a.max_stick_len_seen = std::max(a.max_stick_len_seen, b.max_stick_len_seen);
    a.budget_exhausted = a.budget_exhausted || b.budget_exhausted;
    a.seconds += b.seconds;
    return a;
}

namespace {

// Validate the config and derive the traversal: a single cycle through all
// levels. Returns the level visit order l0, l1, ... (1-based level ids) and
// the w-stick (i -> j) for each hop; the final hop returns to l0.
struct Traversal {
    std::vector<int> level_order;     // size m
    std::vector<int> hop_pattern_ix;  // which w_pattern entry each hop uses
};

Result<Traversal> derive_traversal(const SearchConfig& cfg) {
    const int m = (int)cfg.w_pattern.size();
    if (m < 2) return Error{ErrCode::ConfigInvalid, "need at least two w-sticks"};
    if ((int)cfg.level_heights.size() != m)
        return Error{ErrCode::ConfigInvalid, "level_heights size must match w-stick count"};
    for (int i = 1; i < m; ++i)
        if (cfg.level_heights[i] <= cfg.level_heights[i - 1])
            return Error{ErrCode::ConfigInvalid, "level_heights must increase"};
    std::vector<int> degree(m + 1, 0);
    for (auto [i, j] : cfg.w_pattern) {
        if (i < 1 || j < 1 || i > m || j > m || i == j)
            return Error{ErrCode::ConfigInvalid, "w_pattern level out of range"};
        degree[i]++;
        degree[j]++;
    }
    for (int l = 1; l <= m; ++l)
        if (degree[l] != 2)
            return Error{ErrCode::ConfigInvalid,
                         "every level needs exactly two w-stick endpoints"};
    // walk the cycle from level 1
    Traversal tv;
    std::vector<bool> used(m, false);
    int cur = 1;
    for (int step = 0; step < m; ++step) {
        tv.level_order.push_back(cur);
        int chosen = -1;
        for (int e = 0; e < m; ++e) {
            if (used[e]) continue;
            if (cfg.w_pattern[e].first == cur || cfg.w_pattern[e].second == cur) {
                chosen = e;
                break;
            }
        }
        if (chosen < 0) return Error{ErrCode::ConfigInvalid, "w_pattern is disconnected"};
        used[chosen] = true;
        tv.hop_pattern_ix.push_back(chosen);
        cur = cfg.w_pattern[chosen].first == cur ? cfg.w_pattern[chosen].second
                                                 : cfg.w_pattern[chosen].first;
    }
    if (cur != 1) return Error{ErrCode::ConfigInvalid, "w_pattern does not close"};
    if ((int)tv.level_order.size() != m ||
        std::set<int>(tv.level_order.begin(), tv.level_order.end()).size() != (size_t)m)
        return Error{ErrCode::ConfigInvalid, "w_pattern must visit each level once"};
    return tv;
}

i64 hex_dist(i64 da, i64 db) {
    return (std::abs(da) + std::abs(db) + std::abs(da + db)) / 2;
}

// dense occupancy arena over doubled (u, v, c) raster coordinates
struct Arena {
    i64 span = 0, hmin = 0, hspan = 0;
    std::vector<uint8_t> cells;

    void init(i64 planar_reach, i64 height_lo, i64 height_hi) {
        // doubled raster coords: |u| = |2(2a+b)| <= 6R, |v| = |2b| <= 2R
        span = 6 * planar_reach + 4;
        hmin = 2 * height_lo - 1;
        hspan = 2 * (height_hi - height_lo) + 3;
        cells.assign((size_t)(2 * span + 1) * (2 * span + 1) * hspan, 0);
    }
    size_t index(Vec3 g) const {
        i64 u = g.a + span, v = g.b + span, h = g.c - hmin;
        return ((size_t)u * (2 * span + 1) + v) * hspan + h;
    }
    bool occupy(Vec3 g) {
        uint8_t& c = cells[index(g)];
        if (c) return false;
        c = 1;
        return true;
    }
    void release(Vec3 g) { cells[index(g)] = 0; }
};

struct Searcher {
    SearchConfig cfg;
    Traversal tv;
    int planar_total = 0;
    Census census;
    std::function<void(const Polygon&, const std::string&)> on_polygon;
    std::optional<Polygon> found;  // for search_for_type
    KnotTag target = KnotTag::Unknown;
    bool targeting = false;
    bool stop = false;

    // DFS state
    std::vector<Stick> word;  // full word including w sticks
    Arena arena;
    Vec3 pos{};
    int counts[3] = {0, 0, 0};
    i64 arc0_counter = 0;
    std::unordered_set<std::string> seen_canonical;

    // doubled raster walk of a stick from `from` (basis coords), skipping the
    // starting point (owned by the previous stick)
    static void raster_walk(Vec3 from, Stick s, auto&& fn) {
        Vec3 g = geom_point(Lattice::Sh, from);
        g = 2 * g;
        Vec3 step = geom_step(Lattice::Sh, s.dir);
        if (s.len < 0) step = (-1) * step;
        i64 halves = 2 * std::abs(s.len);
        for (i64 k = 1; k <= halves; ++k) {
            if (!fn(g + k * step)) return;
        }
    }

    bool place(const Stick& s) {
        i64 done = 0;
        bool ok = true;
        raster_walk(pos, s, [&](Vec3 g) {
            if (!arena.occupy(g)) {
                ok = false;
                return false;
            }
            ++done;
            return true;
        });
        if (!ok) {
            i64 undo = done;
            raster_walk(pos, s, [&](Vec3 g) {
                if (undo-- <= 0) return false;
                arena.release(g);
                return true;
            });
            return false;
        }
        word.push_back(s);
        pos = pos + s.len * dir_step(Lattice::Sh, s.dir);
        return true;
    }

    void unplace() {
        Stick s = word.back();
        word.pop_back();
        pos = pos - s.len * dir_step(Lattice::Sh, s.dir);
        raster_walk(pos, s, [&](Vec3 g) {
            arena.release(g);
            return true;
        });
    }

    bool census_feasible(int px, int py, int pz, int remaining) const {
        for (const auto& t : cfg.census_set) {
            if (px <= t[0] && py <= t[1] && pz <= t[2] &&
                (t[0] - px) + (t[1] - py) + (t[2] - pz) == remaining)
                return true;
        }
        return false;
    }

    bool census_member(int px, int py, int pz) const {
        for (const auto& t : cfg.census_set)
            if (px == t[0] && py == t[1] && pz == t[2]) return true;
        return false;
    }

    void complete() {
        census.closed_found++;
        Polygon p{Lattice::Sh, word, Vec3{0, 0, cfg.level_heights[0]}};
        Polygon canon = canonicalize(p);
        std::string cword = word_string(canon);
        if (!seen_canonical.insert(cword).second) return;
        // the raster DFS already enforces self-avoidance; re-verify exactly
        // once per canonical class (both predicates are orbit-invariant)
        if (cfg.require_properly_leveled && !properly_leveled(p)) return;
        if (!validate(p).ok()) return;
        for (const Stick& s : p.sticks)
            if (s.dir != Dir::W)
                census.max_stick_len_seen =
                    std::max<int>(census.max_stick_len_seen, (int)std::abs(s.len));
        Result<KnotType> kt = classify(p);
        std::string type = kt.ok() ? knot_name(kt->tag) : "error";
        census.polys[type].insert(cword);
        if (on_polygon) on_polygon(p, type);
        if (targeting && kt.ok() && kt->tag == target) {
            found = canon;
            stop = true;
        }
    }

    // arc = current level index into tv.level_order
    void dfs(int arc, int sticks_in_arc, int planar_used) {
        if (stop) return;
        if (cfg.node_budget >= 0 && census.explored >= cfg.node_budget) {
            census.budget_exhausted = true;
            stop = true;
            return;
        }
        const int m = (int)tv.level_order.size();
        const int remaining = planar_total - planar_used;
        const int arcs_left_after = m - arc - 1;  // arcs still to start

        // option 1: close this arc and hop (requires >=1 stick in the arc)
        if (sticks_in_arc > 0 && remaining >= arcs_left_after) {
            bool last_arc = arc == m - 1;
            bool feasible = true;
            if (last_arc) {
                // must be back at the planar origin and the census must match
                feasible = pos.a == 0 && pos.b == 0 &&
                           census_member(counts[0], counts[1], counts[2]) &&
                           remaining == 0;
            }
            if (feasible) {
                int hop = tv.hop_pattern_ix[arc];
                int from_level = tv.level_order[arc];
                int to_level = last_arc ? tv.level_order[0] : tv.level_order[arc + 1];
                (void)from_level;
                i64 h0 = pos.c;
                i64 h1 = cfg.level_heights[to_level - 1];
                (void)hop;
                Stick w{Dir::W, h1 - h0};
                if (w.len != 0 && place(w)) {
                    if (arc == 0) arc0_counter++;
                    bool shard_ok =
                        arc != 0 || ((arc0_counter - 1) % cfg.shard_count == cfg.shard_index);
                    if (shard_ok) {
                        if (last_arc) {
                            if (pos.c == cfg.level_heights[0]) complete();
                        } else {
                            dfs(arc + 1, 0, planar_used);
                        }
                    } else {
                        census.pruned++;
                    }
                    unplace();
                }
            }
        }
        if (stop) return;

        // option 2: extend the current arc with another planar stick
        if (remaining - arcs_left_after <= 0) return;
        // reachability: close the whole polygon within the remaining budget
        if (hex_dist(-pos.a, -pos.b) > (i64)remaining * cfg.max_stick_len) {
            census.pruned++;
            return;
        }
        for (int d = 0; d < 3; ++d) {
            if (sticks_in_arc > 0 && word.back().dir == (Dir)d) continue;
            counts[d]++;
            bool count_ok = census_feasible(counts[0], counts[1], counts[2], remaining - 1);
            if (!count_ok) {
                counts[d]--;
                census.pruned++;
                continue;
            }
            for (int sign = +1; sign >= -1; sign -= 2) {
                for (int len = 1; len <= cfg.max_stick_len; ++len) {
                    // root symmetry cut: the very first stick is x^{+len}
                    if (word.empty() && !(d == 0 && sign > 0)) continue;
                    Stick s{(Dir)d, (i64)sign * len};
                    if (!place(s)) {
                        census.pruned++;
                        continue;
                    }
                    if (arc > 0) census.explored++;
                    dfs(arc, sticks_in_arc + 1, planar_used + 1);
                    unplace();
                    if (stop) {
                        counts[d]--;
                        return;
                    }
                }
            }
            counts[d]--;
        }
    }

    Result<Census> run() {
        Result<Traversal> t = derive_traversal(cfg);
        if (!t) return t.error();
        tv = *t;
        planar_total = cfg.total_sticks - (int)cfg.w_pattern.size();
        if (planar_total < (int)tv.level_order.size())
            return Error{ErrCode::ConfigInvalid, "not enough planar sticks for the levels"};
        for (const auto& tset : cfg.census_set)
            if (tset[0] + tset[1] + tset[2] != planar_total)
                return Error{ErrCode::ConfigInvalid,
                             "census triple does not sum to the planar stick count"};
        arena.init((i64)planar_total * cfg.max_stick_len + 1, cfg.level_heights.front(),
                   cfg.level_heights.back());
        pos = Vec3{0, 0, cfg.level_heights[0]};
        auto start = std::chrono::steady_clock::now();
        dfs(0, 0, 0);
        census.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return census;
    }
};

}  // namespace

Result<Census> search(const SearchConfig& cfg) {
    Searcher s;
    s.cfg = cfg;
    return s.run();
}

std::vector<SearchConfig> shard(const SearchConfig& cfg, int n_shards) {
    std::vector<SearchConfig> out;
    for (int i = 0; i < std::max(1, n_shards); ++i) {
        SearchConfig c = cfg;
        c.shard_index = i;
        c.shard_count = std::max(1, n_shards);
        out.push_back(c);
    }
    return out;
}

namespace {

// all single-cycle patterns over m levels: Hamiltonian cycles as edge lists
std::vector<std::vector<std::pair<int, int>>> all_cycle_patterns(int m) {
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<int> rest;
    for (int l = 2; l <= m; ++l) rest.push_back(l);
    std::sort(rest.begin(), rest.end());
    do {
        // canonical orientation: second element smaller than last kills the
        // reversed duplicate
        if (m > 2 && rest.front() > rest.back()) continue;
        std::vector<std::pair<int, int>> pat;
        int prev = 1;
        for (int l : rest) {
            pat.push_back({std::min(prev, l), std::max(prev, l)});
            prev = l;
        }
        pat.push_back({1, prev});
        out.push_back(pat);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

std::vector<std::array<int, 3>> all_census_triples(int total) {
    std::vector<std::array<int, 3>> out;
    for (int x = 0; x <= total; ++x)
        for (int y = 0; y + x <= total; ++y) out.push_back({x, y, total - x - y});
    return out;
}

}  // namespace

std::optional<Polygon> search_for_type(KnotTag target, int total_sticks, int max_len,
                                       i64 node_budget) {
    i64 used = 0;
    for (int nw = 4; nw <= 6; ++nw) {
        if (total_sticks - nw < nw) continue;  // each level needs an arc stick
        for (const auto& pat : all_cycle_patterns(nw)) {
            SearchConfig cfg;
            cfg.total_sticks = total_sticks;
            cfg.max_stick_len = max_len;
            cfg.w_pattern = pat;
            cfg.level_heights.clear();
            for (int h = 0; h < nw; ++h) cfg.level_heights.push_back(h);
            cfg.census_set = all_census_triples(total_sticks - nw);
            cfg.node_budget = node_budget < 0 ? -1 : node_budget - used;
            Searcher s;
            s.cfg = cfg;
            s.targeting = true;
            s.target = target;
            Result<Census> res = s.run();
            if (s.found) return s.found;
            if (res.ok()) {
                used += res->explored;
                if (node_budget >= 0 && used >= node_budget) return std::nullopt;
            }
        }
    }
    return std::nullopt;
}

std::string census_json(const Census& c, const SearchConfig& cfg) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json jc;
    jc["total_sticks"] = cfg.total_sticks;
    jc["max_stick_len"] = cfg.max_stick_len;
    std::vector<std::vector<int>> pat;
    for (auto [a, b] : cfg.w_pattern) pat.push_back({a, b});
    jc["w_pattern"] = pat;
    jc["census_set"] = cfg.census_set;
    jc["level_heights"] = cfg.level_heights;
    jc["require_properly_leveled"] = cfg.require_properly_leveled;
    j["config"] = jc;
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    nlohmann::ordered_json ex = nlohmann::ordered_json::object();
    for (auto& [type, words] : c.polys) {
        counts[type] = words.size();
        ex[type] = c.exemplars(type, cfg.exemplars_per_type);
    }
    j["counts"] = counts;
    j["exemplars"] = ex;
    j["closed_found"] = c.closed_found;
    j["explored"] = c.explored;
    j["pruned"] = c.pruned;
    j["max_stick_len_seen"] = c.max_stick_len_seen;
    j["budget_exhausted"] = c.budget_exhausted;
    j["seconds"] = c.seconds;
    return j.dump(2) + "\n";
}

}  // namespace shknot
