#include "support/gen.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace shknot::test {

Polygon poly(const std::string& word, Lattice lat) {
    Result<Polygon> p = parse_word(word, lat);
    if (!p) {
        std::fprintf(stderr, "bad test word `%s`: %s\n", word.c_str(),
                     p.error().message.c_str());
        std::abort();
    }
    return *p;
}

namespace {

i64 pack(Vec3 g) {
    // raster coordinates stay well inside +-2^20
    return ((g.a + (1 << 20)) << 42) | ((g.b + (1 << 20)) << 21) | (g.c + (1 << 20));
}

// minimal sticks needed to realize displacement d with lengths <= max_len
i64 min_sticks_needed(Lattice lat, Vec3 d, int max_len) {
    i64 planar;
    if (lat == Lattice::Cubic) {
        planar = (std::abs(d.a) + max_len - 1) / max_len +
                 (std::abs(d.b) + max_len - 1) / max_len;
    } else {
        i64 hex = (std::abs(d.a) + std::abs(d.b) + std::abs(d.a + d.b)) / 2;
        planar = (hex + max_len - 1) / max_len;
    }
    return planar + (std::abs(d.c) + max_len - 1) / max_len;
}

struct Builder {
    Lattice lat;
    int target_sticks;
    int max_len;
    std::mt19937* rng;
    std::vector<Stick> word;
    std::unordered_set<i64> occupied;
    Vec3 pos{};

    bool place(const Stick& s) {
        std::vector<i64> added;
        bool ok = true;
        bool first = true;
        raster_points(lat, pos, s, [&](Vec3 g) {
            if (first) {
                first = false;
                return;
            }
            if (!ok) return;
            i64 k = pack(g);
            if (!occupied.insert(k).second)
                ok = false;
            else
                added.push_back(k);
        });
        if (!ok) {
            for (i64 k : added) occupied.erase(k);
            return false;
        }
        word.push_back(s);
        pos = pos + s.len * dir_step(lat, s.dir);
        return true;
    }

    void unplace() {
        Stick s = word.back();
        word.pop_back();
        pos = pos - s.len * dir_step(lat, s.dir);
        bool first = true;
        raster_points(lat, pos, s, [&](Vec3 g) {
            if (first) {
                first = false;
                return;
            }
            occupied.erase(pack(g));
        });
    }

    bool extend() {
        int placed = (int)word.size();
        int remaining = target_sticks - placed;
        if (remaining == 0) {
            // closure and cyclic maximality
            return pos.zero() && word.front().dir != word.back().dir;
        }
        if (min_sticks_needed(lat, (-1) * pos, max_len) > remaining) return false;

        std::vector<Stick> cands;
        for (int d = 0; d < 4; ++d) {
            if (!dir_legal(lat, (Dir)d)) continue;
            if (!word.empty() && word.back().dir == (Dir)d) continue;
            if (remaining == 1 && word.front().dir == (Dir)d) continue;
            for (int len = 1; len <= max_len; ++len) {
                cands.push_back({(Dir)d, len});
                cands.push_back({(Dir)d, -len});
            }
        }
        std::shuffle(cands.begin(), cands.end(), *rng);
        for (const Stick& s : cands) {
            if (remaining == 1 && !(pos + s.len * dir_step(lat, s.dir)).zero()) continue;
            if (!place(s)) continue;
            if (extend()) return true;
            unplace();
        }
        return false;
    }
};

}  // namespace

Polygon random_polygon(Lattice lat, int max_sticks, int max_len, std::mt19937& rng) {
    for (;;) {
        std::uniform_int_distribution<int> nd(4, max_sticks);
        Builder b;
        b.lat = lat;
        b.target_sticks = nd(rng);
        b.max_len = max_len;
        b.rng = &rng;
        if (b.extend()) {
            Polygon p{lat, b.word, {}};
            if (validate(p).ok()) return p;
        }
    }
}

std::string catalog_path(const std::string& name) {
    return std::string(SHKNOT_CATALOG_DIR) + "/" + name;
}

Polygon load_catalog(const std::string& name) {
    std::ifstream in(catalog_path(name));
    if (!in) {
        std::fprintf(stderr, "missing catalog file %s\n", name.c_str());
        std::abort();
    }
    std::stringstream ss;
    ss << in.rdbuf();
    Result<Polygon> p = parse_knotw(ss.str());
    if (!p) {
        std::fprintf(stderr, "bad catalog file %s: %s\n", name.c_str(),
                     p.error().message.c_str());
        std::abort();
    }
    return *p;
}

}  // namespace shknot::test
