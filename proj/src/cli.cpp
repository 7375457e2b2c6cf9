#include "shknot/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "shknot/core.hpp"
#include "shknot/enumerate.hpp"
#include "shknot/knot_id.hpp"
#include "shknot/moves.hpp"
#include "shknot/transform.hpp"

namespace shknot {

namespace {

Result<Polygon> load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) return Error{ErrCode::IoError, "cannot open " + path};
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_knotw(ss.str());
}

bool write_file(const std::string& path, const std::string& content, std::ostream& err) {
    std::ofstream out(path);
    if (!out) {
        err << "error: cannot write " << path << "\n";
        return false;
    }
    out << content;
    return true;
}

std::string fmt3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

// ---- classify ---------------------------------------------------------------

int cmd_classify(const std::string& path, bool as_json, std::ostream& out,
                 std::ostream& err) {
    Result<Polygon> p = load_file(path);
    if (!p) {
        err << "error: " << p.error().message << "\n";
        return 1;
    }
    ValidationReport rep = validate(*p);
    if (!rep.ok()) {
        err << "error: polygon is invalid (closed=" << rep.closed
            << " maximal=" << rep.maximal << " embedded=" << rep.embedded << ")";
        if (rep.first_violation)
            err << " first violation: sticks " << rep.first_violation->stick_i << ","
                << rep.first_violation->stick_j << " " << rep.first_violation->what;
        err << "\n";
        return 1;
    }
    auto counts = stick_census(*p);
    Result<KnotType> kt = classify(*p);
    if (!kt) {
        err << "error: " << kt.error().message << "\n";
        return 1;
    }
    bool sh = p->lattice == Lattice::Sh;
    std::vector<i64> levels = sh ? w_levels(*p) : std::vector<i64>{};
    if (as_json) {
        nlohmann::ordered_json j;
        j["lattice"] = sh ? "sh" : "cubic";
        j["sticks"] = p->sticks.size();
        j["census"] = {{"nx", counts->nx}, {"ny", counts->ny}, {"nz", counts->nz},
                       {"nw", counts->nw}};
        j["edges"] = edge_length(*p);
        if (sh) {
            j["w_levels"] = levels;
            j["properly_leveled"] = properly_leveled(*p);
        }
        j["crossings"] = kt->crossings;
        j["determinant"] = kt->det;
        j["alexander"] = kt->alex.str();
        j["type"] = knot_name(kt->tag);
        if (kt->caveat_alexander_trivial_high_crossing) j["caveat"] = "alexander_trivial_high_crossing";
        out << j.dump(2) << "\n";
    } else {
        out << "lattice: " << (sh ? "sh" : "cubic") << "\n";
        out << "sticks: " << p->sticks.size() << " (x " << counts->nx << ", y "
            << counts->ny << ", z " << counts->nz << ", w " << counts->nw << ")\n";
        out << "edges: " << edge_length(*p) << "\n";
        if (sh) {
            out << "w-levels:";
            for (i64 l : levels) out << " " << l;
            out << "\n";
            out << "properly leveled: " << (properly_leveled(*p) ? "yes" : "no") << "\n";
        }
        out << "crossings: " << kt->crossings << "\n";
        out << "determinant: " << kt->det << "\n";
        out << "alexander: " << kt->alex.str() << "\n";
        out << "type: " << knot_name(kt->tag);
        if (kt->caveat_alexander_trivial_high_crossing)
            out << " (trivial Alexander above the crossing cap)";
        out << "\n";
    }
    return 0;
}

// ---- transform ---------------------------------------------------------------

int cmd_transform(const std::string& path, const std::string& to, bool rewrite,
                  const std::string& out_path, std::ostream& out, std::ostream& err) {
    Result<Polygon> p = load_file(path);
    if (!p) {
        err << "error: " << p.error().message << "\n";
        return 1;
    }
    Polygon result;
    if (to == "sh") {
        Result<Polygon> t = apply_T(*p);
        if (!t) {
            err << "error: " << t.error().message << "\n";
            return 1;
        }
        result = *t;
        out << "sticks: " << p->sticks.size() << " -> " << result.sticks.size() << "\n";
        out << "edges:  " << edge_length(*p) << " -> " << edge_length(result) << "\n";
    } else if (to == "cubic") {
        auto counts = stick_census(*p);
        if (counts.ok() && counts->nz == 0) {
            Result<Polygon> t = apply_T_inv(*p);
            if (!t) {
                err << "error: " << t.error().message << "\n";
                return 1;
            }
            result = *t;
            out << "sticks: " << p->sticks.size() << " -> " << result.sticks.size()
                << "\n";
            out << "edges:  " << edge_length(*p) << " -> " << edge_length(result) << "\n";
        } else if (rewrite) {
            Result<RewriteReport> r = sh_to_cubic_rewrite(rotate_for_x_majority(*p));
            if (!r) {
                err << "error: " << r.error().message << "\n";
                return 1;
            }
            result = r->result;
            out << "rewrite: edges " << r->input_edges << " -> "
                << edge_length(result) << " (bound "
                << 3 * r->input_edges - 2 * r->input_edges_w - r->input_edges_x
                << "), planar scalings " << r->scalings << "\n";
        } else {
            err << "error: ZSticksPresent: polygon has z-sticks; pass --rewrite\n";
            return 1;
        }
    } else {
        err << "error: --to must be sh or cubic\n";
        return 1;
    }
    std::string text = emit_knotw(result);
    if (!out_path.empty()) {
        if (!write_file(out_path, text, err)) return 1;
    } else {
        out << text;
    }
    return 0;
}

// ---- reduce -------------------------------------------------------------------

Result<MoveOutcome> apply_named_move(const Polygon& p, const std::string& move,
                                     nlohmann::ordered_json& site) {
    if (move == "corner") {
        auto c = find_reducible_corner(p);
        if (!c) return Error{ErrCode::NoApplicableMove, "no reducible corner"};
        site["stick_index"] = c->stick_index;
        site["leg_length"] = c->leg_length;
        return corner_to_z(p, *c);
    }
    if (move == "bevel") {
        Result<MoveOutcome> direct = unit_corner_bevel(p);
        if (direct) return direct;
        // the bevel error signals the caller to rotate first; try images
        for (const Symmetry& s : symmetries(p.lattice)) {
            Result<MoveOutcome> r = unit_corner_bevel(s.apply(p));
            if (r) {
                site["rotated"] = true;
                return r;
            }
        }
        return direct;
    }
    if (move == "rmove") {
        const int n = (int)p.sticks.size();
        for (int i = 0; i < n; ++i) {
            Result<MoveOutcome> r = r_move(p, i, (i + 1) % n);
            if (r) {
                site["s_index"] = i;
                site["t_index"] = (i + 1) % n;
                return r;
            }
        }
        return Error{ErrCode::NoApplicableMove, "no admissible r-move"};
    }
    if (move == "zreplace") {
        for (int i = 0; i < (int)p.sticks.size(); ++i) {
            if (p.sticks[i].dir != Dir::Z) continue;
            Result<MoveOutcome> r = z_replace(p, i);
            if (r) {
                site["z_index"] = i;
                return r;
            }
        }
        return Error{ErrCode::NoApplicableMove, "no replaceable z-stick"};
    }
    if (move == "squeeze") {
        return squeeze_and_reduce(p);
    }
    return Error{ErrCode::ConfigInvalid, "unknown move " + move};
}

int cmd_reduce(const std::string& path, const std::string& move, bool all,
               const std::string& out_path, const std::string& trace_path,
               std::ostream& out, std::ostream& err) {
    Result<Polygon> p = load_file(path);
    if (!p) {
        err << "error: " << p.error().message << "\n";
        return 1;
    }
    Polygon cur = *p;
    std::ostringstream trace;
    int applied = 0;
    for (;;) {
        nlohmann::ordered_json site = nlohmann::ordered_json::object();
        Result<MoveOutcome> r = apply_named_move(cur, move, site);
        if (!r) {
            if (applied == 0) {
                err << "no applicable move: " << r.error().message << "\n";
                return 2;
            }
            break;
        }
        applied++;
        nlohmann::ordered_json rec;
        rec["move_tag"] = move_name(r->tag);
        rec["site"] = site;
        rec["sticks_delta"] = r->sticks_delta;
        rec["edges_delta"] = r->edges_delta;
        rec["word_after"] = word_string(r->result);
        trace << rec.dump() << "\n";
        cur = r->result;
        if (!all) break;
        if (move == "squeeze") break;  // cubic -> sh, not repeatable
    }
    out << "applied " << applied << " move(s); sticks " << p->sticks.size() << " -> "
        << cur.sticks.size() << ", edges " << edge_length(*p) << " -> "
        << edge_length(cur) << "\n";
    std::string text = emit_knotw(cur);
    if (!out_path.empty()) {
        if (!write_file(out_path, text, err)) return 1;
    } else {
        out << text;
    }
    if (!trace_path.empty()) {
        if (!write_file(trace_path, trace.str(), err)) return 1;
    }
    return 0;
}

// ---- enumerate ----------------------------------------------------------------

int cmd_enumerate(SearchConfig cfg, int shards, bool expect_theorem,
                  const std::string& out_dir, std::ostream& out, std::ostream& err) {
    std::vector<SearchConfig> parts = shard(cfg, shards);
    std::vector<Result<Census>> results(parts.size(), Census{});
    if (parts.size() == 1) {
        results[0] = search(parts[0]);
    } else {
        std::vector<std::thread> pool;
        for (size_t i = 0; i < parts.size(); ++i)
            pool.emplace_back([&, i] { results[i] = search(parts[i]); });
        for (auto& t : pool) t.join();
    }
    Census total;
    for (auto& r : results) {
        if (!r) {
            err << "error: " << r.error().message << "\n";
            return 1;
        }
        total = merge_census(total, *r);
    }
    std::string json = census_json(total, cfg);
    if (!out_dir.empty()) {
        if (!write_file(out_dir + "/census.json", json, err)) return 1;
        for (auto& [type, words] : total.polys) {
            int k = 0;
            for (const std::string& w : total.exemplars(type, cfg.exemplars_per_type)) {
                Polygon ex = *parse_word(w, Lattice::Sh);
                std::string name = out_dir + "/" + type + "_" + std::to_string(k++) +
                                   ".knotw";
                if (!write_file(name, emit_knotw(ex), err)) return 1;
            }
        }
    } else {
        out << json;
    }
    out << "closed polygons: " << total.closed_found << ", canonical:";
    for (auto& [t, s] : total.polys) out << " " << t << "=" << s.size();
    out << "\n";
    if (expect_theorem) {
        for (const std::string& t : total.nontrivial_types()) {
            if (t != "3_1" && t != "4_1") {
                err << "unexpected nontrivial type in census: " << t << "\n";
                return 1;
            }
        }
    }
    return 0;
}

// ---- bounds --------------------------------------------------------------------

int cmd_bounds(i64 s_cubic, i64 e_cubic, std::ostream& out, std::ostream& err) {
    if (s_cubic < 1 && e_cubic < 1) {
        err << "error: pass --s-cubic N or --e-cubic N (N >= 1)\n";
        return 1;
    }
    if (e_cubic >= 1) {
        BoundReport r = edge_lower_bound(e_cubic);
        out << "e_sh >= (3*" << r.input << "+30)/8 = " << r.exact_text << " ("
            << fmt3(r.approx) << ") -> " << r.ceil_bound << "\n";
    }
    if (s_cubic >= 1) {
        BoundReport r = stick_lower_bound(s_cubic);
        out << "s_sh >= 2*sqrt(" << r.input << "+9/4)-3 = " << r.exact_text << " ("
            << fmt3(r.approx) << ") -> " << r.ceil_bound << "\n";
    }
    return 0;
}

}  // namespace

// ---- render ----------------------------------------------------------------------

std::string render_svg(const Polygon& p, bool tilt_view) {
    // drawing coordinates per vertex
    std::vector<Vec3> vs = vertices(p);
    const int n = (int)p.sticks.size();
    struct Pt {
        double x, y;
    };
    std::vector<Pt> pts(vs.size());
    Result<Diagram> dia = project(p);

    double q = 1.0, q2 = 1.0;
    if (tilt_view && dia.ok() && dia->tilt_index > 0) {
        static const int kq[17] = {1, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                                   47, 53, 59, 61, 67};
        q = kq[dia->tilt_index];
        q2 = q * q;
    }
    for (size_t i = 0; i < vs.size(); ++i) {
        Vec3 g = geom_point(p.lattice, vs[i]);
        double u = (double)g.a, v = (double)g.b, c = (double)g.c;
        double U = u, V = v;
        if (tilt_view) {
            U = u - c * (q / q2);
            V = v - c * (1.0 / q2);
        }
        if (p.lattice == Lattice::Sh) {
            pts[i] = {U / 2.0, V * std::sqrt(3.0) / 2.0};
        } else {
            pts[i] = {U, V};
        }
    }
    double minx = 1e18, miny = 1e18, maxx = -1e18, maxy = -1e18;
    for (auto& pt : pts) {
        minx = std::min(minx, pt.x);
        maxx = std::max(maxx, pt.x);
        miny = std::min(miny, pt.y);
        maxy = std::max(maxy, pt.y);
    }
    const double scale = 40.0, margin = 30.0, gap = 0.22;
    auto X = [&](double x) { return margin + (x - minx) * scale; };
    auto Y = [&](double y) { return margin + (maxy - y) * scale; };

    // per-level colors; vertical sticks black
    static const char* palette[] = {"#c0392b", "#2e86c1", "#27ae60", "#8e44ad",
                                    "#d68910", "#16a085", "#7d3c98", "#2c3e50"};
    std::vector<i64> levels = w_levels(p);
    auto level_color = [&](i64 c) -> std::string {
        for (size_t i = 0; i < levels.size(); ++i)
            if (levels[i] == c) return palette[i % 8];
        return "#555555";
    };

    // under-strand gaps: param intervals to skip per stick
    std::vector<std::vector<std::pair<double, double>>> gaps(n);
    if (dia.ok()) {
        for (const Crossing& cr : dia->crossings) {
            // only meaningful when drawing the projection actually used
            if (!tilt_view && dia->tilt_index != 0) {
                // straight-down drawing: skip gaps for crossings involving
                // vertical sticks (they project to points here)
                if (dir_vertical(p.lattice, p.sticks[cr.under_stick].dir) ||
                    dir_vertical(p.lattice, p.sticks[cr.over_stick].dir))
                    continue;
            }
            double t = cr.under_t.approx();
            double len = (double)std::abs(p.sticks[cr.under_stick].len);
            double half = gap / std::max(1.0, len);
            gaps[cr.under_stick].push_back({t - half, t + half});
        }
    }

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
        << fmt3((maxx - minx) * scale + 2 * margin) << "\" height=\""
        << fmt3((maxy - miny) * scale + 2 * margin) << "\">\n";
    svg << "<g stroke-width=\"3\" stroke-linecap=\"round\" fill=\"none\">\n";
    for (int i = 0; i < n; ++i) {
        bool vertical = dir_vertical(p.lattice, p.sticks[i].dir);
        std::string color = vertical ? "#000000" : level_color(vs[i].c);
        Pt a = pts[i], b = pts[i + 1];
        if (!tilt_view && vertical && std::abs(a.x - b.x) < 1e-9 &&
            std::abs(a.y - b.y) < 1e-9) {
            // vertical stick seen end-on: draw a dot
            svg << "<circle cx=\"" << fmt3(X(a.x)) << "\" cy=\"" << fmt3(Y(a.y))
                << "\" r=\"2.5\" fill=\"#000000\" stroke=\"none\"/>\n";
            continue;
        }
        std::vector<std::pair<double, double>> segs = {{0.0, 1.0}};
        std::sort(gaps[i].begin(), gaps[i].end());
        std::vector<std::pair<double, double>> keep;
        double cur = 0.0;
        for (auto [g0, g1] : gaps[i]) {
            if (g0 > cur) keep.push_back({cur, std::max(cur, g0)});
            cur = std::max(cur, g1);
        }
        if (cur < 1.0) keep.push_back({cur, 1.0});
        if (gaps[i].empty()) keep = segs;
        for (auto [t0, t1] : keep) {
            if (t1 - t0 < 1e-9) continue;
            double x0 = a.x + (b.x - a.x) * t0, y0 = a.y + (b.y - a.y) * t0;
            double x1 = a.x + (b.x - a.x) * t1, y1 = a.y + (b.y - a.y) * t1;
            svg << "<line x1=\"" << fmt3(X(x0)) << "\" y1=\"" << fmt3(Y(y0))
                << "\" x2=\"" << fmt3(X(x1)) << "\" y2=\"" << fmt3(Y(y1))
                << "\" stroke=\"" << color << "\"/>\n";
        }
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

namespace {

int cmd_render(const std::string& path, const std::string& out_path,
               const std::string& plane, std::ostream& out, std::ostream& err) {
    Result<Polygon> p = load_file(path);
    if (!p) {
        err << "error: " << p.error().message << "\n";
        return 1;
    }
    if (!validate(*p).ok()) {
        err << "error: polygon is invalid\n";
        return 1;
    }
    std::string svg = render_svg(*p, plane == "tilt");
    if (!out_path.empty()) {
        if (!write_file(out_path, svg, err)) return 1;
        out << "wrote " << out_path << "\n";
    } else {
        out << svg;
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"lattice knots in the cubic and simple hexagonal lattices"};
    app.require_subcommand(1);

    // classify
    auto* c = app.add_subcommand("classify", "identify a .knotw polygon");
    std::string c_path;
    bool c_json = false;
    c->add_option("path", c_path)->required();
    c->add_flag("--json", c_json);

    // transform
    auto* t = app.add_subcommand("transform", "apply T / T^-1 / the edge rewrite");
    std::string t_path, t_to, t_out;
    bool t_rewrite = false;
    t->add_option("path", t_path)->required();
    t->add_option("--to", t_to)->required()->check(CLI::IsMember({"sh", "cubic"}));
    t->add_flag("--rewrite", t_rewrite);
    t->add_option("-o,--out", t_out);

    // reduce
    auto* r = app.add_subcommand("reduce", "apply a knot-type-preserving move");
    std::string r_path, r_move_name, r_out, r_trace;
    bool r_all = false;
    r->add_option("path", r_path)->required();
    r->add_option("--move", r_move_name)
        ->required()
        ->check(CLI::IsMember({"corner", "bevel", "rmove", "zreplace", "squeeze"}));
    r->add_flag("--all", r_all);
    r->add_option("-o,--out", r_out);
    r->add_option("--trace", r_trace);

    // enumerate
    auto* e = app.add_subcommand("enumerate", "bounded census over sh stick words");
    SearchConfig cfg;
    int e_shards = 1;
    bool e_expect = false;
    std::string e_out, e_pattern;
    e->add_option("--sticks", cfg.total_sticks);
    e->add_option("--max-len", cfg.max_stick_len);
    e->add_option("--w-pattern", e_pattern,
                  "space-separated level pairs, e.g. \"1,3 2,3 2,4 1,4\"");
    e->add_option("--shards", e_shards);
    e->add_option("--node-budget", cfg.node_budget);
    e->add_flag("--expect-theorem", e_expect);
    e->add_option("--out", e_out);

    // bounds
    auto* b = app.add_subcommand("bounds", "lower bounds from cubic invariants");
    i64 b_s = 0, b_e = 0;
    b->add_option("--s-cubic", b_s);
    b->add_option("--e-cubic", b_e);

    // render
    auto* v = app.add_subcommand("render", "emit an SVG figure");
    std::string v_path, v_out, v_plane = "xy";
    v->add_option("path", v_path)->required();
    v->add_option("-o,--out", v_out);
    v->add_option("--plane", v_plane)->check(CLI::IsMember({"xy", "tilt"}));

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& ex) {
        if (ex.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << ex.what() << "\n";
        return 1;
    }

    if (c->parsed()) return cmd_classify(c_path, c_json, out, err);
    if (t->parsed()) return cmd_transform(t_path, t_to, t_rewrite, t_out, out, err);
    if (r->parsed()) return cmd_reduce(r_path, r_move_name, r_all, r_out, r_trace, out, err);
    if (e->parsed()) {
        if (!e_pattern.empty()) {
            cfg.w_pattern.clear();
            std::istringstream ps(e_pattern);
            std::string tok;
            int maxlevel = 0;
            while (ps >> tok) {
                int a = 0, bb = 0;
                if (std::sscanf(tok.c_str(), "%d,%d", &a, &bb) != 2) {
                    err << "error: bad --w-pattern token " << tok << "\n";
                    return 1;
                }
                cfg.w_pattern.push_back({a, bb});
                maxlevel = std::max({maxlevel, a, bb});
            }
            cfg.level_heights.clear();
            for (int h = 0; h < (int)cfg.w_pattern.size(); ++h)
                cfg.level_heights.push_back(h);
            // census set must match the new planar total
            int planar = cfg.total_sticks - (int)cfg.w_pattern.size();
            std::vector<std::array<int, 3>> all;
            for (int x = 0; x <= planar; ++x)
                for (int y = 0; x + y <= planar; ++y) all.push_back({x, y, planar - x - y});
            cfg.census_set = all;
        } else if (cfg.total_sticks != 11) {
            int planar = cfg.total_sticks - (int)cfg.w_pattern.size();
            std::vector<std::array<int, 3>> all;
            for (int x = 0; x <= planar; ++x)
                for (int y = 0; x + y <= planar; ++y) all.push_back({x, y, planar - x - y});
            cfg.census_set = all;
        }
        return cmd_enumerate(cfg, e_shards, e_expect, e_out, out, err);
    }
    if (b->parsed()) return cmd_bounds(b_s, b_e, out, err);
    if (v->parsed()) return cmd_render(v_path, v_out, v_plane, out, err);
    err << "error: no subcommand\n";
    return 1;
}

}  // namespace shknot
