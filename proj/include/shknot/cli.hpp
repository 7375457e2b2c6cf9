#pragma once

// Command-line front end. Exit codes: 0 success / expectation met, 1 error,
// 2 no-op (no applicable move).

#include <iosfwd>
#include <string>
#include <vector>

namespace shknot {

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

// SVG rendering (batch figures): sticks as segments in the Euclidean
// embedding, under-strand gaps at crossings, one color per w-level with
// vertical sticks black.
std::string render_svg(const class Polygon& p, bool tilt_view);

}  // namespace shknot
