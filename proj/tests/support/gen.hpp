#pragma once

// Test-only helpers: deterministic random polygon generation and catalog
// loading.

#include <random>
#include <string>

#include "shknot/core.hpp"

namespace shknot::test {

// Parse a bare stick word, aborting on failure.
Polygon poly(const std::string& word, Lattice lat);

// Random closed, embedded, maximal polygon with 4..max_sticks sticks and
// stick lengths up to max_len. Deterministic given the rng state.
Polygon random_polygon(Lattice lat, int max_sticks, int max_len, std::mt19937& rng);

// Catalog access (files under catalog/ in the source tree).
std::string catalog_path(const std::string& name);
Polygon load_catalog(const std::string& name);

}  // namespace shknot::test
