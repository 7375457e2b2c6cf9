#pragma once

// Constrained exhaustive search over sh-lattice stick words: the bounded
// census behind the 11-stick classification check, and a targeted search
// used to discover catalog conformations.

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shknot/core.hpp"
#include "shknot/knot_id.hpp"
#include "shknot/result.hpp"

namespace shknot {

struct SearchConfig {
    int total_sticks = 11;
    int max_stick_len = 3;
    // vertical sticks as (level i, level j) pairs, 1-based level indices
    std::vector<std::pair<int, int>> w_pattern = {{1, 3}, {2, 3}, {2, 4}, {1, 4}};
    // admissible global (nx, ny, nz) planar censuses
    std::vector<std::array<int, 3>> census_set = default_census_set();
    std::vector<i64> level_heights = {0, 1, 2, 3};
    bool require_properly_leveled = true;
    int exemplars_per_type = 3;
    // work partition: this config explores first-level arcs with
    // index % shard_count == shard_index
    int shard_index = 0;
    int shard_count = 1;
    i64 node_budget = -1;  // <0: unlimited

    // permutations of (4,2,1), (3,3,1), (3,2,2)
    static std::vector<std::array<int, 3>> default_census_set();
};

struct Census {
    // canonical word set per knot type name; counts derive from these
    std::map<std::string, std::set<std::string>> polys;
    i64 explored = 0;  // nodes expanded below completed first-level arcs
    i64 pruned = 0;
    i64 closed_found = 0;
    int max_stick_len_seen = 0;
    bool budget_exhausted = false;
    double seconds = 0.0;

    i64 count(const std::string& type) const;
    std::vector<std::string> exemplars(const std::string& type, int k) const;
    // nontrivial type names present (anything but "unknot")
    std::vector<std::string> nontrivial_types() const;
};

Result<Census> search(const SearchConfig& cfg);

// associative, deduplicating merge
Census merge_census(Census a, const Census& b);

std::vector<SearchConfig> shard(const SearchConfig& cfg, int n_shards);

// First polygon (in deterministic search order) classifying as `target`,
// searching properly leveled polygons with 4..6 vertical sticks, all
// single-cycle w-patterns, unconstrained planar censuses. The budget caps
// explored nodes across the whole scan; <0 means unlimited.
std::optional<Polygon> search_for_type(KnotTag target, int total_sticks, int max_len,
                                       i64 node_budget);

// census JSON (deterministic field order; `seconds` is the only
// run-dependent field)
std::string census_json(const Census& c, const SearchConfig& cfg);

}  // namespace shknot
