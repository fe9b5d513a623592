#pragma once

#include <filesystem>
#include <map>

#include "finew2/canonical.hpp"
#include "finew2/geometry.hpp"

namespace finew2 {

// Frontier of the point-augmentation search: canonical representatives keyed
// by canonical key, one entry per equivalence class at the current point count.
struct EnumState {
    int count = 1;  // lattice points per class in the frontier
    std::map<CanonicalKey, Polygon> frontier;

    static EnumState initial();  // the one-point polygon
    void step();                 // advance to count + 1
};

// All classes (any dimension >= max(0, ...)) obtained from p by adding one
// lattice point, as canonical representatives. Complete: every successor class
// of p appears.
std::vector<Polygon> augment(const Polygon& p);

// All 2-dimensional lattice polygons with exactly g lattice points, one
// canonical representative per affine unimodular class, sorted by key.
// Errors for g < 3.
std::vector<Polygon> enumerate_polygons(int g);

// Independent oracle: canonical classes of dim-2 polygons with exactly g
// lattice points whose vertices fit in [-box_half_width, box_half_width]^2,
// found by exhaustive search over vertex sets in convex position.
std::vector<Polygon> brute_force_polygons(int g, int box_half_width);

// Frontier files: one hex-encoded CanonicalKey per line, sorted.
void save_frontier(const std::filesystem::path& path, const std::map<CanonicalKey, Polygon>& frontier);
std::map<CanonicalKey, Polygon> load_frontier(const std::filesystem::path& path);

}  // namespace finew2
