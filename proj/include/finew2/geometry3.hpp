#pragma once

#include <vector>

#include "finew2/geometry.hpp"

namespace finew2 {

struct Pt3 {
    Int x = 0, y = 0, z = 0;
    friend auto operator<=>(const Pt3&, const Pt3&) = default;
    Pt3 operator-(Pt3 o) const { return {x - o.x, y - o.y, z - o.z}; }
};

struct Dual3 {
    Int a = 0, b = 0, c = 0;
    friend auto operator<=>(const Dual3&, const Dual3&) = default;
    bool is_zero() const { return a == 0 && b == 0 && c == 0; }
    Dual3 operator-() const { return {-a, -b, -c}; }
};

inline Wide dot(Pt3 p, Dual3 n) { return Wide(p.x) * n.a + Wide(p.y) * n.b + Wide(p.z) * n.c; }

struct RatPt3 {
    Rat x, y, z;
    friend bool operator==(const RatPt3&, const RatPt3&) = default;
    friend std::strong_ordering operator<=>(const RatPt3& p, const RatPt3& q) {
        if (auto c = p.x <=> q.x; c != 0) return c;
        if (auto c = p.y <=> q.y; c != 0) return c;
        return p.z <=> q.z;
    }
};

// Rational 3-polytope given by vertices scaled/denom; denom in {1, 2} here.
struct Polytope3 {
    std::vector<Pt3> scaled;
    Int denom = 1;
};

// Vertex set of a rational 3-polytope (sorted, deduplicated); the result type
// of the 3D Fine-interior oracle. Empty vector means the empty polytope.
struct RatPolytope3 {
    std::vector<RatPt3> vertices;
    friend bool operator==(const RatPolytope3&, const RatPolytope3&) = default;
    int dim() const;
};

struct Facet3 {
    Dual3 n;        // primitive inner normal
    Rat min_value;  // Min over the polytope
};

// Facets by exhaustive plane enumeration; requires a full-dimensional polytope.
std::vector<Facet3> facets(const Polytope3& p);

Rat min_support(const Polytope3& p, Dual3 n);
Rat max_support(const Polytope3& p, Dual3 n);

struct Width3Result {
    Rat width;
    std::vector<Dual3> directions;
};
Width3Result lattice_width(const Polytope3& p);

// All primitive n != 0 with <z,n> - Min(p,n) <= slack, z strictly interior.
std::vector<Dual3> polar_candidate_normals_at(const Polytope3& p, const RatPt3& z, Rat slack);

}  // namespace finew2
