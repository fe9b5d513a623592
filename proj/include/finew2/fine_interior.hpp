#pragma once

#include "finew2/geometry.hpp"
#include "finew2/geometry3.hpp"

namespace finew2 {

// Result of a Fine-interior computation on a half-integral polygon; the shape
// is stored doubled, dimension -1..2.
struct FineResult {
    HalfPolygon shape;
    int dim() const { return shape.dim(); }
    friend bool operator==(const FineResult&, const FineResult&) = default;
};

// Fine interior of a lattice polygon: the convex hull of its interior lattice
// points. Dimension may be -1 through 2.
Polygon interior_hull(const Polygon& p);

// Relax every edge inequality by lattice distance k (edge normals only).
RatPolygon move_out(const Polygon& p, Int k = 1);
RatPolygon move_out(const HalfPolygon& q, Int k = 1);

// F-bar of a half-integral polygon, computed on the doubled polygon R = 2*P0:
// a lattice point z of F(R) belongs to 2*Fbar unless some primitive n has
// <z,n> - Min(R,n) = 1 with Min(R,n) even; the slack-1 polar scan decides this.
FineResult fbar(const HalfPolygon& p0);

struct SupportNormal {
    Dual n;
    Int min_value;  // Min(R, n)
    bool even;      // membership in N1 of the half polygon R/2
    friend auto operator<=>(const SupportNormal&, const SupportNormal&) = default;
};

// All primitive n with Min(F(R), n) = Min(R, n) + 1. Errors if F(R) is empty.
std::vector<SupportNormal> support_normals(const Polygon& r);

// The support-set route of the same computation; must agree with fbar.
FineResult fbar_via_support(const HalfPolygon& p0);

// Fixed-point test: Q is (up to equivalence) the Fine interior of a lattice
// 3-polytope iff Q == fbar(conv(Q^(-1) cap M/2)). Exact comparison, no
// equivalence quotient.
bool fine_interior_test(const HalfPolygon& q);

// conv(Q^(-1) cap M/2): the inclusion-maximal half-integral polygon with the
// given F-bar.
HalfPolygon max_half_polygon(const HalfPolygon& q);

// Checks F(F(2P0)) subset 2*Fbar(P0) subset F(2P0).
bool inclusion_chain_check(const HalfPolygon& p0);

// Fine interior of a lattice 3-polytope by fixed-point refinement with a
// polar-candidate completeness certificate.
RatPolytope3 fine_interior_3d(const Polytope3& p);

// 2*Pyr(P0) translated by (-1,0,0), so that P0 is the middle polygon.
Polytope3 doubled_pyramid(const HalfPolygon& p0);

// F(2*Pyr(P0)); must equal {0} x fbar(P0).
RatPolytope3 pyramid_oracle(const HalfPolygon& p0);

// {0} x (shape/2) as a rational 3-polytope, for comparison with the oracle.
RatPolytope3 embed_at_zero(const FineResult& f);

}  // namespace finew2
