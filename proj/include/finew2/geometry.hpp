#pragma once

#include <compare>
#include <span>
#include <stdexcept>
#include <vector>

namespace finew2 {

using Int = long long;
using Wide = __int128;

// Primal lattice point (M).
struct Pt {
    Int x = 0;
    Int y = 0;
    friend auto operator<=>(const Pt&, const Pt&) = default;
    Pt operator+(Pt o) const { return {x + o.x, y + o.y}; }
    Pt operator-(Pt o) const { return {x - o.x, y - o.y}; }
    Pt operator*(Int k) const { return {x * k, y * k}; }
};

// Dual lattice vector (N).
struct Dual {
    Int a = 0;
    Int b = 0;
    friend auto operator<=>(const Dual&, const Dual&) = default;
    bool is_zero() const { return a == 0 && b == 0; }
    Dual operator-() const { return {-a, -b}; }
};

bool is_primitive(Dual n);

inline Wide dot(Pt p, Dual n) { return Wide(p.x) * n.a + Wide(p.y) * n.b; }
inline Wide cross(Pt u, Pt v) { return Wide(u.x) * v.y - Wide(u.y) * v.x; }
// > 0 iff a,b,c make a left turn.
inline Wide orient(Pt a, Pt b, Pt c) { return cross(b - a, c - a); }

// Floor/ceil of a/b for b > 0.
Int floor_div(Int a, Int b);
Int ceil_div(Int a, Int b);

// Exact rational with reduced representation, den > 0.
struct Rat {
    Int num = 0;
    Int den = 1;
    Rat() = default;
    Rat(Int n) : num(n), den(1) {}
    Rat(Int n, Int d);
    Rat operator+(Rat o) const;
    Rat operator-(Rat o) const;
    Rat operator*(Rat o) const;
    Rat operator/(Rat o) const;
    Rat operator-() const { return {-num, den}; }
    friend bool operator==(Rat p, Rat q) { return p.num == q.num && p.den == q.den; }
    friend std::strong_ordering operator<=>(Rat p, Rat q);
    Int floor() const;
    Int ceil() const;
    bool is_integer() const { return den == 1; }
};

struct RatPt {
    Rat x;
    Rat y;
    friend bool operator==(const RatPt&, const RatPt&) = default;
    friend std::strong_ordering operator<=>(const RatPt& p, const RatPt& q) {
        if (auto c = p.x <=> q.x; c != 0) return c;
        return p.y <=> q.y;
    }
};

// Convex lattice polygon: ccw vertex list, no three consecutive collinear,
// rotated so the lex-min vertex comes first. Degenerate values (empty, point,
// segment) are first-class.
class Polygon {
  public:
    Polygon() = default;
    static Polygon hull_of(std::span<const Pt> pts);  // empty input -> empty polygon
    const std::vector<Pt>& vertices() const { return v_; }
    int dim() const;  // -1 empty, 0 point, 1 segment, 2 polygon
    bool empty() const { return v_.empty(); }
    friend bool operator==(const Polygon&, const Polygon&) = default;

  private:
    std::vector<Pt> v_;
};

// Public hull: errors on empty input.
Polygon convex_hull(std::span<const Pt> pts);

bool contains(const Polygon& p, Pt q);
bool strictly_contains(const Polygon& p, Pt q);  // topological interior; false for dim < 2

std::vector<Pt> lattice_points(const Polygon& p);
std::vector<Pt> interior_lattice_points(const Polygon& p);

// 2x Euclidean area (unimodular triangle has normalized area 1). Errors on dim < 2.
Int normalized_area(const Polygon& p);

Int min_support(const Polygon& p, Dual n);
Int max_support(const Polygon& p, Dual n);

// Half-plane <x,n> >= c.
struct HalfPlane {
    Dual n;
    Int c = 0;
};

// Primitive inner edge normals with their support values, in ccw edge order.
std::vector<HalfPlane> edge_halfplanes(const Polygon& p);

// Vertices of a bounded intersection of half-planes (unsorted, deduplicated).
std::vector<RatPt> halfplane_region_vertices(std::span<const HalfPlane> hs);
// All lattice points of such a region.
std::vector<Pt> halfplane_region_lattice_points(std::span<const HalfPlane> hs);

struct WidthResult {
    Int width = 0;
    std::vector<Dual> directions;  // sign-normalized primitive minimizers, sorted
};
WidthResult lattice_width(const Polygon& p);

// All primitive n != 0 with <z,n> - Min(p,n) <= slack; complete by polar
// boundedness (z must be interior). Sorted.
std::vector<Dual> polar_candidate_normals(const Polygon& p, Pt z, Int slack);
std::vector<Dual> polar_candidate_normals_at(const Polygon& p, RatPt z, Rat slack);

// Unimodular affine map x -> M x + t.
struct AffineMap {
    Int m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    Pt t;
    Int det() const { return m00 * m11 - m01 * m10; }
    Pt apply(Pt p) const {
        return {m00 * p.x + m01 * p.y + t.x, m10 * p.x + m11 * p.y + t.y};
    }
    // Composition: (f.then(g))(x) == g(f(x)).
    AffineMap then(const AffineMap& g) const;
    AffineMap inverse() const;
    static AffineMap translation(Pt d) { return {1, 0, 0, 1, d}; }
};

Polygon apply_map(const AffineMap& t, const Polygon& p);

// Half-integral polygon, stored as its doubled lattice polygon.
struct HalfPolygon {
    Polygon doubled;
    int dim() const { return doubled.dim(); }
    friend bool operator==(const HalfPolygon&, const HalfPolygon&) = default;
};

// Lattice points of M lying in the half polygon (in M coordinates, not doubled).
std::vector<Pt> lattice_points(const HalfPolygon& q);
std::vector<Pt> interior_lattice_points(const HalfPolygon& q);

// Rational polygon (ccw, lex-min first); output type of move_out.
struct RatPolygon {
    std::vector<RatPt> v;
    friend bool operator==(const RatPolygon&, const RatPolygon&) = default;
};
RatPolygon rat_hull(std::vector<RatPt> pts);

}  // namespace finew2
