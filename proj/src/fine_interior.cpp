#include "finew2/fine_interior.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace finew2 {

Polygon interior_hull(const Polygon& p) {
    return Polygon::hull_of(interior_lattice_points(p));
}

RatPolygon move_out(const Polygon& p, Int k) {
    if (p.dim() != 2) throw std::invalid_argument("degenerate");
    std::vector<HalfPlane> hs = edge_halfplanes(p);
    for (HalfPlane& h : hs) h.c -= k;
    auto verts = halfplane_region_vertices(hs);
    return rat_hull(std::move(verts));
}

RatPolygon move_out(const HalfPolygon& q, Int k) {
    // doubled constraints <y,n> >= Min(D,n) - 2k; halve the vertices
    if (q.dim() != 2) throw std::invalid_argument("degenerate");
    std::vector<HalfPlane> hs = edge_halfplanes(q.doubled);
    for (HalfPlane& h : hs) h.c -= 2 * k;
    auto verts = halfplane_region_vertices(hs);
    for (RatPt& v : verts) {
        v.x = v.x / Rat(2);
        v.y = v.y / Rat(2);
    }
    return rat_hull(std::move(verts));
}

namespace {

bool excluded_point(const Polygon& r, Pt z) {
    for (Dual n : polar_candidate_normals(r, z, 1)) {
        Int mn = min_support(r, n);
        Wide gap = dot(z, n) - mn;
        if (gap <= 0) return true;  // cannot happen for interior z; kept exact
        if (gap == 1 && mn % 2 == 0) return true;
    }
    return false;
}

// doubled 2*Fbar of the half polygon with doubled polygon R
Polygon fbar_doubled(const Polygon& r) {
    if (r.dim() < 2) return Polygon{};
    std::vector<Pt> keep;
    for (const Pt& z : interior_lattice_points(r))
        if (!excluded_point(r, z)) keep.push_back(z);
    return Polygon::hull_of(keep);
}

}  // namespace

FineResult fbar(const HalfPolygon& p0) {
    if (p0.dim() < 2) return FineResult{};
    return FineResult{HalfPolygon{fbar_doubled(p0.doubled)}};
}

std::vector<SupportNormal> support_normals(const Polygon& r) {
    Polygon f = interior_hull(r);
    if (f.dim() < 0) throw std::invalid_argument("empty interior hull");
    // every support normal attains its minimum over F(R) at a boundary lattice
    // point of F(R), where it shows up as a gap-1 polar candidate
    std::vector<Pt> boundary;
    std::set<Pt> interior_set;
    for (const Pt& z : interior_lattice_points(f)) interior_set.insert(z);
    for (const Pt& z : lattice_points(f))
        if (!interior_set.count(z)) boundary.push_back(z);
    std::set<SupportNormal> out;
    for (const Pt& z : boundary) {
        for (Dual n : polar_candidate_normals(r, z, 1)) {
            Int mn = min_support(r, n);
            if (dot(z, n) - mn == 1) out.insert({n, mn, mn % 2 == 0});
        }
    }
    return {out.begin(), out.end()};
}

FineResult fbar_via_support(const HalfPolygon& p0) {
    if (p0.dim() < 2) return FineResult{};
    const Polygon& r = p0.doubled;
    Polygon f = interior_hull(r);
    if (f.dim() < 0) return FineResult{};
    std::vector<SupportNormal> sup = support_normals(r);
    Polygon ff = interior_hull(f);
    std::vector<Pt> pts = lattice_points(ff);
    std::set<Pt> interior_set;
    for (const Pt& z : interior_lattice_points(f)) interior_set.insert(z);
    for (const Pt& z : lattice_points(f)) {
        if (interior_set.count(z)) continue;  // boundary points of F(R) only
        bool touched = false;
        for (const SupportNormal& s : sup) {
            if (!s.even) continue;  // only N1 normals exclude
            if (dot(z, s.n) == s.min_value + 1) {
                touched = true;
                break;
            }
        }
        if (!touched) pts.push_back(z);
    }
    return FineResult{HalfPolygon{Polygon::hull_of(pts)}};
}

HalfPolygon max_half_polygon(const HalfPolygon& q) {
    if (q.dim() != 2) throw std::invalid_argument("degenerate");
    std::vector<HalfPlane> hs = edge_halfplanes(q.doubled);
    for (HalfPlane& h : hs) h.c -= 2;
    return HalfPolygon{Polygon::hull_of(halfplane_region_lattice_points(hs))};
}

bool fine_interior_test(const HalfPolygon& q) {
    if (q.dim() != 2) return false;
    HalfPolygon p0max = max_half_polygon(q);
    if (p0max.dim() < 2) return false;
    return fbar_doubled(p0max.doubled) == q.doubled;
}

namespace {

bool polygon_subset(const Polygon& a, const Polygon& b) {
    for (const Pt& v : a.vertices())
        if (!contains(b, v)) return false;
    return true;
}

}  // namespace

bool inclusion_chain_check(const HalfPolygon& p0) {
    if (p0.dim() != 2) throw std::invalid_argument("degenerate");
    Polygon fr = interior_hull(p0.doubled);
    Polygon ffr = fr.dim() >= 0 ? interior_hull(fr) : Polygon{};
    Polygon two_fbar = fbar_doubled(p0.doubled);
    if (ffr.dim() >= 0 && !polygon_subset(ffr, two_fbar)) return false;
    if (two_fbar.dim() >= 0 && !polygon_subset(two_fbar, fr)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// 3D oracle
// ---------------------------------------------------------------------------

namespace {

struct Plane3 {
    Dual3 n;
    Rat c;  // <x,n> >= c
};

Rat dot_r3(const RatPt3& p, Dual3 n) { return p.x * Rat(n.a) + p.y * Rat(n.b) + p.z * Rat(n.c); }

std::vector<RatPt3> region_vertices3(const std::vector<Plane3>& ps) {
    std::vector<RatPt3> verts;
    std::size_t m = ps.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k) {
                const Dual3 &A = ps[i].n, &B = ps[j].n, &C = ps[k].n;
                Wide det = Wide(A.a) * (Wide(B.b) * C.c - Wide(B.c) * C.b) -
                           Wide(A.b) * (Wide(B.a) * C.c - Wide(B.c) * C.a) +
                           Wide(A.c) * (Wide(B.a) * C.b - Wide(B.b) * C.a);
                if (det == 0) continue;
                Rat c1 = ps[i].c, c2 = ps[j].c, c3 = ps[k].c;
                Int dn = static_cast<Int>(det);
                auto minor = [&](int coord) {
                    auto ent = [&](const Dual3& n, Rat cv, int idx) -> Rat {
                        if (idx == coord) return cv;
                        if (idx == 0) return Rat(n.a);
                        if (idx == 1) return Rat(n.b);
                        return Rat(n.c);
                    };
                    Rat a0 = ent(A, c1, 0), a1 = ent(A, c1, 1), a2 = ent(A, c1, 2);
                    Rat b0 = ent(B, c2, 0), b1 = ent(B, c2, 1), b2 = ent(B, c2, 2);
                    Rat g0 = ent(C, c3, 0), g1 = ent(C, c3, 1), g2 = ent(C, c3, 2);
                    Rat d = a0 * (b1 * g2 - b2 * g1) - a1 * (b0 * g2 - b2 * g0) +
                            a2 * (b0 * g1 - b1 * g0);
                    return d / Rat(dn);
                };
                RatPt3 x{minor(0), minor(1), minor(2)};
                bool ok = true;
                for (const Plane3& pl : ps)
                    if (dot_r3(x, pl.n) < pl.c) {
                        ok = false;
                        break;
                    }
                if (ok) verts.push_back(x);
            }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return verts;
}

}  // namespace

RatPolytope3 fine_interior_3d(const Polytope3& p) {
    std::vector<Plane3> cons;
    std::set<Dual3> have;
    for (const Facet3& f : facets(p)) {
        cons.push_back({f.n, f.min_value + Rat(1)});
        have.insert(f.n);
    }
    std::vector<RatPt3> verts = region_vertices3(cons);
    // refine: a vertex u cut by some primitive n with <u,n> < Min(P,n)+1 must
    // exist among the slack-1 polar candidates at u (u is interior to P)
    for (;;) {
        bool changed = false;
        for (const RatPt3& u : verts) {
            for (Dual3 n : polar_candidate_normals_at(p, u, Rat(1))) {
                if (have.count(n)) continue;
                Rat bound = min_support(p, n) + Rat(1);
                if (dot_r3(u, n) < bound) {
                    cons.push_back({n, bound});
                    have.insert(n);
                    changed = true;
                }
            }
            if (changed) break;
        }
        if (!changed) break;
        verts = region_vertices3(cons);
        if (verts.empty()) break;
    }
    return RatPolytope3{std::move(verts)};
}

Polytope3 doubled_pyramid(const HalfPolygon& p0) {
    Polytope3 out;
    out.denom = 1;
    out.scaled.push_back({1, 0, 0});
    for (const Pt& v : p0.doubled.vertices()) out.scaled.push_back({-1, v.x, v.y});
    return out;
}

RatPolytope3 pyramid_oracle(const HalfPolygon& p0) {
    if (p0.dim() != 2) throw std::invalid_argument("degenerate");
    return fine_interior_3d(doubled_pyramid(p0));
}

RatPolytope3 embed_at_zero(const FineResult& f) {
    RatPolytope3 out;
    for (const Pt& v : f.shape.doubled.vertices())
        out.vertices.push_back({Rat(0), Rat(v.x, 2), Rat(v.y, 2)});
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

}  // namespace finew2
