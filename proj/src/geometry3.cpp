#include "finew2/geometry3.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

namespace finew2 {

namespace {

Dual3 cross3(Pt3 u, Pt3 v) {
    return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}

Dual3 make_primitive(Dual3 n) {
    Int g = std::gcd(std::gcd(n.a < 0 ? -n.a : n.a, n.b < 0 ? -n.b : n.b), n.c < 0 ? -n.c : n.c);
    return {n.a / g, n.b / g, n.c / g};
}

}  // namespace

int RatPolytope3::dim() const {
    if (vertices.empty()) return -1;
    if (vertices.size() == 1) return 0;
    if (vertices.size() == 2) return 1;
    // rank of displacement vectors from vertices[0]
    const RatPt3& o = vertices[0];
    bool planar_known = false;
    RatPt3 u{};
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        RatPt3 w{vertices[i].x - o.x, vertices[i].y - o.y, vertices[i].z - o.z};
        if (!planar_known) {
            u = w;
            planar_known = true;
            continue;
        }
        Rat cx = u.y * w.z - u.z * w.y;
        Rat cy = u.z * w.x - u.x * w.z;
        Rat cz = u.x * w.y - u.y * w.x;
        if (!(cx == Rat(0) && cy == Rat(0) && cz == Rat(0))) {
            // found two independent directions; check for a third
            for (std::size_t j = i + 1; j < vertices.size(); ++j) {
                RatPt3 v{vertices[j].x - o.x, vertices[j].y - o.y, vertices[j].z - o.z};
                Rat det = cx * v.x + cy * v.y + cz * v.z;
                if (!(det == Rat(0))) return 3;
            }
            return 2;
        }
    }
    return 1;
}

Rat min_support(const Polytope3& p, Dual3 n) {
    if (p.scaled.empty()) throw std::invalid_argument("empty polytope");
    if (n.is_zero()) throw std::invalid_argument("zero dual vector");
    Wide best = dot(p.scaled[0], n);
    for (const Pt3& v : p.scaled) best = std::min(best, dot(v, n));
    return Rat(static_cast<Int>(best), p.denom);
}

Rat max_support(const Polytope3& p, Dual3 n) { return -min_support(p, -n); }

std::vector<Facet3> facets(const Polytope3& p) {
    const auto& v = p.scaled;
    std::size_t m = v.size();
    if (m < 4) throw std::invalid_argument("polytope is not full-dimensional");
    std::set<std::pair<std::array<Int, 3>, std::pair<Int, Int>>> seen;
    std::vector<Facet3> out;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k) {
                Dual3 n = cross3(v[j] - v[i], v[k] - v[i]);
                if (n.is_zero()) continue;
                n = make_primitive(n);
                Wide c = dot(v[i], n);
                bool lo = false, hi = false;
                for (const Pt3& w : v) {
                    Wide t = dot(w, n);
                    if (t < c) lo = true;
                    if (t > c) hi = true;
                    if (lo && hi) break;
                }
                if (lo && hi) continue;  // not a supporting plane
                if (lo) {                // orient inward (all points >= c)
                    n = -n;
                    c = -c;
                }
                Facet3 f{n, Rat(static_cast<Int>(c), p.denom)};
                auto tag = std::pair{std::array<Int, 3>{f.n.a, f.n.b, f.n.c},
                                     std::pair{f.min_value.num, f.min_value.den}};
                if (seen.insert(tag).second) out.push_back(f);
            }
    if (out.empty()) throw std::invalid_argument("polytope is not full-dimensional");
    return out;
}

namespace {

struct Plane {
    Dual3 n;
    Rat c;  // <x, n> >= c
};

Rat dot_r(const RatPt3& p, Dual3 n) { return p.x * Rat(n.a) + p.y * Rat(n.b) + p.z * Rat(n.c); }

// Vertices of a bounded intersection of half-spaces (all triples + feasibility).
std::vector<RatPt3> plane_region_vertices(const std::vector<Plane>& ps) {
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
                // Cramer with rational right-hand sides c_i = n_i/d_i: scale rows
                Rat c1 = ps[i].c, c2 = ps[j].c, c3 = ps[k].c;
                auto solve_coord = [&](int coord) {
                    // replace column `coord` with (c1,c2,c3)
                    auto col = [&](const Dual3& n, int idx) -> Rat {
                        if (idx == 0) return Rat(n.a);
                        if (idx == 1) return Rat(n.b);
                        return Rat(n.c);
                    };
                    auto entry = [&](const Dual3& n, Rat cv, int idx) -> Rat {
                        return idx == coord ? cv : col(n, idx);
                    };
                    Rat a0 = entry(A, c1, 0), a1 = entry(A, c1, 1), a2 = entry(A, c1, 2);
                    Rat b0 = entry(B, c2, 0), b1 = entry(B, c2, 1), b2 = entry(B, c2, 2);
                    Rat c0 = entry(C, c3, 0), cc1 = entry(C, c3, 1), cc2 = entry(C, c3, 2);
                    Rat d = a0 * (b1 * cc2 - b2 * cc1) - a1 * (b0 * cc2 - b2 * c0) +
                            a2 * (b0 * cc1 - b1 * c0);
                    Int dn = static_cast<Int>(det);
                    return d / Rat(dn);
                };
                RatPt3 x{solve_coord(0), solve_coord(1), solve_coord(2)};
                bool ok = true;
                for (const Plane& pl : ps)
                    if (dot_r(x, pl.n) < pl.c) {
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

std::vector<Dual3> polar_candidate_normals_at(const Polytope3& p, const RatPt3& z, Rat slack) {
    // region {n : <z - v, n> <= slack for all vertices v}; scale to integers
    Int den = std::lcm(std::lcm(z.x.den, z.y.den), std::lcm(z.z.den, slack.den));
    den = std::lcm(den, p.denom);
    Int zx = z.x.num * (den / z.x.den), zy = z.y.num * (den / z.y.den), zz = z.z.num * (den / z.z.den);
    Int s = slack.num * (den / slack.den);
    std::vector<Plane> ps;
    ps.reserve(p.scaled.size());
    Int f = den / p.denom;
    for (const Pt3& v : p.scaled) {
        // <(z - v), n> <= slack  ->  <(v*f - zvec), n> >= -s   (scaled by den)
        ps.push_back({Dual3{v.x * f - zx, v.y * f - zy, v.z * f - zz}, Rat(-s)});
    }
    auto verts = plane_region_vertices(ps);
    std::vector<Dual3> out;
    if (verts.empty()) return out;
    Rat x0 = verts[0].x, x1 = verts[0].x, y0 = verts[0].y, y1 = verts[0].y, z0 = verts[0].z,
        z1 = verts[0].z;
    for (const RatPt3& v : verts) {
        x0 = std::min(x0, v.x);
        x1 = std::max(x1, v.x);
        y0 = std::min(y0, v.y);
        y1 = std::max(y1, v.y);
        z0 = std::min(z0, v.z);
        z1 = std::max(z1, v.z);
    }
    for (Int a = x0.ceil(); a <= x1.floor(); ++a)
        for (Int b = y0.ceil(); b <= y1.floor(); ++b)
            for (Int c = z0.ceil(); c <= z1.floor(); ++c) {
                Dual3 n{a, b, c};
                if (n.is_zero()) continue;
                Int g = std::gcd(std::gcd(a < 0 ? -a : a, b < 0 ? -b : b), c < 0 ? -c : c);
                if (g != 1) continue;
                bool ok = true;
                for (const Plane& pl : ps)
                    if (Rat(pl.n.a) * Rat(a) + Rat(pl.n.b) * Rat(b) + Rat(pl.n.c) * Rat(c) < pl.c) {
                        ok = false;
                        break;
                    }
                if (ok) out.push_back(n);
            }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

RatPt3 centroid(const Polytope3& p) {
    Rat sx(0), sy(0), sz(0);
    for (const Pt3& v : p.scaled) {
        sx = sx + Rat(v.x);
        sy = sy + Rat(v.y);
        sz = sz + Rat(v.z);
    }
    Rat n(static_cast<Int>(p.scaled.size()) * p.denom);
    return {sx / n, sy / n, sz / n};
}

Rat width_in_direction(const Polytope3& p, Dual3 n) { return max_support(p, n) - min_support(p, n); }

Dual3 normalize_sign3(Dual3 n) {
    if (n.a < 0 || (n.a == 0 && (n.b < 0 || (n.b == 0 && n.c < 0)))) return -n;
    return n;
}

}  // namespace

Width3Result lattice_width(const Polytope3& p) {
    Width3Result r;
    Rat best;
    bool have = false;
    for (const Facet3& f : facets(p)) {
        Rat w = width_in_direction(p, f.n);
        if (!have || w < best) best = w, have = true;
    }
    RatPt3 c = centroid(p);
    std::vector<Dual3> cands;
    for (;;) {
        cands = polar_candidate_normals_at(p, c, best);
        Rat improved = best;
        for (Dual3 n : cands) improved = std::min(improved, width_in_direction(p, n));
        if (improved == best) break;
        best = improved;
    }
    std::set<Dual3> dirs;
    for (Dual3 n : cands)
        if (width_in_direction(p, n) == best) dirs.insert(normalize_sign3(n));
    r.width = best;
    r.directions.assign(dirs.begin(), dirs.end());
    return r;
}

}  // namespace finew2
