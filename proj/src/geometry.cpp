#include "finew2/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

namespace finew2 {

bool is_primitive(Dual n) {
    if (n.is_zero()) return false;
    return std::gcd(n.a < 0 ? -n.a : n.a, n.b < 0 ? -n.b : n.b) == 1;
}

Int floor_div(Int a, Int b) {
    assert(b > 0);
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

Int ceil_div(Int a, Int b) {
    assert(b > 0);
    Int q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

namespace {

Int narrow(Wide w) {
    assert(w <= Wide(9223372036854775807LL) && w >= -Wide(9223372036854775807LL) - 1);
    return static_cast<Int>(w);
}

}  // namespace

Rat::Rat(Int n, Int d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    Int g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num = n;
    den = d;
}

Rat Rat::operator+(Rat o) const {
    Wide n = Wide(num) * o.den + Wide(o.num) * den;
    Wide d = Wide(den) * o.den;
    return Rat(narrow(n), narrow(d));
}

Rat Rat::operator-(Rat o) const { return *this + Rat(-o.num, o.den); }

Rat Rat::operator*(Rat o) const {
    return Rat(narrow(Wide(num) * o.num), narrow(Wide(den) * o.den));
}

Rat Rat::operator/(Rat o) const {
    if (o.num == 0) throw std::invalid_argument("division by zero rational");
    return Rat(narrow(Wide(num) * o.den), narrow(Wide(den) * o.num));
}

std::strong_ordering operator<=>(Rat p, Rat q) {
    Wide l = Wide(p.num) * q.den;
    Wide r = Wide(q.num) * p.den;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Int Rat::floor() const { return floor_div(num, den); }
Int Rat::ceil() const { return ceil_div(num, den); }

Polygon Polygon::hull_of(std::span<const Pt> pts) {
    Polygon out;
    if (pts.empty()) return out;
    std::vector<Pt> p(pts.begin(), pts.end());
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    if (p.size() == 1) {
        out.v_ = p;
        return out;
    }
    // monotone chain, strict turns (collinear points dropped)
    std::vector<Pt> h(2 * p.size());
    std::size_t k = 0;
    for (const Pt& q : p) {
        while (k >= 2 && orient(h[k - 2], h[k - 1], q) <= 0) --k;
        h[k++] = q;
    }
    std::size_t lower = k + 1;
    for (auto it = p.rbegin() + 1; it != p.rend(); ++it) {
        while (k >= lower && orient(h[k - 2], h[k - 1], *it) <= 0) --k;
        h[k++] = *it;
    }
    h.resize(k - 1);
    if (h.size() == 2 || (h.size() > 2 && orient(h[0], h[1], h[2]) == 0)) {
        // collinear input: keep the two extreme points
        out.v_ = {p.front(), p.back()};
        return out;
    }
    // h starts at the lex-min point already (monotone chain property)
    out.v_ = std::move(h);
    return out;
}

int Polygon::dim() const {
    if (v_.empty()) return -1;
    if (v_.size() == 1) return 0;
    if (v_.size() == 2) return 1;
    return 2;
}

Polygon convex_hull(std::span<const Pt> pts) {
    if (pts.empty()) throw std::invalid_argument("empty point set");
    return Polygon::hull_of(pts);
}

bool contains(const Polygon& p, Pt q) {
    const auto& v = p.vertices();
    switch (p.dim()) {
        case -1:
            return false;
        case 0:
            return q == v[0];
        case 1: {
            if (orient(v[0], v[1], q) != 0) return false;
            return std::min(v[0].x, v[1].x) <= q.x && q.x <= std::max(v[0].x, v[1].x) &&
                   std::min(v[0].y, v[1].y) <= q.y && q.y <= std::max(v[0].y, v[1].y);
        }
        default: {
            std::size_t n = v.size();
            for (std::size_t i = 0; i < n; ++i)
                if (orient(v[i], v[(i + 1) % n], q) < 0) return false;
            return true;
        }
    }
}

bool strictly_contains(const Polygon& p, Pt q) {
    if (p.dim() < 2) return false;
    const auto& v = p.vertices();
    std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i)
        if (orient(v[i], v[(i + 1) % n], q) <= 0) return false;
    return true;
}

namespace {

struct BBox {
    Int x0, y0, x1, y1;
};

BBox bbox_of(const std::vector<Pt>& v) {
    BBox b{v[0].x, v[0].y, v[0].x, v[0].y};
    for (const Pt& p : v) {
        b.x0 = std::min(b.x0, p.x);
        b.y0 = std::min(b.y0, p.y);
        b.x1 = std::max(b.x1, p.x);
        b.y1 = std::max(b.y1, p.y);
    }
    return b;
}

}  // namespace

std::vector<Pt> lattice_points(const Polygon& p) {
    std::vector<Pt> out;
    if (p.dim() < 0) return out;
    BBox b = bbox_of(p.vertices());
    for (Int x = b.x0; x <= b.x1; ++x)
        for (Int y = b.y0; y <= b.y1; ++y)
            if (contains(p, {x, y})) out.push_back({x, y});
    return out;
}

std::vector<Pt> interior_lattice_points(const Polygon& p) {
    std::vector<Pt> out;
    if (p.dim() < 2) return out;
    BBox b = bbox_of(p.vertices());
    for (Int x = b.x0 + 1; x < b.x1; ++x)
        for (Int y = b.y0 + 1; y < b.y1; ++y)
            if (strictly_contains(p, {x, y})) out.push_back({x, y});
    return out;
}

Int normalized_area(const Polygon& p) {
    if (p.dim() < 2) throw std::invalid_argument("degenerate");
    const auto& v = p.vertices();
    Wide s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += cross(v[i], v[(i + 1) % v.size()]);
    assert(s > 0);
    return narrow(s);
}

Int min_support(const Polygon& p, Dual n) {
    if (p.empty()) throw std::invalid_argument("empty polygon");
    if (n.is_zero()) throw std::invalid_argument("zero dual vector");
    Wide best = dot(p.vertices()[0], n);
    for (const Pt& v : p.vertices()) best = std::min(best, dot(v, n));
    return narrow(best);
}

Int max_support(const Polygon& p, Dual n) { return -min_support(p, {-n.a, -n.b}); }

std::vector<HalfPlane> edge_halfplanes(const Polygon& p) {
    if (p.dim() != 2) throw std::invalid_argument("degenerate");
    const auto& v = p.vertices();
    std::size_t n = v.size();
    std::vector<HalfPlane> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Pt d = v[(i + 1) % n] - v[i];
        Int g = std::gcd(d.x < 0 ? -d.x : d.x, d.y < 0 ? -d.y : d.y);
        Dual nrm{-d.y / g, d.x / g};  // inner normal for ccw order
        out.push_back({nrm, narrow(dot(v[i], nrm))});
    }
    return out;
}

std::vector<RatPt> halfplane_region_vertices(std::span<const HalfPlane> hs) {
    std::vector<RatPt> verts;
    std::size_t m = hs.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            Int a1 = hs[i].n.a, b1 = hs[i].n.b, c1 = hs[i].c;
            Int a2 = hs[j].n.a, b2 = hs[j].n.b, c2 = hs[j].c;
            Wide det = Wide(a1) * b2 - Wide(a2) * b1;
            if (det == 0) continue;
            Rat x(narrow(Wide(c1) * b2 - Wide(c2) * b1), narrow(det));
            Rat y(narrow(Wide(a1) * c2 - Wide(a2) * c1), narrow(det));
            bool ok = true;
            for (const HalfPlane& h : hs) {
                if (x * Rat(h.n.a) + y * Rat(h.n.b) < Rat(h.c)) {
                    ok = false;
                    break;
                }
            }
            if (ok) verts.push_back({x, y});
        }
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return verts;
}

std::vector<Pt> halfplane_region_lattice_points(std::span<const HalfPlane> hs) {
    std::vector<Pt> out;
    auto verts = halfplane_region_vertices(hs);
    if (verts.empty()) return out;
    Rat x0 = verts[0].x, x1 = verts[0].x, y0 = verts[0].y, y1 = verts[0].y;
    for (const RatPt& v : verts) {
        x0 = std::min(x0, v.x);
        x1 = std::max(x1, v.x);
        y0 = std::min(y0, v.y);
        y1 = std::max(y1, v.y);
    }
    for (Int x = x0.ceil(); x <= x1.floor(); ++x) {
        for (Int y = y0.ceil(); y <= y1.floor(); ++y) {
            bool ok = true;
            for (const HalfPlane& h : hs) {
                if (dot({x, y}, h.n) < h.c) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.push_back({x, y});
        }
    }
    return out;
}

namespace {

Dual normalize_sign(Dual n) {
    if (n.a < 0 || (n.a == 0 && n.b < 0)) return -n;
    return n;
}

RatPt centroid(const Polygon& p) {
    Rat sx(0), sy(0);
    for (const Pt& v : p.vertices()) {
        sx = sx + Rat(v.x);
        sy = sy + Rat(v.y);
    }
    Rat n(static_cast<Int>(p.vertices().size()));
    return {sx / n, sy / n};
}

Int width_in_direction(const Polygon& p, Dual n) {
    return narrow(Wide(max_support(p, n)) - Wide(min_support(p, n)));
}

}  // namespace

std::vector<Dual> polar_candidate_normals_at(const Polygon& p, RatPt z, Rat slack) {
    // {n : <z - v, n> <= slack for all vertices v}, scaled to integer constraints
    Int den = std::lcm(std::lcm(z.x.den, z.y.den), slack.den);
    Int zx = z.x.num * (den / z.x.den);
    Int zy = z.y.num * (den / z.y.den);
    Int s = slack.num * (den / slack.den);
    std::vector<HalfPlane> hs;
    hs.reserve(p.vertices().size());
    for (const Pt& v : p.vertices()) {
        // <(zx - den*vx, zy - den*vy), n> <= s   ->   <-w, n> >= -s
        hs.push_back({{-(zx - den * v.x), -(zy - den * v.y)}, -s});
    }
    std::vector<Dual> out;
    for (Pt n : halfplane_region_lattice_points(hs)) {
        Dual d{n.x, n.y};
        if (!d.is_zero() && is_primitive(d)) out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Dual> polar_candidate_normals(const Polygon& p, Pt z, Int slack) {
    if (!strictly_contains(p, z)) throw std::invalid_argument("point not interior");
    if (slack < 0) throw std::invalid_argument("negative slack");
    return polar_candidate_normals_at(p, {Rat(z.x), Rat(z.y)}, Rat(slack));
}

WidthResult lattice_width(const Polygon& p) {
    WidthResult r;
    switch (p.dim()) {
        case -1:
            throw std::invalid_argument("empty polygon");
        case 0:
            return r;  // width 0, no distinguished direction
        case 1: {
            Pt d = p.vertices()[1] - p.vertices()[0];
            Int g = std::gcd(d.x < 0 ? -d.x : d.x, d.y < 0 ? -d.y : d.y);
            r.width = 0;
            r.directions = {normalize_sign({-d.y / g, d.x / g})};
            return r;
        }
        default:
            break;
    }
    Int best = 0;
    bool have = false;
    for (const HalfPlane& h : edge_halfplanes(p)) {
        Int w = width_in_direction(p, h.n);
        if (!have || w < best) {
            best = w;
            have = true;
        }
    }
    RatPt c = centroid(p);
    // any n with width <= W satisfies max_v <c - v, n> <= W, so the polar scan
    // at slack = best is complete; shrink until stable
    std::vector<Dual> cands;
    for (;;) {
        cands = polar_candidate_normals_at(p, c, Rat(best));
        Int improved = best;
        for (Dual n : cands) improved = std::min(improved, width_in_direction(p, n));
        if (improved == best) break;
        best = improved;
    }
    std::set<Dual> dirs;
    for (Dual n : cands)
        if (width_in_direction(p, n) == best) dirs.insert(normalize_sign(n));
    r.width = best;
    r.directions.assign(dirs.begin(), dirs.end());
    return r;
}

AffineMap AffineMap::then(const AffineMap& g) const {
    AffineMap r;
    r.m00 = g.m00 * m00 + g.m01 * m10;
    r.m01 = g.m00 * m01 + g.m01 * m11;
    r.m10 = g.m10 * m00 + g.m11 * m10;
    r.m11 = g.m10 * m01 + g.m11 * m11;
    r.t = g.apply(t);
    return r;
}

AffineMap AffineMap::inverse() const {
    Int d = det();
    if (d != 1 && d != -1) throw std::invalid_argument("map is not unimodular");
    AffineMap r;
    r.m00 = m11 * d;
    r.m01 = -m01 * d;
    r.m10 = -m10 * d;
    r.m11 = m00 * d;
    r.t = {-(r.m00 * t.x + r.m01 * t.y), -(r.m10 * t.x + r.m11 * t.y)};
    return r;
}

Polygon apply_map(const AffineMap& t, const Polygon& p) {
    Int d = t.det();
    if (d != 1 && d != -1) throw std::invalid_argument("map is not unimodular");
    std::vector<Pt> img;
    img.reserve(p.vertices().size());
    for (const Pt& v : p.vertices()) img.push_back(t.apply(v));
    return Polygon::hull_of(img);
}

std::vector<Pt> lattice_points(const HalfPolygon& q) {
    std::vector<Pt> out;
    for (const Pt& p : lattice_points(q.doubled))
        if (p.x % 2 == 0 && p.y % 2 == 0) out.push_back({p.x / 2, p.y / 2});
    return out;
}

std::vector<Pt> interior_lattice_points(const HalfPolygon& q) {
    std::vector<Pt> out;
    for (const Pt& p : interior_lattice_points(q.doubled))
        if (p.x % 2 == 0 && p.y % 2 == 0) out.push_back({p.x / 2, p.y / 2});
    return out;
}

RatPolygon rat_hull(std::vector<RatPt> pts) {
    RatPolygon out;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.empty()) return out;
    if (pts.size() == 1) {
        out.v = pts;
        return out;
    }
    auto orient_r = [](const RatPt& a, const RatPt& b, const RatPt& c) {
        return ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)) <=> Rat(0);
    };
    std::vector<RatPt> h(2 * pts.size());
    std::size_t k = 0;
    for (const RatPt& q : pts) {
        while (k >= 2 && orient_r(h[k - 2], h[k - 1], q) <= 0) --k;
        h[k++] = q;
    }
    std::size_t lower = k + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
        while (k >= lower && orient_r(h[k - 2], h[k - 1], *it) <= 0) --k;
        h[k++] = *it;
    }
    h.resize(k - 1);
    if (h.size() == 2 || (h.size() > 2 && orient_r(h[0], h[1], h[2]) == 0)) {
        out.v = {pts.front(), pts.back()};
        return out;
    }
    out.v = std::move(h);
    return out;
}

}  // namespace finew2
