#include "finew2/canonical.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>

namespace finew2 {

namespace {

void put_u32(std::string& s, std::uint32_t v) {
    for (int i = 3; i >= 0; --i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_i64(std::string& s, Int v) {
    std::uint64_t u = static_cast<std::uint64_t>(v);
    for (int i = 7; i >= 0; --i) s.push_back(static_cast<char>((u >> (8 * i)) & 0xff));
}

std::uint32_t get_u32(const std::string& s, std::size_t off) {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v = (v << 8) | static_cast<unsigned char>(s[off + i]);
    return v;
}

Int get_i64(const std::string& s, std::size_t off) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | static_cast<unsigned char>(s[off + i]);
    return static_cast<Int>(v);
}

}  // namespace

CanonicalKey encode_key(char tag, const Polygon& p) {
    std::string s;
    s.push_back(tag);
    put_u32(s, static_cast<std::uint32_t>(p.vertices().size()));
    for (const Pt& v : p.vertices()) {
        put_i64(s, v.x);
        put_i64(s, v.y);
    }
    return s;
}

char key_tag(const CanonicalKey& k) {
    if (k.empty()) throw std::invalid_argument("empty canonical key");
    return k[0];
}

Polygon polygon_from_key(const CanonicalKey& k) {
    if (k.size() < 5 || (k[0] != 'L' && k[0] != 'H')) throw std::invalid_argument("malformed canonical key");
    std::uint32_t n = get_u32(k, 1);
    if (k.size() != 5 + std::size_t(16) * n) throw std::invalid_argument("malformed canonical key");
    std::vector<Pt> v;
    v.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i)
        v.push_back({get_i64(k, 5 + 16 * i), get_i64(k, 5 + 16 * i + 8)});
    Polygon p = Polygon::hull_of(v);
    if (p.vertices() != v) throw std::invalid_argument("canonical key does not encode a canonical polygon");
    return p;
}

std::string key_to_hex(const CanonicalKey& k) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(k.size() * 2);
    for (unsigned char c : k) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

CanonicalKey key_from_hex(const std::string& hex) {
    if (hex.size() % 2 != 0) throw std::invalid_argument("odd-length hex key");
    auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw std::invalid_argument("invalid hex digit");
    };
    std::string out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2)
        out.push_back(static_cast<char>((nib(hex[i]) << 4) | nib(hex[i + 1])));
    return out;
}

namespace {

Pt primitive_dir(Pt d) {
    Int g = std::gcd(d.x < 0 ? -d.x : d.x, d.y < 0 ? -d.y : d.y);
    return {d.x / g, d.y / g};
}

// e with cross(d, e) = 1 for primitive d (extended gcd).
Pt complement_of(Pt d) {
    Int old_r = d.x, r = d.y;
    Int old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    // old_r = gcd (sign of initial leading), old_s * d.x + old_t * d.y = old_r
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    assert(old_r == 1);
    // want cross(d, e) = d.x * e.y - d.y * e.x = 1
    return {-old_t, old_s};
}

Polygon reflected(const Polygon& p) {
    std::vector<Pt> v;
    v.reserve(p.vertices().size());
    for (const Pt& q : p.vertices()) v.push_back({q.x, -q.y});
    return Polygon::hull_of(v);
}

// min x over the polygon at height y == 1 (polygon has an edge on y = 0,
// lies in the upper half-plane, ymax >= 1)
Rat xmin_at_height1(const Polygon& p) {
    bool have = false;
    Rat best;
    const auto& v = p.vertices();
    std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        Pt a = v[i], b = v[(i + 1) % n];
        if (a.y == b.y) {
            if (a.y == 1) {
                Rat c(std::min(a.x, b.x));
                if (!have || c < best) best = c, have = true;
            }
            continue;
        }
        Int lo = std::min(a.y, b.y), hi = std::max(a.y, b.y);
        if (lo <= 1 && 1 <= hi) {
            Rat x = Rat(a.x) + Rat(1 - a.y, b.y - a.y) * Rat(b.x - a.x);
            if (!have || x < best) best = x, have = true;
        }
    }
    assert(have);
    return best;
}

struct Candidate {
    CanonicalKey key;
    Polygon poly;
    AffineMap map;
};

void consider(Candidate& best, char tag, const Polygon& poly, const AffineMap& map) {
    CanonicalKey k = encode_key(tag, poly);
    if (best.key.empty() || k < best.key) best = {std::move(k), poly, map};
}

Candidate canonical_dim2(const Polygon& p, bool half) {
    const char tag = half ? 'H' : 'L';
    Candidate best;
    for (int refl = 0; refl < 2; ++refl) {
        AffineMap pre = refl ? AffineMap{1, 0, 0, -1, {0, 0}} : AffineMap{};
        Polygon pm = refl ? reflected(p) : p;
        const auto& verts = pm.vertices();
        std::size_t n = verts.size();
        for (std::size_t i = 0; i < n; ++i) {
            Pt u = verts[i];
            Pt d = primitive_dir(verts[(i + 1) % n] - u);
            Pt e = complement_of(d);
            // L maps d -> (1,0), e -> (0,1); polygon goes to the upper half-plane
            AffineMap lin{e.y, -e.x, -d.y, d.x, {0, 0}};
            AffineMap aff = AffineMap::translation({-u.x, -u.y}).then(lin);
            Polygon img = apply_map(aff, pm);
            Int k = -xmin_at_height1(img).floor();
            AffineMap shear{1, k, 0, 1, {0, 0}};
            aff = aff.then(shear);
            img = apply_map(shear, img);
            AffineMap full = pre.then(aff);
            if (half) {
                Pt tau = full.t;
                Pt delta{((tau.x % 2) + 2) % 2, ((tau.y % 2) + 2) % 2};
                if (delta.x != 0 || delta.y != 0) {
                    AffineMap tr = AffineMap::translation(delta);
                    full = full.then(tr);
                    img = apply_map(tr, img);
                }
            }
            consider(best, tag, img, full);
        }
    }
    return best;
}

Candidate canonical_dim1_lattice(const Polygon& p) {
    Pt u = p.vertices()[0], w = p.vertices()[1];
    Candidate best;
    for (auto [a, b] : {std::pair{u, w}, std::pair{w, u}}) {
        Pt d = primitive_dir(b - a);
        Pt e = complement_of(d);
        AffineMap lin{e.y, -e.x, -d.y, d.x, {0, 0}};
        AffineMap full = AffineMap::translation({-a.x, -a.y}).then(lin);
        consider(best, 'L', apply_map(full, p), full);
    }
    return best;
}

Candidate canonical_dim1_half(const Polygon& p) {
    Candidate best;
    Pt u0 = p.vertices()[0], w0 = p.vertices()[1];
    for (auto [a, b] : {std::pair{u0, w0}, std::pair{w0, u0}}) {
        Pt d = primitive_dir(b - a);
        Pt e = complement_of(d);
        AffineMap lin{e.y, -e.x, -d.y, d.x, {0, 0}};
        Pt au = lin.apply(a);  // image of segment start; segment on line y = au.y
        Int q = au.y;
        AffineMap full = lin;
        Pt target;
        if (((q % 2) + 2) % 2 == 1) {
            // shear makes x adjustable by odd steps; combined with even
            // translations the start goes to (0, 1)
            Int k = ((au.x % 2) + 2) % 2;  // au.x + k*q even
            AffineMap shear{1, k, 0, 1, {0, 0}};
            full = full.then(shear);
            au = shear.apply(au);
            target = {0, 1};
        } else {
            target = {((au.x % 2) + 2) % 2, 0};
        }
        Pt tau = target - au;
        assert(tau.x % 2 == 0 && tau.y % 2 == 0);
        full = full.then(AffineMap::translation(tau));
        consider(best, 'H', apply_map(full, p), full);
    }
    return best;
}

}  // namespace

PolygonCanon canonical_form(const Polygon& p) {
    switch (p.dim()) {
        case -1:
            return {Polygon{}, AffineMap{}};
        case 0: {
            Pt v = p.vertices()[0];
            AffineMap t = AffineMap::translation({-v.x, -v.y});
            return {apply_map(t, p), t};
        }
        case 1: {
            Candidate c = canonical_dim1_lattice(p);
            return {c.poly, c.map};
        }
        default: {
            Candidate c = canonical_dim2(p, false);
            return {c.poly, c.map};
        }
    }
}

HalfCanon canonical_form_half(const HalfPolygon& q) {
    const Polygon& dp = q.doubled;
    switch (dp.dim()) {
        case -1:
            return {HalfPolygon{}, AffineMap{}};
        case 0: {
            Pt v = dp.vertices()[0];
            Pt par{((v.x % 2) + 2) % 2, ((v.y % 2) + 2) % 2};
            AffineMap m;
            if (par == Pt{0, 0})
                m = AffineMap::translation({-v.x, -v.y});
            else {
                if (par == Pt{1, 0})
                    m = {0, -1, 1, 0, {0, 0}};
                else if (par == Pt{0, 1})
                    m = {1, 0, 0, 1, {0, 0}};
                else
                    m = {1, -1, 0, 1, {0, 0}};
                Pt img = m.apply(v);
                m = m.then(AffineMap::translation({-img.x, 1 - img.y}));
            }
            return {HalfPolygon{apply_map(m, dp)}, m};
        }
        case 1: {
            Candidate c = canonical_dim1_half(dp);
            return {HalfPolygon{c.poly}, c.map};
        }
        default: {
            Candidate c = canonical_dim2(dp, true);
            return {HalfPolygon{c.poly}, c.map};
        }
    }
}

CanonicalKey lattice_key(const Polygon& p) { return encode_key('L', canonical_form(p).canonical); }

CanonicalKey half_key(const HalfPolygon& q) {
    return encode_key('H', canonical_form_half(q).canonical.doubled);
}

bool are_equivalent(const Polygon& p, const Polygon& q) { return lattice_key(p) == lattice_key(q); }

bool are_equivalent(const HalfPolygon& p, const HalfPolygon& q) {
    return half_key(p) == half_key(q);
}

}  // namespace finew2
