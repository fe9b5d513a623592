#include "finew2/enumerate.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>

namespace finew2 {

namespace {

// Valid augmentation points of a dim-2 polygon all lie at lattice height <= 1
// outside every edge (the added triangles must be lattice-point-free by Pick),
// i.e. inside the move-out of P by one lattice unit.
std::vector<Pt> candidate_points_dim2(const Polygon& p) {
    std::vector<HalfPlane> hs = edge_halfplanes(p);
    for (HalfPlane& h : hs) h.c -= 1;
    return halfplane_region_lattice_points(hs);
}

}  // namespace

std::vector<Polygon> augment(const Polygon& p) {
    std::map<CanonicalKey, Polygon> out;
    auto add = [&](const Polygon& q) {
        PolygonCanon c = canonical_form(q);
        out.emplace(encode_key('L', c.canonical), c.canonical);
    };
    switch (p.dim()) {
        case -1:
            throw std::invalid_argument("empty polygon");
        case 0: {
            Pt v = p.vertices()[0];
            add(Polygon::hull_of(std::vector<Pt>{v, {v.x + 1, v.y}}));
            break;
        }
        case 1: {
            // canonical segment classes: one longer segment, one triangle
            // (all apex offsets at height 1 are shear-equivalent)
            Pt a = p.vertices()[0], b = p.vertices()[1];
            Pt d = b - a;
            Int g = std::gcd(d.x < 0 ? -d.x : d.x, d.y < 0 ? -d.y : d.y);
            add(Polygon::hull_of(std::vector<Pt>{{0, 0}, {g + 1, 0}}));
            add(Polygon::hull_of(std::vector<Pt>{{0, 0}, {g, 0}, {0, 1}}));
            break;
        }
        default: {
            std::vector<Pt> base = lattice_points(p);
            std::set<Pt> base_set(base.begin(), base.end());
            for (const Pt& v : candidate_points_dim2(p)) {
                if (base_set.count(v)) continue;
                std::vector<Pt> pts = base;
                pts.push_back(v);
                Polygon h = Polygon::hull_of(pts);
                if (lattice_points(h).size() == base.size() + 1) add(h);
            }
            break;
        }
    }
    std::vector<Polygon> res;
    res.reserve(out.size());
    for (auto& [k, q] : out) res.push_back(std::move(q));
    return res;
}

EnumState EnumState::initial() {
    EnumState s;
    s.count = 1;
    Polygon pt = Polygon::hull_of(std::vector<Pt>{{0, 0}});
    s.frontier.emplace(encode_key('L', pt), pt);
    return s;
}

void EnumState::step() {
    std::map<CanonicalKey, Polygon> next;
    for (const auto& [k, p] : frontier)
        for (Polygon& q : augment(p)) next.emplace(encode_key('L', q), q);
    frontier = std::move(next);
    ++count;
}

std::vector<Polygon> enumerate_polygons(int g) {
    if (g < 3) throw std::invalid_argument("enumerate_polygons requires g >= 3");
    EnumState s = EnumState::initial();
    while (s.count < g) s.step();
    std::vector<Polygon> out;
    for (const auto& [k, p] : s.frontier)
        if (p.dim() == 2) out.push_back(p);
    return out;  // frontier map is key-sorted already
}

std::vector<Polygon> brute_force_polygons(int g, int box_half_width) {
    if (g > 8 || box_half_width > 8) throw std::invalid_argument("brute force limited to small inputs");
    std::vector<Pt> grid;
    for (Int x = -box_half_width; x <= box_half_width; ++x)
        for (Int y = -box_half_width; y <= box_half_width; ++y) grid.push_back({x, y});
    std::sort(grid.begin(), grid.end());

    std::map<CanonicalKey, Polygon> out;
    std::vector<Pt> chosen;

    // DFS over subsets in convex position. Two monotone prunes: an absorbed
    // point stays absorbed, and adding a hull vertex strictly increases the
    // lattice point count.
    auto rec = [&](auto&& self, std::size_t next_idx) -> void {
        if (chosen.size() == static_cast<std::size_t>(g)) return;
        for (std::size_t i = next_idx; i < grid.size(); ++i) {
            chosen.push_back(grid[i]);
            Polygon h = Polygon::hull_of(chosen);
            if (h.vertices().size() == chosen.size()) {
                std::size_t npts = lattice_points(h).size();
                if (npts <= static_cast<std::size_t>(g)) {
                    if (npts == static_cast<std::size_t>(g) && h.dim() == 2) {
                        PolygonCanon c = canonical_form(h);
                        out.emplace(encode_key('L', c.canonical), c.canonical);
                    }
                    self(self, i + 1);
                }
            }
            chosen.pop_back();
        }
    };
    rec(rec, 0);

    std::vector<Polygon> res;
    for (auto& [k, p] : out) res.push_back(std::move(p));
    return res;
}

void save_frontier(const std::filesystem::path& path, const std::map<CanonicalKey, Polygon>& frontier) {
    std::ofstream f(path, std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write frontier file: " + path.string());
    for (const auto& [k, p] : frontier) f << key_to_hex(k) << '\n';
}

std::map<CanonicalKey, Polygon> load_frontier(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read frontier file: " + path.string());
    std::map<CanonicalKey, Polygon> out;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        CanonicalKey k = key_from_hex(line);
        out.emplace(k, polygon_from_key(k));
    }
    return out;
}

}  // namespace finew2
