#include <doctest.h>

#include <filesystem>
#include <set>

#include "finew2/enumerate.hpp"

using namespace finew2;

namespace {

Polygon poly(std::initializer_list<Pt> pts) { return convex_hull(std::vector<Pt>(pts)); }

std::set<CanonicalKey> keys_of(const std::vector<Polygon>& ps) {
    std::set<CanonicalKey> out;
    for (const Polygon& p : ps) out.insert(lattice_key(p));
    return out;
}

}  // namespace

TEST_CASE("enumerate_polygons small counts") {
    CHECK_THROWS_AS(enumerate_polygons(2), std::invalid_argument);
    auto g3 = enumerate_polygons(3);
    REQUIRE(g3.size() == 1);
    CHECK(are_equivalent(g3[0], poly({{0, 0}, {1, 0}, {0, 1}})));
    // three classes at four points: the square, the flat triangle and the
    // one-interior-point triangle
    auto g4 = enumerate_polygons(4);
    CHECK(g4.size() == 3);
    std::set<CanonicalKey> k4 = keys_of(g4);
    CHECK(k4.count(lattice_key(poly({{0, 0}, {1, 0}, {0, 1}, {1, 1}}))) == 1);
    CHECK(k4.count(lattice_key(poly({{0, 0}, {2, 0}, {0, 1}}))) == 1);
    CHECK(k4.count(lattice_key(poly({{0, 0}, {2, 1}, {1, 2}}))) == 1);
}

TEST_CASE("every output has g points, dim 2, pairwise inequivalent") {
    for (int g = 3; g <= 7; ++g) {
        auto ps = enumerate_polygons(g);
        std::set<CanonicalKey> seen;
        for (const Polygon& p : ps) {
            CHECK(p.dim() == 2);
            CHECK(lattice_points(p).size() == static_cast<std::size_t>(g));
            CHECK(seen.insert(lattice_key(p)).second);
        }
    }
}

TEST_CASE("augment examples") {
    // segment grows into the unimodular triangle
    auto from_seg = augment(poly({{0, 0}, {1, 0}}));
    bool has_triangle = false;
    for (const Polygon& p : from_seg)
        if (p.dim() == 2 && are_equivalent(p, poly({{0, 0}, {1, 0}, {0, 1}}))) has_triangle = true;
    CHECK(has_triangle);

    // unit triangle grows into the square and the flat triangle class
    auto from_tri = augment(poly({{0, 0}, {1, 0}, {0, 1}}));
    std::set<CanonicalKey> k = keys_of(from_tri);
    CHECK(k.count(lattice_key(poly({{0, 0}, {1, 0}, {0, 1}, {1, 1}}))) == 1);
    CHECK(k.count(lattice_key(poly({{0, 0}, {2, 0}, {0, 1}}))) == 1);

    // square + (2,2) keeps the point count tight; (3,3) would drag (2,2) in
    Polygon square = poly({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    Polygon with22 = convex_hull(std::vector<Pt>{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 2}});
    CHECK(lattice_points(with22).size() == 5);
    Polygon with33 = convex_hull(std::vector<Pt>{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {3, 3}});
    CHECK(lattice_points(with33).size() == 6);
    std::set<CanonicalKey> aug = keys_of(augment(square));
    CHECK(aug.count(lattice_key(with22)) == 1);
    CHECK(aug.count(lattice_key(with33)) == 0);
}

TEST_CASE("oracle equality for small g") {
    CHECK(brute_force_polygons(3, 4).size() == 1);
    CHECK(keys_of(brute_force_polygons(4, 4)) == keys_of(enumerate_polygons(4)));
    CHECK(keys_of(brute_force_polygons(5, 4)) == keys_of(enumerate_polygons(5)));
}

TEST_CASE("monotone growth: every class has an augmentation predecessor") {
    for (int g = 4; g <= 6; ++g) {
        for (const Polygon& p : enumerate_polygons(g)) {
            std::vector<Pt> pts = lattice_points(p);
            bool found = false;
            for (const Pt& v : p.vertices()) {
                std::vector<Pt> rest;
                for (const Pt& q : pts)
                    if (!(q == v)) rest.push_back(q);
                Polygon pred = convex_hull(rest);
                CHECK(lattice_points(pred).size() == pts.size() - 1);
                for (const Polygon& successor : augment(canonical_form(pred).canonical))
                    if (lattice_key(successor) == lattice_key(p)) found = true;
                if (found) break;
            }
            CHECK(found);
        }
    }
}

TEST_CASE("frontier save/load round trip") {
    EnumState s = EnumState::initial();
    while (s.count < 5) s.step();
    std::filesystem::path tmp = std::filesystem::temp_directory_path() / "finew2_frontier_test.txt";
    save_frontier(tmp, s.frontier);
    auto loaded = load_frontier(tmp);
    CHECK(loaded.size() == s.frontier.size());
    for (const auto& [k, p] : s.frontier) {
        REQUIRE(loaded.count(k) == 1);
        CHECK(loaded.at(k) == p);
    }
    std::filesystem::remove(tmp);
}
