#include <doctest.h>

#include <numeric>
#include <set>

#include "finew2/classify.hpp"
#include "finew2/fine_interior.hpp"

using namespace finew2;

namespace {

Polygon poly(std::initializer_list<Pt> pts) { return convex_hull(std::vector<Pt>(pts)); }

HalfPolygon half(std::initializer_list<Pt> doubled) {
    return HalfPolygon{convex_hull(std::vector<Pt>(doubled))};
}

RatPt rp(Int nx, Int dx, Int ny, Int dy) { return {Rat(nx, dx), Rat(ny, dy)}; }

}  // namespace

TEST_CASE("interior hull") {
    CHECK(interior_hull(poly({{0, 0}, {3, 0}, {0, 3}})) == poly({{1, 1}}));
    CHECK(interior_hull(poly({{0, 0}, {2, 0}, {0, 2}})).dim() == -1);
    CHECK(interior_hull(poly({{0, 0}, {4, 0}, {0, 4}})) == poly({{1, 1}, {2, 1}, {1, 2}}));
}

TEST_CASE("move_out of lattice polygons") {
    // x >= -1, y >= -1, x + y <= 2
    RatPolygon m = move_out(poly({{0, 0}, {1, 0}, {0, 1}}));
    RatPolygon expect{{rp(-1, 1, -1, 1), rp(3, 1, -1, 1), rp(-1, 1, 3, 1)}};
    CHECK(m == expect);
    RatPolygon sq = move_out(poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    RatPolygon expect_sq{{rp(-1, 1, -1, 1), rp(2, 1, -1, 1), rp(2, 1, 2, 1), rp(-1, 1, 2, 1)}};
    CHECK(sq == expect_sq);
    CHECK_THROWS_AS(move_out(poly({{0, 0}, {1, 0}})), std::invalid_argument);
}

TEST_CASE("move_out of a half polygon has rational vertices") {
    HalfPolygon q = half({{0, 0}, {2, 0}, {1, 1}});  // conv((0,0),(1,0),(1/2,1/2))
    RatPolygon m = move_out(q);
    RatPolygon expect{{rp(-2, 1, -1, 1), rp(3, 1, -1, 1), rp(1, 2, 3, 2)}};
    CHECK(m == expect);
}

TEST_CASE("max_half_polygon") {
    HalfPolygon q = half({{0, 0}, {2, 0}, {1, 1}});
    CHECK(max_half_polygon(q) == half({{-4, -2}, {6, -2}, {1, 3}}));
    HalfPolygon unit = half({{0, 0}, {2, 0}, {0, 2}});
    CHECK(max_half_polygon(unit) == half({{-2, -2}, {6, -2}, {-2, 6}}));
    // containment: each constraint is relaxed
    for (const Pt& v : q.doubled.vertices()) CHECK(contains(max_half_polygon(q).doubled, v));
}

TEST_CASE("fbar examples") {
    // lattice middle polygon: fbar is the interior hull
    FineResult f3 = fbar(half({{0, 0}, {6, 0}, {0, 6}}));  // P0 = 3*unimodular triangle
    CHECK(f3.dim() == 0);
    CHECK(f3.shape.doubled == poly({{2, 2}}));  // the point (1,1)

    FineResult fmax = fbar(half({{-4, -2}, {6, -2}, {1, 3}}));
    CHECK(fmax.shape.doubled == poly({{0, 0}, {2, 0}, {1, 1}}));

    FineResult f2 = fbar(half({{0, 0}, {4, 0}, {0, 4}}));  // P0 = 2*unimodular triangle
    CHECK(f2.dim() == -1);
}

TEST_CASE("exclusion scan matches the spec examples") {
    Polygon r = poly({{0, 0}, {6, 0}, {0, 6}});
    // (1,1) is excluded via n=(1,0) with even Min; (2,2) has no gap-1 normal
    auto at = [&](Pt z) {
        for (Dual n : polar_candidate_normals(r, z, 1)) {
            Int mn = min_support(r, n);
            if (dot(z, n) - mn == 1 && mn % 2 == 0) return true;
        }
        return false;
    };
    CHECK(at({1, 1}));
    CHECK_FALSE(at({2, 2}));
}

TEST_CASE("support normals") {
    auto s1 = support_normals(poly({{0, 0}, {6, 0}, {0, 6}}));
    REQUIRE(s1.size() == 3);
    for (const SupportNormal& s : s1) {
        CHECK(s.even);
        CHECK(min_support(interior_hull(poly({{0, 0}, {6, 0}, {0, 6}})), s.n) == s.min_value + 1);
    }
    std::set<Dual> dirs;
    for (const SupportNormal& s : s1) dirs.insert(s.n);
    CHECK(dirs == std::set<Dual>{{-1, -1}, {0, 1}, {1, 0}});

    auto s2 = support_normals(poly({{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
    std::set<Dual> dirs2;
    for (const SupportNormal& s : s2) dirs2.insert(s.n);
    CHECK(dirs2 == std::set<Dual>{{-1, 0}, {0, -1}, {0, 1}, {1, 0}});

    CHECK_THROWS_AS(support_normals(poly({{0, 0}, {2, 0}, {0, 2}})), std::invalid_argument);
}

TEST_CASE("fbar_via_support agrees with fbar") {
    std::vector<HalfPolygon> inputs = {
        half({{-4, -2}, {6, -2}, {1, 3}}),
        half({{0, 0}, {6, 0}, {0, 6}}),
        half({{0, 0}, {4, 0}, {0, 4}}),
        half({{-2, -2}, {4, -2}, {-2, 4}}),
        half({{-3, -2}, {5, -2}, {1, 4}}),
    };
    for (const HalfPolygon& q : inputs) CHECK(fbar(q) == fbar_via_support(q));
}

TEST_CASE("fine_interior_test examples") {
    CHECK(fine_interior_test(half({{0, 0}, {2, 0}, {1, 1}})));        // conv((0,0),(1,0),(1/2,1/2))
    CHECK_FALSE(fine_interior_test(half({{0, 0}, {2, 0}, {1, 5}})));  // conv((0,0),(1,0),(1/2,5/2))
    CHECK(fine_interior_test(half({{0, 0}, {2, 0}, {0, 2}})));        // lattice unit triangle
}

TEST_CASE("fixed point property for accepted polygons") {
    HalfPolygon q = half({{0, 0}, {2, 0}, {1, 1}});
    REQUIRE(fine_interior_test(q));
    CHECK(fbar(max_half_polygon(q)).shape == q);
}

TEST_CASE("collinear interior points force dim <= 1") {
    // P0 = [-1,3] x [-1,1] has interior lattice points (0,0),(1,0),(2,0)
    HalfPolygon strip = half({{-2, -2}, {6, -2}, {6, 2}, {-2, 2}});
    CHECK(fbar(strip).dim() <= 1);
}

TEST_CASE("inclusion chain") {
    CHECK(inclusion_chain_check(half({{0, 0}, {6, 0}, {0, 6}})));
    CHECK(inclusion_chain_check(half({{-4, -2}, {6, -2}, {1, 3}})));
    CHECK(inclusion_chain_check(half({{0, 0}, {4, 0}, {0, 4}})));
}

TEST_CASE("fine_interior_3d on boxes and prisms") {
    Polytope3 cube{{{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {2, 2, 0}, {2, 0, 2}, {0, 2, 2}, {2, 2, 2}},
                   1};
    RatPolytope3 f = fine_interior_3d(cube);
    REQUIRE(f.vertices.size() == 1);
    CHECK(f.vertices[0] == RatPt3{Rat(1), Rat(1), Rat(1)});

    Polytope3 box{{{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {2, 2, 0}, {0, 0, 4}, {2, 0, 4}, {0, 2, 4}, {2, 2, 4}},
                  1};
    RatPolytope3 fb = fine_interior_3d(box);
    REQUIRE(fb.vertices.size() == 2);
    CHECK(fb.vertices[0] == RatPt3{Rat(1), Rat(1), Rat(1)});
    CHECK(fb.vertices[1] == RatPt3{Rat(1), Rat(1), Rat(3)});

    // [-1,1] x 3*triangle: Fine interior is the point (0,1,1)
    Polytope3 prism{{{-1, 0, 0}, {-1, 3, 0}, {-1, 0, 3}, {1, 0, 0}, {1, 3, 0}, {1, 0, 3}}, 1};
    RatPolytope3 fp = fine_interior_3d(prism);
    REQUIRE(fp.vertices.size() == 1);
    CHECK(fp.vertices[0] == RatPt3{Rat(0), Rat(1), Rat(1)});

    // width < 2 gives an empty Fine interior
    Polytope3 thin{{{0, 0, 0}, {1, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 3, 0}, {1, 0, 3}, {0, 3, 3}, {1, 3, 3}},
                   1};
    CHECK(fine_interior_3d(thin).vertices.empty());
}

TEST_CASE("pyramid oracle") {
    HalfPolygon t3 = half({{0, 0}, {6, 0}, {0, 6}});
    RatPolytope3 f = pyramid_oracle(t3);
    REQUIRE(f.vertices.size() == 1);
    CHECK(f.vertices[0] == RatPt3{Rat(0), Rat(1), Rat(1)});
    CHECK(f == embed_at_zero(fbar(t3)));

    HalfPolygon pmax = half({{-4, -2}, {6, -2}, {1, 3}});
    CHECK(pyramid_oracle(pmax) == embed_at_zero(fbar(pmax)));

    HalfPolygon t2 = half({{0, 0}, {4, 0}, {0, 4}});
    CHECK(pyramid_oracle(t2).vertices.empty());
}

TEST_CASE("width of the doubled pyramid is 2 when fbar has dim 2") {
    HalfPolygon pmax = half({{-4, -2}, {6, -2}, {1, 3}});
    REQUIRE(fbar(pmax).dim() == 2);
    Width3Result w = lattice_width(doubled_pyramid(pmax));
    CHECK(w.width == Rat(2));
}

TEST_CASE("structural invariants on classified outputs") {
    for (int g : {2, 3}) {
        for (const ClassificationRecord& r : classify(g)) {
            const Polygon& d = r.fine_interior.doubled;
            REQUIRE(d.dim() == 2);
            // every edge of F contains a lattice point
            const auto& v = d.vertices();
            for (std::size_t i = 0; i < v.size(); ++i) {
                Pt a = v[i], b = v[(i + 1) % v.size()];
                bool has_lattice = false;
                // lattice points on the doubled edge are even points
                Pt dd = b - a;
                Int gg = std::gcd(dd.x < 0 ? -dd.x : dd.x, dd.y < 0 ? -dd.y : dd.y);
                for (Int t = 0; t <= gg; ++t) {
                    Pt q{a.x + t * dd.x / gg, a.y + t * dd.y / gg};
                    if (((q.x % 2) + 2) % 2 == 0 && ((q.y % 2) + 2) % 2 == 0) has_lattice = true;
                }
                CHECK(has_lattice);
            }
            // every vertex of conv(int cap M) is on the boundary of F
            std::vector<Pt> lp2;
            for (const Pt& p : lattice_points(r.fine_interior)) lp2.push_back({2 * p.x, 2 * p.y});
            Polygon base2 = Polygon::hull_of(lp2);
            for (const Pt& q : base2.vertices()) CHECK_FALSE(strictly_contains(d, q));
        }
    }
}
