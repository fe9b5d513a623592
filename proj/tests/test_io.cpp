#include <doctest.h>

#include <sstream>

#include "finew2/records_io.hpp"

using namespace finew2;

namespace {

HalfPolygon half(std::initializer_list<Pt> doubled) {
    return HalfPolygon{convex_hull(std::vector<Pt>(doubled))};
}

}  // namespace

TEST_CASE("record json round trip") {
    ClassificationRecord r;
    r.fine_interior = half({{0, 0}, {2, 0}, {1, 1}});
    r.g = 2;
    r.base_key = lattice_key(convex_hull(std::vector<Pt>{{0, 0}, {1, 0}}));
    r.hats.push_back({{0, 0}, {1, 0}, {1, 1}, 1});
    std::string line = record_to_json(r);
    ClassificationRecord back = record_from_json(line);
    CHECK(back.fine_interior == r.fine_interior);
    CHECK(back.g == r.g);
    CHECK(back.base_key == r.base_key);
    REQUIRE(back.hats.size() == 1);
    CHECK(back.hats[0] == r.hats[0]);
    CHECK(record_to_json(back) == line);
}

TEST_CASE("record csv") {
    ClassificationRecord r;
    r.fine_interior = half({{0, 0}, {2, 0}, {1, 1}});
    r.g = 2;
    r.base_key = lattice_key(convex_hull(std::vector<Pt>{{0, 0}, {1, 0}}));
    CHECK(record_to_csv(r).rfind("2,0 0 2 0 1 1,", 0) == 0);
}

TEST_CASE("import accepts the three line formats") {
    std::istringstream in(
        "[[0,0],[2,0],[1,1]]\n"
        "{\"vertices2x\": [[0,0],[2,0],[0,2]]}\n"
        "0 0 2 0 1 4\n");
    ImportReport rep = import_polygons(in);
    CHECK(rep.errors.empty());
    REQUIRE(rep.polygons.size() == 3);
    CHECK(are_equivalent(rep.polygons[0], half({{0, 0}, {2, 0}, {1, 1}})));
    CHECK(are_equivalent(rep.polygons[1], half({{0, 0}, {2, 0}, {0, 2}})));
}

TEST_CASE("import rejects bad lines with line numbers") {
    std::istringstream in(
        "[[0,0],[2,0],[1,1]]\n"
        "[[0,0],[2,0],[1,0]]\n"          // collinear point absorbed: not a vertex set
        "[[0,0],[4,0],[4,4],[3,1]]\n"    // non-convex quadruple
        "0 0 2 0 1\n"                    // odd coordinate count
        "[[0,0],[2,0],[1,0.5]]\n");      // non-integral doubled coordinate
    ImportReport rep = import_polygons(in);
    CHECK(rep.polygons.size() == 1);
    REQUIRE(rep.errors.size() == 4);
    CHECK(rep.errors[0].first == 2);
    CHECK(rep.errors[1].first == 3);
    CHECK(rep.errors[2].first == 4);
    CHECK(rep.errors[3].first == 5);
}

TEST_CASE("export -> import -> export is a fixed point") {
    std::vector<HalfPolygon> polys{
        canonical_form_half(half({{0, 0}, {2, 0}, {1, 1}})).canonical,
        canonical_form_half(half({{0, 0}, {2, 0}, {1, 4}})).canonical,
    };
    std::ostringstream out1;
    export_polygons(out1, polys);
    std::istringstream in(out1.str());
    ImportReport rep = import_polygons(in);
    REQUIRE(rep.errors.empty());
    std::ostringstream out2;
    export_polygons(out2, rep.polygons);
    CHECK(out1.str() == out2.str());
}

TEST_CASE("verify-style fuzz: perturbed records fail the test") {
    // move one doubled vertex of a true Fine interior by one half-step
    HalfPolygon good = half({{0, 0}, {2, 0}, {1, 1}});
    REQUIRE(fine_interior_test(good));
    int rejected = 0, accepted_valid = 0;
    for (Int dx : {-1, 0, 1}) {
        for (Int dy : {-1, 0, 1}) {
            if (dx == 0 && dy == 0) continue;
            HalfPolygon mutated = half({{0, 0}, {2, 0}, {1 + dx, 1 + dy}});
            if (mutated.dim() != 2 || lattice_points(mutated).size() != 2 ||
                !fine_interior_test(mutated)) {
                ++rejected;
            } else {
                ++accepted_valid;  // a mutation may land on another true record
                CHECK(fine_interior_test(mutated));
            }
        }
    }
    CHECK(rejected + accepted_valid == 8);
    CHECK(rejected >= 5);
}
