#include <doctest.h>

#include <set>
#include <sstream>

#include "finew2/classify.hpp"
#include "finew2/geography.hpp"

using namespace finew2;

namespace {

HalfPolygon half(std::initializer_list<Pt> doubled) {
    return HalfPolygon{convex_hull(std::vector<Pt>(doubled))};
}

}  // namespace

TEST_CASE("chern invariants: examples") {
    ChernInvariants a = chern(half({{0, 0}, {2, 0}, {1, 1}}));  // conv((0,0),(1,0),(1/2,1/2))
    CHECK(a.chi == 2);
    CHECK(a.c1sq == 1);
    CHECK(a.c2 == 35);
    CHECK(a.hollow);
    CHECK_FALSE(a.fine_is_lattice);

    ChernInvariants b = chern(half({{0, 0}, {2, 0}, {1, 4}}));  // conv((0,0),(1,0),(1/2,2))
    CHECK(b.chi == 2);
    CHECK(b.c1sq == 4);
    CHECK(b.c2 == 32);

    CHECK_THROWS_AS(chern(half({{0, 0}, {2, 0}})), std::invalid_argument);
}

TEST_CASE("inequality checks") {
    InequalityReport r1 = check_inequalities({2, 1, 35, true, false});
    CHECK(r1.bmy);
    CHECK(r1.noether);
    CHECK(r1.mod12);
    CHECK_FALSE(r1.scott_bound.has_value());  // gated on lattice Fine interiors

    InequalityReport r2 = check_inequalities({2, 4, 32, true, false});
    CHECK(r2.bmy);
    CHECK(r2.noether);
    CHECK(r2.mod12);

    InequalityReport bad = check_inequalities({0, 100, 20, false, false});
    CHECK_FALSE(bad.bmy);
}

TEST_CASE("noether line status") {
    // unit lattice triangle as Fine interior: chi 3, c1sq 2, hollow, on the line
    ChernInvariants tri = chern(half({{0, 0}, {2, 0}, {0, 2}}));
    CHECK(tri.chi == 3);
    CHECK(tri.c1sq == 2);
    CHECK(tri.fine_is_lattice);
    NoetherLineStatus s = noether_line_status(tri);
    CHECK(s.on_line);
    CHECK(s.gap == 0);
    CHECK(s.hollow);

    // the half-integral hollow triangle sits one step above the line
    NoetherLineStatus h = noether_line_status(chern(half({{0, 0}, {2, 0}, {1, 1}})));
    CHECK(h.gap == 1);
    CHECK(h.hollow);
    CHECK_FALSE(h.on_line);
}

TEST_CASE("hollow iff on the Noether line for lattice Fine interiors") {
    for (int g : {3, 4, 5}) {
        for (const ClassificationRecord& r : classify(g)) {
            ChernInvariants inv = chern(r.fine_interior);
            if (!inv.fine_is_lattice) continue;
            NoetherLineStatus s = noether_line_status(inv);
            CHECK(s.on_line == s.hollow);
        }
    }
}

TEST_CASE("interior point forces a positive gap") {
    for (const ClassificationRecord& r : classify(5)) {
        ChernInvariants inv = chern(r.fine_interior);
        if (!inv.hollow) CHECK(noether_line_status(inv).gap > 0);
    }
}

TEST_CASE("report rows for chi = 2") {
    std::vector<ChernInvariants> invs;
    for (const ClassificationRecord& r : classify(2)) invs.push_back(chern(r.fine_interior));
    auto rows = report(invs);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].chi == 2);
    CHECK(rows[0].count == 12);
    CHECK(rows[0].c1sq_min == 1);
    CHECK(rows[0].c1sq_max == 4);
    CHECK(rows[0].interval_complete);
    // four distinct (c2, c1sq) pairs: (35,1),(34,2),(33,3),(32,4)
    std::set<std::pair<Int, Int>> pts;
    for (const ChernInvariants& i : invs) pts.insert({i.c2, i.c1sq});
    CHECK(pts == std::set<std::pair<Int, Int>>{{32, 4}, {33, 3}, {34, 2}, {35, 1}});
}

TEST_CASE("all classified invariants satisfy the general inequalities") {
    for (int g : {2, 3, 4}) {
        for (const ClassificationRecord& r : classify(g)) {
            ChernInvariants inv = chern(r.fine_interior);
            CHECK(inv.c1sq >= 1);
            CHECK(inv.c1sq + inv.c2 == 12 * (1 + inv.chi));
            InequalityReport rep = check_inequalities(inv);
            CHECK(rep.bmy);
            CHECK(rep.noether);
            CHECK(rep.mod12);
            if (inv.fine_is_lattice) {
                CHECK(rep.scott_bound.value());
                CHECK(rep.upper_bound.value());
            }
        }
    }
}

TEST_CASE("csv outputs") {
    std::vector<ChernInvariants> empty;
    std::ostringstream geo;
    write_geography_csv(geo, empty);
    CHECK(geo.str() == "chi,c1sq,c2,hollow,lattice\n");

    std::vector<ChernInvariants> one{chern(half({{0, 0}, {2, 0}, {1, 1}}))};
    std::ostringstream geo1;
    write_geography_csv(geo1, one);
    CHECK(geo1.str() == "chi,c1sq,c2,hollow,lattice\n2,1,35,1,0\n");

    auto rows = report(one);
    std::ostringstream rep;
    write_report_csv(rep, rows);
    CHECK(rep.str() == "chi,count,c1sq_min,c1sq_max\n2,1,1,1\n");

    std::ostringstream svg;
    write_geography_svg(svg, one);
    CHECK(svg.str().find("<svg") != std::string::npos);
    CHECK(svg.str().find("<circle") != std::string::npos);
}
