#pragma once

#include <iosfwd>
#include <optional>
#include <span>

#include "finew2/geometry.hpp"

namespace finew2 {

struct ChernInvariants {
    Int chi = 0;    // |F cap M|
    Int c1sq = 0;   // 2 Vol_2(F)
    Int c2 = 0;     // 12(1 + chi) - c1sq
    bool hollow = false;           // no interior lattice points
    bool fine_is_lattice = false;  // all vertices of F are lattice points
};

// Surface invariants of a 2-dimensional Fine interior. Errors on dim < 2.
ChernInvariants chern(const HalfPolygon& f);

struct InequalityReport {
    bool bmy = false;      // c1^2 <= 3 c2
    bool noether = false;  // 5 c1^2 >= c2 - 36
    bool mod12 = false;    // c1^2 + c2 == 0 (mod 12)
    // Pick/Scott-derived bounds, meaningful only for lattice-polygon Fine
    // interiors; unset otherwise.
    std::optional<bool> scott_bound;  // 7 c1^2 >= 2 c2 - 96
    std::optional<bool> upper_bound;  // 2 c1^2 <= c2 - 42
};

InequalityReport check_inequalities(const ChernInvariants& inv);

struct NoetherLineStatus {
    bool on_line = false;
    Int gap = 0;  // c1^2 - (2 chi - 4)
    bool hollow = false;
};

NoetherLineStatus noether_line_status(const ChernInvariants& inv);

struct ReportRow {
    Int chi = 0;
    std::size_t count = 0;
    Int c1sq_min = 0;
    Int c1sq_max = 0;
    bool interval_complete = false;  // every integer in [min, max] attained
};

std::vector<ReportRow> report(std::span<const ChernInvariants> invs);

void write_report_csv(std::ostream& out, std::span<const ReportRow> rows);
void write_geography_csv(std::ostream& out, std::span<const ChernInvariants> invs);
void write_geography_svg(std::ostream& out, std::span<const ChernInvariants> invs);

}  // namespace finew2
