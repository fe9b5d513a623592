#include "finew2/geography.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <ostream>
#include <set>

namespace finew2 {

ChernInvariants chern(const HalfPolygon& f) {
    if (f.dim() != 2) throw std::invalid_argument("not a surface of general type case");
    ChernInvariants inv;
    inv.chi = static_cast<Int>(lattice_points(f).size());
    Int doubled_area = normalized_area(f.doubled);  // = 8 * EuclArea(F)
    assert(doubled_area % 2 == 0);                  // 2 Vol_2(F) is an integer
    inv.c1sq = doubled_area / 2;
    inv.c2 = 12 * (1 + inv.chi) - inv.c1sq;
    inv.hollow = interior_lattice_points(f).empty();
    inv.fine_is_lattice = true;
    for (const Pt& v : f.doubled.vertices())
        if (((v.x % 2) + 2) % 2 != 0 || ((v.y % 2) + 2) % 2 != 0) inv.fine_is_lattice = false;
    return inv;
}

InequalityReport check_inequalities(const ChernInvariants& inv) {
    InequalityReport r;
    r.bmy = inv.c1sq <= 3 * inv.c2;
    r.noether = 5 * inv.c1sq >= inv.c2 - 36;
    r.mod12 = ((inv.c1sq + inv.c2) % 12 + 12) % 12 == 0;
    if (inv.fine_is_lattice) {
        r.scott_bound = 7 * inv.c1sq >= 2 * inv.c2 - 96;
        r.upper_bound = 2 * inv.c1sq <= inv.c2 - 42;
    }
    return r;
}

NoetherLineStatus noether_line_status(const ChernInvariants& inv) {
    NoetherLineStatus s;
    s.gap = inv.c1sq - (2 * inv.chi - 4);
    s.on_line = s.gap == 0;
    s.hollow = inv.hollow;
    return s;
}

std::vector<ReportRow> report(std::span<const ChernInvariants> invs) {
    std::map<Int, std::set<Int>> values;
    std::map<Int, std::size_t> counts;
    for (const ChernInvariants& i : invs) {
        values[i.chi].insert(i.c1sq);
        ++counts[i.chi];
    }
    std::vector<ReportRow> rows;
    for (const auto& [chi, vals] : values) {
        ReportRow r;
        r.chi = chi;
        r.count = counts[chi];
        r.c1sq_min = *vals.begin();
        r.c1sq_max = *vals.rbegin();
        r.interval_complete =
            static_cast<Int>(vals.size()) == r.c1sq_max - r.c1sq_min + 1;
        rows.push_back(r);
    }
    return rows;
}

void write_report_csv(std::ostream& out, std::span<const ReportRow> rows) {
    out << "chi,count,c1sq_min,c1sq_max\n";
    for (const ReportRow& r : rows)
        out << r.chi << ',' << r.count << ',' << r.c1sq_min << ',' << r.c1sq_max << '\n';
}

void write_geography_csv(std::ostream& out, std::span<const ChernInvariants> invs) {
    out << "chi,c1sq,c2,hollow,lattice\n";
    for (const ChernInvariants& i : invs)
        out << i.chi << ',' << i.c1sq << ',' << i.c2 << ',' << (i.hollow ? 1 : 0) << ','
            << (i.fine_is_lattice ? 1 : 0) << '\n';
}

void write_geography_svg(std::ostream& out, std::span<const ChernInvariants> invs) {
    // plain scatter in (c2, c1sq) coordinates with the four reference lines;
    // the CSV is the normative output, this is presentation only
    Int c2max = 60, c1max = 20;
    for (const ChernInvariants& i : invs) {
        c2max = std::max(c2max, i.c2 + 5);
        c1max = std::max(c1max, i.c1sq + 5);
    }
    double w = 900.0, h = 600.0;
    auto X = [&](double c2) { return 40.0 + c2 / double(c2max) * (w - 60.0); };
    auto Y = [&](double c1) { return h - 40.0 - c1 / double(c1max) * (h - 60.0); };
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
    out << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(double(c2max))
        << "\" y2=\"" << Y(0) << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(0) << "\" y2=\""
        << Y(double(c1max)) << "\" stroke=\"black\"/>\n";
    // reference lines clipped to the plot window
    auto line_from = [&](double a, double b, const char* label) {
        // c1 = a * c2 + b
        double x0 = 0, x1 = double(c2max);
        double y0 = a * x0 + b, y1 = a * x1 + b;
        out << "<line x1=\"" << X(x0) << "\" y1=\"" << Y(y0) << "\" x2=\"" << X(x1) << "\" y2=\""
            << Y(y1) << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
        out << "<text x=\"" << X(x1 * 0.72) << "\" y=\"" << Y(a * x1 * 0.72 + b) - 4
            << "\" font-size=\"11\">" << label << "</text>\n";
    };
    line_from(3.0, 0.0, "c1^2 = 3 c2");
    line_from(0.2, -7.2, "5 c1^2 = c2 - 36");
    line_from(2.0 / 7.0, -96.0 / 7.0, "7 c1^2 = 2 c2 - 96");
    line_from(0.5, -21.0, "2 c1^2 = c2 - 42");
    std::set<std::pair<Int, Int>> pts;
    for (const ChernInvariants& i : invs) pts.insert({i.c2, i.c1sq});
    for (auto [c2, c1] : pts)
        out << "<circle cx=\"" << X(double(c2)) << "\" cy=\"" << Y(double(c1))
            << "\" r=\"1.8\" fill=\"black\"/>\n";
    out << "</svg>\n";
}

}  // namespace finew2
