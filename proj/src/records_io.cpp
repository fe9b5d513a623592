#include "finew2/records_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace finew2 {

using nlohmann::json;

std::string record_to_json(const ClassificationRecord& r) {
    json j;
    j["g"] = r.g;
    json verts = json::array();
    for (const Pt& v : r.fine_interior.doubled.vertices()) verts.push_back({v.x, v.y});
    j["vertices2x"] = std::move(verts);
    j["base_key"] = key_to_hex(r.base_key);
    json hats = json::array();
    for (const HatSpec& h : r.hats) {
        json hj;
        hj["edge"] = {{h.edge_a.x, h.edge_a.y}, {h.edge_b.x, h.edge_b.y}};
        hj["apex2x"] = {h.apex2.x, h.apex2.y};
        hj["h2x"] = h.h2;
        hats.push_back(std::move(hj));
    }
    j["hats"] = std::move(hats);
    return j.dump();
}

namespace {

Pt parse_pt(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw std::invalid_argument("expected an integer pair");
    return {j[0].get<Int>(), j[1].get<Int>()};
}

Polygon polygon_from_vertex_json(const json& verts) {
    if (!verts.is_array() || verts.empty()) throw std::invalid_argument("expected a vertex array");
    std::vector<Pt> pts;
    for (const json& v : verts) pts.push_back(parse_pt(v));
    Polygon hull = Polygon::hull_of(pts);
    std::vector<Pt> sorted_in(pts), sorted_hull(hull.vertices());
    std::sort(sorted_in.begin(), sorted_in.end());
    sorted_in.erase(std::unique(sorted_in.begin(), sorted_in.end()), sorted_in.end());
    std::sort(sorted_hull.begin(), sorted_hull.end());
    if (sorted_in != sorted_hull)
        throw std::invalid_argument("vertices are not in convex position");
    return hull;
}

}  // namespace

ClassificationRecord record_from_json(const std::string& line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
    ClassificationRecord r;
    if (!j.contains("g") || !j["g"].is_number_integer())
        throw std::invalid_argument("missing integer field 'g'");
    r.g = j["g"].get<int>();
    if (!j.contains("vertices2x")) throw std::invalid_argument("missing field 'vertices2x'");
    r.fine_interior = HalfPolygon{polygon_from_vertex_json(j["vertices2x"])};
    if (j.contains("base_key")) r.base_key = key_from_hex(j["base_key"].get<std::string>());
    if (j.contains("hats")) {
        for (const json& hj : j["hats"]) {
            HatSpec h;
            h.edge_a = parse_pt(hj.at("edge").at(0));
            h.edge_b = parse_pt(hj.at("edge").at(1));
            h.apex2 = parse_pt(hj.at("apex2x"));
            h.h2 = hj.at("h2x").get<Int>();
            r.hats.push_back(h);
        }
    }
    return r;
}

std::string record_csv_header() { return "g,vertices2x,base_key"; }

std::string record_to_csv(const ClassificationRecord& r) {
    std::ostringstream os;
    os << r.g << ',';
    bool first = true;
    for (const Pt& v : r.fine_interior.doubled.vertices()) {
        if (!first) os << ' ';
        os << v.x << ' ' << v.y;
        first = false;
    }
    os << ',' << key_to_hex(r.base_key);
    return os.str();
}

ImportReport import_polygons(std::istream& in) {
    ImportReport rep;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
        if (!trimmed.empty()) trimmed.erase(trimmed.find_last_not_of(" \t\r") + 1);
        if (trimmed.empty() || trimmed[0] == '#') continue;
        try {
            Polygon p;
            if (trimmed[0] == '[' || trimmed[0] == '{') {
                json j = json::parse(trimmed);
                if (j.is_object()) {
                    if (!j.contains("vertices2x"))
                        throw std::invalid_argument("missing field 'vertices2x'");
                    p = polygon_from_vertex_json(j["vertices2x"]);
                } else {
                    p = polygon_from_vertex_json(j);
                }
            } else {
                std::istringstream ss(trimmed);
                std::vector<Int> nums;
                Int v;
                while (ss >> v) nums.push_back(v);
                if (!ss.eof()) throw std::invalid_argument("non-integer coordinate");
                if (nums.empty() || nums.size() % 2 != 0)
                    throw std::invalid_argument("expected an even number of coordinates");
                json verts = json::array();
                for (std::size_t i = 0; i < nums.size(); i += 2)
                    verts.push_back({nums[i], nums[i + 1]});
                p = polygon_from_vertex_json(verts);
            }
            rep.polygons.push_back(canonical_form_half(HalfPolygon{p}).canonical);
        } catch (const std::exception& e) {
            rep.errors.emplace_back(lineno, e.what());
        }
    }
    return rep;
}

void export_polygons(std::ostream& out, const std::vector<HalfPolygon>& polys) {
    for (const HalfPolygon& q : polys) {
        json verts = json::array();
        for (const Pt& v : q.doubled.vertices()) verts.push_back({v.x, v.y});
        out << verts.dump() << '\n';
    }
}

}  // namespace finew2
