#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "finew2/classify.hpp"
#include "finew2/enumerate.hpp"
#include "finew2/geography.hpp"
#include "finew2/records_io.hpp"

using namespace finew2;

namespace {

int default_workers() {
    if (const char* env = std::getenv("FINEW2_WORKERS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

// write-then-rename so partially written outputs are never observed
void write_atomic(const std::string& path, const std::string& content) {
    std::filesystem::path p(path);
    std::filesystem::path tmp = p;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::trunc | std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + tmp.string());
        f << content;
    }
    std::filesystem::rename(tmp, p);
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_atomic(out_path, content);
}

std::vector<ClassificationRecord> read_records(const std::string& path, bool& parse_failed) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::vector<ClassificationRecord> recs;
    std::string line;
    int lineno = 0;
    parse_failed = false;
    while (std::getline(f, line)) {
        ++lineno;
        std::string t = line;
        t.erase(0, t.find_first_not_of(" \t\r"));
        if (t.empty() || t[0] == '#') continue;
        try {
            if (t[0] == '{') {
                recs.push_back(record_from_json(t));
            } else {
                std::istringstream ss(t);
                ImportReport rep = import_polygons(ss);
                if (!rep.errors.empty()) throw std::invalid_argument(rep.errors[0].second);
                ClassificationRecord r;
                r.fine_interior = rep.polygons.at(0);
                r.g = static_cast<int>(lattice_points(r.fine_interior).size());
                recs.push_back(std::move(r));
            }
        } catch (const std::exception& e) {
            std::cerr << "line " << lineno << ": " << e.what() << '\n';
            parse_failed = true;
        }
    }
    return recs;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fine interiors of width-2 lattice 3-polytopes: classification and geography"};
    app.require_subcommand(1);

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "lattice polygon classes with g lattice points");
    int enum_g = 3;
    std::string enum_out;
    cmd_enum->add_option("--g", enum_g, "number of lattice points")->required();
    cmd_enum->add_option("--out", enum_out, "output path (default stdout)");

    // classify
    auto* cmd_cls = app.add_subcommand("classify", "classify Fine interiors by lattice point count");
    int min_g = 2, max_g = 2, workers = default_workers();
    std::string cls_out, cls_format = "jsonl", ckpt_dir;
    bool no_ckpt = false;
    cmd_cls->add_option("--min-g", min_g, "smallest g")->required();
    cmd_cls->add_option("--max-g", max_g, "largest g")->required();
    cmd_cls->add_option("--workers", workers, "worker threads (default FINEW2_WORKERS or 1)");
    cmd_cls->add_option("--checkpoint-dir", ckpt_dir, "checkpoint directory (default .finew2_ckpt)");
    cmd_cls->add_flag("--no-checkpoint", no_ckpt, "disable checkpointing");
    cmd_cls->add_option("--out", cls_out, "output path (default stdout)");
    cmd_cls->add_option("--format", cls_format, "jsonl or csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));

    // verify
    auto* cmd_ver = app.add_subcommand("verify", "re-run the Fine-interior test on input polygons");
    std::string ver_file;
    bool lenient = false;
    cmd_ver->add_option("file", ver_file, "input file")->required();
    cmd_ver->add_flag("--lenient", lenient, "exit 0 even when rows fail");

    // invariants
    auto* cmd_inv = app.add_subcommand("invariants", "append Chern invariants to records");
    std::string inv_file, inv_out, inv_format = "jsonl";
    cmd_inv->add_option("file", inv_file, "input file")->required();
    cmd_inv->add_option("--out", inv_out, "output path (default stdout)");
    cmd_inv->add_option("--format", inv_format, "jsonl or csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));

    // report
    auto* cmd_rep = app.add_subcommand("report", "per-chi count and c1^2 range table");
    std::string rep_file, rep_out;
    cmd_rep->add_option("file", rep_file, "input file")->required();
    cmd_rep->add_option("--out", rep_out, "output path (default stdout)");

    // geography
    auto* cmd_geo = app.add_subcommand("geography", "Chern-number scatter data");
    std::string geo_file, geo_out, geo_svg;
    cmd_geo->add_option("file", geo_file, "input file")->required();
    cmd_geo->add_option("--out", geo_out, "CSV output path (default stdout)");
    cmd_geo->add_option("--svg", geo_svg, "also write an SVG scatter");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_enum) {
            std::ostringstream os;
            for (const Polygon& p : enumerate_polygons(enum_g)) {
                nlohmann::json verts = nlohmann::json::array();
                for (const Pt& v : p.vertices()) verts.push_back({v.x, v.y});
                nlohmann::json j;
                j["g"] = enum_g;
                j["vertices"] = std::move(verts);
                j["key"] = key_to_hex(encode_key('L', p));
                os << j.dump() << '\n';
            }
            emit(enum_out, os.str());
            return 0;
        }

        if (*cmd_cls) {
            ClassifyOptions opts;
            opts.workers = workers;
            opts.log = &std::cerr;
            if (!no_ckpt) opts.checkpoint_dir = ckpt_dir.empty() ? ".finew2_ckpt" : ckpt_dir;
            std::ostringstream os;
            if (cls_format == "csv") {
                std::ostringstream tmp;
                classify_range(min_g, max_g, tmp, opts);
                os << record_csv_header() << '\n';
                std::istringstream is(tmp.str());
                std::string line;
                while (std::getline(is, line))
                    os << record_to_csv(record_from_json(line)) << '\n';
            } else {
                classify_range(min_g, max_g, os, opts);
            }
            emit(cls_out, os.str());
            return 0;
        }

        if (*cmd_ver) {
            bool parse_failed = false;
            auto recs = read_records(ver_file, parse_failed);
            if (parse_failed) return 2;
            std::size_t failures = 0;
            std::size_t lineno = 0;
            for (const ClassificationRecord& r : recs) {
                ++lineno;
                bool ok = fine_interior_test(r.fine_interior);
                if (!ok) {
                    ++failures;
                    std::cerr << "record " << lineno << ": not a Fine interior\n";
                }
            }
            std::cout << recs.size() - failures << "/" << recs.size() << " records verified\n";
            if (failures == 0) return 0;
            return lenient ? 0 : 1;
        }

        if (*cmd_inv) {
            bool parse_failed = false;
            auto recs = read_records(inv_file, parse_failed);
            if (parse_failed) return 2;
            std::ostringstream os;
            if (inv_format == "csv") os << "g,vertices2x,base_key,chi,c1sq,c2,hollow,lattice\n";
            for (const ClassificationRecord& r : recs) {
                ChernInvariants inv = chern(r.fine_interior);
                if (inv_format == "csv") {
                    os << record_to_csv(r) << ',' << inv.chi << ',' << inv.c1sq << ',' << inv.c2
                       << ',' << (inv.hollow ? 1 : 0) << ',' << (inv.fine_is_lattice ? 1 : 0)
                       << '\n';
                } else {
                    nlohmann::json j = nlohmann::json::parse(record_to_json(r));
                    j["chi"] = inv.chi;
                    j["c1sq"] = inv.c1sq;
                    j["c2"] = inv.c2;
                    j["hollow"] = inv.hollow;
                    j["lattice"] = inv.fine_is_lattice;
                    os << j.dump() << '\n';
                }
            }
            emit(inv_out, os.str());
            return 0;
        }

        if (*cmd_rep) {
            bool parse_failed = false;
            auto recs = read_records(rep_file, parse_failed);
            if (parse_failed) return 2;
            std::vector<ChernInvariants> invs;
            for (const ClassificationRecord& r : recs) invs.push_back(chern(r.fine_interior));
            auto rows = report(invs);
            for (const ReportRow& r : rows)
                if (!r.interval_complete)
                    std::cerr << "warning: chi=" << r.chi
                              << " c1^2 values do not fill the interval; input may be partial\n";
            std::ostringstream os;
            write_report_csv(os, rows);
            emit(rep_out, os.str());
            return 0;
        }

        if (*cmd_geo) {
            bool parse_failed = false;
            auto recs = read_records(geo_file, parse_failed);
            if (parse_failed) return 2;
            std::vector<ChernInvariants> invs;
            for (const ClassificationRecord& r : recs) invs.push_back(chern(r.fine_interior));
            std::ostringstream os;
            write_geography_csv(os, invs);
            emit(geo_out, os.str());
            if (!geo_svg.empty()) {
                std::ostringstream svg;
                write_geography_svg(svg, invs);
                write_atomic(geo_svg, svg.str());
            }
            return 0;
        }
    } catch (const CheckpointError& e) {
        std::cerr << "checkpoint error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
