#include "finew2/classify.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <set>
#include <thread>

#include "finew2/enumerate.hpp"
#include "finew2/records_io.hpp"

namespace finew2 {

namespace {

// e with cross(d, e) = 1 for primitive d
Pt complement_of(Pt d) {
    Int old_r = d.x, r = d.y, old_s = 1, s = 0, old_t = 0, t = 1;
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
    if (old_r < 0) {
        old_s = -old_s;
        old_t = -old_t;
    }
    return {-old_t, old_s};
}

// closed doubled triangle contains no even point besides the two (even) edge
// endpoints
bool hat_triangle_ok(Pt u2, Pt w2, Pt apex2) {
    Polygon t = Polygon::hull_of(std::vector<Pt>{u2, w2, apex2});
    if (t.dim() != 2) return false;
    Int x0 = std::min({u2.x, w2.x, apex2.x}), x1 = std::max({u2.x, w2.x, apex2.x});
    Int y0 = std::min({u2.y, w2.y, apex2.y}), y1 = std::max({u2.y, w2.y, apex2.y});
    int count = 0;
    for (Int x = x0; x <= x1; ++x) {
        if (((x % 2) + 2) % 2 != 0) continue;
        for (Int y = y0; y <= y1; ++y) {
            if (((y % 2) + 2) % 2 != 0) continue;
            if (contains(t, {x, y})) {
                if (++count > 2) return false;
            }
        }
    }
    return count == 2;
}

Int doubled_triangle_area(Pt u2, Pt w2, Pt apex2) {
    Wide a = cross(w2 - u2, apex2 - u2);
    if (a < 0) a = -a;
    return static_cast<Int>(a);
}

std::vector<HatSpec> segment_side_hats(const Polygon& base, bool upper, int g) {
    Pt a = base.vertices()[0], b = base.vertices()[1];
    Pt d = b - a;
    Int len = std::gcd(d.x < 0 ? -d.x : d.x, d.y < 0 ? -d.y : d.y);
    if (len != 1) return {};  // segment with >= 3 lattice points takes no hats
    Pt e = complement_of(d);
    if (!upper) e = {-e.x, -e.y};
    Pt a2{2 * a.x, 2 * a.y}, b2{2 * b.x, 2 * b.y};
    std::vector<HatSpec> out;
    for (Int h2 = 1; h2 <= g + 2; ++h2) {
        // offsets wide enough for any convex double-hat partner (see module
        // notes: the centered representative always fits this window)
        for (Int off = -h2; off <= 2 + h2; ++off) {
            Pt apex2{a2.x + off * d.x + h2 * e.x, a2.y + off * d.y + h2 * e.y};
            if (hat_triangle_ok(a2, b2, apex2)) out.push_back({a, b, apex2, h2});
        }
    }
    return out;
}

std::vector<HatSpec> dim2_edge_hats(const Polygon& base, std::size_t i, int g) {
    const auto& v = base.vertices();
    std::size_t n = v.size();
    Pt vi = v[i], wi = v[(i + 1) % n];
    Pt d = wi - vi;
    if (std::gcd(d.x < 0 ? -d.x : d.x, d.y < 0 ? -d.y : d.y) != 1) return {};
    Pt dprev = vi - v[(i + n - 1) % n];
    Pt dnext = v[(i + 2) % n] - wi;
    Pt e = complement_of(d);
    Pt vi2{2 * vi.x, 2 * vi.y}, wi2{2 * wi.x, 2 * wi.y};
    std::vector<HatSpec> out;
    for (Int h2 = 1; h2 <= g + 2; ++h2) {
        // particular apex at height h2 outside the edge: cross(d, p0-vi2) = -h2
        Pt p0{vi2.x - h2 * e.x, vi2.y - h2 * e.y};
        // wedge: cross(dprev, apex - vi2) >= 0, cross(dnext, apex - wi2) >= 0
        Int a1 = static_cast<Int>(cross(dprev, p0 - vi2));
        Int b1 = static_cast<Int>(cross(dprev, d));
        Int a2 = static_cast<Int>(cross(dnext, p0 - wi2));
        Int b2 = static_cast<Int>(cross(dnext, d));
        assert(b1 > 0 && b2 < 0);
        Int tlo = ceil_div(-a1, b1);
        Int thi = floor_div(a2, -b2);
        for (Int t = tlo; t <= thi; ++t) {
            Pt apex2{p0.x + t * d.x, p0.y + t * d.y};
            if (hat_triangle_ok(vi2, wi2, apex2)) out.push_back({vi, wi, apex2, h2});
        }
    }
    return out;
}

struct Candidate {
    HalfPolygon poly;
    std::vector<HatSpec> hats;
};

// hull == base union hats, lattice points preserved, base vertices on the
// boundary
bool passes_filters(const Polygon& base, int g, const std::vector<const HatSpec*>& sel,
                    HalfPolygon& out) {
    std::vector<Pt> pts2;
    for (const Pt& p : lattice_points(base)) pts2.push_back({2 * p.x, 2 * p.y});
    Int hat_area = 0;
    for (const HatSpec* h : sel) {
        pts2.push_back(h->apex2);
        hat_area += doubled_triangle_area({2 * h->edge_a.x, 2 * h->edge_a.y},
                                          {2 * h->edge_b.x, 2 * h->edge_b.y}, h->apex2);
    }
    Polygon c = Polygon::hull_of(pts2);
    if (c.dim() != 2) return false;
    int evens = 0;
    for (const Pt& p : lattice_points(c))
        if (((p.x % 2) + 2) % 2 == 0 && ((p.y % 2) + 2) % 2 == 0) ++evens;
    if (evens != g) return false;
    for (const Pt& v : base.vertices())
        if (strictly_contains(c, {2 * v.x, 2 * v.y})) return false;
    Int base_area = base.dim() == 2 ? 4 * normalized_area(base) : 0;
    if (normalized_area(c) != base_area + hat_area) return false;
    out = HalfPolygon{c};
    return true;
}

std::vector<Candidate> assemble_with_hats(const Polygon& base, int g) {
    std::vector<Candidate> out;
    if (base.dim() == 1) {
        if (g != 2) return out;
        std::vector<HatSpec> up = segment_side_hats(base, true, g);
        std::vector<HatSpec> down = segment_side_hats(base, false, g);
        auto try_sel = [&](std::vector<const HatSpec*> sel) {
            HalfPolygon c;
            if (passes_filters(base, g, sel, c)) {
                std::vector<HatSpec> hats;
                for (const HatSpec* h : sel) hats.push_back(*h);
                out.push_back({std::move(c), std::move(hats)});
            }
        };
        for (const HatSpec& h : up) try_sel({&h});
        for (const HatSpec& h : down) try_sel({&h});
        for (const HatSpec& hu : up)
            for (const HatSpec& hd : down) try_sel({&hu, &hd});
        return out;
    }
    if (base.dim() != 2) throw std::invalid_argument("base must be a polygon or the g=2 segment");

    const auto& verts = base.vertices();
    std::size_t n = verts.size();
    std::vector<std::vector<HatSpec>> per_edge(n);
    for (std::size_t i = 0; i < n; ++i) per_edge[i] = dim2_edge_hats(base, i, g);

    std::vector<const HatSpec*> choice(n, nullptr);
    auto turn_ok = [&](std::size_t i) {
        // shared base vertex between consecutive hats must stay on the boundary
        const HatSpec* prev = choice[(i + n - 1) % n];
        const HatSpec* cur = choice[i];
        if (!prev || !cur) return true;
        Pt mid{2 * verts[i].x, 2 * verts[i].y};
        return cross(mid - prev->apex2, cur->apex2 - mid) >= 0;
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            if (!turn_ok(0)) return;  // wrap-around pair
            std::vector<const HatSpec*> sel;
            for (const HatSpec* h : choice)
                if (h) sel.push_back(h);
            HalfPolygon c;
            if (passes_filters(base, g, sel, c)) {
                std::vector<HatSpec> hats;
                for (const HatSpec* h : sel) hats.push_back(*h);
                out.push_back({std::move(c), std::move(hats)});
            }
            return;
        }
        choice[i] = nullptr;
        self(self, i + 1);
        for (const HatSpec& h : per_edge[i]) {
            choice[i] = &h;
            if (i == 0 || turn_ok(i)) self(self, i + 1);
        }
        choice[i] = nullptr;
    };
    rec(rec, 0);
    return out;
}

Polygon segment_base() { return Polygon::hull_of(std::vector<Pt>{{0, 0}, {1, 0}}); }

std::vector<Polygon> bases_for(int g) {
    if (g < 2) throw std::invalid_argument("classification needs g >= 2");
    if (g == 2) return {segment_base()};
    return enumerate_polygons(g);
}

struct BaseResult {
    std::vector<ClassificationRecord> records;  // key-sorted, deduped within base
    std::size_t candidates = 0;
    std::size_t tested_ok = 0;
};

BaseResult classify_base(int g, const Polygon& base, const CanonicalKey& base_key) {
    BaseResult res;
    std::map<CanonicalKey, ClassificationRecord> dedup;
    for (Candidate& cand : assemble_with_hats(base, g)) {
        ++res.candidates;
        if (static_cast<int>(lattice_points(cand.poly).size()) != g) continue;
        if (!fine_interior_test(cand.poly)) continue;
        ++res.tested_ok;
        HalfCanon hc = canonical_form_half(cand.poly);
        CanonicalKey key = encode_key('H', hc.canonical.doubled);
        dedup.emplace(std::move(key),
                      ClassificationRecord{hc.canonical, g, base_key, std::move(cand.hats)});
    }
    for (auto& [k, r] : dedup) res.records.push_back(std::move(r));
    return res;
}

struct Checkpoint {
    std::set<CanonicalKey> done;
    std::vector<ClassificationRecord> records;
};

Checkpoint load_checkpoint(const std::filesystem::path& dir, int g,
                           const std::set<CanonicalKey>& known_bases) {
    Checkpoint ck;
    std::filesystem::path done_path = dir / ("g" + std::to_string(g) + ".done");
    std::filesystem::path rec_path = dir / ("g" + std::to_string(g) + ".records.jsonl");
    if (std::filesystem::exists(done_path)) {
        std::ifstream f(done_path);
        std::vector<std::string> lines;
        std::string line;
        while (std::getline(f, line)) lines.push_back(line);
        for (std::size_t i = 0; i < lines.size(); ++i) {
            if (lines[i].empty()) continue;
            CanonicalKey k;
            try {
                k = key_from_hex(lines[i]);
            } catch (const std::exception&) {
                if (i + 1 == lines.size()) break;  // torn tail from a kill
                throw CheckpointError("corrupt checkpoint: bad key in " + done_path.string());
            }
            if (!known_bases.count(k))
                throw CheckpointError("corrupt checkpoint: unknown base key in " +
                                      done_path.string());
            ck.done.insert(std::move(k));
        }
    }
    if (std::filesystem::exists(rec_path)) {
        std::ifstream f(rec_path);
        std::vector<std::string> lines;
        std::string line;
        while (std::getline(f, line)) lines.push_back(line);
        for (std::size_t i = 0; i < lines.size(); ++i) {
            if (lines[i].empty()) continue;
            ClassificationRecord r;
            try {
                r = record_from_json(lines[i]);
            } catch (const std::exception&) {
                if (i + 1 == lines.size()) break;  // torn tail
                throw CheckpointError("corrupt checkpoint: bad record in " + rec_path.string());
            }
            if (r.g != g)
                throw CheckpointError("corrupt checkpoint: wrong g in " + rec_path.string());
            // records of unfinished bases are recomputed, drop them
            if (ck.done.count(r.base_key)) ck.records.push_back(std::move(r));
        }
    }
    return ck;
}

GSummary classify_one_g(int g, const ClassifyOptions& opts,
                        std::map<CanonicalKey, ClassificationRecord>& sink) {
    GSummary sum;
    sum.g = g;
    std::vector<Polygon> bases = bases_for(g);
    sum.bases = bases.size();
    std::vector<CanonicalKey> base_keys;
    base_keys.reserve(bases.size());
    std::set<CanonicalKey> known;
    for (const Polygon& b : bases) {
        base_keys.push_back(encode_key('L', b));  // bases are canonical already
        known.insert(base_keys.back());
    }

    bool checkpointing = !opts.checkpoint_dir.empty();
    Checkpoint ck;
    std::ofstream done_out, rec_out;
    if (checkpointing) {
        std::filesystem::create_directories(opts.checkpoint_dir);
        ck = load_checkpoint(opts.checkpoint_dir, g, known);
        done_out.open(opts.checkpoint_dir / ("g" + std::to_string(g) + ".done"), std::ios::app);
        rec_out.open(opts.checkpoint_dir / ("g" + std::to_string(g) + ".records.jsonl"),
                     std::ios::app);
    }
    for (const ClassificationRecord& r : ck.records)
        sink.emplace(encode_key('H', r.fine_interior.doubled), r);

    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < bases.size(); ++i)
        if (!ck.done.count(base_keys[i])) pending.push_back(i);

    std::size_t bases_done = ck.done.size();
    std::size_t chunk = std::max<std::size_t>(1, static_cast<std::size_t>(opts.workers) * 4);
    for (std::size_t start = 0; start < pending.size(); start += chunk) {
        std::size_t end = std::min(pending.size(), start + chunk);
        std::vector<BaseResult> results(end - start);
        if (opts.workers <= 1) {
            for (std::size_t j = start; j < end; ++j)
                results[j - start] = classify_base(g, bases[pending[j]], base_keys[pending[j]]);
        } else {
            std::atomic<std::size_t> next{start};
            std::exception_ptr err;
            std::mutex err_mu;
            auto work = [&] {
                for (;;) {
                    std::size_t j = next.fetch_add(1);
                    if (j >= end) break;
                    try {
                        results[j - start] =
                            classify_base(g, bases[pending[j]], base_keys[pending[j]]);
                    } catch (...) {
                        std::lock_guard<std::mutex> lk(err_mu);
                        if (!err) err = std::current_exception();
                        break;
                    }
                }
            };
            std::vector<std::thread> pool;
            int nw = std::min<std::size_t>(opts.workers, end - start);
            for (int w = 0; w < nw; ++w) pool.emplace_back(work);
            for (auto& t : pool) t.join();
            if (err) std::rethrow_exception(err);
        }
        for (std::size_t j = start; j < end; ++j) {
            BaseResult& br = results[j - start];
            sum.candidates += br.candidates;
            sum.tested_ok += br.tested_ok;
            for (ClassificationRecord& r : br.records) {
                if (checkpointing) rec_out << record_to_json(r) << '\n';
                sink.emplace(encode_key('H', r.fine_interior.doubled), std::move(r));
            }
            if (checkpointing) {
                rec_out.flush();
                done_out << key_to_hex(base_keys[pending[j]]) << '\n';
                done_out.flush();
            }
            ++bases_done;
            if (opts.abort_hook && opts.abort_hook(g, bases_done))
                throw AbortedRun("aborted by hook");
        }
    }
    return sum;
}

}  // namespace

std::vector<HatSpec> hat_candidates(const Polygon& base, std::size_t edge_index, int g) {
    if (base.dim() == 1) {
        if (edge_index > 1) throw std::out_of_range("segment side index must be 0 or 1");
        return segment_side_hats(base, edge_index == 0, g);
    }
    if (base.dim() != 2) throw std::invalid_argument("base must be a polygon or a segment");
    if (edge_index >= base.vertices().size()) throw std::out_of_range("edge index out of range");
    return dim2_edge_hats(base, edge_index, g);
}

std::vector<HalfPolygon> assemble_candidates(const Polygon& base, int g) {
    std::vector<HalfPolygon> out;
    for (Candidate& c : assemble_with_hats(base, g)) out.push_back(std::move(c.poly));
    return out;
}

std::vector<ClassificationRecord> classify(int g, const ClassifyOptions& opts) {
    std::map<CanonicalKey, ClassificationRecord> sink;
    GSummary sum = classify_one_g(g, opts, sink);
    if (opts.log) {
        *opts.log << "g=" << g << " bases=" << sum.bases << " candidates=" << sum.candidates
                  << " passed=" << sum.tested_ok << " classes=" << sink.size() << '\n';
    }
    std::vector<ClassificationRecord> out;
    out.reserve(sink.size());
    for (auto& [k, r] : sink) out.push_back(std::move(r));
    return out;
}

RangeSummary classify_range(int g_min, int g_max, std::ostream& out, const ClassifyOptions& opts) {
    if (g_min < 2 || g_min > g_max) throw std::invalid_argument("need 2 <= g_min <= g_max");
    RangeSummary total;
    std::vector<std::map<CanonicalKey, ClassificationRecord>> sinks;
    for (int g = g_min; g <= g_max; ++g) {
        std::map<CanonicalKey, ClassificationRecord> sink;
        GSummary sum = classify_one_g(g, opts, sink);
        sum.records = sink.size();
        if (opts.log) {
            *opts.log << "g=" << g << " bases=" << sum.bases << " candidates=" << sum.candidates
                      << " passed=" << sum.tested_ok << " classes=" << sum.records << '\n';
        }
        total.per_g.push_back(sum);
        total.total_records += sink.size();
        sinks.push_back(std::move(sink));
    }
    for (const auto& sink : sinks)
        for (const auto& [k, r] : sink) out << record_to_json(r) << '\n';
    return total;
}

}  // namespace finew2
