#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>

#include "finew2/canonical.hpp"
#include "finew2/fine_interior.hpp"

namespace finew2 {

// A hat triangle over a 2-lattice-point edge of the base polygon (base-frame
// coordinates; apex doubled).
struct HatSpec {
    Pt edge_a;
    Pt edge_b;
    Pt apex2;  // doubled apex coordinates
    Int h2;    // doubled lattice height of the apex over the edge line
    friend bool operator==(const HatSpec&, const HatSpec&) = default;
};

struct ClassificationRecord {
    HalfPolygon fine_interior;  // canonical representative
    int g = 0;                  // = |fine_interior cap M|
    CanonicalKey base_key;      // lattice key of conv(fine_interior cap M)
    std::vector<HatSpec> hats;  // provenance in the base frame
};

// All admissible hat apexes over one edge. For a dim-2 base the edge is
// base.vertices()[i] -> [i+1] and must have exactly two lattice points; for
// the g = 2 segment base, edge_index 0/1 selects the upper/lower side.
std::vector<HatSpec> hat_candidates(const Polygon& base, std::size_t edge_index, int g);

// Convex unions of the base with at most one hat per eligible edge, filtered
// by convexity, lattice-point preservation and base vertices staying on the
// boundary. Soundness of the survivors comes from fine_interior_test.
std::vector<HalfPolygon> assemble_candidates(const Polygon& base, int g);

struct GSummary {
    int g = 0;
    std::size_t bases = 0;
    std::size_t candidates = 0;
    std::size_t tested_ok = 0;
    std::size_t records = 0;
};

struct RangeSummary {
    std::vector<GSummary> per_g;
    std::size_t total_records = 0;
};

struct ClassifyOptions {
    int workers = 1;
    std::filesystem::path checkpoint_dir;  // empty: no checkpointing
    // test hook: return true to abort after a completed base has been checkpointed
    std::function<bool(int g, std::size_t bases_done)> abort_hook;
    std::ostream* log = nullptr;
};

struct CheckpointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AbortedRun : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<ClassificationRecord> classify(int g, const ClassifyOptions& opts = {});

// Runs classify for each g, streams the deduplicated records (ordered by g,
// then canonical key bytes) to `out` on completion. With a checkpoint
// directory, completed bases are persisted and skipped on resume.
RangeSummary classify_range(int g_min, int g_max, std::ostream& out,
                            const ClassifyOptions& opts = {});

}  // namespace finew2
