#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "coverdec/classify.hpp"
#include "coverdec/coloring_types.hpp"
#include "coverdec/geometry.hpp"

namespace coverdec {

/// Point set with translate families certifying indecomposability: every
/// two-coloring leaves some v-translate all red (k points) or some w-translate
/// all blue (l points). |points| = C(k+l, k) - 1.
struct WitnessInstance {
    std::vector<Point> points;
    std::vector<PlacedWedge> v_translates; // each contains exactly k points
    std::vector<PlacedWedge> w_translates; // each contains exactly l points
    int k = 0, l = 0;
    Wedge v, w;
    // present for polygon-backed witnesses: the reflected polygon and the
    // vertex indices whose wedges realize v and w
    std::optional<Polygon> polygon;
    int v_vertex = -1, w_vertex = -1;
};

/// Recursive construction: a pivot point plus scaled-down copies of
/// S(k-1,l) and S(k,l-1), placed so that the copy's v-translates capture the
/// pivot and nothing else changes. All separation conditions are checked
/// exactly; the scale is halved until they hold.
WitnessInstance construct_witness(const Wedge& v, const Wedge& w, int k, int l);

struct WitnessCertificate {
    Int colorings_checked;
    bool complete = false;
    // per-coloring defeating translate, when the table is small enough to keep:
    // value t < 128 means v_translates[t], else w_translates[t - 128]
    std::vector<std::uint8_t> witness_table;
};

constexpr int kCertifyMaxPoints = 25;

/// Exhaustively checks all 2^n colorings and records a defeating translate for
/// each; throws CounterexampleFound if some coloring survives.
WitnessCertificate certify_indecomposable(const WitnessInstance& wi);

/// Searches for a coloring with no monochromatic translate of v or w holding
/// k or more points: randomized probes, then exhaustive search for small sets.
std::optional<Coloring> good_coloring_exists(std::span<const Point> pts, const Wedge& v,
                                             const Wedge& w, int k,
                                             std::uint64_t seed = 1);

/// S(k,k) witness for a polygon with a Special wedge pair, scaled until each
/// wedge translate extends to a translate of the reflected polygon containing
/// exactly the same points.
WitnessInstance polygon_witness(const Polygon& p, int k);

} // namespace coverdec
