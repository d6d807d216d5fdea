#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "coverdec/coloring_types.hpp"
#include "coverdec/geometry.hpp"

namespace coverdec {

/// Subset of point indices as a bitmask.
struct Bitmask {
    std::vector<std::uint64_t> words;

    explicit Bitmask(size_t n = 0) : words((n + 63) / 64, 0) {}
    void set(size_t i) { words[i >> 6] |= std::uint64_t(1) << (i & 63); }
    bool test(size_t i) const { return (words[i >> 6] >> (i & 63)) & 1; }
    size_t count() const;
    bool subset_of(const Bitmask& o) const;
    bool intersects(const Bitmask& o) const;
    bool operator==(const Bitmask& o) const { return words == o.words; }
    Bitmask operator&(const Bitmask& o) const;
    Bitmask operator|(const Bitmask& o) const;
    std::vector<int> indices() const;
};

struct BitmaskHash {
    size_t operator()(const Bitmask& m) const;
};

/// One representative translate per distinct subset of the point set cuttable
/// by a translate of the range shape.
struct CanonicalRange {
    Bitmask subset;
    PlacedWedge representative;
};

struct CanonicalRangeSet {
    std::vector<CanonicalRange> ranges;
};

/// Enumerates every subset cuttable by a translate of `w`, one entry each.
/// Wedges of angle > pi are handled as unions of two halfplanes.
CanonicalRangeSet canonical_wedge_ranges(std::span<const Point> pts, const Wedge& w);

struct Violation {
    Bitmask subset;
    PlacedWedge representative;
    size_t requirement_index = 0;
};

/// Bichromatic requirement: every translate of `wedge` containing at least
/// `min_points` points must contain both colors.
struct WedgeRequirement {
    Wedge wedge;
    long long min_points;
};

std::optional<Violation> verify_coloring(std::span<const Point> pts, const Coloring& coloring,
                                         std::span<const WedgeRequirement> requirements);

/// Asymmetric requirement: every translate of red_wedge with >= red_min points
/// contains a red point; every translate of blue_wedge with >= blue_min points
/// contains a blue point.
struct AncRequirement {
    Wedge red_wedge;
    long long red_min;
    Wedge blue_wedge;
    long long blue_min;
};

std::optional<Violation> verify_anc(std::span<const Point> pts, const Coloring& coloring,
                                    const AncRequirement& req);

/// Smallest threshold at which the given coloring verifies for all wedges:
/// 1 + size of the largest monochromatic cuttable subset.
long long verified_nc_threshold(std::span<const Point> pts, const Coloring& coloring,
                                std::span<const Wedge> ws);

/// Smallest (red, blue) thresholds at which the coloring satisfies the
/// asymmetric requirement for the given wedges.
std::pair<long long, long long> verified_anc_thresholds(std::span<const Point> pts,
                                                        const Coloring& coloring,
                                                        const Wedge& red_wedge,
                                                        const Wedge& blue_wedge);

constexpr int kMinNcMaxPoints = 20;

struct Unbounded {};

/// Smallest m for which some two-coloring of pts has no monochromatic cuttable
/// subset of size >= m for any wedge in ws; Unbounded if none up to m = |pts|.
/// Exhaustive over colorings; |pts| <= kMinNcMaxPoints.
std::variant<long long, Unbounded> min_nc_constant(std::span<const Point> pts,
                                                   std::span<const Wedge> ws);

} // namespace coverdec
