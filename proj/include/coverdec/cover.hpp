#pragma once

#include <optional>
#include <span>
#include <vector>

#include "coverdec/coloring.hpp"
#include "coverdec/geometry.hpp"

namespace coverdec {

struct Box {
    Rat xmin, ymin, xmax, ymax;
};

/// Finite cover of `region` by translates of an open convex polygon. A center c
/// places the polygon with its centroid at c, so x is covered by translate c
/// exactly when c lies in the reflected polygon anchored at x.
struct CoverInstance {
    Polygon polygon;
    std::vector<Point> centers;
    Box region;
    Int fold; // declared covering multiplicity
};

struct GridParams {
    Rat m;    // rational lower bound on the vertex / non-adjacent-side distance
    Rat cell; // m / 2
    Int K;    // cells any translate can intersect, from 4*pi*(diam+m)^2/m^2
};

struct DualInstance {
    std::vector<Point> points;
    Polygon dual_polygon;
};

DualInstance dualize(const CoverInstance& c);

GridParams grid_params(const Polygon& p);

struct CellReport {
    long long ix, iy;
    size_t points;
    long long verified_threshold;
};

struct CoverDecomposition {
    std::vector<int> classes; // class index per center
    int class_count = 2;
    Int theoretical_threshold;    // f(strength, t) for the dual wedge system
    long long verified_threshold; // max oracle-verified per-cell threshold
    Int required_fold;            // verified_threshold * K
    GridParams grid;
    std::vector<CellReport> cells;
};

/// Theorem-level split into two coverings: per grid cell, two-color the dual
/// points against the dual wedge system; a translate holding `fold` points
/// lands verified_threshold of them in one cell and sees both classes.
/// Throws FoldTooSmall (carrying the required fold) when the declared fold is
/// below verified_threshold * K.
CoverDecomposition decompose_cover(const CoverInstance& c);

/// Split into s coverings: per cell, partition at strength s and assign one
/// class per path of an order-s decomposition.
CoverDecomposition decompose_cover_s(const CoverInstance& c, int s);

/// Exact coverage check of the closed region by the open translates whose
/// indices are selected. Witness set: all arrangement vertices of the
/// supporting lines (translate edges and region boundary) clipped to the
/// region, plus one interior point per arrangement face. Returns an uncovered
/// witness point, or nothing when the class covers the region.
std::optional<Point> verify_covering(const Polygon& polygon, std::span<const Point> centers,
                                     std::span<const int> class_members, const Box& region);

/// Minimum covering multiplicity over the same witness set.
Int verify_fold(const CoverInstance& c);

/// Lattice cover generator: centers on a (1/q)-lattice over the inflated
/// region, q chosen so the lattice count inside any dual translate reaches the
/// requested fold.
CoverInstance build_lattice_cover(const Polygon& polygon, const Box& region, const Int& fold);

} // namespace coverdec
