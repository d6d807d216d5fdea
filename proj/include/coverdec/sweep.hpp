#pragma once

#include <span>
#include <vector>

#include "coverdec/geometry.hpp"

namespace coverdec {

/// Points sorted strictly by the sweep order (see sweep_key). Thin wrapper used
/// by the boundary/shadow/path-decomposition entry points.
struct YOrderedSet {
    std::vector<Point> points;

    static YOrderedSet from_points(std::vector<Point> pts);
};

/// Sweep-order key of a point w.r.t. a wedge: cross(dir1,p) + cross(dir2,p).
/// For a wedge containing the positive x-axis this is a positive combination of
/// the classical y-coordinate orders; translates intersect boundaries and paths
/// in intervals of this order.
Rat sweep_key(const Wedge& w, const Point& p);

/// Indices of Bd^W(S): points whose own wedge translate contains no other point
/// of S. Sorted along the boundary chain (ascending cross(dir1,.)), which equals
/// the sweep order on the boundary.
std::vector<int> boundary_indices(std::span<const Point> pts, const Wedge& w);

std::vector<Point> boundary(const YOrderedSet& s, const Wedge& w);

/// Indices of Sh^W(x): points whose translate meets the boundary exactly in x.
std::vector<int> shadow_indices(std::span<const Point> pts, const Wedge& w,
                                int boundary_index);

std::vector<Point> shadow(const YOrderedSet& s, const Wedge& w, const Point& x);

struct PathDecomposition {
    int order = 0;
    std::vector<std::vector<int>> paths; // point indices, in replacement order
    std::vector<int> rest;               // points on no path
    Wedge wedge;
};

/// Order-k path decomposition: simulate the translate W(k;y) that contains at
/// most k points with apex furthest against the sweep direction, record the
/// replacement edges as y grows, and return the k replacement-linked paths.
/// Requires wedge angle < pi, |pts| >= k, and general position (no two points
/// on a line parallel to a wedge side).
PathDecomposition path_decomposition(std::span<const Point> pts, const Wedge& w, int k);

PathDecomposition path_decomposition(const YOrderedSet& s, const Wedge& w, int k);

} // namespace coverdec
