#pragma once

#include <map>
#include <span>
#include <vector>

#include "coverdec/classify.hpp"
#include "coverdec/coloring_types.hpp"
#include "coverdec/oracle.hpp"
#include "coverdec/sweep.hpp"

namespace coverdec {

inline Color flip(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }

struct SingleWedgeColoring {
    Coloring colors;
    long long threshold; // 2 for angle < pi, 3 otherwise
};

/// Two-colors the set so that every translate of `w` with at least `threshold`
/// points contains both colors. Small angles use the alternating boundary
/// coloring with flipped shadows; large angles use the two extremal halfplane
/// pairs.
SingleWedgeColoring color_single_wedge(std::span<const Point> pts, const Wedge& w);

struct PairColoring {
    Coloring colors;
    std::vector<WedgeRequirement> claims;
};

/// Contain-pair coloring with thresholds (4 for the container w, 14 for v),
/// via the order-4 path decomposition and the star/fan/regular rules.
/// Requires w to contain v or -v.
PairColoring color_contain_pair(std::span<const Point> pts, const Wedge& v, const Wedge& w);

struct AncColoring {
    Coloring colors;
    AncRequirement claim;
};

/// Big pair: w has angle > pi. At most two red points; every translate of w
/// with one point sees red, every translate of v with three sees blue.
AncColoring color_big_pair(std::span<const Point> pts, const Wedge& v, const Wedge& w);

/// Halfplane pair: boundary-based coloring with thresholds {1, 2}.
AncColoring color_halfplane_pair(std::span<const Point> pts, const Wedge& v, const Wedge& w);

/// Hard pair: boundary difference sets plus the removal test on common
/// boundary points; thresholds (2, 2).
AncColoring color_hard_pair(std::span<const Point> pts, const Wedge& v, const Wedge& w);

/// Contain pair as an asymmetric coloring: the paths P1,P2 coloring keeps every
/// 4-point translate of the container blue-hit and every 8-point translate of
/// the inner wedge red-hit.
AncColoring color_contain_anc(std::span<const Point> pts, const Wedge& v, const Wedge& w);

/// Dispatch on the pair type; rejects Special pairs.
AncColoring color_anc_pair(std::span<const Point> pts, const Wedge& a, const Wedge& b);

struct NcColoring {
    Coloring colors;
    long long threshold;     // smallest oracle-verified threshold
    long long claimed_bound; // a-priori bound from the construction
};

/// Upgrades an asymmetric coloring scheme to a symmetric one by the two-level
/// boundary recursion. Rejects Special pairs.
NcColoring anc_to_nc(std::span<const Point> pts, const Wedge& v, const Wedge& w,
                     long long anc_threshold);

/// Closed-form bound (8s)^(2^(t-1)).
Int f_bound(long long s, int t);

/// Tight internal recursion: F(s,2) = 8 s^2, F(s,t) = F(8 s^2, t-1).
Int f_internal(const Int& s, int t);

struct MultiPartition {
    Partition partition; // part i guards wedge i
    Int threshold;       // F(strength, t)
};

/// Splits the set into one part per wedge so that any translate of wedge i
/// with at least F(strength,t) points keeps `strength` points in part i.
MultiPartition partition_multi(std::span<const Point> pts, std::span<const Wedge> ws,
                               long long strength);

struct SystemColoring {
    Coloring colors;
    Int threshold;                // theoretical F(3,t)
    long long verified_threshold; // oracle-verified on this instance
};

/// Two-colors the set so every translate of every wedge above the threshold is
/// bichromatic; partition at strength 3 plus a single-wedge coloring per part.
SystemColoring color_wedge_system(std::span<const Point> pts, std::span<const Wedge> ws);

struct SystemMultiColoring {
    std::vector<int> classes; // 0..s-1 per point
    Int threshold;
    long long verified_threshold; // smallest verified m: every >=m cut hits all classes
};

/// s-class generalization: partition at strength s, then an order-s path
/// decomposition per part with one class per path.
SystemMultiColoring color_wedge_system_s(std::span<const Point> pts,
                                         std::span<const Wedge> ws, int s);

enum class FriendRole { Fan, Star, Regular };

struct FriendGraph {
    std::vector<std::pair<int, int>> edges; // (point in path a, point in path b)
    std::map<int, FriendRole> roles;        // role of every point on the two paths
};

/// Friendship between two paths of an order-k decomposition: x and y are
/// friends when some translate with exactly k points meets the two paths in
/// {x} and {y}.
FriendGraph friend_graph(std::span<const Point> pts, const PathDecomposition& pd,
                         int path_a, int path_b);

} // namespace coverdec
