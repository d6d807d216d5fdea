#pragma once

#include <random>
#include <set>
#include <vector>

#include "coverdec/classify.hpp"
#include "coverdec/geometry.hpp"

namespace coverdec::testutil {

inline Point pt(long long x, long long y) { return Point{Rat(x), Rat(y)}; }

inline Wedge quadrant(Openness o = Openness::Open) {
    return Wedge(Direction(1, 0), Direction(0, 1), o);
}

/// Random integer points, pairwise distinct in the y-coordinate and in the
/// cross-product key of every wedge side, so all sweep/boundary machinery is
/// in general position without rotation.
inline std::vector<Point> random_general_points(std::mt19937_64& rng, int n,
                                                const std::vector<Wedge>& ws,
                                                long long span = 1000000) {
    std::uniform_int_distribution<long long> coord(0, span);
    std::vector<Direction> dirs;
    for (const Wedge& w : ws) {
        dirs.push_back(w.dir1);
        dirs.push_back(w.dir2);
    }
    std::vector<std::set<Rat>> used(dirs.size() + 2);
    std::vector<Point> pts;
    while (static_cast<int>(pts.size()) < n) {
        Point p = pt(coord(rng), coord(rng));
        std::vector<Rat> key;
        key.push_back(p.x);
        key.push_back(p.y);
        for (const Direction& d : dirs) key.push_back(cross(d, p));
        bool fresh = true;
        for (size_t t = 0; t < key.size() && fresh; ++t)
            if (used[t].count(key[t])) fresh = false;
        if (!fresh) continue;
        for (size_t t = 0; t < key.size(); ++t) used[t].insert(key[t]);
        pts.push_back(p);
    }
    return pts;
}

/// Random wedge with angle < pi, primitive integer directions.
inline Wedge random_small_wedge(std::mt19937_64& rng, int bound = 12,
                                Openness o = Openness::Open) {
    std::uniform_int_distribution<int> c(-bound, bound);
    for (;;) {
        int ax = c(rng), ay = c(rng), bx = c(rng), by = c(rng);
        if ((ax == 0 && ay == 0) || (bx == 0 && by == 0)) continue;
        try {
            Wedge w(Direction(ax, ay), Direction(bx, by), o);
            if (w.small_angle()) return w;
        } catch (const GeometryError&) {
        }
    }
}

/// Random wedge pair of the requested type.
inline std::pair<Wedge, Wedge> random_pair_of_type(std::mt19937_64& rng, WedgePairType want,
                                                   Openness o = Openness::Open) {
    for (;;) {
        Wedge w = random_small_wedge(rng, 12, o);
        Wedge v = random_small_wedge(rng, 12, o);
        if (want == WedgePairType::Big) {
            try {
                v = Wedge(v.dir2, v.dir1, o); // complement cone, angle > pi
            } catch (const GeometryError&) {
                continue;
            }
        }
        try {
            if (classify_pair(v, w) == want) return {v, w};
        } catch (const GeometryError&) {
        }
    }
}

} // namespace coverdec::testutil
