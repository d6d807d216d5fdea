#include "coverdec/sweep.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace coverdec {

YOrderedSet YOrderedSet::from_points(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a.y < b.y || (a.y == b.y && a.x < b.x);
    });
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        if (pts[i] == pts[i + 1]) throw DuplicatePoints();
    return YOrderedSet{std::move(pts)};
}

Rat sweep_key(const Wedge& w, const Point& p) {
    return cross(w.dir1, p) + cross(w.dir2, p);
}

namespace {

// Integer u/v keys for a scaled copy of the points. Scaling by the common
// denominator changes nothing combinatorial.
struct Keys {
    std::vector<Int> u, v;
};

Keys make_keys(std::span<const Point> pts, const Wedge& w) {
    Int den(1);
    for (const Point& p : pts) {
        den = boost::multiprecision::lcm(den, rat_den(p.x));
        den = boost::multiprecision::lcm(den, rat_den(p.y));
    }
    Keys k;
    k.u.reserve(pts.size());
    k.v.reserve(pts.size());
    for (const Point& p : pts) {
        Int sx = rat_num(p.x) * (den / rat_den(p.x));
        Int sy = rat_num(p.y) * (den / rat_den(p.y));
        k.u.push_back(w.dir1.dx * sy - w.dir1.dy * sx);
        k.v.push_back(w.dir2.dx * sy - w.dir2.dy * sx);
    }
    return k;
}

} // namespace

std::vector<int> boundary_indices(std::span<const Point> pts, const Wedge& w) {
    if (!w.small_angle()) throw AngleTooLarge();
    size_t n = pts.size();
    std::vector<int> out;
    for (size_t i = 0; i < n; ++i) {
        PlacedWedge wi{w, pts[i]};
        bool empty = true;
        for (size_t j = 0; j < n && empty; ++j)
            if (j != i && wedge_contains(wi, pts[j])) empty = false;
        if (empty) out.push_back(static_cast<int>(i));
    }
    // Boundary points form a chain: ascending cross(dir1,.) equals ascending
    // cross(dir2,.) on them; sort along it.
    std::sort(out.begin(), out.end(), [&](int a, int b) {
        Rat ua = cross(w.dir1, pts[a]), ub = cross(w.dir1, pts[b]);
        if (ua != ub) return ua < ub;
        return cross(w.dir2, pts[a]) < cross(w.dir2, pts[b]);
    });
    return out;
}

std::vector<Point> boundary(const YOrderedSet& s, const Wedge& w) {
    std::vector<Point> out;
    for (int i : boundary_indices(s.points, w)) out.push_back(s.points[i]);
    return out;
}

std::vector<int> shadow_indices(std::span<const Point> pts, const Wedge& w,
                                int boundary_index) {
    std::vector<int> bd = boundary_indices(pts, w);
    if (std::find(bd.begin(), bd.end(), boundary_index) == bd.end())
        throw NotBoundaryPoint();
    std::vector<int> out;
    for (size_t i = 0; i < pts.size(); ++i) {
        PlacedWedge wi{w, pts[i]};
        bool only_x = true, hits_x = false;
        for (int b : bd) {
            if (!wedge_contains(wi, pts[b])) continue;
            if (b == boundary_index) hits_x = true;
            else only_x = false;
        }
        if (hits_x && only_x) out.push_back(static_cast<int>(i));
    }
    return out;
}

std::vector<Point> shadow(const YOrderedSet& s, const Wedge& w, const Point& x) {
    int idx = -1;
    for (size_t i = 0; i < s.points.size(); ++i)
        if (s.points[i] == x) idx = static_cast<int>(i);
    if (idx < 0) throw NotBoundaryPoint();
    std::vector<Point> out;
    for (int i : shadow_indices(s.points, w, idx)) out.push_back(s.points[i]);
    return out;
}

namespace {

// The sweep runs over the parameter tau = u(apex) + v(apex). A point p is
// inside the translate anchored on the tau-line at offset sigma iff
// sigma < min(2u_p - tau, tau - 2v_p), so along the sweep each point follows a
// two-piece concave "criticality" curve. Curves of two points cross at most
// once, exactly at the apex of their joint minimal translate, where the lower-u
// point leaves and the higher-v point enters. We work on the doubled grid
// T = 2*tau so events are even and evaluation midpoints odd.
struct Event {
    Int t2; // = 2 * (min(u_i,u_j) + max(v_i,v_j))
    int i, j;
};

// crit comparison at odd T: larger first. Returns true if i is strictly above j.
bool crit_above(const Keys& k, const Int& T, int i, int j) {
    auto crit = [&](int p) {
        Int a = 4 * k.u[p] - T;
        Int b = T - 4 * k.v[p];
        return a < b ? a : b;
    };
    Int ci = crit(i), cj = crit(j);
    if (ci == cj) throw DegenerateSweep("criticality tie at evaluation point");
    return ci > cj;
}

} // namespace

PathDecomposition path_decomposition(std::span<const Point> pts, const Wedge& w, int k) {
    if (!w.small_angle()) throw AngleTooLarge();
    int n = static_cast<int>(pts.size());
    if (k <= 0) throw GeometryError("path decomposition order must be positive");
    if (n < k) throw TooFewPoints();

    Keys keys = make_keys(pts, w);
    {
        // general position: distinct u and v keys
        auto check = [&](const std::vector<Int>& key) {
            std::vector<Int> s = key;
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end())
                throw DegenerateSweep("points not in general position for the wedge");
        };
        check(keys.u);
        check(keys.v);
    }

    PathDecomposition out;
    out.order = k;
    out.wedge = w;

    // initial membership: order at tau = -inf is by ascending v
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return keys.v[a] < keys.v[b]; });

    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    std::vector<int> path_of(n, -1);
    out.paths.assign(k, {});
    for (int j = 0; j < k; ++j) {
        out.paths[j].push_back(order[j]);
        path_of[order[j]] = j;
    }

    if (k < n) {
        std::vector<Event> events;
        events.reserve(static_cast<size_t>(n) * (n - 1) / 2);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                int su = keys.u[i].compare(keys.u[j]);
                int sv = keys.v[i].compare(keys.v[j]);
                if (su == 0 || sv == 0 || su != sv) continue; // dominating pair: no crossing
                const Int& umin = su < 0 ? keys.u[i] : keys.u[j];
                const Int& vmax = sv < 0 ? keys.v[j] : keys.v[i];
                events.push_back(Event{2 * (umin + vmax), i, j});
            }
        }
        std::sort(events.begin(), events.end(),
                  [](const Event& a, const Event& b) { return a.t2 < b.t2; });

        auto do_swap = [&](int a, int b) {
            // a currently above b and adjacent; swap, recording a replacement
            // when the pair straddles the membership boundary.
            int pa = pos[a], pb = pos[b];
            if (pa == k - 1 && pb == k) {
                if (path_of[b] != -1)
                    throw DegenerateSweep("point re-entered the sweep membership");
                int pid = path_of[a];
                out.paths[pid].push_back(b);
                path_of[b] = pid;
            }
            std::swap(order[pa], order[pb]);
            pos[a] = pb;
            pos[b] = pa;
        };

        size_t e = 0;
        while (e < events.size()) {
            size_t g = e;
            while (g < events.size() && events[g].t2 == events[e].t2) ++g;
            Int t_after = events[e].t2 + 1; // odd: strictly between event grid points
            if (g - e == 1) {
                int i = events[e].i, j = events[e].j;
                int hi = pos[i] < pos[j] ? i : j;
                int lo = hi == i ? j : i;
                if (pos[hi] + 1 != pos[lo])
                    throw DegenerateSweep("crossing pair not adjacent");
                if (!crit_above(keys, t_after, lo, hi))
                    throw DegenerateSweep("expected crossing did not occur");
                do_swap(hi, lo);
            } else {
                // Same event parameter, distinct crossings. Each is still an
                // adjacent transposition just before it fires; cascades through
                // shared points resolve over multiple passes.
                std::vector<char> fired(g - e, 0);
                size_t remaining = g - e;
                while (remaining > 0) {
                    size_t progressed = 0;
                    for (size_t t = e; t < g; ++t) {
                        if (fired[t - e]) continue;
                        int i = events[t].i, j = events[t].j;
                        int hi = pos[i] < pos[j] ? i : j;
                        int lo = hi == i ? j : i;
                        if (pos[hi] + 1 != pos[lo]) continue;
                        if (!crit_above(keys, t_after, lo, hi)) continue;
                        do_swap(hi, lo);
                        fired[t - e] = 1;
                        ++progressed;
                    }
                    if (progressed == 0)
                        throw DegenerateSweep("stalled simultaneous crossings");
                    remaining -= progressed;
                }
            }
            e = g;
        }
    }

    for (int i = 0; i < n; ++i)
        if (path_of[i] == -1) out.rest.push_back(i);
    return out;
}

PathDecomposition path_decomposition(const YOrderedSet& s, const Wedge& w, int k) {
    return path_decomposition(std::span<const Point>(s.points), w, k);
}

} // namespace coverdec
