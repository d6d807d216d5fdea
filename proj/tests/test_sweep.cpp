#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "coverdec/oracle.hpp"
#include "coverdec/sweep.hpp"
#include "test_util.hpp"

using namespace coverdec;
using namespace coverdec::testutil;

namespace {

// Independent discrete-event simulation: recompute the k cheapest points at the
// midpoint of every gap between candidate event parameters (pair corners) and
// diff consecutive memberships. Quadratic and slow, used as ground truth.
struct SlowSweep {
    std::vector<std::vector<int>> paths;
    std::vector<int> rest;
};

SlowSweep slow_path_decomposition(const std::vector<Point>& pts, const Wedge& w, int k) {
    int n = static_cast<int>(pts.size());
    std::vector<Rat> u(n), v(n);
    for (int i = 0; i < n; ++i) {
        u[i] = cross(w.dir1, pts[i]);
        v[i] = cross(w.dir2, pts[i]);
    }
    // candidate event parameters tau = min(u) + max(v) over pairs, plus kinks
    std::vector<Rat> taus;
    for (int i = 0; i < n; ++i) {
        taus.push_back(u[i] + v[i]);
        for (int j = i + 1; j < n; ++j)
            taus.push_back(std::min(u[i], u[j]) + std::max(v[i], v[j]));
    }
    std::sort(taus.begin(), taus.end());
    taus.erase(std::unique(taus.begin(), taus.end()), taus.end());
    std::vector<Rat> samples;
    samples.push_back(taus.front() - 1);
    for (size_t i = 0; i + 1 < taus.size(); ++i) samples.push_back((taus[i] + taus[i + 1]) / 2);
    samples.push_back(taus.back() + 1);

    auto members = [&](const Rat& tau) {
        // sigma < min(2u - tau, tau - 2v); take the k largest criticalities
        std::vector<std::pair<Rat, int>> crit;
        for (int i = 0; i < n; ++i) {
            Rat a = 2 * u[i] - tau, b = tau - 2 * v[i];
            crit.push_back({a < b ? a : b, i});
        }
        std::sort(crit.begin(), crit.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });
        std::set<int> m;
        for (int i = 0; i < k; ++i) m.insert(crit[i].second);
        return m;
    };

    SlowSweep out;
    std::set<int> cur = members(samples[0]);
    std::map<int, int> path_of;
    int pid = 0;
    // seed paths in ascending v order for determinism
    std::vector<int> seed(cur.begin(), cur.end());
    std::sort(seed.begin(), seed.end(), [&](int a, int b) { return v[a] < v[b]; });
    out.paths.assign(k, {});
    for (int s : seed) {
        out.paths[pid].push_back(s);
        path_of[s] = pid++;
    }
    for (size_t s = 1; s < samples.size(); ++s) {
        std::set<int> nxt = members(samples[s]);
        std::vector<int> out_pts, in_pts;
        for (int i : cur)
            if (!nxt.count(i)) out_pts.push_back(i);
        for (int i : nxt)
            if (!cur.count(i)) in_pts.push_back(i);
        REQUIRE(out_pts.size() == in_pts.size());
        REQUIRE(out_pts.size() <= 1);
        if (out_pts.size() == 1) {
            int p = path_of.at(out_pts[0]);
            out.paths[p].push_back(in_pts[0]);
            path_of[in_pts[0]] = p;
        }
        cur = std::move(nxt);
    }
    for (int i = 0; i < n; ++i)
        if (!path_of.count(i)) out.rest.push_back(i);
    return out;
}

} // namespace

TEST_CASE("boundary examples on the quadrant") {
    Wedge q = quadrant();
    SUBCASE("single point") {
        auto s = YOrderedSet::from_points({pt(4, 7)});
        auto bd = boundary(s, q);
        REQUIRE(bd.size() == 1);
        CHECK(bd[0] == pt(4, 7));
    }
    SUBCASE("descending staircase keeps all points") {
        auto s = YOrderedSet::from_points({pt(1, 3), pt(2, 2), pt(3, 1)});
        auto bd = boundary(s, q);
        REQUIRE(bd.size() == 3);
        CHECK(bd[0] == pt(3, 1));
        CHECK(bd[1] == pt(2, 2));
        CHECK(bd[2] == pt(1, 3));
    }
    SUBCASE("dominated point is not on the boundary") {
        // W((1,1)) contains (2,2), so only (2,2) has an empty wedge
        auto s = YOrderedSet::from_points({pt(1, 1), pt(2, 2)});
        auto bd = boundary(s, q);
        REQUIRE(bd.size() == 1);
        CHECK(bd[0] == pt(2, 2));
    }
    SUBCASE("angle above pi is rejected") {
        Wedge big(Direction(0, 1), Direction(1, 0));
        auto s = YOrderedSet::from_points({pt(0, 0)});
        CHECK_THROWS_AS(boundary(s, big), AngleTooLarge);
    }
}

TEST_CASE("boundary matches the empty-wedge definition on random instances") {
    std::mt19937_64 rng(21);
    for (int it = 0; it < 50; ++it) {
        Wedge w = random_small_wedge(rng);
        auto pts = random_general_points(rng, 2 + static_cast<int>(rng() % 20), {w});
        auto bd = boundary_indices(pts, w);
        std::set<int> bdset(bd.begin(), bd.end());
        for (size_t i = 0; i < pts.size(); ++i) {
            bool empty = true;
            for (size_t j = 0; j < pts.size(); ++j)
                if (j != i && wedge_contains({w, pts[i]}, pts[j])) empty = false;
            CHECK(empty == (bdset.count(static_cast<int>(i)) > 0));
        }
    }
}

TEST_CASE("shadow examples and disjointness") {
    Wedge q = quadrant();
    SUBCASE("boundary point with nothing behind it") {
        std::vector<Point> pts{pt(0, 10), pt(10, 0)};
        CHECK(shadow_indices(pts, q, 0).empty());
        CHECK(shadow_indices(pts, q, 1).empty());
    }
    SUBCASE("dominated point falls in the shadow of its boundary witness") {
        std::vector<Point> pts{pt(0, 0), pt(10, 10)};
        auto sh = shadow_indices(pts, q, 1);
        CHECK(sh == std::vector<int>{0});
        CHECK_THROWS_AS(shadow_indices(pts, q, 0), NotBoundaryPoint);
    }
    SUBCASE("five point instance against a double-loop oracle") {
        std::vector<Point> pts{pt(1, 5), pt(2, 3), pt(5, 2), pt(3, 1), pt(0, 0)};
        auto bd = boundary_indices(pts, q);
        for (int b : bd) {
            auto sh = shadow_indices(pts, q, b);
            std::set<int> expect;
            for (size_t y = 0; y < pts.size(); ++y) {
                std::set<int> hit;
                for (int c : bd)
                    if (wedge_contains({q, pts[y]}, pts[c])) hit.insert(c);
                if (hit == std::set<int>{b}) expect.insert(static_cast<int>(y));
            }
            CHECK(std::set<int>(sh.begin(), sh.end()) == expect);
        }
    }
    SUBCASE("shadows of distinct boundary points are disjoint") {
        std::mt19937_64 rng(23);
        for (int it = 0; it < 40; ++it) {
            Wedge w = random_small_wedge(rng);
            auto pts = random_general_points(rng, 3 + static_cast<int>(rng() % 15), {w});
            auto bd = boundary_indices(pts, w);
            std::set<int> all;
            for (int b : bd)
                for (int s : shadow_indices(pts, w, b)) {
                    CHECK(all.insert(s).second);
                }
        }
    }
}

TEST_CASE("path decomposition of order 1 is the boundary") {
    std::mt19937_64 rng(25);
    for (int it = 0; it < 40; ++it) {
        Wedge w = random_small_wedge(rng);
        auto pts = random_general_points(rng, 1 + static_cast<int>(rng() % 15), {w});
        auto pd = path_decomposition(pts, w, 1);
        REQUIRE(pd.paths.size() == 1);
        CHECK(pd.paths[0] == boundary_indices(pts, w));
    }
}

TEST_CASE("path decomposition of order |S| makes singleton paths") {
    Wedge q = quadrant();
    auto pts = std::vector<Point>{pt(1, 5), pt(2, 3), pt(5, 2), pt(3, 1)};
    auto pd = path_decomposition(pts, q, 4);
    CHECK(pd.rest.empty());
    std::set<int> seen;
    for (const auto& path : pd.paths) {
        REQUIRE(path.size() == 1);
        seen.insert(path[0]);
    }
    CHECK(seen.size() == 4);
}

TEST_CASE("fast sweep agrees with the brute-force discrete-event oracle") {
    std::mt19937_64 rng(27);
    for (int it = 0; it < 60; ++it) {
        Wedge w = random_small_wedge(rng);
        int n = 2 + static_cast<int>(rng() % 14);
        int k = 1 + static_cast<int>(rng() % n);
        auto pts = random_general_points(rng, n, {w}, 1000);
        auto fast = path_decomposition(pts, w, k);
        auto slow = slow_path_decomposition(pts, w, k);
        CHECK(fast.paths == slow.paths);
        CHECK(fast.rest == slow.rest);
    }
}

TEST_CASE("coverage and exactness of path decompositions") {
    std::mt19937_64 rng(29);
    for (int it = 0; it < 50; ++it) {
        Wedge w = random_small_wedge(rng);
        int n = 4 + static_cast<int>(rng() % 20);
        int k = 1 + static_cast<int>(rng() % 5);
        if (k > n) k = n;
        auto pts = random_general_points(rng, n, {w});
        auto pd = path_decomposition(pts, w, k);
        std::vector<int> path_of(n, -1);
        for (size_t p = 0; p < pd.paths.size(); ++p)
            for (int i : pd.paths[p]) path_of[i] = static_cast<int>(p);
        for (const CanonicalRange& c : canonical_wedge_ranges(pts, w).ranges) {
            size_t sz = c.subset.count();
            if (sz < static_cast<size_t>(k)) continue;
            std::vector<int> per_path(k, 0);
            for (int i : c.subset.indices())
                if (path_of[i] >= 0) ++per_path[path_of[i]];
            for (int p = 0; p < k; ++p) {
                CHECK(per_path[p] >= 1); // every big translate meets every path
                if (sz == static_cast<size_t>(k)) CHECK(per_path[p] == 1);
            }
        }
    }
}

TEST_CASE("translates intersect paths and the boundary in intervals") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 40; ++it) {
        Wedge w = random_small_wedge(rng);
        int n = 4 + static_cast<int>(rng() % 16);
        int k = 1 + static_cast<int>(rng() % 3);
        auto pts = random_general_points(rng, n, {w});
        auto pd = path_decomposition(pts, w, k);
        auto ranges = canonical_wedge_ranges(pts, w);
        for (const auto& path : pd.paths) {
            std::map<int, int> pos;
            for (size_t p = 0; p < path.size(); ++p) pos[path[p]] = static_cast<int>(p);
            for (const CanonicalRange& c : ranges.ranges) {
                std::vector<int> hit;
                for (int i : c.subset.indices())
                    if (pos.count(i)) hit.push_back(pos[i]);
                if (hit.size() < 2) continue;
                std::sort(hit.begin(), hit.end());
                CHECK(hit.back() - hit.front() == static_cast<int>(hit.size()) - 1);
            }
        }
    }
}

TEST_CASE("Contain pairs: translates of the inner wedge cut paths of the outer in intervals") {
    std::mt19937_64 rng(33);
    int done = 0;
    while (done < 25) {
        auto [v, w] = random_pair_of_type(rng, WedgePairType::Contain);
        // ensure w contains v or -v; otherwise swap
        Wedge rv(-v.dir1, -v.dir2, v.openness);
        bool w_outer = (cone_contains_dir(w, v.dir1) && cone_contains_dir(w, v.dir2)) ||
                       (cone_contains_dir(w, rv.dir1) && cone_contains_dir(w, rv.dir2));
        if (!w_outer) std::swap(v, w);
        int n = 6 + static_cast<int>(rng() % 14);
        auto pts = random_general_points(rng, n, {v, w});
        int k = 2 + static_cast<int>(rng() % 3);
        if (k > n) continue;
        auto pd = path_decomposition(pts, w, k);
        for (const auto& path : pd.paths) {
            std::map<int, int> pos;
            for (size_t p = 0; p < path.size(); ++p) pos[path[p]] = static_cast<int>(p);
            for (const CanonicalRange& c : canonical_wedge_ranges(pts, v).ranges) {
                std::vector<int> hit;
                for (int i : c.subset.indices())
                    if (pos.count(i)) hit.push_back(pos[i]);
                if (hit.size() < 2) continue;
                std::sort(hit.begin(), hit.end());
                CHECK(hit.back() - hit.front() == static_cast<int>(hit.size()) - 1);
            }
        }
        ++done;
    }
}

TEST_CASE("path decomposition input validation") {
    Wedge q = quadrant();
    std::vector<Point> pts{pt(0, 0), pt(1, 2)};
    CHECK_THROWS_AS(path_decomposition(pts, q, 3), TooFewPoints);
    CHECK_THROWS_AS(path_decomposition(pts, q, 0), GeometryError);
    Wedge big(Direction(0, 1), Direction(1, 0));
    CHECK_THROWS_AS(path_decomposition(pts, big, 1), AngleTooLarge);
    std::vector<Point> degenerate{pt(0, 0), pt(0, 5), pt(3, 1)};
    CHECK_THROWS_AS(path_decomposition(degenerate, q, 1), DegenerateSweep);
}
