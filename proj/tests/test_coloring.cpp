#include <doctest.h>

#include <random>

#include "coverdec/coloring.hpp"
#include "test_util.hpp"

using namespace coverdec;
using namespace coverdec::testutil;

namespace {

Wedge thin_inside_quadrant() { return Wedge(Direction(5, 1), Direction(5, 2)); }

} // namespace

TEST_CASE("single wedge coloring, small angle, threshold 2") {
    std::mt19937_64 rng(101);
    for (int it = 0; it < 150; ++it) {
        Wedge w = random_small_wedge(rng);
        auto pts = random_general_points(rng, 1 + static_cast<int>(rng() % 25), {w});
        auto sc = color_single_wedge(pts, w);
        CHECK(sc.threshold == 2);
        std::vector<WedgeRequirement> req{{w, sc.threshold}};
        CHECK_FALSE(verify_coloring(pts, sc.colors, req).has_value());
    }
}

TEST_CASE("single wedge coloring, large angle, threshold 3") {
    std::mt19937_64 rng(103);
    for (int it = 0; it < 150; ++it) {
        Wedge small = random_small_wedge(rng);
        Wedge big(small.dir2, small.dir1, small.openness);
        auto pts = random_general_points(rng, 1 + static_cast<int>(rng() % 25), {big});
        auto sc = color_single_wedge(pts, big);
        CHECK(sc.threshold == 3);
        std::vector<WedgeRequirement> req{{big, sc.threshold}};
        CHECK_FALSE(verify_coloring(pts, sc.colors, req).has_value());
    }
}

TEST_CASE("single point: any coloring is valid") {
    auto sc = color_single_wedge(std::vector<Point>{pt(3, 4)}, quadrant());
    std::vector<WedgeRequirement> req{{quadrant(), sc.threshold}};
    CHECK_FALSE(verify_coloring(std::vector<Point>{pt(3, 4)}, sc.colors, req).has_value());
}

TEST_CASE("two points in a small wedge get different colors when comparable") {
    std::mt19937_64 rng(105);
    for (int it = 0; it < 80; ++it) {
        Wedge w = random_small_wedge(rng);
        auto pts = random_general_points(rng, 2, {w});
        auto sc = color_single_wedge(pts, w);
        bool comparable = wedge_contains({w, pts[0]}, pts[1]) ||
                          wedge_contains({w, pts[1]}, pts[0]);
        if (comparable) CHECK(sc.colors[0] != sc.colors[1]);
    }
}

TEST_CASE("contain pair coloring at thresholds (4, 14)") {
    SUBCASE("quadrant with a thin inner wedge, 20 points") {
        std::mt19937_64 rng(107);
        Wedge w = quadrant();
        Wedge v = thin_inside_quadrant();
        auto pts = random_general_points(rng, 20, {v, w});
        auto pc = color_contain_pair(pts, v, w);
        CHECK_FALSE(verify_coloring(pts, pc.colors, pc.claims).has_value());
    }
    SUBCASE("small inputs are vacuous") {
        Wedge w = quadrant();
        Wedge v = thin_inside_quadrant();
        std::vector<Point> pts{pt(1, 2), pt(5, 3), pt(2, 9)};
        auto pc = color_contain_pair(pts, v, w);
        CHECK_FALSE(verify_coloring(pts, pc.colors, pc.claims).has_value());
    }
    SUBCASE("random contain pairs") {
        std::mt19937_64 rng(109);
        int done = 0;
        while (done < 60) {
            auto [v, w] = random_pair_of_type(rng, WedgePairType::Contain);
            Wedge rv(-v.dir1, -v.dir2, v.openness);
            bool w_outer = cone_contains_dir(w, v.dir1) && cone_contains_dir(w, v.dir2);
            w_outer = w_outer || (cone_contains_dir(w, rv.dir1) && cone_contains_dir(w, rv.dir2));
            if (!w_outer) std::swap(v, w);
            auto pts = random_general_points(rng, 4 + static_cast<int>(rng() % 30), {v, w});
            auto pc = color_contain_pair(pts, v, w);
            CHECK_FALSE(verify_coloring(pts, pc.colors, pc.claims).has_value());
            ++done;
        }
    }
    SUBCASE("wrong type is rejected") {
        // adjacent square wedges form a Halfplane pair
        CHECK_THROWS_AS(color_contain_pair(std::vector<Point>{}, quadrant(),
                                           Wedge(Direction(0, 1), Direction(-1, 0))),
                        WrongType);
    }
}

TEST_CASE("all-regular instances color the first path in period three") {
    // a long diagonal staircase keeps every point regular
    std::vector<Point> pts;
    for (int i = 0; i < 12; ++i) pts.push_back(pt(100 - 7 * i, 13 * i + (i % 3)));
    Wedge w = quadrant();
    Wedge v = thin_inside_quadrant();
    auto pc = color_contain_pair(pts, v, w);
    std::vector<WedgeRequirement> req = pc.claims;
    CHECK_FALSE(verify_coloring(pts, pc.colors, req).has_value());
    auto gp = pts; // already generic
    PathDecomposition pd = path_decomposition(gp, w, 4);
    FriendGraph fg = friend_graph(gp, pd, 0, 1);
    bool all_regular = true;
    for (auto& [i, role] : fg.roles) all_regular &= role == FriendRole::Regular;
    if (all_regular) {
        const auto& p1 = pd.paths[0];
        for (size_t i = 0; i < p1.size(); ++i)
            CHECK(pc.colors[p1[i]] == (i % 3 == 0 ? Color::Red : Color::Blue));
    }
}

TEST_CASE("contain pair as asymmetric coloring: thresholds (8, 4)") {
    std::mt19937_64 rng(111);
    int done = 0;
    while (done < 80) {
        auto [v, w] = random_pair_of_type(rng, WedgePairType::Contain);
        auto pts = random_general_points(rng, 1 + static_cast<int>(rng() % 30), {v, w});
        auto anc = color_contain_anc(pts, v, w);
        CHECK(anc.claim.red_min == 8);
        CHECK(anc.claim.blue_min == 4);
        CHECK_FALSE(verify_anc(pts, anc.colors, anc.claim).has_value());
        ++done;
    }
}

TEST_CASE("big pair coloring: at most two red points, thresholds (1, 3)") {
    std::mt19937_64 rng(113);
    SUBCASE("single point is red") {
        Wedge small = random_small_wedge(rng);
        Wedge big(small.dir2, small.dir1);
        auto anc = color_big_pair(std::vector<Point>{pt(5, 5)}, small, big);
        CHECK(anc.colors[0] == Color::Red);
    }
    SUBCASE("random instances") {
        for (int it = 0; it < 120; ++it) {
            Wedge small = random_small_wedge(rng);
            Wedge big(small.dir2, small.dir1);
            Wedge other = random_small_wedge(rng);
            auto pts = random_general_points(rng, 1 + static_cast<int>(rng() % 20), {big, other});
            auto anc = color_big_pair(pts, other, big);
            int reds = 0;
            for (Color c : anc.colors) reds += c == Color::Red;
            CHECK(reds <= 2);
            CHECK(reds >= 1);
            CHECK(anc.claim.red_min == 1);
            CHECK(anc.claim.blue_min == 3);
            CHECK_FALSE(verify_anc(pts, anc.colors, anc.claim).has_value());
        }
    }
    SUBCASE("wrong type") {
        CHECK_THROWS_AS(color_big_pair(std::vector<Point>{}, quadrant(), quadrant()), WrongType);
    }
}

TEST_CASE("halfplane pair coloring: thresholds {1, 2}") {
    std::mt19937_64 rng(115);
    int done = 0;
    while (done < 120) {
        auto [v, w] = random_pair_of_type(rng, WedgePairType::Halfplane);
        auto pts = random_general_points(rng, 1 + static_cast<int>(rng() % 20), {v, w});
        auto anc = color_halfplane_pair(pts, v, w);
        CHECK(std::min(anc.claim.red_min, anc.claim.blue_min) == 1);
        CHECK(std::max(anc.claim.red_min, anc.claim.blue_min) == 2);
        CHECK_FALSE(verify_anc(pts, anc.colors, anc.claim).has_value());
        ++done;
    }
}

TEST_CASE("halfplane pair with disjoint boundaries keeps the simple pattern") {
    // adjacent square wedges; one low point for W, one high for V, far apart
    Wedge w(Direction(1, 0), Direction(0, 1));
    Wedge v(Direction(0, 1), Direction(-1, 0));
    std::vector<Point> pts{pt(1000, 1), pt(-1000, 2), pt(0, -500)};
    auto anc = color_halfplane_pair(pts, v, w);
    CHECK_FALSE(verify_anc(pts, anc.colors, anc.claim).has_value());
}

TEST_CASE("hard pair coloring: thresholds (2, 2)") {
    std::mt19937_64 rng(117);
    int done = 0;
    while (done < 120) {
        auto [v, w] = random_pair_of_type(rng, WedgePairType::Hard);
        auto pts = random_general_points(rng, 1 + static_cast<int>(rng() % 20), {v, w});
        auto anc = color_hard_pair(pts, v, w);
        CHECK(anc.claim.red_min == 2);
        CHECK(anc.claim.blue_min == 2);
        CHECK_FALSE(verify_anc(pts, anc.colors, anc.claim).has_value());
        ++done;
    }
}

TEST_CASE("hard pair with disjoint boundaries splits them red/blue") {
    std::mt19937_64 rng(119);
    int done = 0;
    while (done < 40) {
        auto [v, w] = random_pair_of_type(rng, WedgePairType::Hard);
        auto pts = random_general_points(rng, 3 + static_cast<int>(rng() % 10), {v, w});
        auto bdv = boundary_indices(pts, v);
        auto bdw = boundary_indices(pts, w);
        std::set<int> sv(bdv.begin(), bdv.end());
        bool disjoint = true;
        for (int i : bdw) disjoint &= !sv.count(i);
        if (!disjoint) continue;
        auto anc = color_hard_pair(pts, v, w);
        for (int i : bdv) CHECK(anc.colors[i] == Color::Red);
        for (int i : bdw) CHECK(anc.colors[i] == Color::Blue);
        ++done;
    }
}

TEST_CASE("anc dispatch covers every non-Special type and rejects Special") {
    std::mt19937_64 rng(121);
    for (WedgePairType ty : {WedgePairType::Big, WedgePairType::Contain,
                             WedgePairType::Halfplane, WedgePairType::Hard}) {
        auto [a, b] = random_pair_of_type(rng, ty);
        auto pts = random_general_points(rng, 12, {a, b});
        auto anc = color_anc_pair(pts, a, b);
        CHECK_FALSE(verify_anc(pts, anc.colors, anc.claim).has_value());
        CHECK(std::max(anc.claim.red_min, anc.claim.blue_min) <= 8);
    }
    auto [sv, sw] = random_pair_of_type(rng, WedgePairType::Special);
    CHECK_THROWS_AS(color_anc_pair(std::vector<Point>{}, sv, sw), WrongType);
}

TEST_CASE("anc_to_nc upgrades asymmetric colorings") {
    std::mt19937_64 rng(123);
    SUBCASE("hard pair, 40 points") {
        auto [v, w] = random_pair_of_type(rng, WedgePairType::Hard);
        auto pts = random_general_points(rng, 40, {v, w});
        auto nc = anc_to_nc(pts, v, w, 2);
        std::vector<WedgeRequirement> req{{v, nc.threshold}, {w, nc.threshold}};
        CHECK_FALSE(verify_coloring(pts, nc.colors, req).has_value());
        CHECK(nc.threshold <= nc.claimed_bound);
    }
    SUBCASE("all pair types") {
        for (WedgePairType ty : {WedgePairType::Big, WedgePairType::Contain,
                                 WedgePairType::Halfplane, WedgePairType::Hard}) {
            for (int it = 0; it < 15; ++it) {
                auto [v, w] = random_pair_of_type(rng, ty);
                auto pts = random_general_points(rng, 5 + static_cast<int>(rng() % 30), {v, w});
                auto nc = anc_to_nc(pts, v, w, 8);
                std::vector<WedgeRequirement> req{{v, nc.threshold}, {w, nc.threshold}};
                CHECK_FALSE(verify_coloring(pts, nc.colors, req).has_value());
                CHECK(nc.threshold <= std::max<long long>(nc.claimed_bound, 38));
            }
        }
    }
    SUBCASE("special pair rejected") {
        auto [v, w] = random_pair_of_type(rng, WedgePairType::Special);
        CHECK_THROWS_AS(anc_to_nc(std::vector<Point>{}, v, w, 2), WrongType);
    }
    SUBCASE("determinism") {
        auto [v, w] = random_pair_of_type(rng, WedgePairType::Hard);
        auto pts = random_general_points(rng, 25, {v, w});
        auto first = anc_to_nc(pts, v, w, 2);
        auto second = anc_to_nc(pts, v, w, 2);
        CHECK(first.colors == second.colors);
        CHECK(first.threshold == second.threshold);
    }
}

TEST_CASE("f_bound closed form") {
    CHECK(f_bound(1, 2) == 64);
    CHECK(f_bound(2, 2) == 256);
    CHECK(f_bound(1, 3) == 4096);
    CHECK(f_bound(3, 2) == 576);
    CHECK_THROWS(f_bound(0, 2));
    CHECK_THROWS(f_bound(1, 1));
}

TEST_CASE("f_internal recursion") {
    CHECK(f_internal(Int(1), 2) == 8);
    CHECK(f_internal(Int(3), 2) == 72);
    CHECK(f_internal(Int(3), 3) == 41472);
    CHECK(f_internal(Int(3), 4) == Int("13759414272"));
}

TEST_CASE("partition_multi guarantees") {
    std::mt19937_64 rng(125);
    SUBCASE("strength 1 on two wedges reduces to the asymmetric split") {
        auto [a, b] = random_pair_of_type(rng, WedgePairType::Hard);
        auto pts = random_general_points(rng, 25, {a, b});
        std::vector<Wedge> ws{a, b};
        auto mp = partition_multi(pts, ws, 1);
        REQUIRE(mp.partition.parts.size() == 2);
        // matches the oriented asymmetric coloring exactly
        auto anc = color_anc_pair(pts, a, b);
        bool red_is_a = anc.claim.red_wedge == a;
        for (size_t i = 0; i < pts.size(); ++i) {
            bool in_a = std::find(mp.partition.parts[0].begin(), mp.partition.parts[0].end(),
                                  static_cast<int>(i)) != mp.partition.parts[0].end();
            bool red = anc.colors[i] == Color::Red;
            CHECK(in_a == (red_is_a ? red : !red));
        }
    }
    SUBCASE("parts are disjoint and exhaustive; guarantee holds at the threshold") {
        for (int it = 0; it < 8; ++it) {
            Wedge a = random_small_wedge(rng);
            Wedge b = random_small_wedge(rng);
            if (classify_pair(a, b) == WedgePairType::Special) continue;
            auto pts = random_general_points(rng, 60, {a, b});
            std::vector<Wedge> ws{a, b};
            long long strength = 2;
            auto mp = partition_multi(pts, ws, strength);
            std::vector<int> owner(pts.size(), -1);
            for (size_t p = 0; p < mp.partition.parts.size(); ++p)
                for (int i : mp.partition.parts[p]) {
                    CHECK(owner[i] == -1);
                    owner[i] = static_cast<int>(p);
                }
            for (int o : owner) CHECK(o != -1);
            // oracle check of the quantitative guarantee
            for (size_t wi = 0; wi < ws.size(); ++wi) {
                for (const CanonicalRange& c : canonical_wedge_ranges(pts, ws[wi]).ranges) {
                    if (Int(c.subset.count()) < mp.threshold) continue;
                    long long inside = 0;
                    for (int i : c.subset.indices()) inside += owner[i] == static_cast<int>(wi);
                    CHECK(inside >= strength);
                }
            }
        }
    }
    SUBCASE("special pair rejected") {
        auto [v, w] = random_pair_of_type(rng, WedgePairType::Special);
        std::vector<Wedge> ws{v, w};
        CHECK_THROWS_AS(partition_multi(std::vector<Point>{pt(0, 0)}, ws, 1), WrongType);
    }
}

TEST_CASE("wedge system coloring") {
    std::mt19937_64 rng(127);
    SUBCASE("single wedge defers to the single-wedge coloring") {
        Wedge w = random_small_wedge(rng);
        auto pts = random_general_points(rng, 15, {w});
        auto sys = color_wedge_system(pts, std::vector<Wedge>{w});
        CHECK(sys.threshold == 2);
        CHECK(sys.verified_threshold <= 2);
    }
    SUBCASE("square wedges on random points") {
        Polygon sq = make_polygon({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
        auto ws = polygon_wedges(sq);
        auto pts = random_general_points(rng, 60, ws);
        auto sys = color_wedge_system(pts, ws);
        CHECK(sys.threshold == Int("13759414272"));
        std::vector<WedgeRequirement> req;
        for (const Wedge& w : ws) req.push_back({w, sys.verified_threshold});
        CHECK_FALSE(verify_coloring(pts, sys.colors, req).has_value());
        CHECK(sys.verified_threshold <= static_cast<long long>(pts.size()));
    }
    SUBCASE("triangle wedges") {
        Polygon tri = make_polygon({pt(0, 0), pt(4, 0), pt(0, 3)});
        auto ws = polygon_wedges(tri);
        auto pts = random_general_points(rng, 50, ws);
        auto sys = color_wedge_system(pts, ws);
        std::vector<WedgeRequirement> req;
        for (const Wedge& w : ws) req.push_back({w, sys.verified_threshold});
        CHECK_FALSE(verify_coloring(pts, sys.colors, req).has_value());
    }
    SUBCASE("a Special pair in the system is reported with indices") {
        Wedge v(Direction(4, 1), Direction(3, 2));
        Wedge w(Direction(2, 3), Direction(1, 4));
        std::vector<Wedge> ws{quadrant(), v, w};
        auto pts = random_general_points(rng, 5, ws);
        CHECK_THROWS_AS(color_wedge_system(pts, ws), SpecialPairPresent);
        try {
            color_wedge_system(pts, ws);
        } catch (const SpecialPairPresent& e) {
            CHECK(e.first == 1);
            CHECK(e.second == 2);
        }
    }
}

TEST_CASE("s-class system coloring covers all classes above the verified threshold") {
    std::mt19937_64 rng(129);
    Polygon sq = make_polygon({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
    auto ws = polygon_wedges(sq);
    auto pts = random_general_points(rng, 80, ws);
    for (int s : {2, 3, 4}) {
        auto mc = color_wedge_system_s(pts, ws, s);
        for (int c : mc.classes) CHECK((c >= 0 && c < s));
        for (const Wedge& w : ws) {
            for (const CanonicalRange& c : canonical_wedge_ranges(pts, w).ranges) {
                if (static_cast<long long>(c.subset.count()) < mc.verified_threshold) continue;
                std::vector<char> seen(s, 0);
                for (int i : c.subset.indices()) seen[mc.classes[i]] = 1;
                for (int cls = 0; cls < s; ++cls) CHECK(seen[cls] == 1);
            }
        }
        CHECK(mc.verified_threshold <= static_cast<long long>(pts.size()));
    }
}

TEST_CASE("friend graph matches the exactly-4 translates") {
    std::mt19937_64 rng(131);
    int done = 0;
    while (done < 25) {
        Wedge w = random_small_wedge(rng);
        auto pts = random_general_points(rng, 10 + static_cast<int>(rng() % 15), {w});
        PathDecomposition pd = path_decomposition(pts, w, 4);
        FriendGraph fg = friend_graph(pts, pd, 0, 1);
        std::set<std::pair<int, int>> edges(fg.edges.begin(), fg.edges.end());
        std::vector<int> path_of(pts.size(), -1);
        for (size_t p = 0; p < pd.paths.size(); ++p)
            for (int i : pd.paths[p]) path_of[i] = static_cast<int>(p);
        for (const CanonicalRange& c : canonical_wedge_ranges(pts, w).ranges) {
            if (c.subset.count() != 4) continue;
            int a = -1, b = -1;
            for (int i : c.subset.indices()) {
                if (path_of[i] == 0) a = i;
                if (path_of[i] == 1) b = i;
            }
            REQUIRE(a != -1);
            REQUIRE(b != -1);
            CHECK(edges.count({a, b}));
        }
        ++done;
    }
}
