#include "coverdec/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

#include "coverdec/errors.hpp"

namespace coverdec {

namespace {

std::vector<Point> subset_points(std::span<const Point> pts, const std::vector<int>& idx) {
    std::vector<Point> out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(pts[i]);
    return out;
}

// Internal general positioning for the coloring constructions. Order
// preservation is not requested: every certificate in this module is verified
// by the oracle against the unrotated inputs.
std::vector<Point> to_gp(std::span<const Point> pts, std::vector<Wedge> ws) {
    auto [rot, moved] =
        rotate_to_general_position(std::vector<Point>(pts.begin(), pts.end()), ws, false);
    return moved;
}

// Rational direction in closure(a) that is also in b, with b-membership strict
// when requested. The closed intersection of two cones below pi is a single
// arc; its two ends and midpoint cover every nonempty case.
std::optional<Direction> direction_in_cones(const Wedge& a, const Wedge& b, bool strict_b) {
    if (!a.small_angle() || !b.small_angle()) return std::nullopt;
    Direction start, end;
    bool found_start = false, found_end = false;
    if (cone_contains_dir(a, b.dir1)) start = b.dir1, found_start = true;
    else if (cone_contains_dir(b, a.dir1)) start = a.dir1, found_start = true;
    if (cone_contains_dir(b, a.dir2)) end = a.dir2, found_end = true;
    else if (cone_contains_dir(a, b.dir2)) end = b.dir2, found_end = true;
    if (!found_start || !found_end) return std::nullopt;
    if (cross(start, end) < 0) return std::nullopt;
    std::vector<Direction> candidates{start, end};
    if (cross(start, end) > 0)
        candidates.push_back(Direction(Rat(start.dx + end.dx), Rat(start.dy + end.dy)));
    for (const Direction& d : candidates)
        if (cone_contains_dir(a, d) && cone_contains_dir(b, d, strict_b)) return d;
    return std::nullopt;
}

Wedge reflected(const Wedge& w) { return Wedge(-w.dir1, -w.dir2, w.openness); }

bool closure_contains(const Wedge& outer, const Wedge& inner) {
    return cone_contains_dir(outer, inner.dir1) && cone_contains_dir(outer, inner.dir2);
}

bool contains_or_reflected(const Wedge& outer, const Wedge& inner) {
    return closure_contains(outer, inner) || closure_contains(outer, reflected(inner));
}

} // namespace

SingleWedgeColoring color_single_wedge(std::span<const Point> pts, const Wedge& w) {
    size_t n = pts.size();
    SingleWedgeColoring out;
    out.colors.assign(n, Color::Red);
    if (w.small_angle()) {
        out.threshold = 2;
        if (n < 2) return out;
        std::vector<Point> gp = to_gp(pts, {w});
        std::vector<int> bd = boundary_indices(gp, w);
        for (size_t p = 0; p < bd.size(); ++p) {
            out.colors[bd[p]] = p % 2 == 0 ? Color::Red : Color::Blue;
            for (int s : shadow_indices(gp, w, bd[p]))
                out.colors[s] = flip(out.colors[bd[p]]);
        }
        return out;
    }
    out.threshold = 3;
    if (n == 0) return out;
    // The wedge is a union of two halfplanes. Find, per halfplane, two points
    // contained in every translate of it that has at least two points.
    auto top_two = [&](auto key, bool largest) {
        std::vector<int> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            Rat ka = key(pts[a]), kb = key(pts[b]);
            if (ka != kb) return largest ? ka > kb : ka < kb;
            return a < b;
        });
        return std::pair<int, int>(idx[0], idx[std::min<size_t>(1, n - 1)]);
    };
    auto [a1, a2] = top_two([&](const Point& p) { return cross(w.dir1, p); }, true);
    auto [b1, b2] = top_two([&](const Point& p) { return cross(w.dir2, p); }, false);
    out.colors.assign(n, Color::Blue);
    // constraint edges (a1,a2), (b1,b2): color so each pair is bichromatic
    out.colors[a1] = Color::Red;
    out.colors[a2] = Color::Blue;
    if (out.colors[b1] == out.colors[b2]) {
        if (b1 != a1 && b1 != a2) out.colors[b1] = flip(out.colors[b2]);
        else out.colors[b2] = flip(out.colors[b1]);
    }
    if (n >= 2 && out.colors[a1] == out.colors[a2]) out.colors[a2] = flip(out.colors[a1]);
    return out;
}

FriendGraph friend_graph(std::span<const Point> pts, const PathDecomposition& pd,
                         int path_a, int path_b) {
    int n = static_cast<int>(pts.size());
    std::vector<int> path_of(n, -1);
    for (size_t p = 0; p < pd.paths.size(); ++p)
        for (int i : pd.paths[p]) path_of[i] = static_cast<int>(p);

    FriendGraph fg;
    std::set<std::pair<int, int>> edge_set;
    for (const CanonicalRange& c : canonical_wedge_ranges(pts, pd.wedge).ranges) {
        if (c.subset.count() != static_cast<size_t>(pd.order)) continue;
        int in_a = -1, in_b = -1;
        for (int i : c.subset.indices()) {
            if (path_of[i] == path_a) {
                if (in_a != -1) throw DegenerateSweep("exactness violated in friend graph");
                in_a = i;
            }
            if (path_of[i] == path_b) {
                if (in_b != -1) throw DegenerateSweep("exactness violated in friend graph");
                in_b = i;
            }
        }
        if (in_a == -1 || in_b == -1)
            throw DegenerateSweep("exact translate misses a path");
        edge_set.insert({in_a, in_b});
    }
    fg.edges.assign(edge_set.begin(), edge_set.end());

    std::map<int, std::vector<int>> adj;
    for (int i : pd.paths[path_a]) adj[i];
    for (int i : pd.paths[path_b]) adj[i];
    for (auto [x, y] : fg.edges) {
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    for (auto& [i, nb] : adj) fg.roles[i] = nb.size() == 1 ? FriendRole::Fan : FriendRole::Regular;
    for (auto& [i, nb] : adj) {
        for (int j : nb)
            if (fg.roles[j] == FriendRole::Fan) fg.roles[i] = FriendRole::Star;
    }
    return fg;
}

namespace {

// Lemma-2 style coloring of one pair of paths: stars blue, fans alternated with
// a forced red/blue tail, leftover regular runs in period-3 with matching
// friends. `flipped` swaps the two colors throughout.
void color_path_pair(const PathDecomposition& pd, int pa, int pb, const FriendGraph& fg,
                     bool flipped, Coloring& colors, std::vector<char>& done) {
    auto set = [&](int i, Color c) {
        if (done[i]) return;
        colors[i] = flipped ? flip(c) : c;
        done[i] = 1;
    };
    std::map<int, int> pos; // position within its own path
    for (int t = 0; t < 2; ++t) {
        const auto& path = pd.paths[t == 0 ? pa : pb];
        for (size_t p = 0; p < path.size(); ++p) pos[path[p]] = static_cast<int>(p);
    }
    std::map<int, std::vector<int>> friends;
    for (auto [x, y] : fg.edges) {
        friends[x].push_back(y);
        friends[y].push_back(x);
    }
    for (auto& [i, f] : friends)
        std::sort(f.begin(), f.end(), [&](int a, int b) { return pos[a] < pos[b]; });

    // all stars first, so no star can be painted over by a friend pattern
    for (int t = 0; t < 2; ++t)
        for (int i : pd.paths[t == 0 ? pa : pb])
            if (fg.roles.at(i) == FriendRole::Star) set(i, Color::Blue);
    auto star_pass = [&](const std::vector<int>& path) {
        for (int i : path) {
            if (fg.roles.at(i) != FriendRole::Star) continue;
            const auto& f = friends[i];
            int m = static_cast<int>(f.size());
            for (int t = 0; t < m; ++t) {
                Color c;
                if (m == 1) c = Color::Blue;
                else if (t == m - 1) c = Color::Blue;
                else if (t == m - 2) c = Color::Red;
                else c = t % 2 == 0 ? Color::Blue : Color::Red;
                set(f[t], c);
            }
        }
    };
    star_pass(pd.paths[pa]);
    star_pass(pd.paths[pb]);

    // maximal uncolored runs of the first path, period 3 starting red
    const auto& pathA = pd.paths[pa];
    size_t i = 0;
    while (i < pathA.size()) {
        if (done[pathA[i]]) {
            ++i;
            continue;
        }
        size_t j = i;
        int local = 0;
        while (j < pathA.size() && !done[pathA[j]]) {
            set(pathA[j], local % 3 == 0 ? Color::Red : Color::Blue);
            ++local;
            ++j;
        }
        i = j;
    }
    // second path: blue when a friend ended red, otherwise red
    Color raw_red = flipped ? flip(Color::Red) : Color::Red;
    for (int y : pd.paths[pb]) {
        if (done[y]) continue;
        bool has_red_friend = false;
        for (int x : friends[y])
            if (done[x] && colors[x] == raw_red) has_red_friend = true;
        set(y, has_red_friend ? Color::Blue : Color::Red);
    }
}

} // namespace

PairColoring color_contain_pair(std::span<const Point> pts, const Wedge& v, const Wedge& w) {
    if (classify_pair(v, w) != WedgePairType::Contain || !contains_or_reflected(w, v))
        throw WrongType("color_contain_pair needs a Contain pair with w as container");
    size_t n = pts.size();
    PairColoring out;
    out.claims = {{w, 4}, {v, 14}};
    out.colors.assign(n, Color::Red);
    if (n < 4) return out;

    std::vector<Point> gp = to_gp(pts, {v, w});
    PathDecomposition pd = path_decomposition(gp, w, 4);
    std::vector<char> done(n, 0);
    FriendGraph f01 = friend_graph(gp, pd, 0, 1);
    color_path_pair(pd, 0, 1, f01, false, out.colors, done);
    FriendGraph f23 = friend_graph(gp, pd, 2, 3);
    color_path_pair(pd, 2, 3, f23, true, out.colors, done);

    if (!pd.rest.empty()) {
        SingleWedgeColoring rc = color_single_wedge(subset_points(gp, pd.rest), v);
        for (size_t r = 0; r < pd.rest.size(); ++r) out.colors[pd.rest[r]] = rc.colors[r];
    }
    return out;
}

AncColoring color_contain_anc(std::span<const Point> pts, const Wedge& v, const Wedge& w) {
    Wedge inner = v, outer = w;
    if (!contains_or_reflected(outer, inner)) {
        std::swap(inner, outer);
        if (!contains_or_reflected(outer, inner))
            throw WrongType("color_contain_anc needs a Contain pair");
    }
    size_t n = pts.size();
    AncColoring out;
    out.claim = AncRequirement{inner, 8, outer, 4};
    out.colors.assign(n, Color::Red);
    if (n < 4) return out;

    std::vector<Point> gp = to_gp(pts, {inner, outer});
    PathDecomposition pd = path_decomposition(gp, outer, 4);
    std::vector<char> done(n, 0);
    FriendGraph f01 = friend_graph(gp, pd, 0, 1);
    color_path_pair(pd, 0, 1, f01, false, out.colors, done);
    // everything off the first two paths is red, preserving the red guarantee
    return out;
}

AncColoring color_big_pair(std::span<const Point> pts, const Wedge& v, const Wedge& w) {
    if (w.small_angle()) throw WrongType("color_big_pair needs w with angle above pi");
    size_t n = pts.size();
    AncColoring out;
    out.claim = AncRequirement{w, 1, v, 3};
    out.colors.assign(n, Color::Blue);
    if (n == 0) return out;
    size_t x1 = 0, x2 = 0;
    for (size_t i = 1; i < n; ++i) {
        if (cross(w.dir1, pts[i]) > cross(w.dir1, pts[x1])) x1 = i;
        if (cross(w.dir2, pts[i]) < cross(w.dir2, pts[x2])) x2 = i;
    }
    out.colors[x1] = Color::Red;
    out.colors[x2] = Color::Red; // may coincide with x1
    return out;
}

AncColoring color_halfplane_pair(std::span<const Point> pts, const Wedge& v, const Wedge& w) {
    if (classify_pair(v, w) != WedgePairType::Halfplane)
        throw WrongType("color_halfplane_pair needs a Halfplane pair");
    size_t n = pts.size();
    AncColoring out;
    out.colors.assign(n, Color::Red);
    out.claim = AncRequirement{w, 2, v, 1}; // red on w-translates, blue on v
    if (n == 0) return out;

    std::vector<Point> gp = to_gp(pts, {v, w});
    std::vector<int> bdv = boundary_indices(gp, v);
    std::vector<int> bdw = boundary_indices(gp, w);
    std::set<int> bdv_set(bdv.begin(), bdv.end()), bdw_set(bdw.begin(), bdw.end());
    std::vector<int> common;
    for (int i : bdv)
        if (bdw_set.count(i)) common.push_back(i);
    if (common.size() > 1)
        throw VerificationFailed("halfplane pair with overlapping boundaries");

    auto color_v_blue = [&] {
        for (size_t i = 0; i < n; ++i) out.colors[i] = Color::Red;
        for (int i : bdv) out.colors[i] = Color::Blue;
        out.claim = AncRequirement{w, 2, v, 1};
    };
    auto color_w_red = [&] {
        for (size_t i = 0; i < n; ++i) out.colors[i] = Color::Blue;
        for (int i : bdw) out.colors[i] = Color::Red;
        out.claim = AncRequirement{w, 1, v, 2};
    };

    if (common.empty()) {
        // disjoint boundaries: Bd^V blue, everything else (including Bd^W) red
        color_v_blue();
        return out;
    }
    int x = common[0];
    std::vector<int> p_idx;
    for (int i : bdv)
        if (i != x) p_idx.push_back(i);
    for (int i : bdw)
        if (i != x && !bdv_set.count(i)) p_idx.push_back(i);
    std::vector<Point> p_pts = subset_points(gp, p_idx);
    std::vector<int> bdv_p = boundary_indices(p_pts, v);
    std::vector<int> bdw_p = boundary_indices(p_pts, w);
    std::set<int> bdv_p_set(bdv_p.begin(), bdv_p.end());
    std::vector<int> common2;
    for (int i : bdw_p)
        if (bdv_p_set.count(i)) common2.push_back(i);
    if (common2.size() > 1)
        throw VerificationFailed("halfplane recursion with overlapping boundaries");

    if (common2.empty()) {
        color_v_blue();
        return out;
    }
    int y_global = p_idx[common2[0]];
    if (bdw_set.count(y_global)) color_v_blue();
    else color_w_red();
    return out;
}

AncColoring color_hard_pair(std::span<const Point> pts, const Wedge& v, const Wedge& w) {
    if (classify_pair(v, w) != WedgePairType::Hard)
        throw WrongType("color_hard_pair needs a Hard pair");
    size_t n = pts.size();
    AncColoring out;
    out.claim = AncRequirement{v, 2, w, 2}; // red on v-translates, blue on w
    out.colors.assign(n, Color::Red);
    if (n == 0) return out;

    std::vector<Point> gp = to_gp(pts, {v, w});
    std::vector<int> bdv = boundary_indices(gp, v);
    std::vector<int> bdw = boundary_indices(gp, w);
    std::set<int> bdv_set(bdv.begin(), bdv.end()), bdw_set(bdw.begin(), bdw.end());

    for (int i : bdv)
        if (!bdw_set.count(i)) out.colors[i] = Color::Red;
    for (int i : bdw)
        if (!bdv_set.count(i)) out.colors[i] = Color::Blue;

    std::vector<int> common;
    for (int i : bdv)
        if (bdw_set.count(i)) common.push_back(i);
    if (common.empty()) return out;

    // frame direction: in the closure of w with its reverse in the closure of v
    auto d_opt = direction_in_cones(w, reflected(v), false);
    if (!d_opt) throw WrongType("hard pair without a shared frame direction");
    Direction d = *d_opt;

    // removal test: removing X exposes a new boundary point iff some point sees
    // exactly {X} through its wedge
    std::set<int> exposes_v, exposes_w;
    for (size_t yy = 0; yy < n; ++yy) {
        int seen = -2;
        for (size_t j = 0; j < n; ++j) {
            if (j == yy) continue;
            if (wedge_contains({v, gp[yy]}, gp[j])) seen = seen == -2 ? static_cast<int>(j) : -1;
        }
        if (seen >= 0) exposes_v.insert(seen);
        seen = -2;
        for (size_t j = 0; j < n; ++j) {
            if (j == yy) continue;
            if (wedge_contains({w, gp[yy]}, gp[j])) seen = seen == -2 ? static_cast<int>(j) : -1;
        }
        if (seen >= 0) exposes_w.insert(seen);
    }

    auto color_common = [&](bool ascending) {
        std::vector<int> order = common;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            Rat ka = cross(d, gp[a]), kb = cross(d, gp[b]);
            if (ka != kb) return ascending ? ka < kb : ka > kb;
            return a < b;
        });
        Color prev = Color::Blue; // first undetermined point becomes red
        for (int x : order) {
            bool nv = exposes_v.count(x) > 0;
            bool nw = exposes_w.count(x) > 0;
            if (nv && nw) throw VerificationFailed("hard pair removal test ambiguous");
            Color c;
            if (nv) c = Color::Red;
            else if (nw) c = Color::Blue;
            else c = flip(prev);
            out.colors[x] = c;
            prev = c;
        }
    };

    // The frame must put the non-Left side of v in the Upper sector; otherwise
    // the y-order runs the other way. Resolve geometrically, then fall back to
    // the opposite order if the oracle disagrees.
    Wedge upper(w.dir2, -w.dir1, w.openness);
    bool other_in_upper = cone_contains_dir(upper, v.dir1) || cone_contains_dir(upper, v.dir2);
    color_common(other_in_upper);
    if (verify_anc(pts, out.colors, out.claim).has_value()) {
        color_common(!other_in_upper);
        if (verify_anc(pts, out.colors, out.claim).has_value())
            throw VerificationFailed("hard pair coloring failed both frame orders");
    }
    return out;
}

AncColoring color_anc_pair(std::span<const Point> pts, const Wedge& a, const Wedge& b) {
    switch (classify_pair(a, b)) {
        case WedgePairType::Special:
            throw WrongType("Special pairs admit no asymmetric coloring");
        case WedgePairType::Big:
            return b.small_angle() ? color_big_pair(pts, b, a) : color_big_pair(pts, a, b);
        case WedgePairType::Contain:
            return color_contain_anc(pts, a, b);
        case WedgePairType::Halfplane:
            return color_halfplane_pair(pts, a, b);
        case WedgePairType::Hard:
            return color_hard_pair(pts, a, b);
    }
    throw WrongType("unreachable");
}

namespace {

// ANC coloring with the red guarantee forced onto `red_side`.
AncColoring oriented_anc(std::span<const Point> pts, const Wedge& red_side,
                         const Wedge& blue_side) {
    AncColoring c = color_anc_pair(pts, red_side, blue_side);
    if (c.claim.red_wedge == red_side) return c;
    for (Color& col : c.colors) col = flip(col);
    c.claim = AncRequirement{c.claim.blue_wedge, c.claim.blue_min, c.claim.red_wedge,
                             c.claim.red_min};
    return c;
}

// Colors a wedge boundary so that translates of `side` with 14 points and
// translates of `other` with 4 points are bichromatic. The main route borrows
// the Contain-pair coloring through a thin wedge around a direction of
// closure(side) strictly inside `other` (or its reflection); tangent pairs
// where no such direction exists fall back to verified chain alternation or a
// single-wedge coloring for `other`.
Coloring color_boundary_for_pair(const std::vector<Point>& bd_pts, const Wedge& side,
                                 const Wedge& other) {
    size_t n = bd_pts.size();
    if (n < 4) return Coloring(n, Color::Red);
    std::vector<WedgeRequirement> want{{other, 4}, {side, 14}};

    auto d_opt = direction_in_cones(side, other, true);
    if (!d_opt) d_opt = direction_in_cones(side, reflected(other), true);
    if (d_opt) {
        Direction d = *d_opt;
        Direction dp(Rat(-d.dy), Rat(d.dx));
        for (int iter = 0; iter < 64; ++iter) {
            Int N = Int(2) << iter;
            Direction u1(Rat(N * d.dx - dp.dx), Rat(N * d.dy - dp.dy));
            Direction u2(Rat(N * d.dx + dp.dx), Rat(N * d.dy + dp.dy));
            Wedge thin(u1, u2, side.openness);
            if (classify_pair(thin, other) != WedgePairType::Contain) continue;
            if (!contains_or_reflected(other, thin)) continue;
            Coloring colors;
            try {
                colors = color_contain_pair(bd_pts, thin, other).colors;
            } catch (const DegenerateSweep&) {
                continue;
            }
            if (!verify_coloring(bd_pts, colors, want).has_value()) return colors;
        }
    }
    // chain alternation: translates of `side` cut intervals of its boundary
    {
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            Rat kx = cross(side.dir1, bd_pts[x]), ky = cross(side.dir1, bd_pts[y]);
            if (kx != ky) return kx < ky;
            return cross(side.dir2, bd_pts[x]) < cross(side.dir2, bd_pts[y]);
        });
        Coloring colors(n, Color::Red);
        for (size_t p = 0; p < n; ++p)
            colors[order[p]] = p % 2 == 0 ? Color::Red : Color::Blue;
        if (!verify_coloring(bd_pts, colors, want).has_value()) return colors;
    }
    {
        Coloring colors = color_single_wedge(bd_pts, other).colors;
        if (!verify_coloring(bd_pts, colors, want).has_value()) return colors;
    }
    throw VerificationFailed("no boundary coloring strategy certified");
}

struct BoundarySplit {
    std::vector<int> all_blue, all_red, mixed;
};

// Splits non-boundary points by the colors their own translate sees on the
// boundary. Every non-boundary point sees at least one boundary point.
BoundarySplit split_by_view(const std::vector<Point>& pts, const std::vector<int>& members,
                            const std::vector<int>& bd, const Coloring& colors,
                            const Wedge& side) {
    std::set<int> bd_set(bd.begin(), bd.end());
    BoundarySplit out;
    for (int i : members) {
        if (bd_set.count(i)) continue;
        bool saw_red = false, saw_blue = false;
        for (int b : bd) {
            if (!wedge_contains({side, pts[i]}, pts[b])) continue;
            (colors[b] == Color::Red ? saw_red : saw_blue) = true;
        }
        if (!saw_red && !saw_blue)
            throw VerificationFailed("non-boundary point sees no boundary point");
        if (saw_red && saw_blue) out.mixed.push_back(i);
        else if (saw_blue) out.all_blue.push_back(i);
        else out.all_red.push_back(i);
    }
    return out;
}

std::vector<int> boundary_of_subset(const std::vector<Point>& pts,
                                    const std::vector<int>& members, const Wedge& w) {
    std::vector<Point> sub = subset_points(pts, members);
    std::vector<int> local = boundary_indices(sub, w);
    std::vector<int> out;
    for (int l : local) out.push_back(members[l]);
    return out;
}

} // namespace

NcColoring anc_to_nc(std::span<const Point> pts, const Wedge& v, const Wedge& w,
                     long long anc_threshold) {
    WedgePairType ty = classify_pair(v, w);
    if (ty == WedgePairType::Special) throw WrongType("Special pairs are not colorable");
    size_t n = pts.size();
    NcColoring out;
    out.colors.assign(n, Color::Red);
    std::vector<Wedge> both{v, w};

    if (ty == WedgePairType::Big) {
        // direct composition: bichromatic extreme pairs of the big wedge's two
        // halfplanes, plus a single-wedge coloring of the rest for the small one
        const Wedge& big = v.small_angle() ? w : v;
        const Wedge& small = v.small_angle() ? v : w;
        if (!small.small_angle())
            throw AngleTooLarge("pairs of two wedges both above pi are unsupported");
        out.claimed_bound = 6;
        if (n >= 2) {
            std::vector<int> idx(n);
            std::iota(idx.begin(), idx.end(), 0);
            auto by = [&](const Direction& d, bool largest) {
                std::vector<int> s = idx;
                std::sort(s.begin(), s.end(), [&](int a, int b) {
                    Rat ka = cross(d, pts[a]), kb = cross(d, pts[b]);
                    if (ka != kb) return largest ? ka > kb : ka < kb;
                    return a < b;
                });
                return std::pair<int, int>(s[0], s[1]);
            };
            auto [a1, a2] = by(big.dir1, true);
            auto [b1, b2] = by(big.dir2, false);
            std::set<int> special{a1, a2, b1, b2};
            std::vector<int> rest;
            for (size_t i = 0; i < n; ++i)
                if (!special.count(static_cast<int>(i))) rest.push_back(static_cast<int>(i));
            out.colors[a1] = Color::Red;
            out.colors[a2] = Color::Blue;
            if (out.colors[b1] == out.colors[b2]) {
                if (b1 != a1 && b1 != a2) out.colors[b1] = flip(out.colors[b2]);
                else out.colors[b2] = flip(out.colors[b1]);
            }
            SingleWedgeColoring sc = color_single_wedge(subset_points(pts, rest), small);
            for (size_t r = 0; r < rest.size(); ++r) out.colors[rest[r]] = sc.colors[r];
        }
        out.threshold = verified_nc_threshold(pts, out.colors, both);
        return out;
    }

    long long a = anc_threshold;
    {
        AncColoring probe = color_anc_pair(pts.size() ? pts.subspan(0, 0) : pts, v, w);
        a = std::max({a, probe.claim.red_min, probe.claim.blue_min});
    }
    out.claimed_bound = 2 * a + 16;

    std::vector<Point> gp = to_gp(pts, {v, w});
    std::vector<int> everyone(n);
    std::iota(everyone.begin(), everyone.end(), 0);

    // level 0: color Bd^V(S), split the rest by the colors each point sees
    std::vector<int> bdv = boundary_of_subset(gp, everyone, v);
    Coloring bd_colors = color_boundary_for_pair(subset_points(gp, bdv), v, w);
    for (size_t i = 0; i < bdv.size(); ++i) out.colors[bdv[i]] = bd_colors[i];
    BoundarySplit l0 = split_by_view(gp, everyone, bdv, out.colors, v);

    // mixed points: any v-translate through them already sees both colors
    if (!l0.mixed.empty()) {
        SingleWedgeColoring sc = color_single_wedge(subset_points(gp, l0.mixed), w);
        for (size_t i = 0; i < l0.mixed.size(); ++i) out.colors[l0.mixed[i]] = sc.colors[i];
    }

    // level 1 on S_b and S_r, with the wedge roles swapped
    auto level1 = [&](const std::vector<int>& members, bool from_blue) {
        if (members.empty()) return;
        std::vector<int> bdw = boundary_of_subset(gp, members, w);
        Coloring bc = color_boundary_for_pair(subset_points(gp, bdw), w, v);
        for (size_t i = 0; i < bdw.size(); ++i) out.colors[bdw[i]] = bc[i];
        BoundarySplit l1 = split_by_view(gp, members, bdw, out.colors, w);
        if (from_blue) {
            for (int i : l1.all_blue) out.colors[i] = Color::Red; // S_bb
            for (int i : l1.mixed) out.colors[i] = Color::Red;    // S_b0
            if (!l1.all_red.empty()) {                            // S_br
                AncColoring anc = oriented_anc(subset_points(gp, l1.all_red), v, w);
                for (size_t i = 0; i < l1.all_red.size(); ++i)
                    out.colors[l1.all_red[i]] = anc.colors[i];
            }
        } else {
            for (int i : l1.all_red) out.colors[i] = Color::Blue; // S_rr
            for (int i : l1.mixed) out.colors[i] = Color::Blue;   // S_r0
            if (!l1.all_blue.empty()) {                           // S_rb, colors switched
                AncColoring anc = oriented_anc(subset_points(gp, l1.all_blue), v, w);
                for (size_t i = 0; i < l1.all_blue.size(); ++i)
                    out.colors[l1.all_blue[i]] = flip(anc.colors[i]);
            }
        }
    };
    level1(l0.all_blue, true);
    level1(l0.all_red, false);

    out.threshold = verified_nc_threshold(pts, out.colors, both);
    return out;
}

Int f_bound(long long s, int t) {
    if (s < 1 || t < 2) throw GeometryError("f_bound needs s >= 1, t >= 2");
    if (t > 16) throw TooLarge("f_bound exponent too large");
    return boost::multiprecision::pow(Int(8 * s), 1u << (t - 1));
}

Int f_internal(const Int& s, int t) {
    if (t == 2) return 8 * s * s;
    return f_internal(8 * s * s, t - 1);
}

namespace {

// Order-k path decomposition with k capped at the subset size and the path
// list padded with empty paths; degenerate sets yield all-empty paths.
std::vector<std::vector<int>> padded_paths(const std::vector<Point>& pts,
                                           const std::vector<int>& members, const Wedge& w,
                                           const Int& order, std::vector<int>& rest) {
    std::vector<std::vector<int>> out;
    rest.clear();
    if (members.empty()) return out;
    int k = order > Int(members.size()) ? static_cast<int>(members.size())
                                        : static_cast<int>(order.convert_to<long long>());
    PathDecomposition pd = path_decomposition(subset_points(pts, members), w, k);
    for (const auto& path : pd.paths) {
        std::vector<int> global;
        for (int l : path) global.push_back(members[l]);
        out.push_back(std::move(global));
    }
    for (int l : pd.rest) rest.push_back(members[l]);
    return out;
}

// f(s,2): nested path decompositions, one asymmetric coloring per block pair.
std::pair<std::vector<int>, std::vector<int>> partition_pair(const std::vector<Point>& pts,
                                                             const std::vector<int>& members,
                                                             const Wedge& a, const Wedge& b,
                                                             const Int& strength) {
    std::vector<int> part_a, part_b;
    if (members.empty()) return {part_a, part_b};
    if (strength == 1) {
        AncColoring anc = oriented_anc(subset_points(pts, members), a, b);
        for (size_t i = 0; i < members.size(); ++i)
            (anc.colors[i] == Color::Red ? part_a : part_b).push_back(members[i]);
        return {part_a, part_b};
    }
    const Int f12 = 8;
    Int order_v = strength * strength * f12;
    Int block_v = strength * f12; // paths per outer block
    std::vector<int> rest;
    auto paths_v = padded_paths(pts, members, a, order_v, rest);
    for (int r : rest) part_a.push_back(r);

    std::map<long long, std::vector<int>> outer_blocks;
    for (size_t p = 0; p < paths_v.size(); ++p) {
        long long blk = static_cast<long long>((Int(p) / block_v).convert_to<long long>());
        auto& dst = outer_blocks[blk];
        dst.insert(dst.end(), paths_v[p].begin(), paths_v[p].end());
    }
    for (auto& [blk, h] : outer_blocks) {
        std::vector<int> rest_w;
        auto paths_w = padded_paths(pts, h, b, block_v, rest_w);
        for (int r : rest_w) part_a.push_back(r);
        std::map<long long, std::vector<int>> cells;
        for (size_t p = 0; p < paths_w.size(); ++p) {
            long long c = static_cast<long long>((Int(p) / f12).convert_to<long long>());
            auto& dst = cells[c];
            dst.insert(dst.end(), paths_w[p].begin(), paths_w[p].end());
        }
        for (auto& [c, cell] : cells) {
            if (cell.empty()) continue;
            AncColoring anc = oriented_anc(subset_points(pts, cell), a, b);
            for (size_t i = 0; i < cell.size(); ++i)
                (anc.colors[i] == Color::Red ? part_a : part_b).push_back(cell[i]);
        }
    }
    return {part_a, part_b};
}

std::vector<std::vector<int>> partition_rec(const std::vector<Point>& pts,
                                            const std::vector<int>& members,
                                            std::span<const Wedge> ws, const Int& strength) {
    size_t t = ws.size();
    if (t == 2) {
        auto [pa, pb] = partition_pair(pts, members, ws[0], ws[1], strength);
        return {pa, pb};
    }
    Int s2 = f_internal(strength, 2);
    auto head = partition_rec(pts, members, ws.subspan(0, t - 1), s2);
    std::vector<std::vector<int>> out(t);
    for (size_t i = 0; i + 1 < t; ++i) {
        auto [keep, give] = partition_pair(pts, head[i], ws[i], ws[t - 1], strength);
        out[i] = std::move(keep);
        out[t - 1].insert(out[t - 1].end(), give.begin(), give.end());
    }
    return out;
}

void check_system(std::span<const Wedge> ws, bool use_special_error) {
    for (size_t i = 0; i < ws.size(); ++i) {
        if (!ws[i].small_angle())
            throw AngleTooLarge("wedge systems with angles above pi are unsupported");
        for (size_t j = i + 1; j < ws.size(); ++j)
            if (classify_pair(ws[i], ws[j]) == WedgePairType::Special) {
                if (use_special_error) throw SpecialPairPresent(static_cast<int>(i),
                                                                static_cast<int>(j));
                throw WrongType("wedge system contains a Special pair");
            }
    }
}

} // namespace

MultiPartition partition_multi(std::span<const Point> pts, std::span<const Wedge> ws,
                               long long strength) {
    if (ws.size() < 2) throw WrongType("partition_multi needs at least two wedges");
    if (strength < 1) throw WrongType("strength must be positive");
    check_system(ws, false);
    std::vector<Point> gp = to_gp(pts, std::vector<Wedge>(ws.begin(), ws.end()));
    std::vector<int> everyone(pts.size());
    std::iota(everyone.begin(), everyone.end(), 0);
    MultiPartition out;
    out.partition.parts = partition_rec(gp, everyone, ws, Int(strength));
    out.threshold = f_internal(Int(strength), static_cast<int>(ws.size()));
    return out;
}

SystemColoring color_wedge_system(std::span<const Point> pts, std::span<const Wedge> ws) {
    if (ws.empty()) throw WrongType("empty wedge system");
    SystemColoring out;
    std::vector<Wedge> all(ws.begin(), ws.end());
    if (ws.size() == 1) {
        SingleWedgeColoring sc = color_single_wedge(pts, ws[0]);
        out.colors = std::move(sc.colors);
        out.threshold = sc.threshold;
        out.verified_threshold = verified_nc_threshold(pts, out.colors, all);
        return out;
    }
    check_system(ws, true);
    MultiPartition mp = partition_multi(pts, ws, 3);
    out.colors.assign(pts.size(), Color::Red);
    for (size_t i = 0; i < ws.size(); ++i) {
        const auto& part = mp.partition.parts[i];
        if (part.empty()) continue;
        SingleWedgeColoring sc = color_single_wedge(subset_points(pts, part), ws[i]);
        for (size_t l = 0; l < part.size(); ++l) out.colors[part[l]] = sc.colors[l];
    }
    out.threshold = mp.threshold;
    out.verified_threshold = verified_nc_threshold(pts, out.colors, all);
    return out;
}

SystemMultiColoring color_wedge_system_s(std::span<const Point> pts,
                                         std::span<const Wedge> ws, int s) {
    if (ws.empty()) throw WrongType("empty wedge system");
    if (s < 1) throw WrongType("class count must be positive");
    SystemMultiColoring out;
    out.classes.assign(pts.size(), 0);

    auto classify_part = [&](const std::vector<Point>& gp, const std::vector<int>& part,
                             const Wedge& w) {
        if (part.empty()) return;
        std::vector<int> rest;
        auto paths = padded_paths(gp, part, w, Int(s), rest);
        for (size_t p = 0; p < paths.size(); ++p)
            for (int i : paths[p]) out.classes[i] = static_cast<int>(p % s);
        for (int i : rest) out.classes[i] = 0;
    };

    if (s == 1) {
        out.threshold = 1;
    } else if (ws.size() == 1) {
        std::vector<int> everyone(pts.size());
        std::iota(everyone.begin(), everyone.end(), 0);
        std::vector<Point> gp = to_gp(pts, {ws[0]});
        classify_part(gp, everyone, ws[0]);
        out.threshold = s;
    } else {
        check_system(ws, true);
        MultiPartition mp = partition_multi(pts, ws, s);
        std::vector<Point> gp = to_gp(pts, std::vector<Wedge>(ws.begin(), ws.end()));
        for (size_t i = 0; i < ws.size(); ++i) classify_part(gp, mp.partition.parts[i], ws[i]);
        out.threshold = mp.threshold;
    }

    // verified threshold: smallest m such that every cuttable subset of size
    // >= m contains all classes
    long long worst = 0;
    for (const Wedge& w : ws) {
        for (const CanonicalRange& c : canonical_wedge_ranges(pts, w).ranges) {
            std::vector<char> seen(s, 0);
            for (int i : c.subset.indices()) seen[out.classes[i]] = 1;
            bool complete = std::all_of(seen.begin(), seen.end(), [](char x) { return x != 0; });
            if (!complete) worst = std::max(worst, static_cast<long long>(c.subset.count()));
        }
    }
    out.verified_threshold = worst + 1;
    return out;
}

} // namespace coverdec
