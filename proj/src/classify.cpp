#include "coverdec/classify.hpp"

#include <algorithm>
#include <vector>

namespace coverdec {

const char* to_string(WedgePairType t) {
    switch (t) {
        case WedgePairType::Big: return "Big";
        case WedgePairType::Halfplane: return "Halfplane";
        case WedgePairType::Contain: return "Contain";
        case WedgePairType::Hard: return "Hard";
        case WedgePairType::Special: return "Special";
    }
    return "?";
}

bool cone_contains_dir(const Wedge& w, const Direction& d, bool strict) {
    Int s1 = cross(w.dir1, d);
    Int s2 = cross(w.dir2, d);
    if (w.small_angle()) return strict ? (s1 > 0 && s2 < 0) : (s1 >= 0 && s2 <= 0);
    return strict ? (s1 > 0 || s2 < 0) : (s1 >= 0 || s2 <= 0);
}

namespace {

bool cone_subset(const Wedge& inner, const Wedge& outer) {
    return cone_contains_dir(outer, inner.dir1) && cone_contains_dir(outer, inner.dir2);
}

// Strict-weak angular order of directions around the circle, starting at the
// positive x-axis.
bool angle_less(const Direction& a, const Direction& b) {
    auto half = [](const Direction& d) { return (d.dy > 0 || (d.dy == 0 && d.dx > 0)) ? 0 : 1; };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

// Is the ccw angle from `base` to `x` smaller than from `base` to `y`?
// Angles are taken in [0, 2*pi).
bool ccw_angle_less(const Direction& base, const Direction& x, const Direction& y) {
    auto key = [&](const Direction& d) {
        if (d == base) return 0;
        Int c = cross(base, d);
        if (c > 0) return 1;
        if (c == 0) return 2; // d == -base
        return 3;
    };
    int kx = key(x), ky = key(y);
    if (kx != ky) return kx < ky;
    if (kx == 1 || kx == 3) return cross(x, y) > 0;
    return false;
}

bool ccw_angle_at_least_pi(const Direction& from, const Direction& to) {
    if (to == -from) return true;
    return cross(from, to) < 0;
}

// Is d on the closed ccw arc [s, e]?
bool arc_contains(const Direction& s, const Direction& e, const Direction& d) {
    if (d == s || d == e) return true;
    return ccw_angle_less(s, d, e);
}

// Union of the two closed direction arcs covers some closed semicircle.
bool arcs_cover_halfplane(const Wedge& a, const Wedge& b) {
    const Direction &a1 = a.dir1, &a2 = a.dir2, &b1 = b.dir1, &b2 = b.dir2;
    Direction start;
    if (arc_contains(a1, a2, b1)) start = a1;
    else if (arc_contains(b1, b2, a1)) start = b1;
    else return false; // disjoint arcs cannot cover a connected semicircle
    Direction end = ccw_angle_less(start, a2, b2) ? b2 : a2;
    if (end == start) return false;
    return ccw_angle_at_least_pi(start, end);
}

// All four side directions fit strictly inside some open halfplane through the
// origin, i.e. the largest cyclic gap between them exceeds pi.
bool fits_open_halfplane(const Wedge& a, const Wedge& b) {
    std::vector<Direction> dirs{a.dir1, a.dir2, b.dir1, b.dir2};
    std::sort(dirs.begin(), dirs.end(), angle_less);
    dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
    size_t n = dirs.size();
    for (size_t i = 0; i < n; ++i) {
        const Direction& u = dirs[i];
        const Direction& v = dirs[(i + 1) % n];
        if (u == v) continue;
        if (cross(u, v) < 0) return true; // gap strictly greater than pi
    }
    return false;
}

} // namespace

WedgePairType classify_pair(const Wedge& v, const Wedge& w) {
    if (!v.small_angle() || !w.small_angle()) return WedgePairType::Big;
    Wedge rv(-v.dir1, -v.dir2, v.openness);
    if (cone_subset(v, w) || cone_subset(w, v) || cone_subset(rv, w) || cone_subset(w, rv))
        return WedgePairType::Contain;
    if (arcs_cover_halfplane(v, w)) return WedgePairType::Halfplane;
    if (fits_open_halfplane(v, w)) return WedgePairType::Special;
    return WedgePairType::Hard;
}

std::optional<std::pair<int, int>> find_special_pair(const Polygon& p) {
    std::vector<Wedge> ws = polygon_wedges(p);
    int n = static_cast<int>(ws.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (classify_pair(ws[i], ws[j]) == WedgePairType::Special)
                return std::make_pair(i, j);
    return std::nullopt;
}

} // namespace coverdec
