#include "coverdec/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace coverdec {

bool wedge_contains(const PlacedWedge& w, const Point& p) {
    Point q = p - w.apex;
    Rat s1 = Rat(w.wedge.dir1.dx) * q.y - Rat(w.wedge.dir1.dy) * q.x;
    Rat s2 = Rat(w.wedge.dir2.dx) * q.y - Rat(w.wedge.dir2.dy) * q.x;
    bool open = w.wedge.openness == Openness::Open;
    if (w.wedge.small_angle()) {
        // intersection of the two side halfplanes
        return open ? (s1 > 0 && s2 < 0) : (s1 >= 0 && s2 <= 0);
    }
    // angle > pi: complement of the reversed cone, a union of halfplanes
    return open ? (s1 > 0 || s2 < 0) : (s1 >= 0 || s2 <= 0);
}

PlacedWedge minimal_translate(const Wedge& w, std::span<const Point> pts) {
    if (!w.small_angle()) throw AngleTooLarge();
    if (pts.empty()) throw GeometryError("minimal_translate of empty point set");
    // Keys u(p) = cross(dir1, p), v(p) = cross(dir2, p); the closure of a
    // translate at apex a is { u(p) >= u(a) and v(p) <= v(a) }.
    Rat umin = cross(w.dir1, pts[0]);
    Rat vmax = cross(w.dir2, pts[0]);
    for (const Point& p : pts.subspan(1)) {
        Rat u = cross(w.dir1, p), v = cross(w.dir2, p);
        if (u < umin) umin = u;
        if (v > vmax) vmax = v;
    }
    // Solve cross(dir1, a) = umin, cross(dir2, a) = vmax.
    Rat det(cross(w.dir1, w.dir2));
    Rat ax = (Rat(w.dir2.dx) * umin - Rat(w.dir1.dx) * vmax) / det;
    Rat ay = (Rat(w.dir2.dy) * umin - Rat(w.dir1.dy) * vmax) / det;
    return PlacedWedge{w, Point{ax, ay}};
}

namespace {

bool segments_properly_intersect(const Point& a, const Point& b, const Point& c,
                                 const Point& d) {
    auto orient = [](const Point& p, const Point& q, const Point& r) {
        return sign(cross(q - p, r - p));
    };
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

} // namespace

Rat polygon_area2(const Polygon& p) {
    Rat a(0);
    size_t n = p.vertices.size();
    for (size_t i = 0; i < n; ++i) a += cross(p.vertices[i], p.vertices[(i + 1) % n]);
    return a;
}

Polygon make_polygon(std::vector<Point> vertices) {
    size_t n = vertices.size();
    if (n < 3) throw InvalidPolygon("polygon needs at least 3 vertices");
    std::set<std::pair<std::string, std::string>> seen;
    for (const Point& v : vertices)
        if (!seen.insert({format_rat(v.x), format_rat(v.y)}).second)
            throw InvalidPolygon("repeated polygon vertex");
    Polygon poly{std::move(vertices)};
    if (polygon_area2(poly) < 0) std::reverse(poly.vertices.begin(), poly.vertices.end());
    for (size_t i = 0; i < n; ++i) {
        const Point& a = poly.vertices[i];
        const Point& b = poly.vertices[(i + 1) % n];
        const Point& c = poly.vertices[(i + 2) % n];
        if (cross(b - a, c - b) == 0)
            throw InvalidPolygon("three consecutive collinear vertices");
    }
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
            if (segments_properly_intersect(poly.vertices[i], poly.vertices[(i + 1) % n],
                                            poly.vertices[j], poly.vertices[(j + 1) % n]))
                throw InvalidPolygon("self-intersecting polygon");
        }
    }
    // canonical start: lexicographically smallest vertex
    size_t best = 0;
    for (size_t i = 1; i < n; ++i) {
        const Point &a = poly.vertices[i], &b = poly.vertices[best];
        if (a.x < b.x || (a.x == b.x && a.y < b.y)) best = i;
    }
    std::rotate(poly.vertices.begin(), poly.vertices.begin() + best, poly.vertices.end());
    return poly;
}

Polygon reflect_polygon(const Polygon& p) {
    std::vector<Point> v;
    v.reserve(p.vertices.size());
    for (const Point& q : p.vertices) v.push_back(-q);
    return make_polygon(std::move(v));
}

std::vector<Wedge> polygon_wedges(const Polygon& p, Openness openness) {
    size_t n = p.vertices.size();
    std::vector<Wedge> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        const Point& prev = p.vertices[(i + n - 1) % n];
        const Point& v = p.vertices[i];
        const Point& next = p.vertices[(i + 1) % n];
        Point to_next = next - v, to_prev = prev - v;
        out.emplace_back(Direction(to_next.x, to_next.y), Direction(to_prev.x, to_prev.y),
                         openness);
    }
    return out;
}

bool is_convex(const Polygon& p) {
    size_t n = p.vertices.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& a = p.vertices[i];
        const Point& b = p.vertices[(i + 1) % n];
        const Point& c = p.vertices[(i + 2) % n];
        if (cross(b - a, c - b) <= 0) return false;
    }
    return true;
}

Point polygon_centroid(const Polygon& p) {
    Rat a2 = polygon_area2(p);
    Rat cx(0), cy(0);
    size_t n = p.vertices.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& u = p.vertices[i];
        const Point& v = p.vertices[(i + 1) % n];
        Rat w = cross(u, v);
        cx += (u.x + v.x) * w;
        cy += (u.y + v.y) * w;
    }
    return {cx / (3 * a2), cy / (3 * a2)};
}

bool polygon_contains(const Polygon& poly, const Point& offset, const Point& p,
                      Openness openness) {
    size_t n = poly.vertices.size();
    Point q = p - offset;
    // boundary check first
    for (size_t i = 0; i < n; ++i) {
        const Point& a = poly.vertices[i];
        const Point& b = poly.vertices[(i + 1) % n];
        if (cross(b - a, q - a) == 0) {
            // on the supporting line; inside the segment range?
            Rat lo_x = std::min(a.x, b.x), hi_x = std::max(a.x, b.x);
            Rat lo_y = std::min(a.y, b.y), hi_y = std::max(a.y, b.y);
            if (q.x >= lo_x && q.x <= hi_x && q.y >= lo_y && q.y <= hi_y)
                return openness == Openness::Closed;
        }
    }
    // crossing number with a ray in +x direction; perturb conceptually upward
    // by counting edges half-open in y.
    int crossings = 0;
    for (size_t i = 0; i < n; ++i) {
        Point a = poly.vertices[i], b = poly.vertices[(i + 1) % n];
        if (a.y > b.y) std::swap(a, b);
        if (q.y < a.y || q.y >= b.y) continue;
        if (a.y == b.y) continue;
        // x-coordinate of the edge at height q.y
        Rat t = (q.y - a.y) / (b.y - a.y);
        Rat xh = a.x + t * (b.x - a.x);
        if (xh > q.x) ++crossings;
    }
    return crossings % 2 == 1;
}

namespace {

// True when the keys are pairwise-distinct for every listed direction and for
// the vertical (y) key.
bool keys_generic(std::span<const Point> pts, const std::vector<Direction>& dirs) {
    std::vector<Rat> key(pts.size());
    auto distinct = [&](auto&& f) {
        for (size_t i = 0; i < pts.size(); ++i) key[i] = f(pts[i]);
        std::sort(key.begin(), key.end());
        return std::adjacent_find(key.begin(), key.end()) == key.end();
    };
    if (!distinct([](const Point& p) { return p.y; })) return false;
    for (const Direction& d : dirs)
        if (!distinct([&](const Point& p) { return cross(d, p); })) return false;
    return true;
}

} // namespace

std::pair<Rotation, std::vector<Point>> rotate_to_general_position(
    std::vector<Point> points, std::span<const Wedge> ws, bool preserve_orders) {
    {
        std::vector<Point> sorted = points;
        std::sort(sorted.begin(), sorted.end(), [](const Point& a, const Point& b) {
            return a.x < b.x || (a.x == b.x && a.y < b.y);
        });
        for (size_t i = 0; i + 1 < sorted.size(); ++i)
            if (sorted[i] == sorted[i + 1]) throw DuplicatePoints();
    }

    std::vector<Direction> dirs;
    for (const Wedge& w : ws) {
        dirs.push_back(w.dir1);
        dirs.push_back(w.dir2);
    }

    if (keys_generic(points, dirs)) return {Rotation{}, std::move(points)};

    // Strict key orders must survive the rotation: ties may break but no pair
    // may swap, otherwise a previously cuttable subset could disappear.
    auto order_preserved = [&](const std::vector<Point>& rotated) {
        auto check = [&](auto&& f) {
            for (size_t i = 0; i < points.size(); ++i) {
                for (size_t j = i + 1; j < points.size(); ++j) {
                    int before = sign(Rat(f(points[i]) - f(points[j])));
                    if (before == 0) continue;
                    int after = sign(Rat(f(rotated[i]) - f(rotated[j])));
                    if (after != before) return false;
                }
            }
            return true;
        };
        if (!check([](const Point& p) { return p.y; })) return false;
        for (const Direction& d : dirs)
            if (!check([&](const Point& p) { return cross(d, p); })) return false;
        return true;
    };

    for (int k = 10; k < 200; ++k) {
        Rotation rot = Rotation::from_half_tangent(Rat(1, Int(1) << k));
        std::vector<Point> rotated;
        rotated.reserve(points.size());
        for (const Point& p : points) rotated.push_back(rot.apply(p));
        if (!keys_generic(rotated, dirs)) continue;
        if (preserve_orders && !order_preserved(rotated)) continue;
        return {rot, std::move(rotated)};
    }
    throw GeometryError("could not reach general position by rational rotation");
}

} // namespace coverdec
