#pragma once

#include <span>
#include <vector>

#include "coverdec/errors.hpp"
#include "coverdec/rational.hpp"

namespace coverdec {

struct Point {
    Rat x, y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }

    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
    Point operator-() const { return {-x, -y}; }
    Point operator*(const Rat& s) const { return {x * s, y * s}; }
};

/// Direction of a ray, stored as a primitive integer vector. Orientation is
/// significant: (1,0) and (-1,0) are different directions.
struct Direction {
    Int dx, dy;

    Direction() : dx(1), dy(0) {}
    Direction(const Rat& rx, const Rat& ry) { normalize(rx, ry); }
    Direction(int rx, int ry) { normalize(Rat(rx), Rat(ry)); }

    Direction operator-() const {
        Direction d;
        d.dx = -dx;
        d.dy = -dy;
        return d;
    }

    bool operator==(const Direction& o) const { return dx == o.dx && dy == o.dy; }
    bool operator!=(const Direction& o) const { return !(*this == o); }

private:
    void normalize(const Rat& rx, const Rat& ry) {
        if (rx == 0 && ry == 0) throw GeometryError("zero direction vector");
        Int a = rat_num(rx) * rat_den(ry);
        Int b = rat_num(ry) * rat_den(rx);
        Int g = boost::multiprecision::gcd(boost::multiprecision::abs(a),
                                           boost::multiprecision::abs(b));
        dx = a / g;
        dy = b / g;
    }
};

inline Int cross(const Direction& a, const Direction& b) { return a.dx * b.dy - a.dy * b.dx; }
inline Int dot(const Direction& a, const Direction& b) { return a.dx * b.dx + a.dy * b.dy; }
inline Rat cross(const Direction& d, const Point& p) { return Rat(d.dx) * p.y - Rat(d.dy) * p.x; }
inline Rat cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

enum class Openness { Open, Closed };

/// Planar cone: the region swept counterclockwise from dir1 to dir2, anchored at
/// an apex supplied separately. The sweep angle lies strictly between 0 and 2*pi
/// and never equals pi, so cross(dir1, dir2) != 0; angle < pi iff the cross
/// product is positive.
struct Wedge {
    Direction dir1, dir2;
    Openness openness = Openness::Open;

    Wedge() = default;
    Wedge(Direction d1, Direction d2, Openness o = Openness::Open)
        : dir1(d1), dir2(d2), openness(o) {
        if (cross(dir1, dir2) == 0)
            throw GeometryError("wedge sides must not be parallel");
    }

    bool small_angle() const { return cross(dir1, dir2) > 0; }

    bool operator==(const Wedge& o) const {
        return dir1 == o.dir1 && dir2 == o.dir2 && openness == o.openness;
    }
};

struct PlacedWedge {
    Wedge wedge;
    Point apex;
};

/// Simple polygon, counterclockwise, no three consecutive collinear vertices.
/// Convexity is not required; concave polygons are valid inputs.
struct Polygon {
    std::vector<Point> vertices;

    bool operator==(const Polygon& o) const { return vertices == o.vertices; }
};

bool wedge_contains(const PlacedWedge& w, const Point& p);

/// Inclusion-minimal translate of `w` whose closure contains all of `pts`.
/// Only defined for wedges of angle < pi.
PlacedWedge minimal_translate(const Wedge& w, std::span<const Point> pts);

/// Validates the polygon invariants and canonicalizes the starting vertex.
Polygon make_polygon(std::vector<Point> vertices);

Polygon reflect_polygon(const Polygon& p);

/// One wedge per vertex, anchored at that vertex, opening into the polygon's
/// interior side. Wedge i spans ccw from the edge toward vertex i+1 to the edge
/// toward vertex i-1.
std::vector<Wedge> polygon_wedges(const Polygon& p, Openness openness = Openness::Open);

bool is_convex(const Polygon& p);

Rat polygon_area2(const Polygon& p); // twice the signed area
Point polygon_centroid(const Polygon& p);

/// Point-in-polygon test; works for concave polygons. Boundary points count as
/// inside only for Closed.
bool polygon_contains(const Polygon& poly, const Point& offset, const Point& p,
                      Openness openness);

/// Exact rational rotation (cos, sin) with cos^2 + sin^2 = 1.
struct Rotation {
    Rat c{1}, s{0};

    static Rotation from_half_tangent(const Rat& t) {
        Rotation r;
        Rat t2 = t * t;
        r.c = (1 - t2) / (1 + t2);
        r.s = 2 * t / (1 + t2);
        return r;
    }

    bool identity() const { return s == 0 && c == 1; }
    Point apply(const Point& p) const { return {c * p.x - s * p.y, s * p.x + c * p.y}; }
    Direction apply(const Direction& d) const {
        return Direction(c * Rat(d.dx) - s * Rat(d.dy), s * Rat(d.dx) + c * Rat(d.dy));
    }
    Rotation inverse() const {
        Rotation r;
        r.c = c;
        r.s = -s;
        return r;
    }
    Rotation compose(const Rotation& then) const {
        Rotation r;
        r.c = then.c * c - then.s * s;
        r.s = then.s * c + then.c * s;
        return r;
    }
};

/// Rotates the points so that no two share a y-coordinate and no two determine
/// a line parallel to a side of any of `ws`, while preserving every strict key
/// order (so every subset cuttable by a translate stays cuttable). Identity when
/// the input is already generic. `preserve_orders = false` skips the quadratic
/// preservation check; callers relying on it must re-verify their results
/// against the unrotated points.
std::pair<Rotation, std::vector<Point>> rotate_to_general_position(
    std::vector<Point> points, std::span<const Wedge> ws, bool preserve_orders = true);

} // namespace coverdec
