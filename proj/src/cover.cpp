#include "coverdec/cover.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "coverdec/errors.hpp"

namespace coverdec {

namespace {

Polygon centered(const Polygon& p) {
    Point c = polygon_centroid(p);
    std::vector<Point> v;
    for (const Point& q : p.vertices) v.push_back(q - c);
    return make_polygon(std::move(v));
}

Rat segment_distance2(const Point& u, const Point& a, const Point& b) {
    Point ab = b - a, au = u - a;
    Rat len2 = ab.x * ab.x + ab.y * ab.y;
    Rat t = (au.x * ab.x + au.y * ab.y) / len2;
    if (t < 0) t = 0;
    if (t > 1) t = 1;
    Point proj{a.x + t * ab.x, a.y + t * ab.y};
    Point d = u - proj;
    return d.x * d.x + d.y * d.y;
}

Rat polygon_diameter_upper(const Polygon& p) {
    Rat best(0);
    for (size_t i = 0; i < p.vertices.size(); ++i)
        for (size_t j = i + 1; j < p.vertices.size(); ++j) {
            Point d = p.vertices[i] - p.vertices[j];
            Rat d2 = d.x * d.x + d.y * d.y;
            if (d2 > best) best = d2;
        }
    return sqrt_upper_bound(best, 20);
}

} // namespace

DualInstance dualize(const CoverInstance& c) {
    DualInstance out;
    out.points = c.centers;
    out.dual_polygon = reflect_polygon(centered(c.polygon));
    return out;
}

GridParams grid_params(const Polygon& p) {
    if (!is_convex(p)) throw NotConvex();
    size_t n = p.vertices.size();
    Rat min_d2(-1);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            // side j runs from vertex j to j+1; adjacent to vertices j and j+1
            if (j == i || (j + 1) % n == i) continue;
            Rat d2 = segment_distance2(p.vertices[i], p.vertices[j], p.vertices[(j + 1) % n]);
            if (min_d2 < 0 || d2 < min_d2) min_d2 = d2;
        }
    }
    GridParams g;
    g.m = sqrt_lower_bound(min_d2, 20);
    g.cell = g.m / 2;
    Rat diam = polygon_diameter_upper(p);
    Rat sum = diam + g.m;
    Rat k_formula = Rat(1420, 113) * sum * sum / (g.m * g.m);
    g.K = rat_ceil(k_formula);
    return g;
}

namespace {

struct CellKey {
    long long x, y;
    bool operator<(const CellKey& o) const { return x < o.x || (x == o.x && y < o.y); }
};

CellKey cell_of(const Point& p, const Rat& cell) {
    return {rat_floor(p.x / cell).convert_to<long long>(),
            rat_floor(p.y / cell).convert_to<long long>()};
}

CoverDecomposition decompose_impl(const CoverInstance& c, int s) {
    if (!is_convex(c.polygon)) throw NotConvex();
    CoverDecomposition out;
    out.class_count = s;
    out.grid = grid_params(c.polygon);
    Polygon dual = reflect_polygon(centered(c.polygon));
    std::vector<Wedge> ws = polygon_wedges(dual, Openness::Open);

    std::map<CellKey, std::vector<int>> buckets;
    for (size_t i = 0; i < c.centers.size(); ++i)
        buckets[cell_of(c.centers[i], out.grid.cell)].push_back(static_cast<int>(i));

    out.classes.assign(c.centers.size(), 0);
    out.verified_threshold = 1;
    out.theoretical_threshold =
        ws.size() >= 2 ? f_internal(Int(s == 2 ? 3 : s), static_cast<int>(ws.size()))
                       : Int(s == 2 ? 3 : s);
    for (auto& [key, members] : buckets) {
        std::vector<Point> pts;
        pts.reserve(members.size());
        for (int i : members) pts.push_back(c.centers[i]);
        long long cell_threshold;
        if (s == 2) {
            SystemColoring sc = color_wedge_system(pts, ws);
            for (size_t l = 0; l < members.size(); ++l)
                out.classes[members[l]] = sc.colors[l] == Color::Red ? 0 : 1;
            cell_threshold = sc.verified_threshold;
        } else {
            SystemMultiColoring mc = color_wedge_system_s(pts, ws, s);
            for (size_t l = 0; l < members.size(); ++l)
                out.classes[members[l]] = mc.classes[l];
            cell_threshold = mc.verified_threshold;
        }
        out.cells.push_back(CellReport{key.x, key.y, members.size(), cell_threshold});
        out.verified_threshold = std::max(out.verified_threshold, cell_threshold);
    }
    out.required_fold = Int(out.verified_threshold) * out.grid.K;
    if (c.fold < out.required_fold) throw FoldTooSmall(out.required_fold);
    return out;
}

} // namespace

CoverDecomposition decompose_cover(const CoverInstance& c) { return decompose_impl(c, 2); }

CoverDecomposition decompose_cover_s(const CoverInstance& c, int s) {
    if (s < 2) throw WrongType("need at least two coverings");
    if (s == 2) return decompose_impl(c, 2);
    return decompose_impl(c, s);
}

namespace {

// canonical line: primitive direction with positive orientation plus offset
struct Line {
    Direction dir;
    Rat offset; // cross(dir, p) == offset on the line

    bool operator<(const Line& o) const {
        if (dir.dx != o.dir.dx) return dir.dx < o.dir.dx;
        if (dir.dy != o.dir.dy) return dir.dy < o.dir.dy;
        return offset < o.offset;
    }
};

Line make_line(const Direction& d_raw, const Rat& offset_raw) {
    Direction d = d_raw;
    Rat offset = offset_raw;
    if (d.dy < 0 || (d.dy == 0 && d.dx < 0)) {
        d = -d;
        offset = -offset;
    }
    return Line{d, offset};
}

std::optional<Point> line_intersection(const Line& a, const Line& b) {
    Int det = cross(a.dir, b.dir);
    if (det == 0) return std::nullopt;
    // cross(a.dir, p) = a.offset, cross(b.dir, p) = b.offset
    Rat px = (Rat(b.dir.dx) * a.offset - Rat(a.dir.dx) * b.offset) / Rat(det);
    Rat py = (Rat(b.dir.dy) * a.offset - Rat(a.dir.dy) * b.offset) / Rat(det);
    return Point{px, py};
}

// all supporting lines of the class translates' edges, plus the region edges,
// keeping only lines that meet the (slightly inflated) region
std::vector<Line> collect_lines(const Polygon& poly, std::span<const Point> centers,
                                std::span<const int> class_members, const Box& region) {
    std::set<Line> lines;
    size_t n = poly.vertices.size();
    auto touches_region = [&](const Line& l) {
        // evaluate cross(dir, corner) - offset at the four corners; a line
        // misses the closed box iff all corners are strictly on one side
        int pos = 0, neg = 0;
        for (const Point& corner :
             {Point{region.xmin, region.ymin}, Point{region.xmax, region.ymin},
              Point{region.xmin, region.ymax}, Point{region.xmax, region.ymax}}) {
            int s = sign(Rat(cross(l.dir, corner) - l.offset));
            if (s >= 0) ++pos;
            if (s <= 0) ++neg;
        }
        return pos > 0 && neg > 0;
    };
    for (int ci : class_members) {
        for (size_t e = 0; e < n; ++e) {
            Point a = poly.vertices[e] + centers[ci];
            Point b = poly.vertices[(e + 1) % n] + centers[ci];
            Point d = b - a;
            Line l = make_line(Direction(d.x, d.y), cross(Direction(d.x, d.y), a));
            if (touches_region(l)) lines.insert(l);
        }
    }
    lines.insert(make_line(Direction(0, 1), cross(Direction(0, 1), Point{region.xmin, Rat(0)})));
    lines.insert(make_line(Direction(0, 1), cross(Direction(0, 1), Point{region.xmax, Rat(0)})));
    lines.insert(make_line(Direction(1, 0), cross(Direction(1, 0), Point{Rat(0), region.ymin})));
    lines.insert(make_line(Direction(1, 0), cross(Direction(1, 0), Point{Rat(0), region.ymax})));
    return {lines.begin(), lines.end()};
}

// bucketed point-in-translate query over one class
struct DepthIndex {
    const Polygon& poly;
    std::span<const Point> centers;
    Rat diam;
    std::map<std::pair<long long, long long>, std::vector<int>> grid;

    DepthIndex(const Polygon& p, std::span<const Point> cs, std::span<const int> members)
        : poly(p), centers(cs) {
        diam = polygon_diameter_upper(p);
        for (int i : members) {
            auto key = std::make_pair(rat_floor(cs[i].x).convert_to<long long>(),
                                      rat_floor(cs[i].y).convert_to<long long>());
            grid[key].push_back(i);
        }
    }

    bool covered(const Point& x) const {
        long long r = rat_ceil(diam).convert_to<long long>() + 1;
        long long cx = rat_floor(x.x).convert_to<long long>();
        long long cy = rat_floor(x.y).convert_to<long long>();
        // ring search outward so near centers are probed first
        for (long long radius = 0; radius <= r; ++radius) {
            for (long long dx = -radius; dx <= radius; ++dx) {
                for (long long dy = -radius; dy <= radius; ++dy) {
                    if (std::max(std::llabs(dx), std::llabs(dy)) != radius) continue;
                    auto it = grid.find({cx + dx, cy + dy});
                    if (it == grid.end()) continue;
                    for (int i : it->second)
                        if (polygon_contains(poly, centers[i], x, Openness::Open)) return true;
                }
            }
        }
        return false;
    }

    Int depth(const Point& x) const {
        long long r = rat_ceil(diam).convert_to<long long>() + 1;
        long long cx = rat_floor(x.x).convert_to<long long>();
        long long cy = rat_floor(x.y).convert_to<long long>();
        Int count = 0;
        for (long long dx = -r; dx <= r; ++dx) {
            for (long long dy = -r; dy <= r; ++dy) {
                auto it = grid.find({cx + dx, cy + dy});
                if (it == grid.end()) continue;
                for (int i : it->second)
                    if (polygon_contains(poly, centers[i], x, Openness::Open)) ++count;
            }
        }
        return count;
    }
};

// Enumerates the witness set strip by strip and feeds each point to `probe`
// until it returns false; returns the first failing witness.
template <typename Probe>
std::optional<Point> scan_witnesses(const std::vector<Line>& lines, const Box& region,
                                    Probe&& probe) {
    // distinct x-coordinates of arrangement vertices inside the region
    std::set<Rat> xs{region.xmin, region.xmax};
    for (size_t i = 0; i < lines.size(); ++i) {
        for (size_t j = i + 1; j < lines.size(); ++j) {
            auto p = line_intersection(lines[i], lines[j]);
            if (!p) continue;
            if (p->x >= region.xmin && p->x <= region.xmax) xs.insert(p->x);
        }
    }
    std::vector<Rat> xcoords(xs.begin(), xs.end());
    std::vector<Rat> probes_x;
    for (size_t i = 0; i < xcoords.size(); ++i) {
        probes_x.push_back(xcoords[i]);
        if (i + 1 < xcoords.size()) probes_x.push_back((xcoords[i] + xcoords[i + 1]) / 2);
    }
    for (const Rat& x : probes_x) {
        std::set<Rat> ys{region.ymin, region.ymax};
        for (const Line& l : lines) {
            // y on the line at this x: cross(dir, (x,y)) = offset
            if (l.dir.dx == 0) continue; // vertical line: no single y
            Rat y = (l.offset + Rat(l.dir.dy) * x) / Rat(l.dir.dx);
            if (y >= region.ymin && y <= region.ymax) ys.insert(y);
        }
        std::vector<Rat> ycoords(ys.begin(), ys.end());
        std::vector<Rat> probes_y;
        for (size_t i = 0; i < ycoords.size(); ++i) {
            probes_y.push_back(ycoords[i]);
            if (i + 1 < ycoords.size()) probes_y.push_back((ycoords[i] + ycoords[i + 1]) / 2);
        }
        for (const Rat& y : probes_y) {
            Point witness{x, y};
            if (!probe(witness)) return witness;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<Point> verify_covering(const Polygon& polygon, std::span<const Point> centers,
                                     std::span<const int> class_members, const Box& region) {
    Polygon poly = centered(polygon);
    std::vector<Line> lines = collect_lines(poly, centers, class_members, region);
    DepthIndex index(poly, centers, class_members);
    return scan_witnesses(lines, region,
                          [&](const Point& x) { return index.covered(x); });
}

Int verify_fold(const CoverInstance& c) {
    Polygon poly = centered(c.polygon);
    std::vector<int> all(c.centers.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    std::vector<Line> lines = collect_lines(poly, c.centers, all, c.region);
    DepthIndex index(poly, c.centers, all);
    Int min_depth(-1);
    scan_witnesses(lines, c.region, [&](const Point& x) {
        Int d = index.depth(x);
        if (min_depth < 0 || d < min_depth) min_depth = d;
        return true;
    });
    return min_depth;
}

CoverInstance build_lattice_cover(const Polygon& polygon, const Box& region, const Int& fold) {
    if (!is_convex(polygon)) throw NotConvex();
    Polygon c = centered(polygon);
    Polygon dual = reflect_polygon(c);
    Rat area = polygon_area2(dual) / 2;
    Rat perim(0);
    size_t n = dual.vertices.size();
    for (size_t i = 0; i < n; ++i) {
        Point d = dual.vertices[(i + 1) % n] - dual.vertices[i];
        perim += sqrt_upper_bound(d.x * d.x + d.y * d.y, 20);
    }
    // lattice pitch 1/q: points inside any translate of dual are at least
    // area*q^2 - perim*q - 1
    Int q(1);
    while (area * q * q - perim * q - 1 < Rat(fold)) ++q;

    Rat margin = polygon_diameter_upper(c) + 1;
    CoverInstance out;
    out.polygon = polygon;
    out.region = region;
    out.fold = fold;
    Int ix_lo = rat_ceil((region.xmin - margin) * q);
    Int ix_hi = rat_floor((region.xmax + margin) * q);
    Int iy_lo = rat_ceil((region.ymin - margin) * q);
    Int iy_hi = rat_floor((region.ymax + margin) * q);
    for (Int ix = ix_lo; ix <= ix_hi; ++ix)
        for (Int iy = iy_lo; iy <= iy_hi; ++iy)
            out.centers.push_back({Rat(ix, q), Rat(iy, q)});
    return out;
}

} // namespace coverdec
