#include "coverdec/witness.hpp"

#include <algorithm>
#include <random>

#include "coverdec/errors.hpp"
#include "coverdec/oracle.hpp"

namespace coverdec {

namespace {

Direction interior_dir(const Wedge& w) {
    return Direction(Rat(w.dir1.dx + w.dir2.dx), Rat(w.dir1.dy + w.dir2.dy));
}

Point dir_point(const Direction& d) { return Point{Rat(d.dx), Rat(d.dy)}; }

bool in_closed(const Wedge& w, const Direction& d) { return cone_contains_dir(w, d); }

// interior direction of `a` outside the closure of `b`; exists whenever a is
// not contained in b
Direction interior_dir_avoiding(const Wedge& a, const Wedge& b) {
    for (int j = 0; j < 62; ++j) {
        Int m = Int(1) << j;
        Direction c1(Rat(m * a.dir1.dx + a.dir2.dx), Rat(m * a.dir1.dy + a.dir2.dy));
        if (cone_contains_dir(a, c1, true) && !in_closed(b, c1)) return c1;
        Direction c2(Rat(a.dir1.dx + m * a.dir2.dx), Rat(a.dir1.dy + m * a.dir2.dy));
        if (cone_contains_dir(a, c2, true) && !in_closed(b, c2)) return c2;
    }
    throw NotSpecialPair();
}

struct Block {
    std::vector<Point> pts;
    std::vector<Point> v_apexes;
    std::vector<Point> w_apexes;
};

Point scale_shift(const Point& x, const Point& center, const Int& q) {
    return {center.x + x.x / q, center.y + x.y / q};
}

bool counts_exact(const std::vector<Point>& pts, const std::vector<Point>& apexes,
                  const Wedge& wedge, size_t expected) {
    for (const Point& a : apexes) {
        size_t c = 0;
        for (const Point& p : pts)
            if (wedge_contains({wedge, a}, p)) ++c;
        if (c != expected) return false;
    }
    return true;
}

struct Builder {
    Wedge v, w;
    Direction dv, dw;    // interior of one wedge, outside the other
    Rat sep_t;           // separation scale: +-(t*dv - dw) avoids both cones
    Direction chain_v;   // +-chain_v outside closure(v), for the S(1,l) base
    Direction chain_w;   // +-chain_w outside closure(w), for the S(k,1) base

    Block build(int k, int l) const {
        if (k == 1 && l == 1) {
            Block b;
            b.pts.push_back({Rat(0), Rat(0)});
            b.v_apexes.push_back(dir_point(interior_dir(v)) * Rat(-1, 8));
            b.w_apexes.push_back(dir_point(interior_dir(w)) * Rat(-1, 8));
            return b;
        }
        if (l == 1 && k > 1) {
            ChainOut c = chain(k, v, w, chain_w);
            Block b;
            b.pts = std::move(c.pts);
            b.v_apexes = std::move(c.full_apexes);
            b.w_apexes = std::move(c.single_apexes);
            return b;
        }
        if (k == 1 && l > 1) {
            ChainOut c = chain(l, w, v, chain_v);
            Block b;
            b.pts = std::move(c.pts);
            b.v_apexes = std::move(c.single_apexes);
            b.w_apexes = std::move(c.full_apexes);
            return b;
        }
        Block a = build(k - 1, l);
        Block b = build(k, l - 1);
        Point ca = dir_point(dv) * -sep_t;
        Point cb = dir_point(dw) * Rat(-1);
        for (int iter = 2; iter < 64; ++iter) {
            Int q = Int(1) << iter;
            Block out;
            out.pts.push_back({Rat(0), Rat(0)});
            for (const Point& p : a.pts) out.pts.push_back(scale_shift(p, ca, q));
            for (const Point& p : b.pts) out.pts.push_back(scale_shift(p, cb, q));
            for (const Point& p : a.v_apexes) out.v_apexes.push_back(scale_shift(p, ca, q));
            for (const Point& p : b.v_apexes) out.v_apexes.push_back(scale_shift(p, cb, q));
            for (const Point& p : a.w_apexes) out.w_apexes.push_back(scale_shift(p, ca, q));
            for (const Point& p : b.w_apexes) out.w_apexes.push_back(scale_shift(p, cb, q));
            if (counts_exact(out.pts, out.v_apexes, v, static_cast<size_t>(k)) &&
                counts_exact(out.pts, out.w_apexes, w, static_cast<size_t>(l)))
                return out;
        }
        throw VerificationFailed("witness separation did not stabilize");
    }

    struct ChainOut {
        std::vector<Point> pts;
        std::vector<Point> full_apexes;   // one translate of `full` with all k points
        std::vector<Point> single_apexes; // one translate of `single` per point
    };

    // k collinear points along d, each alone in a translate of `single`, all of
    // them together in exactly one translate of `full`. Requires that neither
    // d nor -d lies in the closure of `single`.
    ChainOut chain(int k, const Wedge& full, const Wedge& single, const Direction& d) const {
        ChainOut out;
        for (int i = 0; i < k; ++i) out.pts.push_back(dir_point(d) * Rat(i, 1));
        PlacedWedge mt = minimal_translate(full, out.pts);
        Point full_apex = mt.apex - dir_point(interior_dir(full)) * Rat(1, 8);
        for (int iter = 3; iter < 64; ++iter) {
            Rat eps(1, Int(1) << iter);
            std::vector<Point> singles;
            for (const Point& p : out.pts)
                singles.push_back(p - dir_point(interior_dir(single)) * eps);
            if (counts_exact(out.pts, singles, single, 1) &&
                counts_exact(out.pts, {full_apex}, full, static_cast<size_t>(k))) {
                out.full_apexes = {full_apex};
                out.single_apexes = std::move(singles);
                return out;
            }
        }
        throw VerificationFailed("witness chain did not stabilize");
    }
};

Rat find_separation(const Wedge& v, const Wedge& w, const Direction& dv,
                    const Direction& dw) {
    auto bad = [&](const Rat& tx, const Rat& ty) {
        Direction d(tx, ty);
        Direction nd = -d;
        return in_closed(v, d) || in_closed(w, d) || in_closed(v, nd) || in_closed(w, nd);
    };
    for (int j = 0; j < 62; ++j) {
        for (const Rat& t : {Rat(Int(1) << j), Rat(1, Int(1) << j)}) {
            Rat dx = t * dv.dx - dw.dx;
            Rat dy = t * dv.dy - dw.dy;
            if (dx == 0 && dy == 0) continue;
            if (!bad(dx, dy)) return t;
        }
    }
    throw VerificationFailed("no separation direction for the Special pair");
}

} // namespace

WitnessInstance construct_witness(const Wedge& v, const Wedge& w, int k, int l) {
    if (k < 1 || l < 1) throw GeometryError("witness orders must be positive");
    if (classify_pair(v, w) != WedgePairType::Special) throw NotSpecialPair();

    Builder b;
    b.v = v;
    b.w = w;
    b.dv = interior_dir_avoiding(v, w);
    b.dw = interior_dir_avoiding(w, v);
    b.sep_t = find_separation(v, w, b.dv, b.dw);
    b.chain_w = Direction(Rat(w.dir2.dx - w.dir1.dx), Rat(w.dir2.dy - w.dir1.dy));
    b.chain_v = Direction(Rat(v.dir2.dx - v.dir1.dx), Rat(v.dir2.dy - v.dir1.dy));

    Block blk = b.build(k, l);
    WitnessInstance out;
    out.k = k;
    out.l = l;
    out.v = v;
    out.w = w;
    out.points = std::move(blk.pts);
    for (const Point& a : blk.v_apexes) out.v_translates.push_back({v, a});
    for (const Point& a : blk.w_apexes) out.w_translates.push_back({w, a});

    // exact-count and separation assertions
    for (const PlacedWedge& t : out.v_translates) {
        size_t c = 0;
        for (const Point& p : out.points) c += wedge_contains(t, p);
        if (c != static_cast<size_t>(k))
            throw VerificationFailed("v-translate with wrong cardinality");
    }
    for (const PlacedWedge& t : out.w_translates) {
        size_t c = 0;
        for (const Point& p : out.points) c += wedge_contains(t, p);
        if (c != static_cast<size_t>(l))
            throw VerificationFailed("w-translate with wrong cardinality");
    }
    return out;
}

WitnessCertificate certify_indecomposable(const WitnessInstance& wi) {
    size_t n = wi.points.size();
    if (n > kCertifyMaxPoints) throw TooLarge("certification capped at 25 points");

    std::vector<std::uint32_t> v_masks, w_masks;
    auto mask_of = [&](const PlacedWedge& t) {
        std::uint32_t m = 0;
        for (size_t i = 0; i < n; ++i)
            if (wedge_contains(t, wi.points[i])) m |= std::uint32_t(1) << i;
        return m;
    };
    for (const PlacedWedge& t : wi.v_translates) v_masks.push_back(mask_of(t));
    for (const PlacedWedge& t : wi.w_translates) w_masks.push_back(mask_of(t));

    WitnessCertificate cert;
    std::uint64_t total = std::uint64_t(1) << n;
    cert.colorings_checked = total;
    bool keep_table = n <= 22;
    if (keep_table) cert.witness_table.resize(total);
    for (std::uint64_t red = 0; red < total; ++red) {
        int found = -1;
        for (size_t t = 0; t < v_masks.size() && found < 0; ++t)
            if ((v_masks[t] & ~red) == 0) found = static_cast<int>(t);
        if (found < 0) {
            std::uint64_t blue = ~red & (total - 1);
            for (size_t t = 0; t < w_masks.size() && found < 0; ++t)
                if ((w_masks[t] & ~blue) == 0) found = static_cast<int>(t) + 128;
        }
        if (found < 0)
            throw CounterexampleFound("a coloring defeats the witness construction");
        if (keep_table) cert.witness_table[red] = static_cast<std::uint8_t>(found);
    }
    cert.complete = true;
    return cert;
}

std::optional<Coloring> good_coloring_exists(std::span<const Point> pts, const Wedge& v,
                                             const Wedge& w, int k, std::uint64_t seed) {
    size_t n = pts.size();
    if (n == 0) return Coloring{};
    if (n > 62) throw TooLarge("good coloring search capped at 62 points");

    std::vector<std::pair<std::uint64_t, int>> cuts;
    for (const Wedge* wedge : {&v, &w}) {
        for (const CanonicalRange& c : canonical_wedge_ranges(pts, *wedge).ranges) {
            if (static_cast<int>(c.subset.count()) < k) continue;
            cuts.push_back({c.subset.words[0], static_cast<int>(c.subset.count())});
        }
    }
    std::uint64_t full = (std::uint64_t(1) << n) - 1;
    auto good = [&](std::uint64_t red) {
        for (auto [m, sz] : cuts) {
            (void)sz;
            if ((m & ~red) == 0 || (m & red) == 0) return false;
        }
        return true;
    };
    auto to_coloring = [&](std::uint64_t red) {
        Coloring c(n, Color::Blue);
        for (size_t i = 0; i < n; ++i)
            if ((red >> i) & 1) c[i] = Color::Red;
        return c;
    };
    std::mt19937_64 rng(seed);
    for (int tries = 0; tries < 20000; ++tries) {
        std::uint64_t red = rng() & full;
        if (good(red)) return to_coloring(red);
    }
    if (n <= 22) {
        for (std::uint64_t red = 0; red <= full; ++red)
            if (good(red)) return to_coloring(red);
    }
    return std::nullopt;
}

WitnessInstance polygon_witness(const Polygon& p, int k) {
    auto special = find_special_pair(p);
    if (!special) throw NoSpecialPair();
    Polygon dual = reflect_polygon(p);
    auto dual_special = find_special_pair(dual);
    if (!dual_special) throw NoSpecialPair();
    auto ws = polygon_wedges(dual);
    int vi = dual_special->first, wi = dual_special->second;

    WitnessInstance inst = construct_witness(ws[vi], ws[wi], k, k);
    inst.polygon = dual;
    inst.v_vertex = vi;
    inst.w_vertex = wi;

    // shrink until every wedge translate, extended to the full polygon
    // translate anchored at the same vertex, holds exactly the same points
    auto matches = [&](const WitnessInstance& cand) {
        auto check = [&](const std::vector<PlacedWedge>& translates, int vertex) {
            for (const PlacedWedge& t : translates) {
                Point offset = t.apex - dual.vertices[vertex];
                for (const Point& q : cand.points) {
                    bool in_wedge = wedge_contains(t, q);
                    bool in_poly = polygon_contains(dual, offset, q, Openness::Open);
                    if (in_wedge != in_poly) return false;
                }
            }
            return true;
        };
        return check(cand.v_translates, vi) && check(cand.w_translates, wi);
    };
    for (int iter = 0; iter < 64; ++iter) {
        if (matches(inst)) return inst;
        for (Point& q : inst.points) q = q * Rat(1, 2);
        for (PlacedWedge& t : inst.v_translates) t.apex = t.apex * Rat(1, 2);
        for (PlacedWedge& t : inst.w_translates) t.apex = t.apex * Rat(1, 2);
    }
    throw VerificationFailed("polygon witness scaling did not stabilize");
}

} // namespace coverdec
