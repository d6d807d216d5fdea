#include "coverdec/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>
#include <variant>

#include "coverdec/errors.hpp"

namespace coverdec {

size_t Bitmask::count() const {
    size_t c = 0;
    for (auto w : words) c += std::popcount(w);
    return c;
}

bool Bitmask::subset_of(const Bitmask& o) const {
    for (size_t i = 0; i < words.size(); ++i)
        if (words[i] & ~o.words[i]) return false;
    return true;
}

bool Bitmask::intersects(const Bitmask& o) const {
    for (size_t i = 0; i < words.size(); ++i)
        if (words[i] & o.words[i]) return true;
    return false;
}

Bitmask Bitmask::operator&(const Bitmask& o) const {
    Bitmask r;
    r.words.resize(words.size());
    for (size_t i = 0; i < words.size(); ++i) r.words[i] = words[i] & o.words[i];
    return r;
}

Bitmask Bitmask::operator|(const Bitmask& o) const {
    Bitmask r;
    r.words.resize(words.size());
    for (size_t i = 0; i < words.size(); ++i) r.words[i] = words[i] | o.words[i];
    return r;
}

std::vector<int> Bitmask::indices() const {
    std::vector<int> out;
    for (size_t w = 0; w < words.size(); ++w) {
        std::uint64_t x = words[w];
        while (x) {
            out.push_back(static_cast<int>(w * 64 + std::countr_zero(x)));
            x &= x - 1;
        }
    }
    return out;
}

size_t BitmaskHash::operator()(const Bitmask& m) const {
    size_t h = 1469598103934665603ull;
    for (auto w : m.words) {
        h ^= static_cast<size_t>(w);
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

struct KeyOrder {
    std::vector<Rat> values;   // per point
    std::vector<Rat> distinct; // sorted ascending
    std::vector<int> rank;     // rank of each point's value in `distinct`
};

KeyOrder make_key_order(std::span<const Point> pts, const Direction& d) {
    KeyOrder k;
    k.values.reserve(pts.size());
    for (const Point& p : pts) k.values.push_back(cross(d, p));
    k.distinct = k.values;
    std::sort(k.distinct.begin(), k.distinct.end());
    k.distinct.erase(std::unique(k.distinct.begin(), k.distinct.end()), k.distinct.end());
    k.rank.reserve(pts.size());
    for (const Rat& v : k.values)
        k.rank.push_back(static_cast<int>(
            std::lower_bound(k.distinct.begin(), k.distinct.end(), v) - k.distinct.begin()));
    return k;
}

// Threshold value realizing "key >= distinct[a]" (or "key <= distinct[b]")
// regardless of the wedge's openness: pick a value strictly between the
// adjacent distinct keys on the appropriate side.
Rat threshold_below(const KeyOrder& k, int a) {
    if (a == 0) return k.distinct[0] - 1;
    return (k.distinct[a - 1] + k.distinct[a]) / 2;
}

Rat threshold_above(const KeyOrder& k, int b) {
    int m = static_cast<int>(k.distinct.size());
    if (b == m - 1) return k.distinct[b] + 1;
    return (k.distinct[b] + k.distinct[b + 1]) / 2;
}

Point apex_for(const Wedge& w, const Rat& u, const Rat& v) {
    Rat det(cross(w.dir1, w.dir2));
    Rat ax = (Rat(w.dir2.dx) * u - Rat(w.dir1.dx) * v) / det;
    Rat ay = (Rat(w.dir2.dy) * u - Rat(w.dir1.dy) * v) / det;
    return {ax, ay};
}

} // namespace

CanonicalRangeSet canonical_wedge_ranges(std::span<const Point> pts, const Wedge& w) {
    size_t n = pts.size();
    CanonicalRangeSet out;
    if (n == 0) {
        out.ranges.push_back(CanonicalRange{Bitmask(0), PlacedWedge{w, Point{Rat(0), Rat(0)}}});
        return out;
    }
    KeyOrder U = make_key_order(pts, w.dir1);
    KeyOrder V = make_key_order(pts, w.dir2);
    int mu = static_cast<int>(U.distinct.size());
    int mv = static_cast<int>(V.distinct.size());
    bool small = w.small_angle();

    // ge_u[a] = points with u-rank >= a (ge_u[mu] empty);
    // lt_v[b] = points with v-rank < b (lt_v[0] empty)
    std::vector<Bitmask> ge_u(mu + 1, Bitmask(n)), lt_v(mv + 1, Bitmask(n));
    for (size_t i = 0; i < n; ++i) {
        for (int a = 0; a <= U.rank[i]; ++a) ge_u[a].set(i);
        for (int b = V.rank[i] + 1; b <= mv; ++b) lt_v[b].set(i);
    }

    std::unordered_set<Bitmask, BitmaskHash> seen;
    for (int a = 0; a <= mu; ++a) {
        Rat u_thr = a < mu ? threshold_below(U, a) : U.distinct.back() + 1;
        for (int b = 0; b <= mv; ++b) {
            Rat v_thr = b > 0 ? threshold_above(V, b - 1) : V.distinct.front() - 1;
            Bitmask m = small ? (ge_u[a] & lt_v[b]) : (ge_u[a] | lt_v[b]);
            if (!seen.insert(m).second) continue;
            out.ranges.push_back(
                CanonicalRange{std::move(m), PlacedWedge{w, apex_for(w, u_thr, v_thr)}});
        }
    }
    return out;
}

std::optional<Violation> verify_coloring(std::span<const Point> pts, const Coloring& coloring,
                                         std::span<const WedgeRequirement> requirements) {
    size_t n = pts.size();
    Bitmask red(n), blue(n);
    for (size_t i = 0; i < n; ++i)
        (coloring[i] == Color::Red ? red : blue).set(i);
    for (size_t r = 0; r < requirements.size(); ++r) {
        const auto& req = requirements[r];
        CanonicalRangeSet ranges = canonical_wedge_ranges(pts, req.wedge);
        for (const CanonicalRange& c : ranges.ranges) {
            if (static_cast<long long>(c.subset.count()) < req.min_points) continue;
            if (c.subset.subset_of(red) || c.subset.subset_of(blue))
                return Violation{c.subset, c.representative, r};
        }
    }
    return std::nullopt;
}

std::optional<Violation> verify_anc(std::span<const Point> pts, const Coloring& coloring,
                                    const AncRequirement& req) {
    size_t n = pts.size();
    Bitmask red(n), blue(n);
    for (size_t i = 0; i < n; ++i)
        (coloring[i] == Color::Red ? red : blue).set(i);
    CanonicalRangeSet vr = canonical_wedge_ranges(pts, req.red_wedge);
    for (const CanonicalRange& c : vr.ranges)
        if (static_cast<long long>(c.subset.count()) >= req.red_min && !c.subset.intersects(red))
            return Violation{c.subset, c.representative, 0};
    CanonicalRangeSet wr = canonical_wedge_ranges(pts, req.blue_wedge);
    for (const CanonicalRange& c : wr.ranges)
        if (static_cast<long long>(c.subset.count()) >= req.blue_min && !c.subset.intersects(blue))
            return Violation{c.subset, c.representative, 1};
    return std::nullopt;
}

long long verified_nc_threshold(std::span<const Point> pts, const Coloring& coloring,
                                std::span<const Wedge> ws) {
    size_t n = pts.size();
    Bitmask red(n), blue(n);
    for (size_t i = 0; i < n; ++i)
        (coloring[i] == Color::Red ? red : blue).set(i);
    long long worst = 0;
    for (const Wedge& w : ws) {
        CanonicalRangeSet ranges = canonical_wedge_ranges(pts, w);
        for (const CanonicalRange& c : ranges.ranges)
            if (c.subset.subset_of(red) || c.subset.subset_of(blue))
                worst = std::max(worst, static_cast<long long>(c.subset.count()));
    }
    return worst + 1;
}

std::pair<long long, long long> verified_anc_thresholds(std::span<const Point> pts,
                                                        const Coloring& coloring,
                                                        const Wedge& red_wedge,
                                                        const Wedge& blue_wedge) {
    size_t n = pts.size();
    Bitmask red(n), blue(n);
    for (size_t i = 0; i < n; ++i)
        (coloring[i] == Color::Red ? red : blue).set(i);
    long long worst_red = 0, worst_blue = 0;
    for (const CanonicalRange& c : canonical_wedge_ranges(pts, red_wedge).ranges)
        if (!c.subset.intersects(red))
            worst_red = std::max(worst_red, static_cast<long long>(c.subset.count()));
    for (const CanonicalRange& c : canonical_wedge_ranges(pts, blue_wedge).ranges)
        if (!c.subset.intersects(blue))
            worst_blue = std::max(worst_blue, static_cast<long long>(c.subset.count()));
    return {worst_red + 1, worst_blue + 1};
}

std::variant<long long, Unbounded> min_nc_constant(std::span<const Point> pts,
                                                   std::span<const Wedge> ws) {
    size_t n = pts.size();
    if (n > kMinNcMaxPoints) throw TooLarge("min_nc_constant limited to 20 points");
    if (n == 0) return 1ll;

    // collect all cuttable subsets once, as single words
    std::vector<std::pair<std::uint64_t, long long>> cuts; // mask, size
    std::unordered_set<std::uint64_t> seen;
    for (const Wedge& w : ws) {
        for (const CanonicalRange& c : canonical_wedge_ranges(pts, w).ranges) {
            std::uint64_t m = c.subset.words.empty() ? 0 : c.subset.words[0];
            if (m == 0) continue;
            if (seen.insert(m).second)
                cuts.push_back({m, static_cast<long long>(std::popcount(m))});
        }
    }
    std::sort(cuts.begin(), cuts.end(),
              [](const auto& a, const auto& b) { return a.second > b.second; });

    std::uint64_t full = (std::uint64_t(1) << n) - 1;
    for (long long m = 1; m <= static_cast<long long>(n) + 1; ++m) {
        for (std::uint64_t red = 0; red <= full; ++red) {
            std::uint64_t blue = full & ~red;
            bool ok = true;
            for (const auto& [mask, size] : cuts) {
                if (size < m) break; // sorted by size descending
                if ((mask & ~red) == 0 || (mask & ~blue) == 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) return m;
        }
    }
    return Unbounded{};
}

} // namespace coverdec
