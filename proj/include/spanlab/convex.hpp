#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "spanlab/vec3.hpp"

namespace spanlab {

// Convex vector families W1, W2, W that generate all outer-graph edges and
// critical-path directions. Plain families are full sumsets; striped families
// restrict the sumset to pairs drawn from a common interval ("stripe") so that
// same-stripe vectors are close and cross-stripe vectors are far apart.

inline void require_even_r(std::int64_t r) {
    if (r < 2 || r % 2 != 0) {
        std::ostringstream msg;
        msg << "vector family parameter r must be a positive even integer, got r=" << r;
        throw std::invalid_argument(msg.str());
    }
}

// W1(r) = {(x, 0, x^2) : x in [r/2, r]}, sorted by x.
inline std::vector<Vec3> gen_w1(std::int64_t r) {
    require_even_r(r);
    std::vector<Vec3> out;
    out.reserve(static_cast<std::size_t>(r / 2 + 1));
    for (std::int64_t x = r / 2; x <= r; ++x) out.push_back({x, 0, x * x});
    return out;
}

// W2(r) = {(0, y, y^2) : y in [r/2, r]}, sorted by y.
inline std::vector<Vec3> gen_w2(std::int64_t r) {
    require_even_r(r);
    std::vector<Vec3> out;
    out.reserve(static_cast<std::size_t>(r / 2 + 1));
    for (std::int64_t y = r / 2; y <= r; ++y) out.push_back({0, y, y * y});
    return out;
}

// One stripe interval: the integer points [lo, hi].
struct Interval {
    std::int64_t lo = 0;
    std::int64_t hi = -1;  // empty unless hi >= lo

    std::int64_t size() const { return hi < lo ? 0 : hi - lo + 1; }
    bool contains(std::int64_t v) const { return lo <= v && v <= hi; }
};

// How stripe intervals are laid out inside [r/2, r].
//  strict  - the published interval formulas, which require r divisible by
//            16c^3 so every endpoint is an exact lattice point.
//  relaxed - explicit integer width/spacing knobs, for small instances where
//            the strict widths round down to single points.
struct StripeProfile {
    enum class Kind { strict, relaxed };
    Kind kind = Kind::strict;
    std::int64_t width = 0;    // relaxed only: lattice points per stripe
    std::int64_t spacing = 0;  // relaxed only: distance between stripe starts (0 = auto r/(2c))

    static StripeProfile strict() { return {}; }
    static StripeProfile relaxed(std::int64_t width, std::int64_t spacing = 0) {
        StripeProfile p;
        p.kind = Kind::relaxed;
        p.width = width;
        p.spacing = spacing;
        return p;
    }
};

// c stripe intervals plus the separation numbers actually achieved, which for
// the strict profile differ from the nominal r/(2c) bound by one stripe width.
struct StripeIndexing {
    std::int64_t r = 0;
    std::int64_t c = 0;
    StripeProfile profile;
    std::vector<Interval> intervals;

    std::int64_t max_within_gap = 0;   // max |x-y| over same-stripe points
    std::int64_t min_cross_gap = 0;    // min |x-y| over cross-stripe points (0 if c==1)
    bool cross_gap_meets_paper_bound = false;  // min_cross_gap >= r/(2c)

    std::optional<std::int64_t> stripe_of(std::int64_t v) const {
        for (std::size_t i = 0; i < intervals.size(); ++i)
            if (intervals[i].contains(v)) return static_cast<std::int64_t>(i + 1);
        return std::nullopt;
    }
};

inline StripeIndexing gen_intervals(std::int64_t r, std::int64_t c, StripeProfile profile = {}) {
    require_even_r(r);
    if (c < 1) throw std::invalid_argument("stripe count c must be positive");

    StripeIndexing idx;
    idx.r = r;
    idx.c = c;
    idx.profile = profile;

    if (profile.kind == StripeProfile::Kind::strict) {
        const std::int64_t denom = 16 * c * c * c;
        if (r % denom != 0) {
            std::ostringstream msg;
            msg << "strict stripe profile requires r divisible by 16c^3: r=" << r
                << " is not divisible by " << denom;
            throw std::invalid_argument(msg.str());
        }
        const std::int64_t width = r / denom;
        for (std::int64_t i = 1; i <= c; ++i) {
            const std::int64_t lo = r / 2 + (i - 1) * (r / (2 * c));
            idx.intervals.push_back({lo, lo + width});
        }
    } else {
        const std::int64_t width = profile.width;
        if (width < 1) throw std::invalid_argument("relaxed stripe profile needs width >= 1");
        std::int64_t spacing = profile.spacing;
        if (spacing == 0) spacing = r / (2 * c);
        if (spacing < width) {
            std::ostringstream msg;
            msg << "relaxed stripe spacing " << spacing << " overlaps stripes of width " << width;
            throw std::invalid_argument(msg.str());
        }
        for (std::int64_t i = 1; i <= c; ++i) {
            const std::int64_t lo = r / 2 + (i - 1) * spacing;
            idx.intervals.push_back({lo, lo + width - 1});
        }
    }

    for (const Interval& iv : idx.intervals) {
        if (iv.size() <= 0 || iv.lo < r / 2 || iv.hi > r) {
            std::ostringstream msg;
            msg << "stripe interval [" << iv.lo << "," << iv.hi << "] does not fit in [" << r / 2
                << "," << r << "]";
            throw std::invalid_argument(msg.str());
        }
    }

    idx.max_within_gap = 0;
    for (const Interval& iv : idx.intervals)
        idx.max_within_gap = std::max(idx.max_within_gap, iv.hi - iv.lo);
    if (c > 1) {
        std::int64_t min_gap = idx.intervals[1].lo - idx.intervals[0].hi;
        for (std::size_t i = 1; i + 1 < idx.intervals.size(); ++i)
            min_gap = std::min(min_gap, idx.intervals[i + 1].lo - idx.intervals[i].hi);
        idx.min_cross_gap = min_gap;
        idx.cross_gap_meets_paper_bound = min_gap * 2 * c >= r;
    }
    return idx;
}

// A full vector family. Plain mode: w = w1 + w2 (entire sumset). Striped mode:
// only same-stripe sums enter w, and stripe_of records the stripe of every
// member of w1, w2 and w.
struct VectorFamily {
    std::int64_t r = 0;
    std::optional<std::int64_t> c;  // engaged in striped mode
    std::optional<StripeIndexing> stripes;
    std::vector<Vec3> w1;
    std::vector<Vec3> w2;
    std::vector<Vec3> w;
    std::map<Vec3, std::int64_t> stripe_of;  // striped mode only

    bool striped() const { return c.has_value(); }
};

inline VectorFamily gen_w(std::int64_t r) {
    VectorFamily f;
    f.r = r;
    f.w1 = gen_w1(r);
    f.w2 = gen_w2(r);
    for (const Vec3& a : f.w1)
        for (const Vec3& b : f.w2) f.w.push_back(a + b);
    std::sort(f.w.begin(), f.w.end());
    return f;
}

inline VectorFamily gen_striped_families(std::int64_t r, std::int64_t c,
                                         StripeProfile profile = {}) {
    VectorFamily f;
    f.r = r;
    f.c = c;
    f.stripes = gen_intervals(r, c, profile);
    for (const Interval& iv : f.stripes->intervals) {
        for (std::int64_t v = iv.lo; v <= iv.hi; ++v) {
            f.w1.push_back({v, 0, v * v});
            f.w2.push_back({0, v, v * v});
        }
    }
    std::sort(f.w1.begin(), f.w1.end());
    std::sort(f.w2.begin(), f.w2.end());
    for (const Vec3& v : f.w1) f.stripe_of[v] = *f.stripes->stripe_of(v.x);
    for (const Vec3& v : f.w2) f.stripe_of[v] = *f.stripes->stripe_of(v.y);
    for (const Interval& iv : f.stripes->intervals) {
        for (std::int64_t x = iv.lo; x <= iv.hi; ++x)
            for (std::int64_t y = iv.lo; y <= iv.hi; ++y) {
                Vec3 sum{x, y, x * x + y * y};
                f.w.push_back(sum);
                f.stripe_of[sum] = *f.stripes->stripe_of(x);
            }
    }
    std::sort(f.w.begin(), f.w.end());
    f.w.erase(std::unique(f.w.begin(), f.w.end()), f.w.end());
    return f;
}

// W' = W u (-W) u (W1 - W2) u (W2 - W1), deduplicated, lexicographic order.
inline std::vector<Vec3> assemble_wprime(const VectorFamily& f) {
    std::set<Vec3> acc;
    for (const Vec3& v : f.w) {
        acc.insert(v);
        acc.insert(-v);
    }
    for (const Vec3& a : f.w1)
        for (const Vec3& b : f.w2) {
            acc.insert(a - b);
            acc.insert(b - a);
        }
    return {acc.begin(), acc.end()};
}

// Extreme-point certificate for one family: every w = (x, y, x^2+y^2) in W
// must be the unique maximizer of <(2x, 2y, -1), u> over u in W'.
struct ExtremePointReport {
    struct Violation {
        Vec3 w;
        Vec3 u;
        std::int64_t witness_value = 0;  // <c, w>
        std::int64_t other_value = 0;    // <c, u>
    };
    std::int64_t checked = 0;
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

inline ExtremePointReport certify_extreme_points(const VectorFamily& f) {
    ExtremePointReport report;
    const std::vector<Vec3> wprime = assemble_wprime(f);
    for (const Vec3& w : f.w) {
        const Vec3 witness{2 * w.x, 2 * w.y, -1};
        const std::int64_t target = dot(witness, w);
        for (const Vec3& u : wprime) {
            if (u == w) continue;
            if (dot(witness, u) >= target)
                report.violations.push_back({w, u, target, dot(witness, u)});
        }
        ++report.checked;
    }
    return report;
}

}  // namespace spanlab
