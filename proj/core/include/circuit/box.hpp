#pragma once

#include <algorithm>
#include <cstdint>
#include <tuple>

namespace circuit {

/// Axis-aligned box in pixel coordinates, top-left origin.
struct BBox {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;

    std::int64_t area() const { return std::int64_t(w) * h; }
    int right() const { return x + w; }   // exclusive
    int bottom() const { return y + h; }  // exclusive

    bool operator==(const BBox&) const = default;
    auto operator<=>(const BBox& o) const {
        return std::tie(x, y, w, h) <=> std::tie(o.x, o.y, o.w, o.h);
    }
};

/// Smallest box containing both a and b.
inline BBox union_box(const BBox& a, const BBox& b) {
    const int x0 = std::min(a.x, b.x);
    const int y0 = std::min(a.y, b.y);
    const int x1 = std::max(a.right(), b.right());
    const int y1 = std::max(a.bottom(), b.bottom());
    return {x0, y0, x1 - x0, y1 - y0};
}

inline std::int64_t intersection_area(const BBox& a, const BBox& b) {
    const int iw = std::min(a.right(), b.right()) - std::max(a.x, b.x);
    const int ih = std::min(a.bottom(), b.bottom()) - std::max(a.y, b.y);
    if (iw <= 0 || ih <= 0) return 0;
    return std::int64_t(iw) * ih;
}

/// Intersection over union. 1.0 iff the boxes are identical, 0.0 if disjoint.
inline double overlap_rate(const BBox& a, const BBox& b) {
    const std::int64_t inter = intersection_area(a, b);
    const std::int64_t uni = a.area() + b.area() - inter;
    if (uni <= 0) return 0.0;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

/// True if inner lies entirely within outer.
inline bool contains(const BBox& outer, const BBox& inner) {
    return inner.x >= outer.x && inner.y >= outer.y &&
           inner.right() <= outer.right() && inner.bottom() <= outer.bottom();
}

} // namespace circuit
