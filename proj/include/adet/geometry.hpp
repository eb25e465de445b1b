#pragma once

#include <algorithm>
#include <cmath>
#include <optional>

namespace adet {

/// Axis-aligned box in pixel coordinates, COCO convention:
/// (x, y) is the top-left corner, w/h extend right/down.
struct BBox {
    double x = 0.0;
    double y = 0.0;
    double w = 0.0;
    double h = 0.0;

    double right() const { return x + w; }
    double bottom() const { return y + h; }
    double area() const { return w * h; }
    double cx() const { return x + 0.5 * w; }
    double cy() const { return y + 0.5 * h; }

    bool operator==(const BBox& o) const {
        return x == o.x && y == o.y && w == o.w && h == o.h;
    }
};

inline bool box_valid(const BBox& b) {
    return std::isfinite(b.x) && std::isfinite(b.y) && std::isfinite(b.w) &&
           std::isfinite(b.h) && b.w > 0.0 && b.h > 0.0;
}

/// Intersection of two boxes; empty when they do not overlap.
inline std::optional<BBox> intersect(const BBox& a, const BBox& b) {
    const double x0 = std::max(a.x, b.x);
    const double y0 = std::max(a.y, b.y);
    const double x1 = std::min(a.right(), b.right());
    const double y1 = std::min(a.bottom(), b.bottom());
    if (x1 <= x0 || y1 <= y0) return std::nullopt;
    return BBox{x0, y0, x1 - x0, y1 - y0};
}

/// Intersection over union. 0 when disjoint, 1 for identical boxes.
inline double iou(const BBox& a, const BBox& b) {
    const auto inter = intersect(a, b);
    if (!inter) return 0.0;
    const double ia = inter->area();
    return ia / (a.area() + b.area() - ia);
}

/// Clip a box to [0,width]x[0,height]. Empty result is a signal value,
/// not an error: fully-outside boxes simply vanish.
inline std::optional<BBox> clamp_box(const BBox& b, double width, double height) {
    return intersect(b, BBox{0.0, 0.0, width, height});
}

enum class SizeBucket { small, medium, large };

/// COCO-style object size partition. Boundary areas 32^2 and 96^2 both
/// map to medium; this is the single authority used by eval and sim.
inline SizeBucket size_bucket(double area) {
    if (area < 32.0 * 32.0) return SizeBucket::small;
    if (area > 96.0 * 96.0) return SizeBucket::large;
    return SizeBucket::medium;
}

inline const char* size_bucket_name(SizeBucket b) {
    switch (b) {
        case SizeBucket::small: return "small";
        case SizeBucket::medium: return "medium";
        default: return "large";
    }
}

}  // namespace adet
