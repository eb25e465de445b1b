#include "adet/dataset.hpp"

#include <cmath>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace adet {

const ImageRecord* DatasetIndex::find_image(int64_t id) const {
    for (const auto& im : images)
        if (im.id == id) return &im;
    return nullptr;
}

const Category* DatasetIndex::find_category(int id) const {
    for (const auto& c : categories)
        if (c.id == id) return &c;
    return nullptr;
}

std::map<int, int64_t> DatasetIndex::per_class_counts() const {
    std::map<int, int64_t> counts;
    for (const auto& c : categories) counts[c.id] = 0;
    for (const auto& a : annotations) counts[a.category_id] += 1;
    return counts;
}

void DatasetIndex::validate() const {
    std::ostringstream bad;
    int bad_count = 0;
    auto complain = [&](const std::string& what) {
        if (bad_count++) bad << "; ";
        bad << what;
    };

    std::unordered_map<int64_t, const ImageRecord*> by_id;
    for (const auto& im : images) {
        if (im.width <= 0 || im.height <= 0)
            complain("image " + std::to_string(im.id) + " has non-positive size");
        if (!by_id.emplace(im.id, &im).second)
            complain("duplicate image id " + std::to_string(im.id));
    }
    std::unordered_set<int> cat_ids;
    for (const auto& c : categories)
        if (!cat_ids.insert(c.id).second)
            complain("duplicate category id " + std::to_string(c.id));

    std::unordered_set<int64_t> ann_ids;
    for (const auto& a : annotations) {
        const std::string tag = "annotation " + std::to_string(a.id);
        if (!ann_ids.insert(a.id).second) complain("duplicate " + tag + " id");
        auto it = by_id.find(a.image_id);
        if (it == by_id.end()) {
            complain(tag + " references unknown image " + std::to_string(a.image_id));
            continue;
        }
        if (!cat_ids.count(a.category_id))
            complain(tag + " references unknown category " + std::to_string(a.category_id));
        if (!box_valid(a.bbox)) {
            complain(tag + " has a degenerate or non-finite bbox");
            continue;
        }
        const ImageRecord& im = *it->second;
        if (a.bbox.x < 0 || a.bbox.y < 0 || a.bbox.right() > im.width ||
            a.bbox.bottom() > im.height)
            complain(tag + " bbox exceeds image bounds");
        const double expect = a.bbox.area();
        if (std::abs(a.area - expect) > 1e-9 * std::max(1.0, expect))
            complain(tag + " area " + std::to_string(a.area) + " != w*h " +
                     std::to_string(expect));
    }
    if (bad_count) throw AdetError("dataset validation failed: " + bad.str());
}

bool det_before(const Detection& a, const Detection& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.image_id != b.image_id) return a.image_id < b.image_id;
    if (a.bbox.x != b.bbox.x) return a.bbox.x < b.bbox.x;
    if (a.bbox.y != b.bbox.y) return a.bbox.y < b.bbox.y;
    if (a.bbox.w != b.bbox.w) return a.bbox.w < b.bbox.w;
    if (a.bbox.h != b.bbox.h) return a.bbox.h < b.bbox.h;
    return a.category_id < b.category_id;
}

}  // namespace adet
