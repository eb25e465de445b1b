#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "adet/geometry.hpp"

namespace adet {

/// Error type thrown by loaders and validators. Messages carry enough
/// context (file, field, offending id) to act on from a CLI exit line.
struct AdetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Detection {
    BBox bbox;
    int category_id = 0;
    double score = 0.0;
    int64_t image_id = 0;
    /// Index into a subregion manifest; -1 for coarse/global detections.
    int region_index = -1;
};

struct Annotation {
    int64_t id = 0;
    BBox bbox;
    int category_id = 0;
    int64_t image_id = 0;
    double area = 0.0;
};

struct ImageRecord {
    int64_t id = 0;
    int width = 0;
    int height = 0;
    std::string file_path;
};

struct Category {
    int id = 0;
    std::string name;
    bool is_tail = false;
};

/// In-memory COCO-subset dataset. Validation happens on construction via
/// `validate()`; loaders reject rather than repair bad annotations.
struct DatasetIndex {
    std::vector<ImageRecord> images;
    std::vector<Annotation> annotations;
    std::vector<Category> categories;

    const ImageRecord* find_image(int64_t id) const;
    const Category* find_category(int id) const;
    std::map<int, int64_t> per_class_counts() const;

    /// Checks referential integrity, bbox validity and area consistency.
    /// Throws AdetError listing every offender.
    void validate() const;
};

/// Total order on detections used everywhere a deterministic ranking is
/// needed (NMS ties, evaluation sort, output files): score descending,
/// then image id, box x, y, w, h, category ascending.
bool det_before(const Detection& a, const Detection& b);

}  // namespace adet
