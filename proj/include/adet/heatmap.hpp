#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adet/dataset.hpp"

namespace adet {

/// Multi-channel feature-map logits exported from a detector's
/// classification head at pyramid level `layer` (stride 2^layer).
struct ActivationTensor {
    int layer = 3;
    int channels = 0;
    int height = 0;
    int width = 0;
    int64_t image_id = 0;
    /// channel-major, row-major within channel; length = C*H*W
    std::vector<float> data;

    float at(int c, int i, int j) const {
        return data[(static_cast<size_t>(c) * height + i) * width + j];
    }
    float& at(int c, int i, int j) {
        return data[(static_cast<size_t>(c) * height + i) * width + j];
    }
};

/// Position-wise map of per-cell probabilities in [0,1].
struct ActivationMap {
    int height = 0;
    int width = 0;
    int layer = 3;
    int64_t image_id = 0;
    std::vector<double> values;  // row-major, length H*W

    double at(int i, int j) const { return values[static_cast<size_t>(i) * width + j]; }
};

struct Point {
    double x = 0.0;
    double y = 0.0;
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

/// Interest positions in original-image pixels; every coordinate is a
/// nonnegative multiple of 2^layer.
struct PositionSet {
    std::vector<Point> positions;
    int layer = 3;
    int64_t image_id = 0;
};

/// Mean of channel-wise sigmoid over the tensor. The sigmoid is evaluated
/// in the branch-stable form so huge logits do not overflow.
ActivationMap activation_map(const ActivationTensor& tensor);

/// Channel mean without the sigmoid, for detectors that export
/// probabilities directly. Rejects values outside [0,1].
ActivationMap activation_map_pre_activated(const ActivationTensor& tensor);

/// Keep cells with value strictly above gamma and map grid index (i,j)
/// to pixel (j*2^l, i*2^l), row-major order.
PositionSet filter_positions(const ActivationMap& map, double gamma);

/// "ADHM v1" heatmap container (little-endian):
///   magic 'ADHM', u8 version=1, u8 layer, u32 image_id, u32 C, u32 H,
///   u32 W, then C*H*W float32 values, channel-major.
/// Loaders reject wrong magic/version, non-finite values and short files,
/// naming the byte offset of the problem.
ActivationTensor load_adhm(const std::string& path);
void save_adhm(const std::string& path, const ActivationTensor& tensor);

}  // namespace adet
