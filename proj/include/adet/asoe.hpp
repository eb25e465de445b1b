#pragma once

#include <cstdint>
#include <vector>

#include "adet/heatmap.hpp"

namespace adet {

struct Cluster {
    int id = 0;
    std::vector<Point> members;  // never empty
    Point centroid;              // arithmetic mean of members
};

/// Image crop proposed for fine-grained detection. `scale` is the factor
/// the crop would be enlarged by before re-detection (recorded only; the
/// external detector resamples).
struct SubRegion {
    int64_t image_id = 0;
    BBox rect;
    Point center;  // generating cluster centroid, original-image pixels
    double scale = 1.0;
    int cluster_id = 0;
};

struct AsoeConfig {
    int layer = 3;
    double gamma = 0.5;
    int n = 4;  // max number of subregions
    double pad = 16.0;
    double min_side = 64.0;
    double fine_input_long_side = 1333.0;
    uint64_t seed = 0;
    bool pre_activated = false;
};

/// Seeded k-means++ over interest positions. Returns at most n clusters;
/// |T| <= n degrades to singleton clusters. Clusters are ordered by their
/// first member's position in the input and carry that order as id.
/// Identical (positions, n, seed) give identical output.
std::vector<Cluster> cluster_positions(const std::vector<Point>& positions, int n,
                                       uint64_t seed);

/// Sum of squared distances from each member to its cluster centroid.
double clusters_sse(const std::vector<Cluster>& clusters);

/// Bounding box of each cluster's members, expanded by pad per side,
/// grown symmetrically to min_side per axis, then clipped to the image.
std::vector<SubRegion> regions_from_clusters(const std::vector<Cluster>& clusters,
                                             const ImageRecord& image,
                                             const AsoeConfig& cfg);

/// Full pipeline: activation map -> threshold -> cluster -> crop.
/// Image bounds are inferred from the tensor grid (W*2^l x H*2^l).
std::vector<SubRegion> generate_subregions(const ActivationTensor& tensor,
                                           const AsoeConfig& cfg);

}  // namespace adet
