#include "adet/asoe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "adet/rng.hpp"

namespace adet {

namespace {

double dist2(const Point& a, const Point& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

/// Nearest centroid by squared distance; lowest index wins ties.
size_t nearest(const Point& p, const std::vector<Point>& centroids) {
    size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < centroids.size(); ++k) {
        const double d = dist2(p, centroids[k]);
        if (d < best_d) {
            best_d = d;
            best = k;
        }
    }
    return best;
}

std::vector<Point> kmeanspp_init(const std::vector<Point>& pts, int k, Rng& rng) {
    std::vector<Point> centroids;
    centroids.reserve(k);
    centroids.push_back(pts[rng.uniform_index(pts.size())]);
    std::vector<double> d2(pts.size());
    while (static_cast<int>(centroids.size()) < k) {
        double total = 0.0;
        for (size_t i = 0; i < pts.size(); ++i) {
            double d = std::numeric_limits<double>::infinity();
            for (const Point& c : centroids) d = std::min(d, dist2(pts[i], c));
            d2[i] = d;
            total += d;
        }
        if (total <= 0.0) {
            // all points coincide with chosen centers
            centroids.push_back(pts[rng.uniform_index(pts.size())]);
            continue;
        }
        double u = rng.uniform() * total;
        size_t pick = pts.size() - 1;
        for (size_t i = 0; i < pts.size(); ++i) {
            u -= d2[i];
            if (u <= 0.0) {
                pick = i;
                break;
            }
        }
        centroids.push_back(pts[pick]);
    }
    return centroids;
}

struct LloydResult {
    std::vector<Point> centroids;
    std::vector<size_t> assign;
    double sse = 0.0;
};

LloydResult lloyd(const std::vector<Point>& pts, int k, Rng& rng, int max_iters) {
    LloydResult r;
    r.centroids = kmeanspp_init(pts, k, rng);
    r.assign.resize(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) r.assign[i] = nearest(pts[i], r.centroids);

    for (int iter = 0; iter < max_iters; ++iter) {
        // centroid update; empty clusters are dropped
        std::vector<Point> sums(r.centroids.size(), Point{0, 0});
        std::vector<size_t> counts(r.centroids.size(), 0);
        for (size_t i = 0; i < pts.size(); ++i) {
            sums[r.assign[i]].x += pts[i].x;
            sums[r.assign[i]].y += pts[i].y;
            counts[r.assign[i]] += 1;
        }
        std::vector<Point> next;
        next.reserve(r.centroids.size());
        for (size_t c = 0; c < r.centroids.size(); ++c)
            if (counts[c] > 0)
                next.push_back(Point{sums[c].x / counts[c], sums[c].y / counts[c]});

        std::vector<size_t> next_assign(pts.size());
        for (size_t i = 0; i < pts.size(); ++i) next_assign[i] = nearest(pts[i], next);

        const bool stable =
            next.size() == r.centroids.size() && next_assign == r.assign;
        r.centroids = std::move(next);
        r.assign = std::move(next_assign);
        if (stable) break;
    }
    for (size_t i = 0; i < pts.size(); ++i)
        r.sse += dist2(pts[i], r.centroids[r.assign[i]]);
    return r;
}

constexpr int kMaxIters = 100;
constexpr int kRestarts = 4;

}  // namespace

std::vector<Cluster> cluster_positions(const std::vector<Point>& positions, int n,
                                       uint64_t seed) {
    if (n < 1) throw AdetError("cluster count must be >= 1");
    std::vector<Cluster> out;
    if (positions.empty()) return out;

    if (static_cast<int>(positions.size()) <= n) {
        for (size_t i = 0; i < positions.size(); ++i)
            out.push_back(Cluster{static_cast<int>(i), {positions[i]}, positions[i]});
        return out;
    }

    LloydResult best;
    best.sse = std::numeric_limits<double>::infinity();
    for (int r = 0; r < kRestarts; ++r) {
        Rng rng(derive_seed(seed, static_cast<uint64_t>(r)));
        LloydResult cur = lloyd(positions, n, rng, kMaxIters);
        if (cur.sse < best.sse) best = std::move(cur);
    }

    // order clusters by the input index of their first member
    std::vector<int> order(best.centroids.size(), -1);
    int next_id = 0;
    std::vector<std::vector<Point>> members(best.centroids.size());
    for (size_t i = 0; i < positions.size(); ++i) {
        const size_t c = best.assign[i];
        if (order[c] < 0) order[c] = next_id++;
        members[c].push_back(positions[i]);
    }
    out.resize(next_id);
    for (size_t c = 0; c < best.centroids.size(); ++c) {
        if (order[c] < 0) continue;
        Cluster& cl = out[order[c]];
        cl.id = order[c];
        cl.members = std::move(members[c]);
        cl.centroid = best.centroids[c];
    }
    return out;
}

double clusters_sse(const std::vector<Cluster>& clusters) {
    double sse = 0.0;
    for (const auto& c : clusters)
        for (const auto& p : c.members) sse += dist2(p, c.centroid);
    return sse;
}

std::vector<SubRegion> regions_from_clusters(const std::vector<Cluster>& clusters,
                                             const ImageRecord& image,
                                             const AsoeConfig& cfg) {
    if (cfg.pad < 0.0) throw AdetError("pad must be >= 0");
    if (cfg.min_side < 1.0) throw AdetError("min_side must be >= 1");
    std::vector<SubRegion> out;
    out.reserve(clusters.size());
    for (const Cluster& c : clusters) {
        double minx = c.members.front().x, maxx = minx;
        double miny = c.members.front().y, maxy = miny;
        for (const Point& p : c.members) {
            minx = std::min(minx, p.x);
            maxx = std::max(maxx, p.x);
            miny = std::min(miny, p.y);
            maxy = std::max(maxy, p.y);
        }
        double x0 = minx - cfg.pad, x1 = maxx + cfg.pad;
        double y0 = miny - cfg.pad, y1 = maxy + cfg.pad;
        if (x1 - x0 < cfg.min_side) {
            const double grow = (cfg.min_side - (x1 - x0)) / 2.0;
            x0 -= grow;
            x1 += grow;
        }
        if (y1 - y0 < cfg.min_side) {
            const double grow = (cfg.min_side - (y1 - y0)) / 2.0;
            y0 -= grow;
            y1 += grow;
        }
        x0 = std::max(x0, 0.0);
        y0 = std::max(y0, 0.0);
        x1 = std::min(x1, static_cast<double>(image.width));
        y1 = std::min(y1, static_cast<double>(image.height));
        if (x1 <= x0 || y1 <= y0) continue;  // cluster fully outside image

        SubRegion region;
        region.image_id = image.id;
        region.rect = BBox{x0, y0, x1 - x0, y1 - y0};
        region.center = c.centroid;
        region.scale = cfg.fine_input_long_side / std::max(region.rect.w, region.rect.h);
        region.cluster_id = c.id;
        out.push_back(region);
    }
    return out;
}

std::vector<SubRegion> generate_subregions(const ActivationTensor& tensor,
                                           const AsoeConfig& cfg) {
    const ActivationMap map =
        cfg.pre_activated ? activation_map_pre_activated(tensor) : activation_map(tensor);
    const PositionSet positions = filter_positions(map, cfg.gamma);
    const std::vector<Cluster> clusters =
        cluster_positions(positions.positions, cfg.n, cfg.seed);

    const double stride = std::pow(2.0, tensor.layer);
    ImageRecord bounds;
    bounds.id = tensor.image_id;
    bounds.width = static_cast<int>(tensor.width * stride);
    bounds.height = static_cast<int>(tensor.height * stride);
    return regions_from_clusters(clusters, bounds, cfg);
}

}  // namespace adet
