#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "adet/geometry.hpp"

namespace adet {

using Color = std::array<uint8_t, 3>;

/// Interleaved 8-bit RGB raster.
struct Image {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> data;  // 3 * width * height

    Image() = default;
    Image(int w, int h, Color fill = {0, 0, 0});

    uint8_t* px(int x, int y) { return data.data() + 3 * (static_cast<size_t>(y) * width + x); }
    const uint8_t* px(int x, int y) const {
        return data.data() + 3 * (static_cast<size_t>(y) * width + x);
    }
    bool in_bounds(int x, int y) const {
        return x >= 0 && y >= 0 && x < width && y < height;
    }

    void set(int x, int y, Color c) {
        uint8_t* p = px(x, y);
        p[0] = c[0];
        p[1] = c[1];
        p[2] = c[2];
    }
};

/// Integer-aligned crop; the rect is clipped to the image first.
Image crop(const Image& src, const BBox& rect);

void fill_rect(Image& img, const BBox& rect, Color c);
void draw_rect_outline(Image& img, const BBox& rect, Color c, int thickness = 1);

/// Binary PPM (P6). Deterministic byte-for-byte for identical pixels.
void save_ppm(const std::string& path, const Image& img);
Image load_ppm(const std::string& path);

}  // namespace adet
