#include "adet/image.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "adet/dataset.hpp"

namespace adet {

Image::Image(int w, int h, Color fill) : width(w), height(h) {
    data.resize(static_cast<size_t>(w) * h * 3);
    for (size_t i = 0; i < data.size(); i += 3) {
        data[i] = fill[0];
        data[i + 1] = fill[1];
        data[i + 2] = fill[2];
    }
}

namespace {

struct IntRect {
    int x0, y0, x1, y1;  // half-open
    bool empty() const { return x1 <= x0 || y1 <= y0; }
};

IntRect clip_to(const BBox& rect, int w, int h) {
    IntRect r;
    r.x0 = std::max(0, static_cast<int>(std::floor(rect.x)));
    r.y0 = std::max(0, static_cast<int>(std::floor(rect.y)));
    r.x1 = std::min(w, static_cast<int>(std::ceil(rect.right())));
    r.y1 = std::min(h, static_cast<int>(std::ceil(rect.bottom())));
    return r;
}

}  // namespace

Image crop(const Image& src, const BBox& rect) {
    const IntRect r = clip_to(rect, src.width, src.height);
    if (r.empty()) throw AdetError("crop rect lies outside the image");
    Image out(r.x1 - r.x0, r.y1 - r.y0);
    for (int y = r.y0; y < r.y1; ++y) {
        const uint8_t* s = src.px(r.x0, y);
        uint8_t* d = out.px(0, y - r.y0);
        std::copy(s, s + 3 * static_cast<size_t>(out.width), d);
    }
    return out;
}

void fill_rect(Image& img, const BBox& rect, Color c) {
    const IntRect r = clip_to(rect, img.width, img.height);
    if (r.empty()) return;
    for (int y = r.y0; y < r.y1; ++y)
        for (int x = r.x0; x < r.x1; ++x) img.set(x, y, c);
}

void draw_rect_outline(Image& img, const BBox& rect, Color c, int thickness) {
    const IntRect r = clip_to(rect, img.width, img.height);
    if (r.empty()) return;
    const int t = std::max(1, thickness);
    fill_rect(img, BBox{static_cast<double>(r.x0), static_cast<double>(r.y0),
                        static_cast<double>(r.x1 - r.x0), static_cast<double>(t)},
              c);
    fill_rect(img, BBox{static_cast<double>(r.x0), static_cast<double>(r.y1 - t),
                        static_cast<double>(r.x1 - r.x0), static_cast<double>(t)},
              c);
    fill_rect(img, BBox{static_cast<double>(r.x0), static_cast<double>(r.y0),
                        static_cast<double>(t), static_cast<double>(r.y1 - r.y0)},
              c);
    fill_rect(img, BBox{static_cast<double>(r.x1 - t), static_cast<double>(r.y0),
                        static_cast<double>(t), static_cast<double>(r.y1 - r.y0)},
              c);
}

void save_ppm(const std::string& path, const Image& img) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw AdetError(path + ": cannot open for writing");
    out << "P6\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.data.data()),
              static_cast<std::streamsize>(img.data.size()));
    if (!out) throw AdetError(path + ": write failed");
}

Image load_ppm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw AdetError(path + ": cannot open image file");
    std::string magic;
    in >> magic;
    if (magic != "P6") throw AdetError(path + ": not a binary PPM (P6) file");
    int w = 0, h = 0, maxval = 0;
    in >> w >> h >> maxval;
    if (!in || w <= 0 || h <= 0 || maxval != 255)
        throw AdetError(path + ": unsupported PPM header");
    in.get();  // single whitespace after header
    Image img(w, h);
    in.read(reinterpret_cast<char*>(img.data.data()),
            static_cast<std::streamsize>(img.data.size()));
    if (static_cast<size_t>(in.gcount()) != img.data.size())
        throw AdetError(path + ": truncated pixel data");
    return img;
}

}  // namespace adet
