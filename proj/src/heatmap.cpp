#include "adet/heatmap.hpp"

#include <cmath>
#include <cstring>
#include <fstream>

namespace adet {

namespace {

double stable_sigmoid(double x) {
    if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

void check_tensor(const ActivationTensor& t) {
    if (t.channels < 1 || t.height < 1 || t.width < 1)
        throw AdetError("activation tensor has empty dimensions");
    const size_t expect =
        static_cast<size_t>(t.channels) * t.height * t.width;
    if (t.data.size() != expect)
        throw AdetError("activation tensor data length " +
                        std::to_string(t.data.size()) + " != C*H*W " +
                        std::to_string(expect));
}

}  // namespace

ActivationMap activation_map(const ActivationTensor& tensor) {
    check_tensor(tensor);
    ActivationMap map;
    map.height = tensor.height;
    map.width = tensor.width;
    map.layer = tensor.layer;
    map.image_id = tensor.image_id;
    map.values.assign(static_cast<size_t>(tensor.height) * tensor.width, 0.0);
    const double inv_c = 1.0 / tensor.channels;
    for (int c = 0; c < tensor.channels; ++c)
        for (int i = 0; i < tensor.height; ++i)
            for (int j = 0; j < tensor.width; ++j)
                map.values[static_cast<size_t>(i) * tensor.width + j] +=
                    stable_sigmoid(tensor.at(c, i, j)) * inv_c;
    return map;
}

ActivationMap activation_map_pre_activated(const ActivationTensor& tensor) {
    check_tensor(tensor);
    ActivationMap map;
    map.height = tensor.height;
    map.width = tensor.width;
    map.layer = tensor.layer;
    map.image_id = tensor.image_id;
    map.values.assign(static_cast<size_t>(tensor.height) * tensor.width, 0.0);
    const double inv_c = 1.0 / tensor.channels;
    for (int c = 0; c < tensor.channels; ++c)
        for (int i = 0; i < tensor.height; ++i)
            for (int j = 0; j < tensor.width; ++j) {
                const double v = tensor.at(c, i, j);
                if (v < 0.0 || v > 1.0)
                    throw AdetError(
                        "pre-activated tensor value " + std::to_string(v) +
                        " outside [0,1] at (c=" + std::to_string(c) +
                        ",i=" + std::to_string(i) + ",j=" + std::to_string(j) + ")");
                map.values[static_cast<size_t>(i) * tensor.width + j] += v * inv_c;
            }
    return map;
}

PositionSet filter_positions(const ActivationMap& map, double gamma) {
    if (!(gamma > 0.0 && gamma < 1.0))
        throw AdetError("gamma must lie in (0,1), got " + std::to_string(gamma));
    PositionSet out;
    out.layer = map.layer;
    out.image_id = map.image_id;
    const double stride = std::pow(2.0, map.layer);
    for (int i = 0; i < map.height; ++i)
        for (int j = 0; j < map.width; ++j)
            if (map.at(i, j) > gamma)
                out.positions.push_back(Point{j * stride, i * stride});
    return out;
}

namespace {

constexpr char kMagic[4] = {'A', 'D', 'H', 'M'};
constexpr uint8_t kVersion = 1;
constexpr size_t kHeaderBytes = 4 + 1 + 1 + 4 + 4 + 4 + 4;

uint32_t read_u32_le(const unsigned char* p) {
    return static_cast<uint32_t>(p[0]) | static_cast<uint32_t>(p[1]) << 8 |
           static_cast<uint32_t>(p[2]) << 16 | static_cast<uint32_t>(p[3]) << 24;
}

void write_u32_le(std::ostream& os, uint32_t v) {
    const unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                                static_cast<unsigned char>((v >> 8) & 0xff),
                                static_cast<unsigned char>((v >> 16) & 0xff),
                                static_cast<unsigned char>((v >> 24) & 0xff)};
    os.write(reinterpret_cast<const char*>(b), 4);
}

}  // namespace

ActivationTensor load_adhm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw AdetError(path + ": cannot open heatmap file");

    unsigned char header[kHeaderBytes];
    in.read(reinterpret_cast<char*>(header), kHeaderBytes);
    if (static_cast<size_t>(in.gcount()) != kHeaderBytes)
        throw AdetError(path + ": truncated header at byte " +
                        std::to_string(in.gcount()) + " (need " +
                        std::to_string(kHeaderBytes) + " bytes)");
    if (std::memcmp(header, kMagic, 4) != 0)
        throw AdetError(path + ": bad magic at byte 0 (expected 'ADHM')");
    if (header[4] != kVersion)
        throw AdetError(path + ": unsupported version " +
                        std::to_string(header[4]) + " at byte 4 (expected 1)");

    ActivationTensor t;
    t.layer = header[5];
    t.image_id = read_u32_le(header + 6);
    t.channels = static_cast<int>(read_u32_le(header + 10));
    t.height = static_cast<int>(read_u32_le(header + 14));
    t.width = static_cast<int>(read_u32_le(header + 18));
    if (t.channels < 1 || t.height < 1 || t.width < 1)
        throw AdetError(path + ": empty tensor dimensions in header (C=" +
                        std::to_string(t.channels) + " H=" + std::to_string(t.height) +
                        " W=" + std::to_string(t.width) + ")");

    const size_t count = static_cast<size_t>(t.channels) * t.height * t.width;
    t.data.resize(count);
    in.read(reinterpret_cast<char*>(t.data.data()),
            static_cast<std::streamsize>(count * sizeof(float)));
    const size_t got = static_cast<size_t>(in.gcount());
    if (got != count * sizeof(float))
        throw AdetError(path + ": truncated at byte " +
                        std::to_string(kHeaderBytes + got) + " (expected " +
                        std::to_string(kHeaderBytes + count * sizeof(float)) +
                        " bytes total)");
    in.peek();
    if (!in.eof())
        throw AdetError(path + ": trailing bytes after offset " +
                        std::to_string(kHeaderBytes + count * sizeof(float)));

    for (size_t k = 0; k < count; ++k)
        if (!std::isfinite(t.data[k]))
            throw AdetError(path + ": non-finite value at byte " +
                            std::to_string(kHeaderBytes + k * sizeof(float)));
    return t;
}

void save_adhm(const std::string& path, const ActivationTensor& tensor) {
    check_tensor(tensor);
    for (float v : tensor.data)
        if (!std::isfinite(v))
            throw AdetError(path + ": refusing to write non-finite tensor value");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw AdetError(path + ": cannot open for writing");
    out.write(kMagic, 4);
    const unsigned char ver_layer[2] = {kVersion, static_cast<unsigned char>(tensor.layer)};
    out.write(reinterpret_cast<const char*>(ver_layer), 2);
    write_u32_le(out, static_cast<uint32_t>(tensor.image_id));
    write_u32_le(out, static_cast<uint32_t>(tensor.channels));
    write_u32_le(out, static_cast<uint32_t>(tensor.height));
    write_u32_le(out, static_cast<uint32_t>(tensor.width));
    out.write(reinterpret_cast<const char*>(tensor.data.data()),
              static_cast<std::streamsize>(tensor.data.size() * sizeof(float)));
    if (!out) throw AdetError(path + ": write failed");
}

}  // namespace adet
