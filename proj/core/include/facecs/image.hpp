// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <vector>

#include "facecs/errors.hpp"

namespace facecs {

/// Row-major grayscale raster with real-valued samples.
///
/// Images loaded from disk hold values in [0, 255]. Intermediate planes
/// (reconstructions, gradients) reuse this type and may leave that range;
/// values are clamped only at export or scoring time.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<double> pixels;  // height * width entries, row-major

    GrayImage() = default;
    GrayImage(int w, int h, double fill = 0.0)
        : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {}

    double& at(int row, int col) {
        assert(row >= 0 && row < height && col >= 0 && col < width);
        return pixels[static_cast<std::size_t>(row) * width + col];
    }
    double at(int row, int col) const {
        assert(row >= 0 && row < height && col >= 0 && col < width);
        return pixels[static_cast<std::size_t>(row) * width + col];
    }

    std::size_t size() const { return pixels.size(); }

    bool same_size(const GrayImage& other) const {
        return width == other.width && height == other.height;
    }
};

inline void require_same_size(const GrayImage& a, const GrayImage& b,
                              const char* context) {
    if (!a.same_size(b)) {
        throw DimensionMismatchError(std::string(context) + ": " +
                                     std::to_string(a.width) + "x" + std::to_string(a.height) +
                                     " vs " +
                                     std::to_string(b.width) + "x" + std::to_string(b.height));
    }
}

/// Clamp every sample into [0, 255].
inline GrayImage clamp_to_byte_range(GrayImage img) {
    for (double& p : img.pixels) p = std::clamp(p, 0.0, 255.0);
    return img;
}

/// Clamp and round to the nearest 8-bit intensity.
inline std::vector<std::uint8_t> quantize_to_bytes(const GrayImage& img) {
    std::vector<std::uint8_t> out(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) {
        const double v = std::clamp(img.pixels[i], 0.0, 255.0);
        out[i] = static_cast<std::uint8_t>(std::lround(v));
    }
    return out;
}

}  // namespace facecs
