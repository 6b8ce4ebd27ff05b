// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "facecs/image.hpp"

namespace facecs {

/// 2-D DCT coefficient plane, same shape as the source image.
struct SpectralPlane {
    int width = 0;
    int height = 0;
    std::vector<double> coeffs;  // row-major, height * width

    SpectralPlane() = default;
    SpectralPlane(int w, int h, double fill = 0.0)
        : width(w), height(h), coeffs(static_cast<std::size_t>(w) * h, fill) {}

    double& at(int row, int col) { return coeffs[static_cast<std::size_t>(row) * width + col]; }
    double at(int row, int col) const {
        return coeffs[static_cast<std::size_t>(row) * width + col];
    }
};

/// Orthonormal 2-D DCT-II analysis. Energy-preserving: sum of squared
/// coefficients equals sum of squared pixels.
SpectralPlane dct2(const GrayImage& img);

/// Exact inverse of dct2 up to floating tolerance. The result is a real
/// plane; values may leave [0, 255] and are not clamped here.
GrayImage idct2(const SpectralPlane& sp);

}  // namespace facecs
