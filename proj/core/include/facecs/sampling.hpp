// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "facecs/dct.hpp"

namespace facecs {

/// Coefficient position, (row, col), ordered row-major.
struct CoeffPos {
    int row = 0;
    int col = 0;
    friend bool operator==(const CoeffPos&, const CoeffPos&) = default;
    friend auto operator<=>(const CoeffPos&, const CoeffPos&) = default;
};

/// Full zig-zag (anti-diagonal) traversal of a width x height plane starting
/// at (0,0): the JPEG frequency ordering, generalized to rectangles.
std::vector<CoeffPos> zigzag_order(int width, int height);

/// Set of retained DCT coefficient positions. The first
/// ceil(low_freq_percent/100 * W*H) zig-zag positions are always kept; the
/// remaining budget is a seeded uniform draw without replacement over the
/// other positions. `retained` is sorted by (row, col).
struct SamplingMask {
    int width = 0;
    int height = 0;
    std::vector<CoeffPos> retained;
    std::uint64_t seed = 0;
    double percent = 0.0;
    double low_freq_percent = 0.0;

    std::size_t count() const { return retained.size(); }
    bool is_full() const {
        return retained.size() == static_cast<std::size_t>(width) * height;
    }
};

/// Retained coefficient values, one per mask position, in mask order.
struct Measurements {
    SamplingMask mask;
    std::vector<double> values;
};

/// Build a mask retaining round(percent/100 * W*H) positions. Deterministic
/// for fixed arguments. Throws EmptyMaskError for percent <= 0,
/// InsufficientBudgetError when the budget cannot hold the low-frequency
/// core, Error for out-of-range arguments.
SamplingMask build_mask(int width, int height, double percent, double low_freq_percent,
                        std::uint64_t seed);

/// Restrict a spectrum to the mask positions.
Measurements measure(const SpectralPlane& sp, const SamplingMask& mask);

/// Scatter measurements back onto a plane, `fill` everywhere else.
SpectralPlane embed(const Measurements& m, double fill);

}  // namespace facecs
