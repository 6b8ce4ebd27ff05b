// SPDX-License-Identifier: Apache-2.0
#include "facecs/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "facecs/rng.hpp"

namespace facecs {

std::vector<CoeffPos> zigzag_order(int width, int height) {
    std::vector<CoeffPos> order;
    order.reserve(static_cast<std::size_t>(width) * height);
    for (int s = 0; s <= width + height - 2; ++s) {
        const int r_lo = std::max(0, s - (width - 1));
        const int r_hi = std::min(height - 1, s);
        if (s % 2 != 0) {
            for (int r = r_lo; r <= r_hi; ++r) order.push_back({r, s - r});
        } else {
            for (int r = r_hi; r >= r_lo; --r) order.push_back({r, s - r});
        }
    }
    return order;
}

SamplingMask build_mask(int width, int height, double percent, double low_freq_percent,
                        std::uint64_t seed) {
    if (width <= 0 || height <= 0) throw Error("build_mask: non-positive dimensions");
    if (percent <= 0.0) throw EmptyMaskError("build_mask: percent must be positive");
    if (percent > 100.0) throw Error("build_mask: percent exceeds 100");
    if (low_freq_percent < 0.0 || low_freq_percent > percent) {
        throw Error("build_mask: low_freq_percent must lie in [0, percent]");
    }

    const std::size_t total_positions = static_cast<std::size_t>(width) * height;
    const std::size_t budget =
        static_cast<std::size_t>(std::llround(percent / 100.0 * static_cast<double>(total_positions)));
    const std::size_t core_count =
        static_cast<std::size_t>(std::ceil(low_freq_percent / 100.0 * static_cast<double>(total_positions)));
    if (budget == 0) throw EmptyMaskError("build_mask: budget rounds to zero positions");
    if (budget < core_count) {
        throw InsufficientBudgetError("build_mask: budget " + std::to_string(budget) +
                                      " is smaller than the low-frequency core of " +
                                      std::to_string(core_count));
    }

    const std::vector<CoeffPos> zz = zigzag_order(width, height);
    std::vector<bool> in_core(total_positions, false);
    SamplingMask mask{width, height, {}, seed, percent, low_freq_percent};
    mask.retained.reserve(budget);
    for (std::size_t i = 0; i < core_count; ++i) {
        mask.retained.push_back(zz[i]);
        in_core[static_cast<std::size_t>(zz[i].row) * width + zz[i].col] = true;
    }

    const std::size_t remainder = budget - core_count;
    if (remainder > 0) {
        std::vector<std::uint32_t> pool;
        pool.reserve(total_positions - core_count);
        for (std::size_t flat = 0; flat < total_positions; ++flat) {
            if (!in_core[flat]) pool.push_back(static_cast<std::uint32_t>(flat));
        }
        rng::Engine eng(seed);
        const auto picked = rng::sample_without_replacement(std::move(pool), remainder, eng);
        for (std::uint32_t flat : picked) {
            mask.retained.push_back({static_cast<int>(flat) / width, static_cast<int>(flat) % width});
        }
    }

    std::sort(mask.retained.begin(), mask.retained.end());
    return mask;
}

Measurements measure(const SpectralPlane& sp, const SamplingMask& mask) {
    if (sp.width != mask.width || sp.height != mask.height) {
        throw DimensionMismatchError("measure: spectrum is " + std::to_string(sp.width) + "x" +
                                     std::to_string(sp.height) + ", mask is " +
                                     std::to_string(mask.width) + "x" +
                                     std::to_string(mask.height));
    }
    Measurements m{mask, {}};
    m.values.reserve(mask.retained.size());
    for (const CoeffPos& p : mask.retained) m.values.push_back(sp.at(p.row, p.col));
    return m;
}

SpectralPlane embed(const Measurements& m, double fill) {
    SpectralPlane sp(m.mask.width, m.mask.height, fill);
    for (std::size_t i = 0; i < m.mask.retained.size(); ++i) {
        const CoeffPos& p = m.mask.retained[i];
        sp.at(p.row, p.col) = m.values[i];
    }
    return sp;
}

}  // namespace facecs
