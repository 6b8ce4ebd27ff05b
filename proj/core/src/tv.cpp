// SPDX-License-Identifier: Apache-2.0
#include "facecs/tv.hpp"

#include <chrono>
#include <cmath>

#include "facecs/dct.hpp"

namespace facecs {

GradientField gradient_field(const GrayImage& x) {
    const int w = x.width, h = x.height;
    GradientField g{w, h, std::vector<double>(x.size(), 0.0), std::vector<double>(x.size(), 0.0)};
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < w; ++j) {
            const std::size_t idx = static_cast<std::size_t>(i) * w + j;
            if (i < h - 1) g.row_diff[idx] = x.at(i + 1, j) - x.at(i, j);
            if (j < w - 1) g.col_diff[idx] = x.at(i, j + 1) - x.at(i, j);
        }
    }
    return g;
}

double total_variation(const GrayImage& x) {
    const GradientField g = gradient_field(x);
    double tv = 0.0;
    for (std::size_t i = 0; i < g.row_diff.size(); ++i) {
        tv += std::sqrt(g.row_diff[i] * g.row_diff[i] + g.col_diff[i] * g.col_diff[i]);
    }
    return tv;
}

double smoothed_tv_value(const GrayImage& x, double epsilon) {
    const int w = x.width, h = x.height;
    const double e2 = epsilon * epsilon;
    double value = 0.0;
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < w; ++j) {
            const double dr = (i < h - 1) ? x.at(i + 1, j) - x.at(i, j) : 0.0;
            const double dc = (j < w - 1) ? x.at(i, j + 1) - x.at(i, j) : 0.0;
            value += std::sqrt(dr * dr + dc * dc + e2);
        }
    }
    return value;
}

SmoothedTv smoothed_tv_and_gradient(const GrayImage& x, double epsilon) {
    if (!(epsilon > 0.0)) throw Error("smoothed_tv_and_gradient: epsilon must be positive");
    const int w = x.width, h = x.height;
    const double e2 = epsilon * epsilon;
    SmoothedTv out;
    out.gradient = GrayImage(w, h, 0.0);
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < w; ++j) {
            const double dr = (i < h - 1) ? x.at(i + 1, j) - x.at(i, j) : 0.0;
            const double dc = (j < w - 1) ? x.at(i, j + 1) - x.at(i, j) : 0.0;
            const double mag = std::sqrt(dr * dr + dc * dc + e2);
            out.value += mag;
            // d mag / d x: each difference contributes -1 to its base pixel
            // and +1 to its forward neighbor.
            const double wr = dr / mag, wc = dc / mag;
            out.gradient.at(i, j) -= wr + wc;
            if (i < h - 1) out.gradient.at(i + 1, j) += wr;
            if (j < w - 1) out.gradient.at(i, j + 1) += wc;
        }
    }
    return out;
}

namespace {

constexpr double kPixelScale = 255.0;
constexpr double kArmijo = 1e-4;
constexpr double kMinStep = 1e-18;

struct FlatMask {
    std::vector<std::size_t> idx;
    explicit FlatMask(const SamplingMask& m) {
        idx.reserve(m.retained.size());
        for (const CoeffPos& p : m.retained) {
            idx.push_back(static_cast<std::size_t>(p.row) * m.width + p.col);
        }
    }
};

// Projection of `g` onto the nullspace of the measurement operator: its
// measured DCT coefficients are set exactly to zero, so steps along the
// result keep every iterate feasible.
GrayImage project_to_nullspace(const GrayImage& g, const FlatMask& mask) {
    SpectralPlane sp = dct2(g);
    for (std::size_t f : mask.idx) sp.coeffs[f] = 0.0;
    return idct2(sp);
}

// Overwrite the measured coefficients with their measured values.
GrayImage project_to_measurements(const GrayImage& x, const FlatMask& mask,
                                  const std::vector<double>& values) {
    SpectralPlane sp = dct2(x);
    for (std::size_t i = 0; i < mask.idx.size(); ++i) sp.coeffs[mask.idx[i]] = values[i];
    return idct2(sp);
}

}  // namespace

ReconResult reconstruct(const Measurements& m, const SolverConfig& cfg) {
    if (cfg.max_iters < 1 || !(cfg.epsilon > 0.0) || cfg.tol < 0.0 || !(cfg.step_size > 0.0)) {
        throw Error("reconstruct: invalid solver configuration");
    }
    if (m.values.size() != m.mask.retained.size()) {
        throw DimensionMismatchError("reconstruct: measurement/mask size mismatch");
    }

    const auto t0 = std::chrono::steady_clock::now();
    ReconResult result;

    // Work on the [0,1] pixel scale; the measurements scale linearly with it.
    Measurements scaled = m;
    for (double& v : scaled.values) v /= kPixelScale;
    const FlatMask mask(scaled.mask);

    GrayImage x = idct2(embed(scaled, 0.0));

    auto finish = [&](GrayImage plane, std::vector<double> trace, int iters) {
        for (double& p : plane.pixels) p *= kPixelScale;
        result.image = std::move(plane);
        result.objective_trace = std::move(trace);
        result.iterations_run = iters;
        result.wall_time_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return result;
    };

    if (scaled.mask.is_full()) {
        // Fully determined: the initial point is the unique feasible image.
        return finish(std::move(x), {smoothed_tv_value(x, cfg.epsilon)}, 0);
    }

    SmoothedTv cur = smoothed_tv_and_gradient(x, cfg.epsilon);
    if (!std::isfinite(cur.value)) throw SolverDivergedError("reconstruct: non-finite objective", 0);
    std::vector<double> trace{cur.value};

    double alpha_start = cfg.step_size;
    int iters = 0;
    while (iters < cfg.max_iters) {
        const GrayImage dir = project_to_nullspace(cur.gradient, mask);
        double dir_sq = 0.0;
        for (double d : dir.pixels) dir_sq += d * d;
        if (!std::isfinite(dir_sq)) {
            throw SolverDivergedError("reconstruct: non-finite gradient", iters);
        }
        if (dir_sq == 0.0) break;  // stationary on the constraint set

        // Backtracking along the feasible descent direction.
        double alpha = alpha_start;
        GrayImage cand;
        double cand_value = 0.0;
        bool accepted = false;
        while (alpha >= kMinStep) {
            cand = x;
            for (std::size_t i = 0; i < cand.pixels.size(); ++i) {
                cand.pixels[i] -= alpha * dir.pixels[i];
            }
            cand_value = smoothed_tv_value(cand, cfg.epsilon);
            if (std::isfinite(cand_value) && cand_value <= cur.value - kArmijo * alpha * dir_sq) {
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!accepted) break;  // no further decrease at machine precision

        x = std::move(cand);
        const double prev_value = cur.value;
        cur = smoothed_tv_and_gradient(x, cfg.epsilon);
        cur.value = cand_value;
        trace.push_back(cand_value);
        ++iters;
        alpha_start = std::min(alpha * 2.0, 1e6);

        const double decrease = prev_value - cand_value;
        if (decrease <= cfg.tol * std::max(std::abs(prev_value), 1e-300)) break;
    }

    // Exact data-consistency projection before handing the image back.
    x = project_to_measurements(x, mask, scaled.values);
    return finish(std::move(x), std::move(trace), iters);
}

}  // namespace facecs
