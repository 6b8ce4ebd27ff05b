// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "facecs/image.hpp"
#include "facecs/sampling.hpp"

namespace facecs {

/// Forward differences of an image plane with zero boundary:
///   row_diff(i,j) = x(i+1,j) - x(i,j) for i < height-1, 0 on the last row;
///   col_diff(i,j) = x(i,j+1) - x(i,j) for j < width-1,  0 on the last column.
struct GradientField {
    int width = 0;
    int height = 0;
    std::vector<double> row_diff;
    std::vector<double> col_diff;
};

GradientField gradient_field(const GrayImage& x);

/// Exact (unsmoothed) total variation: sum over pixels of
/// sqrt(row_diff^2 + col_diff^2).
double total_variation(const GrayImage& x);

/// Value of the smoothed surrogate sum sqrt(row_diff^2 + col_diff^2 + eps^2).
/// The plain sum is returned; no -W*H*eps offset is subtracted.
double smoothed_tv_value(const GrayImage& x, double epsilon);

struct SmoothedTv {
    double value = 0.0;
    GrayImage gradient;  // analytic gradient of `value` w.r.t. every pixel
};

/// Smoothed TV together with its exact analytic gradient (including the
/// adjoint of the boundary-zeroed difference operators). epsilon must be > 0.
SmoothedTv smoothed_tv_and_gradient(const GrayImage& x, double epsilon);

struct SolverConfig {
    int max_iters = 300;
    double step_size = 1.0;   // initial line-search step
    double epsilon = 1e-2;    // TV smoothing, on the internal [0,1] pixel scale
    double tol = 1e-6;        // relative objective-decrease stopping threshold
};

struct ReconResult {
    GrayImage image;                     // recovered plane, [0,255] scale, unclamped
    std::vector<double> objective_trace; // smoothed TV per accepted iterate,
                                         // internal [0,1] scale; [0] is the initial point
    int iterations_run = 0;
    double wall_time_s = 0.0;
};

/// Recover an image from DCT-domain measurements by projected gradient
/// descent on the smoothed TV. Pixels are normalized to [0,1] internally and
/// rescaled on output. Iterates stay on the affine set {x : measured DCT
/// coefficients of x equal the measurements}; a final exact projection pins
/// the measured coefficients before returning. The objective trace is
/// non-increasing (backtracking line search). Throws SolverDivergedError if
/// non-finite values appear.
ReconResult reconstruct(const Measurements& m, const SolverConfig& cfg);

}  // namespace facecs
