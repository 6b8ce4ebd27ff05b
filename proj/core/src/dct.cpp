// SPDX-License-Identifier: Apache-2.0
#include "facecs/dct.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace facecs {
namespace {

// Orthonormal DCT-II basis for axis length n, row-major n*n:
// B[k][i] = s_k * cos(pi*(2i+1)*k / (2n)), s_0 = sqrt(1/n), s_k = sqrt(2/n).
// Rows are orthonormal, so the inverse transform is B^T.
using Basis = std::vector<double>;

std::shared_ptr<const Basis> basis_for(int n) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const Basis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    auto basis = std::make_shared<Basis>(static_cast<std::size_t>(n) * n);
    const double scale0 = std::sqrt(1.0 / n);
    const double scale = std::sqrt(2.0 / n);
    for (int k = 0; k < n; ++k) {
        const double s = (k == 0) ? scale0 : scale;
        for (int i = 0; i < n; ++i) {
            (*basis)[static_cast<std::size_t>(k) * n + i] =
                s * std::cos(std::numbers::pi * (2 * i + 1) * k / (2.0 * n));
        }
    }
    cache.emplace(n, basis);
    return basis;
}

// out[r][k] = sum_c B[k][c] * in[r][c]  (transform along each row)
void transform_rows(const double* in, double* out, int height, int width, const Basis& b,
                    bool inverse) {
    for (int r = 0; r < height; ++r) {
        const double* row = in + static_cast<std::size_t>(r) * width;
        double* orow = out + static_cast<std::size_t>(r) * width;
        for (int k = 0; k < width; ++k) {
            double acc = 0.0;
            if (!inverse) {
                const double* bk = b.data() + static_cast<std::size_t>(k) * width;
                for (int c = 0; c < width; ++c) acc += bk[c] * row[c];
            } else {
                // inverse uses B^T: out[r][i] = sum_k B[k][i] * in[r][k]
                for (int c = 0; c < width; ++c) {
                    acc += b[static_cast<std::size_t>(c) * width + k] * row[c];
                }
            }
            orow[k] = acc;
        }
    }
}

// out[k][c] = sum_r B[k][r] * in[r][c]  (transform along each column),
// accumulated row-wise so accesses stay contiguous.
void transform_cols(const double* in, double* out, int height, int width, const Basis& b,
                    bool inverse) {
    std::fill(out, out + static_cast<std::size_t>(height) * width, 0.0);
    for (int k = 0; k < height; ++k) {
        double* orow = out + static_cast<std::size_t>(k) * width;
        for (int r = 0; r < height; ++r) {
            const double w = inverse ? b[static_cast<std::size_t>(r) * height + k]
                                     : b[static_cast<std::size_t>(k) * height + r];
            const double* irow = in + static_cast<std::size_t>(r) * width;
            for (int c = 0; c < width; ++c) orow[c] += w * irow[c];
        }
    }
}

void separable_2d(const double* in, double* out, int height, int width, bool inverse) {
    const auto bw = basis_for(width);
    const auto bh = basis_for(height);
    std::vector<double> tmp(static_cast<std::size_t>(height) * width);
    transform_rows(in, tmp.data(), height, width, *bw, inverse);
    transform_cols(tmp.data(), out, height, width, *bh, inverse);
}

}  // namespace

SpectralPlane dct2(const GrayImage& img) {
    if (img.width <= 0 || img.height <= 0) throw DimensionMismatchError("dct2: empty image");
    SpectralPlane sp(img.width, img.height);
    separable_2d(img.pixels.data(), sp.coeffs.data(), img.height, img.width, false);
    return sp;
}

GrayImage idct2(const SpectralPlane& sp) {
    if (sp.width <= 0 || sp.height <= 0) throw DimensionMismatchError("idct2: empty plane");
    GrayImage img(sp.width, sp.height);
    separable_2d(sp.coeffs.data(), img.pixels.data(), sp.height, sp.width, true);
    return img;
}

}  // namespace facecs
