// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>

#include "facecs/image.hpp"

namespace facecs {

/// Read a binary PGM (P5) file with maxval 255.
///
/// Header comments (# ...) are tolerated. Pixel bytes map losslessly to
/// [0, 255] reals. Throws NotFoundError if the file is missing and
/// FormatError (naming the file) for ASCII variants, bad headers, maxval
/// other than 255, or truncated payloads.
GrayImage read_pgm(const std::filesystem::path& path);

/// Write `img` as binary PGM (P5), maxval 255, one whitespace per header
/// token. Samples are clamped and rounded to 8 bits.
void write_pgm(const std::filesystem::path& path, const GrayImage& img);

}  // namespace facecs
