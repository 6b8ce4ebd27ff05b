// SPDX-License-Identifier: Apache-2.0
#include "facecs/pgm.hpp"

#include <cstdio>
#include <fstream>
#include <string>

namespace facecs {
namespace {

[[noreturn]] void bad_format(const std::filesystem::path& path, const std::string& why) {
    throw FormatError(path.string() + ": " + why);
}

// Skips whitespace and '#' comment lines, then reads one unsigned decimal token.
int read_header_int(std::istream& in, const std::filesystem::path& path, const char* what) {
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (std::isspace(c)) {
            c = in.get();
        } else {
            break;
        }
    }
    if (c == EOF || !std::isdigit(c)) bad_format(path, std::string("expected ") + what);
    long value = 0;
    while (c != EOF && std::isdigit(c)) {
        value = value * 10 + (c - '0');
        if (value > 1'000'000'000L) bad_format(path, std::string(what) + " out of range");
        c = in.get();
    }
    if (c != EOF) in.unget();
    return static_cast<int>(value);
}

}  // namespace

GrayImage read_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        if (!std::filesystem::exists(path)) throw NotFoundError(path.string() + ": no such file");
        throw NotFoundError(path.string() + ": cannot open");
    }

    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (in.gcount() != 2 || magic[0] != 'P') bad_format(path, "not a PGM file");
    if (magic[1] != '5') bad_format(path, std::string("unsupported PGM variant P") + magic[1]);

    const int width = read_header_int(in, path, "width");
    const int height = read_header_int(in, path, "height");
    const int maxval = read_header_int(in, path, "maxval");
    if (width <= 0 || height <= 0) bad_format(path, "non-positive dimensions");
    if (maxval != 255) bad_format(path, "maxval must be 255, got " + std::to_string(maxval));

    // Exactly one whitespace byte separates the header from the payload.
    const int sep = in.get();
    if (sep == EOF || !std::isspace(sep)) bad_format(path, "missing whitespace before payload");

    const std::size_t count = static_cast<std::size_t>(width) * height;
    std::vector<char> raw(count);
    in.read(raw.data(), static_cast<std::streamsize>(count));
    if (static_cast<std::size_t>(in.gcount()) != count) bad_format(path, "truncated payload");

    GrayImage img(width, height);
    for (std::size_t i = 0; i < count; ++i) {
        img.pixels[i] = static_cast<double>(static_cast<unsigned char>(raw[i]));
    }
    return img;
}

void write_pgm(const std::filesystem::path& path, const GrayImage& img) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw NotFoundError(path.string() + ": cannot open for writing");
    out << "P5 " << img.width << " " << img.height << " 255\n";
    const std::vector<std::uint8_t> bytes = quantize_to_bytes(img);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw FormatError(path.string() + ": write failed");
}

}  // namespace facecs
