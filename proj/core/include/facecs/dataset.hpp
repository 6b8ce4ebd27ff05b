// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "facecs/image.hpp"

namespace facecs {

/// Face gallery: one ordered image list per subject, all images same size.
struct Gallery {
    std::vector<std::string> subjects;             // unique ids, e.g. "s1".."s40"
    std::vector<std::vector<GrayImage>> images;    // images[s][i], per-subject order
    int width = 0;
    int height = 0;

    int subject_count() const { return static_cast<int>(subjects.size()); }
    int image_count() const {
        std::size_t n = 0;
        for (const auto& v : images) n += v.size();
        return static_cast<int>(n);
    }
};

struct SplitSpec {
    double train_fraction = 0.8;
    std::uint64_t seed = 42;
    bool per_subject = true;
};

/// Index of one gallery image: subject slot + position within that subject.
struct SampleRef {
    int subject = 0;
    int image = 0;
    friend bool operator==(const SampleRef&, const SampleRef&) = default;
};

struct Split {
    std::vector<SampleRef> train;
    std::vector<SampleRef> test;
};

/// Load an ORL-style directory tree: root/s1..sK each holding 1.pgm..M.pgm
/// (binary P5, maxval 255). Subjects and images come back in ascending
/// numeric order. Throws NotFoundError for a missing root, FormatError for a
/// malformed file (named in the message), DimensionMismatchError if images
/// disagree on size.
Gallery load_gallery(const std::filesystem::path& root);

/// Load a gallery described by a manifest: one `path<TAB>subject_id` line per
/// image, UTF-8, paths relative to the manifest location. Subjects are
/// ordered naturally (numeric suffix aware); images keep manifest order.
Gallery load_gallery_manifest(const std::filesystem::path& manifest);

/// Seeded per-subject train/test partition. With m images per subject,
/// floor(train_fraction*m) go to train (clamped so both sides are non-empty);
/// which ones is a uniform draw. Same (gallery, spec) always yields the same
/// split. Throws SplitError if any subject has fewer than 2 images.
Split split_gallery(const Gallery& gallery, const SplitSpec& spec);

}  // namespace facecs
