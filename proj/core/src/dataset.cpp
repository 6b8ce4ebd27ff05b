// SPDX-License-Identifier: Apache-2.0
#include "facecs/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>

#include "facecs/pgm.hpp"
#include "facecs/rng.hpp"

namespace facecs {
namespace {

// Orders "s2" before "s10": compare (prefix, numeric suffix) when both ids
// end in digits, plain lexicographic otherwise.
struct NaturalLess {
    static std::pair<std::string, std::optional<long>> split_tail(const std::string& s) {
        std::size_t i = s.size();
        while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
        if (i == s.size()) return {s, std::nullopt};
        return {s.substr(0, i), std::stol(s.substr(i))};
    }
    bool operator()(const std::string& a, const std::string& b) const {
        auto [pa, na] = split_tail(a);
        auto [pb, nb] = split_tail(b);
        if (pa != pb || !na || !nb) return a < b;
        return *na < *nb;
    }
};

void check_dimensions(const Gallery& g, const GrayImage& img, const std::string& name) {
    if (g.width == 0 && g.height == 0) return;
    if (img.width != g.width || img.height != g.height) {
        throw DimensionMismatchError(name + ": image is " + std::to_string(img.width) + "x" +
                                     std::to_string(img.height) + ", gallery is " +
                                     std::to_string(g.width) + "x" + std::to_string(g.height));
    }
}

}  // namespace

Gallery load_gallery(const std::filesystem::path& root) {
    if (!std::filesystem::is_directory(root)) {
        throw NotFoundError(root.string() + ": no such directory");
    }

    std::vector<std::string> subject_dirs;
    for (const auto& entry : std::filesystem::directory_iterator(root)) {
        if (entry.is_directory()) subject_dirs.push_back(entry.path().filename().string());
    }
    std::sort(subject_dirs.begin(), subject_dirs.end(), NaturalLess{});
    if (subject_dirs.empty()) throw NotFoundError(root.string() + ": no subject directories");

    Gallery g;
    for (const auto& subject : subject_dirs) {
        std::vector<std::string> names;
        for (const auto& entry : std::filesystem::directory_iterator(root / subject)) {
            if (entry.is_regular_file() && entry.path().extension() == ".pgm") {
                names.push_back(entry.path().filename().string());
            }
        }
        if (names.empty()) continue;
        std::sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
            return NaturalLess{}(a.substr(0, a.size() - 4), b.substr(0, b.size() - 4));
        });

        std::vector<GrayImage> imgs;
        imgs.reserve(names.size());
        for (const auto& name : names) {
            GrayImage img = read_pgm(root / subject / name);
            check_dimensions(g, img, (root / subject / name).string());
            if (g.width == 0) {
                g.width = img.width;
                g.height = img.height;
            }
            imgs.push_back(std::move(img));
        }
        g.subjects.push_back(subject);
        g.images.push_back(std::move(imgs));
    }
    if (g.subjects.empty()) throw NotFoundError(root.string() + ": no PGM images found");
    return g;
}

Gallery load_gallery_manifest(const std::filesystem::path& manifest) {
    std::ifstream in(manifest);
    if (!in) throw NotFoundError(manifest.string() + ": no such file");
    const std::filesystem::path base = manifest.parent_path();

    std::map<std::string, std::vector<std::filesystem::path>, NaturalLess> by_subject;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size()) {
            throw FormatError(manifest.string() + ":" + std::to_string(line_no) +
                              ": expected path<TAB>subject_id");
        }
        std::filesystem::path p = line.substr(0, tab);
        if (p.is_relative()) p = base / p;
        by_subject[line.substr(tab + 1)].push_back(p);
    }

    Gallery g;
    for (auto& [subject, paths] : by_subject) {
        std::vector<GrayImage> imgs;
        imgs.reserve(paths.size());
        for (const auto& p : paths) {
            GrayImage img = read_pgm(p);
            check_dimensions(g, img, p.string());
            if (g.width == 0) {
                g.width = img.width;
                g.height = img.height;
            }
            imgs.push_back(std::move(img));
        }
        g.subjects.push_back(subject);
        g.images.push_back(std::move(imgs));
    }
    if (g.subjects.empty()) throw FormatError(manifest.string() + ": empty manifest");
    return g;
}

Split split_gallery(const Gallery& gallery, const SplitSpec& spec) {
    if (gallery.subjects.empty()) throw SplitError("empty gallery");
    if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0)) {
        throw SplitError("train_fraction must lie in (0, 1)");
    }

    rng::Engine eng(spec.seed);
    Split split;

    if (spec.per_subject) {
        for (int s = 0; s < gallery.subject_count(); ++s) {
            const int m = static_cast<int>(gallery.images[s].size());
            if (m < 2) {
                throw SplitError(gallery.subjects[s] + ": need at least 2 images, have " +
                                 std::to_string(m));
            }
            int n_train = static_cast<int>(std::floor(spec.train_fraction * m));
            n_train = std::clamp(n_train, 1, m - 1);
            const int n_test = m - n_train;

            std::vector<int> all(m);
            for (int i = 0; i < m; ++i) all[i] = i;
            std::vector<int> test_idx = rng::sample_without_replacement(all, n_test, eng);
            std::sort(test_idx.begin(), test_idx.end());

            std::vector<bool> is_test(m, false);
            for (int i : test_idx) is_test[i] = true;
            for (int i = 0; i < m; ++i) {
                (is_test[i] ? split.test : split.train).push_back({s, i});
            }
        }
    } else {
        std::vector<SampleRef> all;
        for (int s = 0; s < gallery.subject_count(); ++s) {
            for (int i = 0; i < static_cast<int>(gallery.images[s].size()); ++i) {
                all.push_back({s, i});
            }
        }
        if (all.size() < 2) throw SplitError("need at least 2 images to split");
        int n_train = static_cast<int>(std::floor(spec.train_fraction * all.size()));
        n_train = std::clamp(n_train, 1, static_cast<int>(all.size()) - 1);
        rng::shuffle(all, eng);
        split.train.assign(all.begin(), all.begin() + n_train);
        split.test.assign(all.begin() + n_train, all.end());
    }
    return split;
}

}  // namespace facecs
