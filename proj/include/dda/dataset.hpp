#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dda/rng.hpp"
#include "dda/tensor.hpp"

namespace dda {

inline constexpr int kImageSize = 32;
inline constexpr int kNumClasses = 10;

// Glyph classes, in label order: circle, square, triangle, cross, ring,
// bar-H, bar-V, L-corner, dot-pair, chevron.
const char* class_name(int label);

struct Sample {
    Tensor image;  // (1, 1, 32, 32), values in [0,1]
    int label = 0;
    uint64_t sample_id = 0;
};

struct Dataset {
    std::vector<Sample> train;
    std::vector<Sample> test;
    int num_classes = kNumClasses;
};

struct Jitter {
    float dx = 0.0f;            // |dx| <= 4 px
    float dy = 0.0f;            // |dy| <= 4 px
    float scale = 1.0f;         // in [0.8, 1.2]
    float rotation_deg = 0.0f;  // in [-20, 20]
};

// Renders one glyph with anti-aliased edges on a low-amplitude textured
// background. The background texture is drawn from `rng`, so equal streams
// reproduce the image bitwise. The texture is mirror-symmetric in x, which
// keeps symmetric glyphs symmetric.
Tensor render_glyph(int cls, const Jitter& jitter, Rng& rng);

// Deterministic, class-balanced dataset: label = sample_id % 10, train ids
// count up from 0, test ids from 1<<32. Jitter and texture come from a
// per-sample stream forked off `seed`, so any sample can be regenerated in
// isolation.
Dataset generate_dataset(uint64_t seed, int n_train = 8000, int n_test = 2000);

// IDX-format loader (big-endian, magic 0x803 for images / 0x801 for labels).
// 28x28 inputs are zero-padded to 32x32; pixels rescale to [0,1]. Loaded
// samples land in `test` with sample_id = index.
Dataset load_idx(const std::string& images_path, const std::string& labels_path);

// Dataset cache on top of the checkpoint container, tensors "images" (N,1,H,W)
// and "labels" (N). Sample ids are reassigned as id_base + index on load.
void save_samples(const std::string& path, const std::vector<Sample>& samples);
std::vector<Sample> load_samples(const std::string& path, uint64_t id_base = 0);

}  // namespace dda
