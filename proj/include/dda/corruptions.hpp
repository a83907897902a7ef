#pragma once

#include <string>
#include <vector>

#include "dda/rng.hpp"
#include "dda/tensor.hpp"

namespace dda {

enum class CorruptionKind {
    gaussian_noise,
    shot_noise,
    impulse_noise,
    gaussian_blur,
    defocus_blur,
    pixelate,
    jpeg_quantize,
    elastic,
    contrast,
    fog,
};

inline constexpr int kNumCorruptionKinds = 10;

enum class CorruptionFamily { noise, blur, digital, weather };

struct CorruptionSpec {
    CorruptionKind kind = CorruptionKind::gaussian_noise;
    int severity = 3;  // in [1,5]
};

CorruptionFamily family_of(CorruptionKind kind);
const char* to_string(CorruptionKind kind);
const char* to_string(CorruptionFamily family);
CorruptionKind corruption_from_string(const std::string& name);
std::vector<CorruptionKind> all_corruption_kinds();

// Per-kind parameter table entry for a severity level; strictly monotone in
// severity under each kind's natural ordering (noise sigma up, jpeg quality
// down, ...). Throws on invalid kind or severity.
std::vector<float> severity_param(CorruptionKind kind, int severity);

// Applies one corruption. Input must lie in [0,1]; output is clipped back to
// [0,1]. Stochastic kinds (the noise family and elastic) draw only from `rng`,
// so equal streams replay bitwise.
Tensor apply_corruption(const Tensor& x, const CorruptionSpec& spec, Rng& rng);

// Writes the full parameter tables as a versioned JSON reference file.
void dump_parameter_tables(const std::string& path);

}  // namespace dda
