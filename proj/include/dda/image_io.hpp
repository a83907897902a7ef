#pragma once

#include <string>

#include "dda/tensor.hpp"

namespace dda {

// 8-bit binary PGM (P5). Values are clamped to [0,1] and scaled to 0..255.
// `index` selects the (batch, channel) plane of a 4-D tensor.
void write_pgm(const std::string& path, const Tensor& img, int batch = 0, int channel = 0);
Tensor read_pgm(const std::string& path);  // returns (1,1,H,W) in [0,1]

}  // namespace dda
