#pragma once

#include <string>

#include "dda/nn.hpp"

namespace dda {

// Binary tensor container, little-endian, bit-exact round trip:
//   magic "DDAW" | u32 version=1 | u32 tensor_count
//   per tensor: u16 name_len | name bytes | u8 rank | u32 dims[rank] | f32 data
// Tensors are written in ParamStore insertion order and read back in file
// order, so save/load preserves ordering.
void save_checkpoint(const std::string& path, const ParamStore& params);
ParamStore load_checkpoint(const std::string& path);

inline constexpr uint32_t kCheckpointVersion = 1;

}  // namespace dda
