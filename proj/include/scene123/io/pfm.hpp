#pragma once

#include <string>

#include "scene123/core/image.hpp"

namespace scene123::io {

// Single-channel PFM ("Pf"), scale -1.0 = little-endian, rows stored bottom-up.
// Round-trips float32 data bit-exactly.
void write_pfm(const std::string& path, const Plane<float>& plane);
Plane<float> read_pfm(const std::string& path);

}  // namespace scene123::io
