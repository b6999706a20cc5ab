#pragma once

#include <cstddef>
#include <cstdint>

namespace gdd {

// CRC-32/IEEE (reflected, poly 0xEDB88320, init and xorout 0xFFFFFFFF).
uint32_t crc32(const void* data, size_t size, uint32_t seed = 0);

}  // namespace gdd
