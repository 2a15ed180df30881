#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spikenet {

// Binary PGM (P5), maxval 255, row-major pixels.
void write_pgm(const std::string& path, const std::uint8_t* pixels, int width, int height);
std::vector<std::uint8_t> read_pgm(const std::string& path, int& width, int& height);

}  // namespace spikenet
