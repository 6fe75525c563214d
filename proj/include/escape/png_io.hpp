#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "escape/worldmap.hpp"

namespace escape {

/// Decodes any PNG libpng understands into 8-bit RGB. Alpha is dropped,
/// palettes and gray are expanded. Throws MapIoError.
RgbImage decode_png(std::span<const std::uint8_t> bytes);
RgbImage read_png(const std::filesystem::path& path);

/// Opaque 8-bit RGB, no timestamp chunks, so output bytes depend only on the
/// pixels.
std::vector<std::uint8_t> encode_png(const RgbImage& image);
void write_png(const std::filesystem::path& path, const RgbImage& image);

}  // namespace escape
