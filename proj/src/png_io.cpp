#include "escape/png_io.hpp"

#include <png.h>

#include <cstring>
#include <fstream>
#include <iterator>

namespace escape {

RgbImage decode_png(std::span<const std::uint8_t> bytes)
{
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;

  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size()))
    throw MapIoError(std::string("cannot decode PNG: ") + image.message);

  // Read with alpha so it can be dropped instead of composited.
  image.format = PNG_FORMAT_RGBA;
  std::vector<std::uint8_t> rgba(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, rgba.data(), 0, nullptr)) {
    const std::string msg = image.message;
    png_image_free(&image);
    throw MapIoError("cannot decode PNG: " + msg);
  }

  RgbImage out(static_cast<int>(image.width), static_cast<int>(image.height));
  for (std::size_t i = 0, j = 0; i < rgba.size(); i += 4, j += 3) {
    out.data[j] = rgba[i];
    out.data[j + 1] = rgba[i + 1];
    out.data[j + 2] = rgba[i + 2];
  }
  return out;
}

RgbImage read_png(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw MapIoError("cannot open " + path.string());
  const std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  try {
    return decode_png(bytes);
  } catch (const MapIoError& e) {
    throw MapIoError(path.string() + ": " + e.what());
  }
}

std::vector<std::uint8_t> encode_png(const RgbImage& img)
{
  if (img.width < 1 || img.height < 1)
    throw MapIoError("cannot encode an empty image");

  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(img.width);
  image.height = static_cast<png_uint_32>(img.height);
  image.format = PNG_FORMAT_RGB;

  png_alloc_size_t size = 0;
  if (!png_image_write_get_memory_size(image, size, 0, img.data.data(), 0, nullptr))
    throw MapIoError(std::string("cannot encode PNG: ") + image.message);
  std::vector<std::uint8_t> out(size);
  if (!png_image_write_to_memory(&image, out.data(), &size, 0, img.data.data(), 0, nullptr))
    throw MapIoError(std::string("cannot encode PNG: ") + image.message);
  out.resize(size);
  return out;
}

void write_png(const std::filesystem::path& path, const RgbImage& image)
{
  const auto bytes = encode_png(image);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw MapIoError("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out)
    throw MapIoError("short write to " + path.string());
}

}  // namespace escape
