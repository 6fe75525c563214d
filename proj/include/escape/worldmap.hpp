#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "escape/errors.hpp"

namespace escape {

/// Road class of the base raster.
enum class BaseClass : std::uint8_t { Background, GoodRoad, BadRoad };

/// Per-cell hazard overlay, re-rasterized every tick.
enum class Hazard : std::uint8_t { None, Fire, Smoke };

/// What the planner sees when it looks at a cell.
enum class Traversal : std::uint8_t { GoodRoad, BadRoad, Forbidden };

/// Result of matching one pixel against the legend.
enum class LegendClass : std::uint8_t { Background, GoodRoad, BadRoad, Fire, Smoke };

const char* to_string(BaseClass c);
const char* to_string(Hazard h);
const char* to_string(Traversal t);
const char* to_string(LegendClass c);

struct Rgb
{
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

namespace legend {
inline constexpr Rgb kBackground{0, 0, 0};
inline constexpr Rgb kGoodRoad{0, 255, 0};
inline constexpr Rgb kBadRoad{255, 255, 255};
inline constexpr Rgb kFire{255, 0, 0};
inline constexpr Rgb kRoute{200, 0, 0};
inline constexpr Rgb kStart{0, 0, 255};
inline constexpr Rgb kGoal{255, 255, 0};
inline constexpr int kSmokeGrayMin = 50;
inline constexpr int kSmokeGrayMax = 220;
/// Per-channel max-distance tolerance.
inline constexpr int kTolerance = 30;
inline constexpr int kMarkerRadius = 2;
}  // namespace legend

/// Column/row index; origin top-left, x grows right, y grows down.
struct Cell
{
  int x = 0;
  int y = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell& a, const Cell& b)
  {
    // row-major
    if (auto c = a.y <=> b.y; c != 0)
      return c;
    return a.x <=> b.x;
  }
};

enum class MoveKind : std::uint8_t { Cardinal, Diagonal };

struct Neighbor
{
  Cell cell;
  MoveKind move;
};

/// Packed 8-bit RGB raster, row-major, 3 bytes per pixel.
struct RgbImage
{
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  RgbImage() = default;
  RgbImage(int w, int h, Rgb fill = {});

  Rgb at(int x, int y) const;
  void set(int x, int y, Rgb c);

  friend bool operator==(const RgbImage&, const RgbImage&) = default;
};

/// Nearest legend class within tolerance, or nullopt when the pixel is
/// farther than legend::kTolerance from every legend color.
std::optional<LegendClass> try_classify_pixel(Rgb color);

/// Throws ClassificationError (with pixel position -1,-1) when unmatched.
LegendClass classify_pixel(Rgb color);

/// Road raster plus hazard overlay.
///
/// The base layer is fixed at construction. The hazard layer and its smoke
/// gray companion are mutated only by whoever owns the value; copies are
/// independent snapshots.
class GridMap
{
public:
  GridMap(int width, int height, BaseClass fill = BaseClass::Background);
  GridMap(int width, int height, std::vector<BaseClass> base);

  int width() const { return width_; }
  int height() const { return height_; }

  bool in_bounds(Cell c) const { return c.x >= 0 && c.y >= 0 && c.x < width_ && c.y < height_; }
  std::size_t index(Cell c) const { return static_cast<std::size_t>(c.y) * width_ + c.x; }

  BaseClass base(Cell c) const { return base_[index(c)]; }
  Hazard hazard(Cell c) const { return hazard_[index(c)]; }
  /// Gray value rendered for a Smoke cell.
  std::uint8_t smoke_gray(Cell c) const { return smoke_gray_[index(c)]; }

  void set_hazard(Cell c, Hazard h, std::uint8_t gray = 128);
  void clear_hazards();

  std::size_t count(Hazard h) const;
  std::size_t count(BaseClass b) const;

  const std::vector<BaseClass>& base_layer() const { return base_; }
  const std::vector<Hazard>& hazard_layer() const { return hazard_; }

  friend bool operator==(const GridMap&, const GridMap&) = default;

private:
  int width_;
  int height_;
  std::vector<BaseClass> base_;
  std::vector<Hazard> hazard_;
  std::vector<std::uint8_t> smoke_gray_;
};

/// Classifies every pixel. Fire/Smoke pixels go to the hazard overlay over a
/// Background base, since the road underneath is unknown.
GridMap load_map(const RgbImage& image);

/// In-bounds 8-neighborhood, row-major by (dy, dx).
std::vector<Neighbor> neighbors8(const GridMap& map, Cell c);

Traversal effective_class(const GridMap& map, Cell c);

struct Markers
{
  std::optional<Cell> start;
  std::optional<Cell> goal;
};

/// Legend colors for base and overlay, then route, then markers on top.
RgbImage render(const GridMap& map, const std::vector<Cell>& route = {}, const Markers& markers = {});

}  // namespace escape
