#include "escape/worldmap.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace escape {

const char* to_string(BaseClass c)
{
  switch (c) {
    case BaseClass::Background: return "background";
    case BaseClass::GoodRoad: return "good_road";
    case BaseClass::BadRoad: return "bad_road";
  }
  return "?";
}

const char* to_string(Hazard h)
{
  switch (h) {
    case Hazard::None: return "none";
    case Hazard::Fire: return "fire";
    case Hazard::Smoke: return "smoke";
  }
  return "?";
}

const char* to_string(Traversal t)
{
  switch (t) {
    case Traversal::GoodRoad: return "good_road";
    case Traversal::BadRoad: return "bad_road";
    case Traversal::Forbidden: return "forbidden";
  }
  return "?";
}

const char* to_string(LegendClass c)
{
  switch (c) {
    case LegendClass::Background: return "background";
    case LegendClass::GoodRoad: return "good_road";
    case LegendClass::BadRoad: return "bad_road";
    case LegendClass::Fire: return "fire";
    case LegendClass::Smoke: return "smoke";
  }
  return "?";
}

RgbImage::RgbImage(int w, int h, Rgb fill) : width(w), height(h), data(static_cast<std::size_t>(w) * h * 3)
{
  for (std::size_t i = 0; i < data.size(); i += 3) {
    data[i] = fill.r;
    data[i + 1] = fill.g;
    data[i + 2] = fill.b;
  }
}

Rgb RgbImage::at(int x, int y) const
{
  const std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
  return {data[i], data[i + 1], data[i + 2]};
}

void RgbImage::set(int x, int y, Rgb c)
{
  const std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
  data[i] = c.r;
  data[i + 1] = c.g;
  data[i + 2] = c.b;
}

namespace {

int chebyshev(Rgb a, Rgb b)
{
  return std::max({std::abs(a.r - b.r), std::abs(a.g - b.g), std::abs(a.b - b.b)});
}

// Distance to the closest r=g=b gray inside the smoke band. The optimum
// of max_i |c_i - v| is the midrange of the channels.
int smoke_distance(Rgb c)
{
  const int lo = std::min({c.r, c.g, c.b});
  const int hi = std::max({c.r, c.g, c.b});
  const int mid = std::clamp((lo + hi) / 2, legend::kSmokeGrayMin, legend::kSmokeGrayMax);
  const Rgb gray{static_cast<std::uint8_t>(mid), static_cast<std::uint8_t>(mid), static_cast<std::uint8_t>(mid)};
  return chebyshev(c, gray);
}

}  // namespace

std::optional<LegendClass> try_classify_pixel(Rgb color)
{
  const std::array<std::pair<LegendClass, int>, 5> candidates{{
      {LegendClass::Background, chebyshev(color, legend::kBackground)},
      {LegendClass::GoodRoad, chebyshev(color, legend::kGoodRoad)},
      {LegendClass::BadRoad, chebyshev(color, legend::kBadRoad)},
      {LegendClass::Fire, chebyshev(color, legend::kFire)},
      {LegendClass::Smoke, smoke_distance(color)},
  }};
  // first minimum wins, so ties resolve in legend order
  const auto best = std::min_element(candidates.begin(), candidates.end(),
                                     [](const auto& a, const auto& b) { return a.second < b.second; });
  if (best->second > legend::kTolerance)
    return std::nullopt;
  return best->first;
}

LegendClass classify_pixel(Rgb color)
{
  if (auto c = try_classify_pixel(color))
    return *c;
  throw ClassificationError(-1, -1,
                            "color (" + std::to_string(color.r) + "," + std::to_string(color.g) + "," +
                                std::to_string(color.b) + ") matches no legend class");
}

GridMap::GridMap(int width, int height, BaseClass fill)
  : GridMap(width, height, std::vector<BaseClass>(static_cast<std::size_t>(std::max(width, 0)) * std::max(height, 0), fill))
{
}

GridMap::GridMap(int width, int height, std::vector<BaseClass> base)
  : width_(width), height_(height), base_(std::move(base))
{
  if (width < 1 || height < 1)
    throw ConfigError("", "map dimensions must be at least 1x1");
  if (base_.size() != static_cast<std::size_t>(width) * height)
    throw ConfigError("", "base layer size does not match map dimensions");
  hazard_.assign(base_.size(), Hazard::None);
  smoke_gray_.assign(base_.size(), 0);
}

void GridMap::set_hazard(Cell c, Hazard h, std::uint8_t gray)
{
  const auto i = index(c);
  hazard_[i] = h;
  smoke_gray_[i] = h == Hazard::Smoke ? gray : 0;
}

void GridMap::clear_hazards()
{
  std::fill(hazard_.begin(), hazard_.end(), Hazard::None);
  std::fill(smoke_gray_.begin(), smoke_gray_.end(), 0);
}

std::size_t GridMap::count(Hazard h) const
{
  return static_cast<std::size_t>(std::count(hazard_.begin(), hazard_.end(), h));
}

std::size_t GridMap::count(BaseClass b) const
{
  return static_cast<std::size_t>(std::count(base_.begin(), base_.end(), b));
}

GridMap load_map(const RgbImage& image)
{
  if (image.width < 1 || image.height < 1 ||
      image.data.size() != static_cast<std::size_t>(image.width) * image.height * 3)
    throw MapIoError("image has no pixels or inconsistent dimensions");

  std::vector<BaseClass> base(static_cast<std::size_t>(image.width) * image.height);
  struct Overlay
  {
    Cell cell;
    Hazard hazard;
    std::uint8_t gray;
  };
  std::vector<Overlay> overlays;

  for (int y = 0; y < image.height; ++y) {
    for (int x = 0; x < image.width; ++x) {
      const Rgb px = image.at(x, y);
      const auto cls = try_classify_pixel(px);
      if (!cls)
        throw ClassificationError(x, y,
                                  "pixel (" + std::to_string(x) + "," + std::to_string(y) + ") color (" +
                                      std::to_string(px.r) + "," + std::to_string(px.g) + "," +
                                      std::to_string(px.b) + ") matches no legend class");
      auto& b = base[static_cast<std::size_t>(y) * image.width + x];
      switch (*cls) {
        case LegendClass::Background: b = BaseClass::Background; break;
        case LegendClass::GoodRoad: b = BaseClass::GoodRoad; break;
        case LegendClass::BadRoad: b = BaseClass::BadRoad; break;
        case LegendClass::Fire:
          b = BaseClass::Background;
          overlays.push_back({{x, y}, Hazard::Fire, 0});
          break;
        case LegendClass::Smoke: {
          b = BaseClass::Background;
          const int gray = std::clamp((std::min({px.r, px.g, px.b}) + std::max({px.r, px.g, px.b})) / 2,
                                      legend::kSmokeGrayMin, legend::kSmokeGrayMax);
          overlays.push_back({{x, y}, Hazard::Smoke, static_cast<std::uint8_t>(gray)});
          break;
        }
      }
    }
  }

  GridMap map(image.width, image.height, std::move(base));
  for (const auto& o : overlays)
    map.set_hazard(o.cell, o.hazard, o.gray);
  return map;
}

std::vector<Neighbor> neighbors8(const GridMap& map, Cell c)
{
  std::vector<Neighbor> out;
  out.reserve(8);
  for (int dy = -1; dy <= 1; ++dy) {
    for (int dx = -1; dx <= 1; ++dx) {
      if (dx == 0 && dy == 0)
        continue;
      const Cell n{c.x + dx, c.y + dy};
      if (!map.in_bounds(n))
        continue;
      out.push_back({n, (dx != 0 && dy != 0) ? MoveKind::Diagonal : MoveKind::Cardinal});
    }
  }
  return out;
}

Traversal effective_class(const GridMap& map, Cell c)
{
  if (map.hazard(c) != Hazard::None)
    return Traversal::Forbidden;
  switch (map.base(c)) {
    case BaseClass::GoodRoad: return Traversal::GoodRoad;
    case BaseClass::BadRoad: return Traversal::BadRoad;
    case BaseClass::Background: break;
  }
  return Traversal::Forbidden;
}

namespace {

void draw_disc(RgbImage& img, Cell center, int radius, Rgb color)
{
  for (int dy = -radius; dy <= radius; ++dy) {
    for (int dx = -radius; dx <= radius; ++dx) {
      if (dx * dx + dy * dy > radius * radius)
        continue;
      const int x = center.x + dx;
      const int y = center.y + dy;
      if (x >= 0 && y >= 0 && x < img.width && y < img.height)
        img.set(x, y, color);
    }
  }
}

}  // namespace

RgbImage render(const GridMap& map, const std::vector<Cell>& route, const Markers& markers)
{
  for (const auto& c : route) {
    if (!map.in_bounds(c))
      throw RenderError("route cell (" + std::to_string(c.x) + "," + std::to_string(c.y) + ") is out of bounds");
  }

  RgbImage img(map.width(), map.height());
  for (int y = 0; y < map.height(); ++y) {
    for (int x = 0; x < map.width(); ++x) {
      const Cell c{x, y};
      Rgb color{};
      switch (map.hazard(c)) {
        case Hazard::Fire: color = legend::kFire; break;
        case Hazard::Smoke: {
          const auto g = map.smoke_gray(c);
          color = {g, g, g};
          break;
        }
        case Hazard::None:
          switch (map.base(c)) {
            case BaseClass::Background: color = legend::kBackground; break;
            case BaseClass::GoodRoad: color = legend::kGoodRoad; break;
            case BaseClass::BadRoad: color = legend::kBadRoad; break;
          }
          break;
      }
      img.set(x, y, color);
    }
  }

  for (const auto& c : route)
    img.set(c.x, c.y, legend::kRoute);
  if (markers.start)
    draw_disc(img, *markers.start, legend::kMarkerRadius, legend::kStart);
  if (markers.goal)
    draw_disc(img, *markers.goal, legend::kMarkerRadius, legend::kGoal);
  return img;
}

}  // namespace escape
