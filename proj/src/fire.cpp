#include "escape/fire.hpp"

#include <algorithm>
#include <cmath>

namespace escape {

void FireParams::validate() const
{
  if (!(growth_rate >= 0.0))
    throw ConfigError("growth_rate", "must be >= 0");
  if (!(advect_gain >= 0.0))
    throw ConfigError("advect_gain", "must be >= 0");
  if (!(p_base >= 0.0 && p_base <= 1.0))
    throw ConfigError("p_base", "must lie in [0, 1]");
  if (!(wind_bias >= 0.0 && wind_bias <= 1.0))
    throw ConfigError("wind_bias", "must lie in [0, 1]");
}

FireSource advect_fire(const FireSource& f, const Weather& w, const FireParams& p, double dt)
{
  FireSource out = f;
  if (w.wind_speed > 0.0 && dt > 0.0)
    out.center = f.center + (p.advect_gain * dt) * w.wind_vector();
  return out;
}

FireSource grow_fire(const FireSource& f, const FireParams& p, double dt)
{
  FireSource out = f;
  out.radius = f.radius + p.growth_rate * dt;
  return out;
}

double ignition_probability(const FireSource& f, const Weather& w, const FireParams& p, Vec2 offset)
{
  double cos_phi = 0.0;
  const double len = norm(offset);
  if (w.wind_speed > 0.0 && len > 0.0)
    cos_phi = dot(heading(w.wind_direction), offset) / len;
  const double intensity_factor = std::min(f.intensity, kMaxIntensityFactor);
  const double prob = p.p_base * intensity_factor * (1.0 + p.wind_bias * cos_phi);
  return std::clamp(prob, 0.0, 1.0);
}

std::vector<Cell> spread_mask(const FireSource& f, const GridMap& map, const Weather& w, const FireParams& p,
                              Rng& rng)
{
  std::vector<Cell> mask;
  const double outer = f.radius + kSpreadBand;
  const int x0 = std::max(0, static_cast<int>(std::floor(f.center.x - outer)));
  const int x1 = std::min(map.width() - 1, static_cast<int>(std::ceil(f.center.x + outer)));
  const int y0 = std::max(0, static_cast<int>(std::floor(f.center.y - outer)));
  const int y1 = std::min(map.height() - 1, static_cast<int>(std::ceil(f.center.y + outer)));

  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      const Cell c{x, y};
      if (map.base(c) == BaseClass::Background)
        continue;
      const Vec2 offset = Vec2{static_cast<double>(x), static_cast<double>(y)} - f.center;
      const double d = norm(offset);
      if (d <= f.radius || d > outer)
        continue;
      if (rng.bernoulli(ignition_probability(f, w, p, offset)))
        mask.push_back(c);
    }
  }
  return mask;
}

bool should_merge(const FireSource& a, const FireSource& b)
{
  return distance(a.center, b.center) <= a.radius + b.radius;
}

FireSource merge_pair(const FireSource& a, const FireSource& b)
{
  const FireSource& big = a.radius >= b.radius ? a : b;
  const FireSource& small = a.radius >= b.radius ? b : a;
  const double d = distance(a.center, b.center);

  FireSource out;
  out.intensity = a.intensity + b.intensity;
  if (d + small.radius <= big.radius) {
    out.center = big.center;
    out.radius = big.radius;
    return out;
  }
  const double r = (d + a.radius + b.radius) / 2.0;
  out.center = a.center + ((r - a.radius) / d) * (b.center - a.center);
  out.radius = r;
  return out;
}

std::vector<FireSource> merge_fires(std::vector<FireSource> sources)
{
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < sources.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < sources.size(); ++j) {
        if (should_merge(sources[i], sources[j])) {
          sources[i] = merge_pair(sources[i], sources[j]);
          sources.erase(sources.begin() + static_cast<std::ptrdiff_t>(j));
          merged = true;
          break;
        }
      }
    }
  }
  std::sort(sources.begin(), sources.end(), [](const FireSource& a, const FireSource& b) {
    if (a.center.x != b.center.x)
      return a.center.x < b.center.x;
    if (a.center.y != b.center.y)
      return a.center.y < b.center.y;
    return a.radius < b.radius;
  });
  return sources;
}

void rasterize_fire_inplace(const std::vector<FireSource>& sources, GridMap& map)
{
  for (const auto& f : sources) {
    const int x0 = std::max(0, static_cast<int>(std::floor(f.center.x - f.radius)));
    const int x1 = std::min(map.width() - 1, static_cast<int>(std::ceil(f.center.x + f.radius)));
    const int y0 = std::max(0, static_cast<int>(std::floor(f.center.y - f.radius)));
    const int y1 = std::min(map.height() - 1, static_cast<int>(std::ceil(f.center.y + f.radius)));
    for (int y = y0; y <= y1; ++y) {
      for (int x = x0; x <= x1; ++x) {
        const Vec2 p{static_cast<double>(x), static_cast<double>(y)};
        if (distance(p, f.center) <= f.radius)
          map.set_hazard({x, y}, Hazard::Fire);
      }
    }
  }
}

GridMap rasterize_fire(const std::vector<FireSource>& sources, GridMap map)
{
  rasterize_fire_inplace(sources, map);
  return map;
}

}  // namespace escape
