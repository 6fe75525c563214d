#include "escape/smoke.hpp"

#include <algorithm>
#include <cmath>

namespace escape {

void SmokeParams::validate() const
{
  if (!(emission_rate >= 0.0))
    throw ConfigError("emission_rate", "must be >= 0");
  if (!(band >= 0.0))
    throw ConfigError("band", "must be >= 0");
  if (!(angular_spread >= 0.0))
    throw ConfigError("angular_spread", "must be >= 0");
  if (!(drift_gain >= 0.0))
    throw ConfigError("drift_gain", "must be >= 0");
  if (lifetime < 1)
    throw ConfigError("lifetime", "must be >= 1");
}

std::size_t emission_count(const FireSource& f, const SmokeParams& p)
{
  const double n = std::ceil(p.emission_rate * f.intensity);
  return n > 0.0 ? static_cast<std::size_t>(n) : 0;
}

std::vector<SmokeParticle> emit_smoke(const FireSource& f, const SmokeParams& p, const Weather& w, Rng& rng)
{
  const std::size_t n = emission_count(f, p);
  std::vector<SmokeParticle> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double rho = rng.uniform(f.radius, f.radius + p.band);
    const double psi = w.wind_speed > 0.0
                           ? w.wind_direction + rng.uniform(-p.angular_spread, p.angular_spread)
                           : rng.uniform(0.0, 360.0);
    const int gray = rng.uniform_int(kSmokeGrayLow, kSmokeGrayHigh);
    out.push_back({f.center + rho * heading(psi), gray, 0});
  }
  return out;
}

std::vector<SmokeParticle> advect_smoke(std::vector<SmokeParticle> particles, const Weather& w, const SmokeParams& p,
                                        int dt)
{
  const Vec2 drift = (p.drift_gain * dt) * w.wind_vector();
  for (auto& s : particles) {
    if (w.wind_speed > 0.0)
      s.position = s.position + drift;
    s.age += dt;
  }
  std::erase_if(particles, [&](const SmokeParticle& s) { return s.age > p.lifetime; });
  return particles;
}

void rasterize_smoke_inplace(const std::vector<SmokeParticle>& particles, GridMap& map)
{
  for (int y = 0; y < map.height(); ++y) {
    for (int x = 0; x < map.width(); ++x) {
      if (map.hazard({x, y}) == Hazard::Smoke)
        map.set_hazard({x, y}, Hazard::None);
    }
  }
  for (const auto& s : particles) {
    if (!(s.position.x >= 0.0 && s.position.y >= 0.0 && s.position.x < map.width() && s.position.y < map.height()))
      continue;
    const Cell c{static_cast<int>(std::floor(s.position.x)), static_cast<int>(std::floor(s.position.y))};
    if (!map.in_bounds(c) || map.hazard(c) == Hazard::Fire)
      continue;
    const auto gray = static_cast<std::uint8_t>(s.gray);
    if (map.hazard(c) == Hazard::Smoke && map.smoke_gray(c) >= gray)
      continue;
    map.set_hazard(c, Hazard::Smoke, gray);
  }
}

GridMap rasterize_smoke(const std::vector<SmokeParticle>& particles, GridMap map)
{
  rasterize_smoke_inplace(particles, map);
  return map;
}

}  // namespace escape
