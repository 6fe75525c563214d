#pragma once

#include <vector>

#include "escape/geometry.hpp"
#include "escape/rng.hpp"
#include "escape/worldmap.hpp"

namespace escape {

/// A burning disc. radius > 0, intensity >= 0.
struct FireSource
{
  Vec2 center;
  double radius = 1.0;
  double intensity = 1.0;

  friend bool operator==(const FireSource&, const FireSource&) = default;
};

/// Wind heading in degrees (0 = east, 90 = south on screen) and speed in
/// cells per tick.
struct Weather
{
  double wind_direction = 0.0;
  double wind_speed = 0.0;

  Vec2 wind_vector() const { return wind_speed * heading(wind_direction); }
  friend bool operator==(const Weather&, const Weather&) = default;
};

struct FireParams
{
  double growth_rate = 1.0;  ///< radius gain, cells per tick
  double advect_gain = 0.5;  ///< fraction of wind speed applied to the center
  double p_base = 0.15;      ///< per-cell ignition probability per tick
  double wind_bias = 0.5;    ///< downwind boost in [0, 1]

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

/// Largest intensity multiplier applied to the ignition probability.
inline constexpr double kMaxIntensityFactor = 2.0;
/// Width of the ignition ring beyond the disc edge.
inline constexpr double kSpreadBand = 1.5;

FireSource advect_fire(const FireSource& f, const Weather& w, const FireParams& p, double dt);
FireSource grow_fire(const FireSource& f, const FireParams& p, double dt);

/// Ignition probability for a cell at `offset` from the fire center.
double ignition_probability(const FireSource& f, const Weather& w, const FireParams& p, Vec2 offset);

/// Road cells in the ring radius < d <= radius + kSpreadBand, each kept with
/// ignition_probability. One draw per candidate, candidates in row-major
/// order. Result is row-major sorted.
std::vector<Cell> spread_mask(const FireSource& f, const GridMap& map, const Weather& w, const FireParams& p,
                              Rng& rng);

/// True when the two discs touch or overlap.
bool should_merge(const FireSource& a, const FireSource& b);

/// Smallest disc enclosing both, with summed intensity.
FireSource merge_pair(const FireSource& a, const FireSource& b);

/// Merges touching discs until none touch. Output sorted by center x, then y.
std::vector<FireSource> merge_fires(std::vector<FireSource> sources);

/// Marks Fire on every cell whose center lies within a disc. Never clears Fire.
GridMap rasterize_fire(const std::vector<FireSource>& sources, GridMap map);
void rasterize_fire_inplace(const std::vector<FireSource>& sources, GridMap& map);

}  // namespace escape
