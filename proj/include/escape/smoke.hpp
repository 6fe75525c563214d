#pragma once

#include <vector>

#include "escape/fire.hpp"

namespace escape {

struct SmokeParticle
{
  Vec2 position;
  int gray = 128;  ///< in [kSmokeGrayLow, kSmokeGrayHigh]
  int age = 0;     ///< ticks since emission

  friend bool operator==(const SmokeParticle&, const SmokeParticle&) = default;
};

inline constexpr int kSmokeGrayLow = 80;
inline constexpr int kSmokeGrayHigh = 200;

struct SmokeParams
{
  double emission_rate = 10.0;   ///< particles per unit intensity per tick
  double band = 3.0;             ///< emission ring width beyond the fire radius
  double angular_spread = 60.0;  ///< half-width around downwind, degrees
  double drift_gain = 1.0;
  int lifetime = 25;  ///< ticks

  void validate() const;
};

/// Number of particles one emission burst produces for `f`.
std::size_t emission_count(const FireSource& f, const SmokeParams& p);

/// Per particle the draws are: ring distance, angle, gray.
std::vector<SmokeParticle> emit_smoke(const FireSource& f, const SmokeParams& p, const Weather& w, Rng& rng);

/// Drifts downwind, ages by dt and drops particles older than the lifetime.
std::vector<SmokeParticle> advect_smoke(std::vector<SmokeParticle> particles, const Weather& w, const SmokeParams& p,
                                        int dt);

/// Replaces all Smoke in the overlay with the cells currently holding a
/// particle. Fire cells are left alone. The rendered gray is the brightest
/// particle in the cell.
GridMap rasterize_smoke(const std::vector<SmokeParticle>& particles, GridMap map);
void rasterize_smoke_inplace(const std::vector<SmokeParticle>& particles, GridMap& map);

}  // namespace escape
