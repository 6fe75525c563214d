#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "escape/fire.hpp"
#include "escape/planner.hpp"
#include "escape/smoke.hpp"

namespace escape {

/// Weather in force from `from_tick` until the next entry.
struct WeatherEntry
{
  int from_tick = 0;
  Weather weather;
};

/// Everything that drives one deterministic run.
///
/// JSON layout (field names as below; `map` is resolved against the
/// directory holding the scenario file):
///
///     {
///       "map": "two_corridor_128.png",
///       "initial_fires": [{"center": [60, 72], "radius": 4, "intensity": 1}],
///       "weather_schedule": [{"from_tick": 0, "wind_direction": 270, "wind_speed": 0.5}],
///       "start": [10, 64], "goal": [117, 64],
///       "fire_params": {"growth_rate": 0.1, "advect_gain": 0.5, "p_base": 0.15, "wind_bias": 0.5},
///       "smoke_params": {"emission_rate": 10, "band": 3, "angular_spread": 60,
///                        "drift_gain": 1, "lifetime": 25},
///       "cost_params": {"good_road": [1, 1.4], "bad_road": [100, 140]},
///       "ticks": 400, "evacuee_speed": 1, "seed": 7
///     }
///
/// Required: map, start, goal, ticks. Everything else has defaults.
struct Scenario
{
  std::filesystem::path map;
  std::vector<FireSource> initial_fires;
  std::vector<WeatherEntry> weather_schedule{{0, {}}};
  Cell start;
  Cell goal;
  FireParams fire_params;
  SmokeParams smoke_params;
  CostParams cost_params;
  int ticks = 1;
  int evacuee_speed = 1;
  std::uint64_t seed = 0;

  /// SHA-256 of the scenario file bytes, hex. Empty when not loaded from a file.
  std::string source_sha256;

  /// Stepwise lookup: last entry with from_tick <= tick.
  const Weather& weather_at(int tick) const;

  /// Checks every invariant that does not need the map. Throws ConfigError
  /// with the JSON path of the offending field.
  void validate() const;
};

/// Parses scenario JSON. Relative map paths are resolved against `base_dir`.
/// Throws ConfigError with the offending field path.
Scenario parse_scenario(std::string_view json_text, const std::filesystem::path& base_dir = {});

/// Reads, hashes and parses a scenario file. Throws MapIoError when the file
/// cannot be read and ConfigError when it is malformed.
Scenario load_scenario(const std::filesystem::path& path);

std::string sha256_hex(std::string_view bytes);

}  // namespace escape
