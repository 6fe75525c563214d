#include "escape/scenario.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>
#include <set>

#include <json.hpp>

namespace escape {

using nlohmann::json;

const Weather& Scenario::weather_at(int tick) const
{
  const WeatherEntry* current = &weather_schedule.front();
  for (const auto& e : weather_schedule) {
    if (e.from_tick > tick)
      break;
    current = &e;
  }
  return current->weather;
}

void Scenario::validate() const
{
  if (map.empty())
    throw ConfigError("/map", "must name a map file");
  if (ticks < 1)
    throw ConfigError("/ticks", "must be >= 1");
  if (evacuee_speed < 1)
    throw ConfigError("/evacuee_speed", "must be an integer >= 1");
  if (weather_schedule.empty())
    throw ConfigError("/weather_schedule", "must have at least one entry");
  if (weather_schedule.front().from_tick != 0)
    throw ConfigError("/weather_schedule/0/from_tick", "first entry must start at tick 0");
  for (std::size_t i = 0; i < weather_schedule.size(); ++i) {
    const auto path = "/weather_schedule/" + std::to_string(i);
    if (i > 0 && weather_schedule[i].from_tick <= weather_schedule[i - 1].from_tick)
      throw ConfigError(path + "/from_tick", "entries must be strictly increasing");
    if (!(weather_schedule[i].weather.wind_speed >= 0.0))
      throw ConfigError(path + "/wind_speed", "must be >= 0");
  }
  for (std::size_t i = 0; i < initial_fires.size(); ++i) {
    const auto path = "/initial_fires/" + std::to_string(i);
    if (!(initial_fires[i].radius > 0.0))
      throw ConfigError(path + "/radius", "must be > 0");
    if (!(initial_fires[i].intensity >= 0.0))
      throw ConfigError(path + "/intensity", "must be >= 0");
  }
  const auto nest = [](const char* prefix, auto&& check) {
    try {
      check();
    } catch (const ConfigError& e) {
      throw ConfigError(std::string(prefix) + "/" + e.field(), e.reason());
    }
  };
  nest("/fire_params", [&] { fire_params.validate(); });
  nest("/smoke_params", [&] { smoke_params.validate(); });
  nest("/cost_params", [&] { cost_params.validate(); });
}

namespace {

// Typed accessors that report failures by JSON path and reject unknown keys.
class ObjectReader
{
public:
  ObjectReader(const json& j, std::string path, std::set<std::string> allowed)
    : j_(j), path_(std::move(path))
  {
    if (!j.is_object())
      throw ConfigError(path_.empty() ? "/" : path_, "expected an object");
    for (const auto& [key, _] : j.items()) {
      if (!allowed.contains(key))
        throw ConfigError(path_ + "/" + key, "unknown field");
    }
  }

  bool has(const std::string& key) const { return j_.contains(key); }
  std::string at(const std::string& key) const { return path_ + "/" + key; }

  const json& required(const std::string& key) const
  {
    if (!j_.contains(key))
      throw ConfigError(at(key), "missing required field");
    return j_.at(key);
  }

  double number(const std::string& key, double fallback) const
  {
    return has(key) ? as_number(j_.at(key), at(key)) : fallback;
  }

  int integer(const std::string& key, int fallback) const
  {
    return has(key) ? as_int(j_.at(key), at(key)) : fallback;
  }

  static double as_number(const json& v, const std::string& path)
  {
    if (!v.is_number())
      throw ConfigError(path, "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d))
      throw ConfigError(path, "must be finite");
    return d;
  }

  static int as_int(const json& v, const std::string& path)
  {
    if (!v.is_number_integer())
      throw ConfigError(path, "expected an integer");
    const auto i = v.get<std::int64_t>();
    if (i < std::numeric_limits<int>::min() || i > std::numeric_limits<int>::max())
      throw ConfigError(path, "integer out of range");
    return static_cast<int>(i);
  }

private:
  const json& j_;
  std::string path_;
};

std::pair<double, double> number_pair(const json& v, const std::string& path)
{
  if (!v.is_array() || v.size() != 2)
    throw ConfigError(path, "expected a two-element array");
  return {ObjectReader::as_number(v[0], path + "/0"), ObjectReader::as_number(v[1], path + "/1")};
}

Cell cell_of(const json& v, const std::string& path)
{
  if (!v.is_array() || v.size() != 2)
    throw ConfigError(path, "expected [x, y]");
  return {ObjectReader::as_int(v[0], path + "/0"), ObjectReader::as_int(v[1], path + "/1")};
}

}  // namespace

Scenario parse_scenario(std::string_view json_text, const std::filesystem::path& base_dir)
{
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("malformed JSON: ") + e.what());
  }

  const ObjectReader top(root, "",
                         {"map", "initial_fires", "weather_schedule", "start", "goal", "fire_params", "smoke_params",
                          "cost_params", "ticks", "evacuee_speed", "seed"});
  Scenario s;

  const json& map = top.required("map");
  if (!map.is_string())
    throw ConfigError("/map", "expected a string");
  s.map = map.get<std::string>();
  if (s.map.is_relative() && !base_dir.empty())
    s.map = base_dir / s.map;

  s.start = cell_of(top.required("start"), "/start");
  s.goal = cell_of(top.required("goal"), "/goal");
  s.ticks = ObjectReader::as_int(top.required("ticks"), "/ticks");
  s.evacuee_speed = top.integer("evacuee_speed", 1);

  if (top.has("seed")) {
    const json& seed = root.at("seed");
    if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0))
      throw ConfigError("/seed", "expected a non-negative integer");
    s.seed = seed.get<std::uint64_t>();
  }

  if (top.has("initial_fires")) {
    const json& fires = root.at("initial_fires");
    if (!fires.is_array())
      throw ConfigError("/initial_fires", "expected an array");
    for (std::size_t i = 0; i < fires.size(); ++i) {
      const auto path = "/initial_fires/" + std::to_string(i);
      const ObjectReader f(fires[i], path, {"center", "radius", "intensity"});
      FireSource src;
      const auto [cx, cy] = number_pair(f.required("center"), f.at("center"));
      src.center = {cx, cy};
      src.radius = ObjectReader::as_number(f.required("radius"), f.at("radius"));
      src.intensity = f.number("intensity", 1.0);
      s.initial_fires.push_back(src);
    }
  }

  if (top.has("weather_schedule")) {
    const json& sched = root.at("weather_schedule");
    if (!sched.is_array())
      throw ConfigError("/weather_schedule", "expected an array");
    s.weather_schedule.clear();
    for (std::size_t i = 0; i < sched.size(); ++i) {
      const auto path = "/weather_schedule/" + std::to_string(i);
      const ObjectReader e(sched[i], path, {"from_tick", "wind_direction", "wind_speed"});
      WeatherEntry entry;
      entry.from_tick = ObjectReader::as_int(e.required("from_tick"), e.at("from_tick"));
      entry.weather.wind_direction = normalize_degrees(e.number("wind_direction", 0.0));
      entry.weather.wind_speed = e.number("wind_speed", 0.0);
      s.weather_schedule.push_back(entry);
    }
  }

  if (top.has("fire_params")) {
    const ObjectReader p(root.at("fire_params"), "/fire_params", {"growth_rate", "advect_gain", "p_base", "wind_bias"});
    s.fire_params.growth_rate = p.number("growth_rate", s.fire_params.growth_rate);
    s.fire_params.advect_gain = p.number("advect_gain", s.fire_params.advect_gain);
    s.fire_params.p_base = p.number("p_base", s.fire_params.p_base);
    s.fire_params.wind_bias = p.number("wind_bias", s.fire_params.wind_bias);
  }

  if (top.has("smoke_params")) {
    const ObjectReader p(root.at("smoke_params"), "/smoke_params",
                         {"emission_rate", "band", "angular_spread", "drift_gain", "lifetime"});
    s.smoke_params.emission_rate = p.number("emission_rate", s.smoke_params.emission_rate);
    s.smoke_params.band = p.number("band", s.smoke_params.band);
    s.smoke_params.angular_spread = p.number("angular_spread", s.smoke_params.angular_spread);
    s.smoke_params.drift_gain = p.number("drift_gain", s.smoke_params.drift_gain);
    s.smoke_params.lifetime = p.integer("lifetime", s.smoke_params.lifetime);
  }

  if (top.has("cost_params")) {
    const ObjectReader p(root.at("cost_params"), "/cost_params", {"good_road", "bad_road"});
    if (p.has("good_road")) {
      const auto [d1, d2] = number_pair(root.at("cost_params").at("good_road"), p.at("good_road"));
      s.cost_params.good_road = {d1, d2};
    }
    if (p.has("bad_road")) {
      const auto [d1, d2] = number_pair(root.at("cost_params").at("bad_road"), p.at("bad_road"));
      s.cost_params.bad_road = {d1, d2};
    }
  }

  s.validate();
  return s;
}

std::string sha256_hex(std::string_view bytes)
{
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr))
    throw Error("SHA-256 digest failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xf]);
  }
  return out;
}

Scenario load_scenario(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw MapIoError("cannot open scenario " + path.string());
  const std::string bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  Scenario s = parse_scenario(bytes, path.parent_path());
  s.source_sha256 = sha256_hex(bytes);
  return s;
}

}  // namespace escape
