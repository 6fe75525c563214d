#include "cli.hpp"

#include <array>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "escape/oracle.hpp"
#include "escape/png_io.hpp"
#include "escape/sim.hpp"

namespace escape::cli {

namespace {

namespace fs = std::filesystem;

constexpr const char* kCoordinateHelp =
    "Coordinates are X,Y with X the pixel column and Y the pixel row, origin at the top-left corner.";

struct UsageError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

std::vector<double> split_numbers(const std::string& text, std::size_t expected, const std::string& what)
{
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size())
        throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(what + ": '" + text + "' is not a comma-separated list of numbers");
    }
  }
  if (values.size() != expected)
    throw UsageError(what + ": expected " + std::to_string(expected) + " comma-separated values, got '" + text + "'");
  return values;
}

Cell parse_cell(const std::string& text, const std::string& what)
{
  const auto v = split_numbers(text, 2, what);
  if (v[0] != static_cast<int>(v[0]) || v[1] != static_cast<int>(v[1]))
    throw UsageError(what + ": coordinates must be integers");
  return {static_cast<int>(v[0]), static_cast<int>(v[1])};
}

FireSource parse_fire(const std::string& text)
{
  const auto v = split_numbers(text, 4, "--fires");
  if (!(v[2] > 0.0) || !(v[3] >= 0.0))
    throw UsageError("--fires: radius must be > 0 and intensity >= 0");
  return {{v[0], v[1]}, v[2], v[3]};
}

Weather parse_wind(const std::string& text)
{
  const auto v = split_numbers(text, 2, "--wind");
  if (!(v[1] >= 0.0))
    throw UsageError("--wind: speed must be >= 0");
  return {normalize_degrees(v[0]), v[1]};
}

void write_text(const fs::path& path, const std::string& text)
{
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw MapIoError("cannot write " + path.string());
  out << text;
  if (!out)
    throw MapIoError("short write to " + path.string());
}

std::array<std::size_t, 5> histogram(const RgbImage& img, std::vector<std::string>& offenders)
{
  std::array<std::size_t, 5> counts{};
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      const Rgb px = img.at(x, y);
      if (const auto cls = try_classify_pixel(px)) {
        ++counts[static_cast<std::size_t>(*cls)];
      } else if (offenders.size() < 10) {
        offenders.push_back(fmt::format("pixel ({},{}) color ({},{},{}) matches no legend class", x, y, px.r, px.g, px.b));
      } else {
        offenders.emplace_back();  // counted, not listed
      }
    }
  }
  return counts;
}

std::string histogram_line(const std::array<std::size_t, 5>& c)
{
  return fmt::format("background={} good_road={} bad_road={} fire={} smoke={}", c[0], c[1], c[2], c[3], c[4]);
}

struct PlanOptions
{
  std::string map;
  std::string start;
  std::string goal;
  std::vector<std::string> fires;
  std::string wind;
  std::string out;
  std::string report;
  std::uint64_t seed = 0;
};

void add_plan_options(CLI::App& cmd, PlanOptions& o)
{
  cmd.add_option("--map", o.map, "Classified road-network PNG")->required();
  cmd.add_option("--start", o.start, "Start cell X,Y")->required();
  cmd.add_option("--goal", o.goal, "Goal cell X,Y")->required();
  cmd.add_option("--fires", o.fires, "Fire source cx,cy,radius,intensity (repeatable)")->take_all();
  cmd.add_option("--wind", o.wind, "Wind direction_degrees,speed (0 = east, 90 = down)");
  cmd.add_option("--out", o.out, "Write the route overlay PNG here");
  cmd.add_option("--report", o.report, "Write the JSON report here");
  cmd.add_option("--seed", o.seed, "Seed for the smoke burst");
}

int cmd_plan(const PlanOptions& o, bool reference, std::ostream& out, std::ostream& err)
{
  const Cell start = parse_cell(o.start, "--start");
  const Cell goal = parse_cell(o.goal, "--goal");
  std::vector<FireSource> fires;
  for (const auto& f : o.fires)
    fires.push_back(parse_fire(f));
  const Weather wind = o.wind.empty() ? Weather{} : parse_wind(o.wind);

  GridMap map = [&] {
    try {
      return load_map(read_png(o.map));
    } catch (const ClassificationError& e) {
      throw MapIoError(o.map + ": " + e.what());
    }
  }();
  if (!map.in_bounds(start))
    throw UsageError("--start: cell lies outside the " + std::to_string(map.width()) + "x" +
                     std::to_string(map.height()) + " map");
  if (!map.in_bounds(goal))
    throw UsageError("--goal: cell lies outside the " + std::to_string(map.width()) + "x" +
                     std::to_string(map.height()) + " map");

  // Stamp the fires and one burst of smoke.
  fires = merge_fires(std::move(fires));
  rasterize_fire_inplace(fires, map);
  Rng rng(o.seed);
  const SmokeParams smoke_params;
  std::vector<SmokeParticle> smoke;
  for (const auto& f : fires) {
    auto burst = emit_smoke(f, smoke_params, wind, rng);
    smoke.insert(smoke.end(), burst.begin(), burst.end());
  }
  rasterize_smoke_inplace(smoke, map);

  PlanResult result;
  try {
    const CostParams params;
    result = reference ? dijkstra_reference(map, params, start, goal) : plan(map, params, start, goal);
  } catch (const HazardAtEndpoint& e) {
    err << e.what() << "\n";
    return kPlanningFailed;
  } catch (const NoRouteFound& e) {
    err << e.what() << "\n";
    return kPlanningFailed;
  }

  if (!o.out.empty())
    write_png(o.out, render(map, result.path, Markers{start, goal}));
  if (!o.report.empty()) {
    nlohmann::ordered_json j;
    j["total_cost"] = result.total_cost;
    j["path_length"] = result.path.size();
    j["expanded"] = result.expanded;
    auto& path = j["path"] = nlohmann::ordered_json::array();
    for (const auto& c : result.path)
      path.push_back({c.x, c.y});
    write_text(o.report, j.dump(2) + "\n");
  }
  out << fmt::format("{}", result.total_cost) << "\n";
  return kOk;
}

struct SimulateOptions
{
  std::string scenario;
  std::string out;
  bool frames = false;
  std::optional<std::uint64_t> seed;
};

int cmd_simulate(const SimulateOptions& o, std::ostream& out, std::ostream& err)
{
  Scenario scenario;
  try {
    scenario = load_scenario(o.scenario);
  } catch (const ConfigError& e) {
    err << "invalid scenario " << o.scenario << ": " << e.what() << "\n";
    return kUsage;
  }
  if (o.seed)
    scenario.seed = *o.seed;

  const fs::path dir = o.out;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec)
    throw MapIoError("cannot create " + dir.string() + ": " + ec.message());

  FrameSink sink;
  if (o.frames) {
    sink = [&](int tick, const SimState& state) {
      write_png(dir / fmt::format("frame_{:05d}.png", tick), render_frame(state, scenario));
    };
  }

  SimReport report;
  try {
    report = run(scenario, sink);
  } catch (const ClassificationError& e) {
    throw MapIoError(scenario.map.string() + ": " + e.what());
  } catch (const ConfigError& e) {
    err << "invalid scenario " << o.scenario << ": " << e.what() << "\n";
    return kUsage;
  }

  write_text(dir / "report.json", report_json(report));
  write_text(dir / "ticks.csv", report_csv(report));
  out << fmt::format("outcome={} final_cost={}", to_string(report.outcome.kind),
                     report.final_cost ? fmt::format("{}", *report.final_cost) : std::string("none"))
      << "\n";
  return kOk;
}

struct ValidateOptions
{
  std::string map;
  std::string scenario;
};

int report_offenders(const std::vector<std::string>& offenders, std::ostream& err)
{
  std::size_t listed = 0;
  for (const auto& o : offenders) {
    if (o.empty())
      continue;
    err << o << "\n";
    ++listed;
  }
  if (offenders.size() > listed)
    err << "... " << offenders.size() - listed << " more\n";
  return kValidationFailed;
}

int cmd_validate(const ValidateOptions& o, std::ostream& out, std::ostream& err)
{
  if (o.map.empty() == o.scenario.empty())
    throw UsageError("validate takes exactly one of --map or --scenario");

  std::vector<std::string> offenders;
  if (!o.map.empty()) {
    const auto counts = histogram(read_png(o.map), offenders);
    if (!offenders.empty())
      return report_offenders(offenders, err);
    out << histogram_line(counts) << "\n";
    return kOk;
  }

  Scenario scenario;
  try {
    scenario = load_scenario(o.scenario);
  } catch (const ConfigError& e) {
    err << e.what() << "\n";
    return kValidationFailed;
  }
  const RgbImage img = read_png(scenario.map);
  const auto counts = histogram(img, offenders);
  if (!offenders.empty())
    return report_offenders(offenders, err);
  const GridMap map = load_map(img);
  if (!map.in_bounds(scenario.start))
    offenders.push_back("/start: outside the map");
  if (!map.in_bounds(scenario.goal))
    offenders.push_back("/goal: outside the map");
  if (!offenders.empty())
    return report_offenders(offenders, err);
  out << histogram_line(counts) << "\n";
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  CLI::App app{std::string("Wildfire escape-route planner and hazard simulator.\n") + kCoordinateHelp,
               "escape_route"};
  app.require_subcommand(1);

  PlanOptions plan_opts;
  auto* plan_cmd = app.add_subcommand("plan", "Plan one route on a map with optional fires stamped on it");
  add_plan_options(*plan_cmd, plan_opts);

  PlanOptions ref_opts;
  auto* ref_cmd = app.add_subcommand("reference", "Same as plan, using the exhaustive uniform-cost reference search");
  add_plan_options(*ref_cmd, ref_opts);

  SimulateOptions sim_opts;
  auto* sim_cmd = app.add_subcommand("simulate", "Run a scenario file through the dynamic fire/smoke simulation");
  sim_cmd->add_option("--scenario", sim_opts.scenario, "Scenario JSON")->required();
  sim_cmd->add_option("--out", sim_opts.out, "Output directory")->required();
  sim_cmd->add_flag("--frames", sim_opts.frames, "Write frame_NNNNN.png per tick");
  sim_cmd->add_option("--seed", sim_opts.seed, "Override the scenario seed");

  ValidateOptions val_opts;
  auto* val_cmd = app.add_subcommand("validate", "Check a map's legend colors or a scenario's invariants");
  val_cmd->add_option("--map", val_opts.map, "Map PNG");
  val_cmd->add_option("--scenario", val_opts.scenario, "Scenario JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*plan_cmd)
      return cmd_plan(plan_opts, false, out, err);
    if (*ref_cmd)
      return cmd_plan(ref_opts, true, out, err);
    if (*sim_cmd)
      return cmd_simulate(sim_opts, out, err);
    if (*val_cmd)
      return cmd_validate(val_opts, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const MapIoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace escape::cli
