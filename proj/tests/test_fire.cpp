#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include <doctest.h>

#include "escape/fire.hpp"
#include "test_support.hpp"

using namespace escape;

namespace {

// Brute force over every cell of the map, independent of the bounding-box
// walk in the implementation.
std::set<Cell> disc_cells(const GridMap& m, Vec2 center, double radius)
{
  std::set<Cell> out;
  for (int y = 0; y < m.height(); ++y) {
    for (int x = 0; x < m.width(); ++x) {
      const double dx = x - center.x;
      const double dy = y - center.y;
      if (dx * dx + dy * dy <= radius * radius)
        out.insert({x, y});
    }
  }
  return out;
}

std::set<Cell> annulus_road_cells(const GridMap& m, Vec2 center, double radius)
{
  std::set<Cell> out;
  const double outer = radius + kSpreadBand;
  for (int y = 0; y < m.height(); ++y) {
    for (int x = 0; x < m.width(); ++x) {
      const double d2 = (x - center.x) * (x - center.x) + (y - center.y) * (y - center.y);
      if (d2 > radius * radius && d2 <= outer * outer && m.base({x, y}) != BaseClass::Background)
        out.insert({x, y});
    }
  }
  return out;
}

std::set<Cell> fire_cells(const GridMap& m)
{
  std::set<Cell> out;
  for (int y = 0; y < m.height(); ++y) {
    for (int x = 0; x < m.width(); ++x) {
      if (m.hazard({x, y}) == Hazard::Fire)
        out.insert({x, y});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("advect_fire")
{
  const FireParams p;  // advect_gain 0.5
  const FireSource f{{10, 10}, 5, 1};

  CHECK(advect_fire(f, {45, 0}, p, 1).center == Vec2{10, 10});

  const auto east = advect_fire(f, {0, 2}, p, 1);
  CHECK(east.center.x == doctest::Approx(11).epsilon(1e-12));
  CHECK(east.center.y == doctest::Approx(10).epsilon(1e-12));
  CHECK(east.radius == 5);
  CHECK(east.intensity == 1);

  const auto south = advect_fire(f, {90, 2}, p, 1);
  CHECK(south.center.x == doctest::Approx(10).epsilon(1e-12));
  CHECK(south.center.y == doctest::Approx(11).epsilon(1e-12));
}

TEST_CASE("grow_fire")
{
  FireParams p;
  const FireSource f{{3, 4}, 5, 1};
  CHECK(grow_fire(f, p, 1).radius == 6);
  CHECK(grow_fire(f, p, 0).radius == 5);
  p.growth_rate = 0.25;
  CHECK(grow_fire(f, p, 4).radius == 6);
  CHECK(grow_fire(f, p, 4).center == f.center);
}

TEST_CASE("spread_mask")
{
  const GridMap roads(41, 41, BaseClass::GoodRoad);
  const FireSource f{{20, 20}, 3.0, 1.0};
  const Weather calm{};

  SUBCASE("zero probability")
  {
    FireParams p;
    p.p_base = 0.0;
    Rng rng(1);
    for (int i = 0; i < 50; ++i)
      CHECK(spread_mask(f, roads, {30, 3}, p, rng).empty());
  }

  SUBCASE("probability one takes the whole road annulus")
  {
    FireParams p;
    p.p_base = 1.0;
    p.wind_bias = 0.0;
    // knock out a row so the road filter is exercised
    std::vector<BaseClass> base(41 * 41, BaseClass::GoodRoad);
    std::fill_n(base.begin() + 17 * 41, 41, BaseClass::Background);
    const GridMap m(41, 41, std::move(base));
    Rng rng(2);
    const auto mask = spread_mask(f, m, calm, p, rng);
    CHECK(std::set<Cell>(mask.begin(), mask.end()) == annulus_road_cells(m, f.center, f.radius));
    CHECK(std::is_sorted(mask.begin(), mask.end()));
  }

  SUBCASE("Monte-Carlo inclusion frequency")
  {
    FireParams p;
    p.p_base = 0.5;
    p.wind_bias = 0.0;
    const auto annulus = annulus_road_cells(roads, f.center, f.radius);
    REQUIRE(annulus.size() == 40);

    std::map<Cell, int> hits;
    Rng rng(20240824);
    constexpr int kTrials = 10000;
    for (int t = 0; t < kTrials; ++t) {
      for (const Cell c : spread_mask(f, roads, calm, p, rng))
        ++hits[c];
    }
    for (const Cell c : annulus) {
      const double freq = static_cast<double>(hits[c]) / kTrials;
      CHECK(std::abs(freq - 0.5) <= 0.02);
    }
    CHECK(hits.size() == 40);
  }

  SUBCASE("downwind cells ignite more often")
  {
    const FireParams p;  // p_base 0.15, wind_bias 0.5
    const Weather east{0, 2};
    CHECK(ignition_probability(f, east, p, {4, 0}) == doctest::Approx(0.15 * 1.5));
    CHECK(ignition_probability(f, east, p, {-4, 0}) == doctest::Approx(0.15 * 0.5));
    CHECK(ignition_probability(f, east, p, {0, 4}) == doctest::Approx(0.15));
    CHECK(ignition_probability(f, calm, p, {4, 0}) == doctest::Approx(0.15));

    // intensity factor saturates at 2
    FireSource hot = f;
    hot.intensity = 50;
    FireParams strong = p;
    strong.p_base = 0.6;
    CHECK(ignition_probability(hot, east, strong, {1, 0}) == 1.0);
    hot.intensity = 3;
    CHECK(ignition_probability(hot, calm, p, {1, 0}) == doctest::Approx(0.3));
  }

  SUBCASE("deterministic under a fixed seed")
  {
    const FireParams p;
    Rng a(99);
    Rng b(99);
    for (int i = 0; i < 20; ++i)
      CHECK(spread_mask(f, roads, {200, 1}, p, a) == spread_mask(f, roads, {200, 1}, p, b));
  }

  SUBCASE("disc hanging off the map")
  {
    FireParams p;
    p.p_base = 1.0;
    Rng rng(3);
    const auto mask = spread_mask({{0, 0}, 2, 1}, roads, calm, p, rng);
    CHECK(std::set<Cell>(mask.begin(), mask.end()) == annulus_road_cells(roads, {0, 0}, 2));
  }
}

TEST_CASE("merge_fires")
{
  SUBCASE("disjoint discs")
  {
    const auto out = merge_fires({{{0, 0}, 3, 1}, {{10, 0}, 3, 1}});
    CHECK(out.size() == 2);
  }

  SUBCASE("enclosing disc")
  {
    const auto out = merge_fires({{{6, 0}, 4, 1}, {{0, 0}, 4, 2}});
    REQUIRE(out.size() == 1);
    CHECK(out[0].center.x == doctest::Approx(3));
    CHECK(out[0].center.y == doctest::Approx(0));
    CHECK(out[0].radius == doctest::Approx(7));
    CHECK(out[0].intensity == doctest::Approx(3));
  }

  SUBCASE("containment keeps the larger disc")
  {
    const auto out = merge_fires({{{0, 0}, 10, 1}, {{2, 0}, 1, 1}});
    REQUIRE(out.size() == 1);
    CHECK(out[0].center == Vec2{0, 0});
    CHECK(out[0].radius == 10);
    CHECK(out[0].intensity == 2);
  }

  SUBCASE("tangent discs merge")
  {
    CHECK(merge_fires({{{0, 0}, 3, 1}, {{6, 0}, 3, 1}}).size() == 1);
  }

  SUBCASE("chain reaction")
  {
    // a+b merge into a disc that then reaches c, which touched neither
    const FireSource a{{0, 0}, 3, 1};
    const FireSource b{{0, 6}, 3, 1};
    const FireSource c{{8, 3}, 2.5, 1};
    REQUIRE_FALSE(should_merge(a, c));
    REQUIRE_FALSE(should_merge(b, c));
    const auto out = merge_fires({a, b, c});
    REQUIRE(out.size() == 1);
    CHECK(out[0].intensity == 3);
  }

  SUBCASE("output sorted by x then y")
  {
    const auto out = merge_fires({{{30, 5}, 1, 1}, {{10, 9}, 1, 1}, {{10, 2}, 1, 1}});
    REQUIRE(out.size() == 3);
    CHECK(out[0].center == Vec2{10, 2});
    CHECK(out[1].center == Vec2{10, 9});
    CHECK(out[2].center == Vec2{30, 5});
  }
}

TEST_CASE("property: merge reaches a fixpoint and covers its inputs")
{
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> pos(0, 60);
  std::uniform_real_distribution<double> rad(0.5, 8);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<FireSource> in(std::uniform_int_distribution<int>(1, 8)(gen));
    double intensity = 0;
    for (auto& f : in) {
      f = {{pos(gen), pos(gen)}, rad(gen), rad(gen) / 4};
      intensity += f.intensity;
    }
    const auto out = merge_fires(in);
    double out_intensity = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
      out_intensity += out[i].intensity;
      for (std::size_t j = i + 1; j < out.size(); ++j)
        REQUIRE_FALSE(should_merge(out[i], out[j]));
    }
    CHECK(out_intensity == doctest::Approx(intensity));
    // every input disc lies inside some output disc
    for (const auto& f : in) {
      const bool covered = std::any_of(out.begin(), out.end(), [&](const FireSource& o) {
        return distance(o.center, f.center) + f.radius <= o.radius + 1e-9;
      });
      CHECK(covered);
    }
  }
}

TEST_CASE("rasterize_fire")
{
  const GridMap empty(11, 11, BaseClass::GoodRoad);

  SUBCASE("sub-cell radius")
  {
    const GridMap m = rasterize_fire({{{5, 5}, 0.6, 1}}, empty);
    CHECK(fire_cells(m) == std::set<Cell>{{5, 5}});
  }

  SUBCASE("radius 2 gives the 13-cell disc")
  {
    const GridMap m = rasterize_fire({{{5, 5}, 2.0, 1}}, empty);
    const auto expected = disc_cells(empty, {5, 5}, 2.0);
    CHECK(expected.size() == 13);
    CHECK(fire_cells(m) == expected);
  }

  SUBCASE("union of overlapping discs")
  {
    const FireSource a{{3, 3}, 2.5, 1};
    const FireSource b{{5.5, 4}, 1.7, 1};
    const GridMap m = rasterize_fire({a, b}, empty);
    auto expected = disc_cells(empty, a.center, a.radius);
    const auto other = disc_cells(empty, b.center, b.radius);
    expected.insert(other.begin(), other.end());
    CHECK(fire_cells(m) == expected);
  }

  SUBCASE("overwrites smoke, keeps existing fire")
  {
    GridMap m = empty;
    m.set_hazard({5, 5}, Hazard::Smoke, 100);
    m.set_hazard({0, 0}, Hazard::Fire);
    m = rasterize_fire({{{5, 5}, 0.5, 1}}, m);
    CHECK(m.hazard({5, 5}) == Hazard::Fire);
    CHECK(m.hazard({0, 0}) == Hazard::Fire);
  }

  SUBCASE("disc off the map is clipped")
  {
    const GridMap m = rasterize_fire({{{-3, -3}, 5, 1}}, empty);
    CHECK(fire_cells(m) == disc_cells(empty, {-3, -3}, 5));
    CHECK(rasterize_fire({{{500, 500}, 3, 1}}, empty).count(Hazard::Fire) == 0);
  }
}

TEST_CASE("property: a full fire tick never loses fire and moves downwind")
{
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    GridMap m = escape::testing::random_map(gen, {40, 0.3, 0.3, 0.0});
    std::vector<FireSource> fires;
    for (int i = 0; i < 3; ++i)
      fires.push_back({{u(gen) * m.width(), u(gen) * m.height()}, 0.5 + 3 * u(gen), 2 * u(gen)});
    fires = merge_fires(fires);
    rasterize_fire_inplace(fires, m);

    const Weather w{360 * u(gen), 0.1 + 2 * u(gen)};
    FireParams p;
    p.growth_rate = u(gen);
    p.advect_gain = 0.1 + u(gen);
    Rng rng(trial);

    const auto before = fire_cells(m);
    std::vector<FireSource> next;
    for (const auto& f : fires) {
      const FireSource moved = advect_fire(f, w, p, 1.0);
      CHECK(dot(moved.center - f.center, w.wind_vector()) > 0.0);
      const FireSource grown = grow_fire(moved, p, 1.0);
      CHECK(grown.radius >= f.radius);
      next.push_back(grown);
    }
    const auto merged = merge_fires(next);
    for (const auto& f : merged) {
      for (const Cell c : spread_mask(f, m, w, p, rng))
        m.set_hazard(c, Hazard::Fire);
    }
    rasterize_fire_inplace(merged, m);
    const auto after = fire_cells(m);
    CHECK(std::includes(after.begin(), after.end(), before.begin(), before.end()));
  }
}

TEST_CASE("FireParams validation")
{
  FireParams p;
  CHECK_NOTHROW(p.validate());
  p.p_base = 1.5;
  CHECK_THROWS_AS(p.validate(), ConfigError);
  p = {};
  p.wind_bias = -0.1;
  CHECK_THROWS_AS(p.validate(), ConfigError);
  p = {};
  p.growth_rate = -1;
  CHECK_THROWS_AS(p.validate(), ConfigError);
}
