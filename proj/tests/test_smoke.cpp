#include <cmath>
#include <numeric>
#include <set>

#include <doctest.h>

#include "escape/smoke.hpp"
#include "test_support.hpp"

using namespace escape;

TEST_CASE("emit_smoke counts")
{
  const SmokeParams p;  // alpha 10
  Rng rng(1);
  CHECK(emit_smoke({{5, 5}, 2, 0}, p, {0, 1}, rng).empty());
  CHECK(emit_smoke({{5, 5}, 2, 2}, p, {0, 1}, rng).size() == 20);
  CHECK(emit_smoke({{5, 5}, 2, 0.25}, p, {0, 1}, rng).size() == 3);  // ceil(2.5)
}

TEST_CASE("emit_smoke places particles in the downwind ring")
{
  SmokeParams p;
  p.angular_spread = 60;
  const FireSource f{{100, 100}, 4, 1000};  // 10,000 particles
  const Weather east{0, 1.5};
  Rng rng(42);
  const auto particles = emit_smoke(f, p, east, rng);
  REQUIRE(particles.size() == 10000);

  double sin_sum = 0, cos_sum = 0;
  for (const auto& s : particles) {
    const Vec2 off = s.position - f.center;
    const double rho = norm(off);
    CHECK(rho >= f.radius - 1e-9);
    CHECK(rho <= f.radius + p.band + 1e-9);
    const double angle = rad2deg(std::atan2(off.y, off.x));
    CHECK(std::abs(angle) <= 60.0 + 1e-9);
    CHECK(s.gray >= kSmokeGrayLow);
    CHECK(s.gray <= kSmokeGrayHigh);
    CHECK(s.age == 0);
    sin_sum += std::sin(deg2rad(angle));
    cos_sum += std::cos(deg2rad(angle));
  }
  const double mean_angle = rad2deg(std::atan2(sin_sum, cos_sum));
  CHECK(std::abs(mean_angle) <= 2.0);
}

TEST_CASE("emit_smoke without wind covers every direction")
{
  const SmokeParams p;
  Rng rng(3);
  const auto particles = emit_smoke({{0, 0}, 1, 400}, p, {}, rng);
  int quadrant[4] = {};
  for (const auto& s : particles)
    ++quadrant[(s.position.x >= 0 ? 0 : 1) + (s.position.y >= 0 ? 0 : 2)];
  for (int q : quadrant)
    CHECK(q > 800);
}

TEST_CASE("emit_smoke gray values cover the band")
{
  Rng rng(9);
  const auto particles = emit_smoke({{0, 0}, 1, 500}, SmokeParams{}, {}, rng);
  int lo = 255, hi = 0;
  for (const auto& s : particles) {
    lo = std::min(lo, s.gray);
    hi = std::max(hi, s.gray);
  }
  CHECK(lo == kSmokeGrayLow);
  CHECK(hi == kSmokeGrayHigh);
}

TEST_CASE("advect_smoke")
{
  SmokeParams p;
  p.lifetime = 25;

  SUBCASE("no wind")
  {
    const auto out = advect_smoke({{{4, 4}, 100, 3}}, {}, p, 2);
    REQUIRE(out.size() == 1);
    CHECK(out[0].position == Vec2{4, 4});
    CHECK(out[0].age == 5);
  }

  SUBCASE("drift east")
  {
    const auto out = advect_smoke({{{4, 4}, 100, 0}}, {0, 1}, p, 3);
    REQUIRE(out.size() == 1);
    CHECK(out[0].position.x == doctest::Approx(7));
    CHECK(out[0].position.y == doctest::Approx(4));
    CHECK(out[0].gray == 100);
  }

  SUBCASE("expiry")
  {
    const auto out = advect_smoke({{{1, 1}, 90, 25}, {{2, 2}, 90, 24}}, {}, p, 1);
    REQUIRE(out.size() == 1);
    CHECK(out[0].age == 25);
  }
}

TEST_CASE("rasterize_smoke")
{
  const GridMap empty(10, 10, BaseClass::GoodRoad);

  CHECK(rasterize_smoke({}, empty).count(Hazard::Smoke) == 0);

  const GridMap one = rasterize_smoke({{{3.4, 7.9}, 150, 0}}, empty);
  CHECK(one.count(Hazard::Smoke) == 1);
  CHECK(one.hazard({3, 7}) == Hazard::Smoke);
  CHECK(one.smoke_gray({3, 7}) == 150);

  SUBCASE("fire wins")
  {
    GridMap m = empty;
    m.set_hazard({3, 7}, Hazard::Fire);
    m = rasterize_smoke({{{3.4, 7.9}, 150, 0}}, m);
    CHECK(m.hazard({3, 7}) == Hazard::Fire);
    CHECK(m.count(Hazard::Smoke) == 0);
  }

  SUBCASE("brightest particle sets the gray")
  {
    const GridMap m = rasterize_smoke({{{1.1, 1.1}, 90, 0}, {{1.9, 1.2}, 180, 0}, {{1.5, 1.5}, 120, 0}}, empty);
    CHECK(m.smoke_gray({1, 1}) == 180);
  }

  SUBCASE("smoke dissipates when particles leave")
  {
    const GridMap later = rasterize_smoke({{{8.5, 0.5}, 100, 0}}, one);
    CHECK(later.hazard({3, 7}) == Hazard::None);
    CHECK(later.hazard({8, 0}) == Hazard::Smoke);
  }

  SUBCASE("out-of-bounds particles are ignored")
  {
    const GridMap m = rasterize_smoke({{{-0.5, 3}, 100, 0}, {{10.0, 3}, 100, 0}, {{3, 1e12}, 100, 0}}, empty);
    CHECK(m.count(Hazard::Smoke) == 0);
  }
}

TEST_CASE("property: smoke invariants over a simulated plume")
{
  std::mt19937_64 gen(77);
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 30; ++trial) {
    SmokeParams p;
    p.emission_rate = 1 + 20 * u(gen);
    p.lifetime = 1 + static_cast<int>(30 * u(gen));
    const Weather w{360 * u(gen), 2 * u(gen)};
    std::vector<FireSource> fires{{{20 + 20 * u(gen), 20 + 20 * u(gen)}, 1 + 3 * u(gen), 2 * u(gen)},
                                  {{20 + 20 * u(gen), 20 + 20 * u(gen)}, 1 + 3 * u(gen), 2 * u(gen)}};
    GridMap m = rasterize_fire(fires, GridMap(60, 60, BaseClass::GoodRoad));
    Rng rng(trial);
    std::vector<SmokeParticle> smoke;
    for (int t = 0; t < 40; ++t) {
      smoke = advect_smoke(std::move(smoke), w, p, 1);
      std::size_t expected = 0;
      for (const auto& f : fires) {
        const auto burst = emit_smoke(f, p, w, rng);
        REQUIRE(burst.size() == static_cast<std::size_t>(std::ceil(p.emission_rate * f.intensity)));
        expected += burst.size();
        smoke.insert(smoke.end(), burst.begin(), burst.end());
      }
      CHECK(expected == emission_count(fires[0], p) + emission_count(fires[1], p));
      m = rasterize_smoke(smoke, m);

      for (const auto& s : smoke)
        REQUIRE(s.age <= p.lifetime);
      std::set<Cell> occupied;
      for (const auto& s : smoke) {
        if (s.position.x >= 0 && s.position.y >= 0 && s.position.x < 60 && s.position.y < 60)
          occupied.insert({static_cast<int>(std::floor(s.position.x)), static_cast<int>(std::floor(s.position.y))});
      }
      for (int y = 0; y < 60; ++y) {
        for (int x = 0; x < 60; ++x) {
          if (m.hazard({x, y}) == Hazard::Smoke)
            REQUIRE(occupied.contains({x, y}));
        }
      }
    }
  }
}

TEST_CASE("SmokeParams validation")
{
  SmokeParams p;
  CHECK_NOTHROW(p.validate());
  p.lifetime = 0;
  CHECK_THROWS_AS(p.validate(), ConfigError);
  p = {};
  p.band = -1;
  CHECK_THROWS_AS(p.validate(), ConfigError);
}
