#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "swim/model.hpp"

using namespace swim;
using std::numbers::pi;

namespace {

ErrorKind kind_of(auto fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ConfigError;
}

} // namespace

TEST_CASE("make_swimmer validation") {
  SwimmerParams p;
  SwimmerState s;
  CHECK_NOTHROW(make_swimmer(p, s));

  p.zeta = 0.99;
  CHECK(kind_of([&] { make_swimmer(p, s); }) == ErrorKind::InvalidGeometry);
  p.zeta = -1.1;
  CHECK(kind_of([&] { make_swimmer(p, s); }) == ErrorKind::InvalidGeometry);
  p.zeta = 1.2;
  CHECK_NOTHROW(make_swimmer(p, s));

  p = SwimmerParams{};
  p.R = 0.5;
  CHECK(kind_of([&] { make_swimmer(p, s); }) == ErrorKind::InvalidGeometry);
  p.R = 0.15;
  const Swimmer w = make_swimmer(p, s);
  CHECK(w.warnings().size() == 1);

  p = SwimmerParams{};
  p.L = 0;
  CHECK(kind_of([&] { make_swimmer(p, s); }) == ErrorKind::InvalidGeometry);
  p = SwimmerParams{};
  p.f_p = -1;
  CHECK_THROWS_AS(make_swimmer(p, s), Error);
  p.f_p = 0;
  CHECK_NOTHROW(make_swimmer(p, s));

  p = SwimmerParams{};
  p.R = -0.1;
  p.zeta = 1.0;
  CHECK(validate(p).size() == 2);

  s.tau = Vector3::Zero();
  CHECK_THROWS_AS(make_swimmer(SwimmerParams{}, s), Error);
}

TEST_CASE("make_swimmer normalises the axis") {
  SwimmerState s{Vector3(1, 2, 3), Vector3(0, 3, 4)};
  const Swimmer w = make_swimmer(SwimmerParams{}, s);
  CHECK(w.state().tau.norm() == doctest::Approx(1).epsilon(1e-15));
  CHECK(w.state().tau.y() == doctest::Approx(0.6));
}

TEST_CASE("medium invariants") {
  SwimmerParams p;
  CHECK(validate(p, Medium::bulk(1)).empty());
  CHECK_FALSE(validate(p, Medium::bulk(0)).empty());
  p.R = 0.04;
  CHECK(validate(p, Medium::film(1, 0.2)).empty());
  CHECK_FALSE(validate(p, Medium::film(1, 0.3)).empty()); // h > L/5
  p.R = 0.05;
  CHECK_FALSE(validate(p, Medium::film(1, 0.2)).empty()); // R > h/5
  CHECK_FALSE(validate(p, Medium::film(1, 0)).empty());
}

TEST_CASE("derived points") {
  SwimmerParams p;
  SUBCASE("center") {
    const auto pts = derived_points(make_swimmer(p, SwimmerState{}));
    CHECK((pts.prop - Vector3::Zero()).norm() == 0);
  }
  SUBCASE("tail") {
    p.zeta = -1;
    const auto pts = derived_points(p, SwimmerState{Vector3(1, 1, 0), Vector3::UnitY()});
    CHECK((pts.prop - pts.tail).norm() == 0);
  }
  SUBCASE("worked example") {
    p.L = 2;
    p.zeta = -2;
    p.R = 0.1;
    const auto pts = derived_points(make_swimmer(p, SwimmerState{}));
    CHECK((pts.prop - Vector3(-4, 0, 0)).norm() == 0);
    CHECK((pts.head - Vector3(2, 0, 0)).norm() == 0);
    CHECK((pts.tail - Vector3(-2, 0, 0)).norm() == 0);
  }
  SUBCASE("round trip") {
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int k = 0; k < 100; ++k) {
      SwimmerParams q;
      q.L = 0.5 + std::abs(u(rng));
      q.R = 0.05 * q.L;
      do q.zeta = u(rng) / 2; while (std::abs(std::abs(q.zeta) - 1) < 0.2);
      const Swimmer w = make_swimmer(q, {Vector3(u(rng), u(rng), u(rng)), Vector3(u(rng), u(rng), u(rng))});
      const auto& pts = w.points();
      const auto& st = w.state();
      CHECK(((pts.head + pts.tail) / 2 - st.center).norm() <= 1e-14 * (1 + st.center.norm()));
      CHECK((pts.prop - st.center).dot(st.tau) / q.L == doctest::Approx(q.zeta).epsilon(1e-13));
    }
  }
}

TEST_CASE("classify_swimmer") {
  auto c = classify_swimmer(-2);
  CHECK(c.propulsion == Propulsion::Pusher);
  CHECK(c.placement == Placement::Outer);
  c = classify_swimmer(0.5);
  CHECK(c.propulsion == Propulsion::Puller);
  CHECK(c.placement == Placement::Inner);
  c = classify_swimmer(0);
  CHECK(c.propulsion == Propulsion::Ambiguous);
  CHECK(c.placement == Placement::Inner);
  CHECK(classify_swimmer(5e-10).propulsion == Propulsion::Ambiguous);
  CHECK(classify_swimmer(2e-9).propulsion == Propulsion::Puller);
  CHECK_THROWS_AS(classify_swimmer(1.0), Error);
  CHECK(std::string(to_string(Propulsion::Pusher)) == "pusher");
}

TEST_CASE("brownian deviation time") {
  CHECK(brownian_deviation_time(1, 0.01) == doctest::Approx(100).epsilon(1e-15));
  CHECK(brownian_deviation_time(0, 0.01) == 0);
  CHECK(brownian_deviation_time(2, 0.01) == doctest::Approx(400).epsilon(1e-15));
  for (double t : {0.1, 0.7, 3.0})
    CHECK(brownian_deviation_time(2 * t, 0.3) == 4 * brownian_deviation_time(t, 0.3));
  CHECK(kind_of([] { brownian_deviation_time(1, 0); }) == ErrorKind::NonPositiveDiffusion);
  CHECK(kind_of([] { brownian_deviation_time(1, -1); }) == ErrorKind::NonPositiveDiffusion);
}

TEST_CASE("rotational diffusion") {
  const double d1 = rotational_diffusion(5e-6, 1e-6, 300, 0.8e-3);
  CHECK(d1 == doctest::Approx(0.0983).epsilon(1e-3));
  CHECK(rotational_diffusion(5e-6, 1e-6, 300, 8e-3) == doctest::Approx(9.83e-3).epsilon(1e-3));
  const double d2 = rotational_diffusion(1e-5, 1e-6, 300, 0.8e-3);
  CHECK(d2 / d1 == doctest::Approx(std::pow(0.5, 3) * std::log(5.0) / std::log(10.0)).epsilon(1e-12));
  CHECK(d2 / d1 == doctest::Approx(0.0874).epsilon(1e-3));
  CHECK(kind_of([] { rotational_diffusion(1e-6, 1e-6, 300, 1e-3); }) == ErrorKind::DegenerateAspect);
  CHECK(kind_of([] { rotational_diffusion(1e-7, 1e-6, 300, 1e-3); }) == ErrorKind::DegenerateAspect);
}

TEST_CASE("pair angles") {
  PairAngles g{0.3, -1.2, 2.0, 50};
  CHECK(g.eps() == 1.0 / 50);
  CHECK(g.phi_tilde() == 2.0 - 0.3);
  const auto s = pair_states(g, Vector3(1, 2, 0));
  const PairAngles back = pair_angles(s[0], s[1]);
  CHECK(back.theta1 == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(back.theta2 == doctest::Approx(-1.2).epsilon(1e-14));
  CHECK(back.phi == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(back.a == doctest::Approx(50).epsilon(1e-14));
  CHECK(((s[0].center + s[1].center) / 2 - Vector3(1, 2, 0)).norm() < 1e-13);
}
