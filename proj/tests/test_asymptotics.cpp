#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <algorithm>

#include <Eigen/Geometry>

#include "swim/asymptotics.hpp"
#include "swim/solver.hpp"

using namespace swim;
using std::numbers::pi;

namespace {

PairCoefficients bulk(double zeta, double R = 0.05, DragConvention d = DragConvention::MainText) {
  SwimmerParams p;
  p.zeta = zeta;
  p.R = R;
  p.drag = d;
  return pair_coefficients(p, Medium::bulk(1));
}

void check_same(const TrigFactors& a, const TrigFactors& b, double tol) {
  for (int i = 0; i < 2; ++i) {
    CHECK((a.B[i] - b.B[i]).norm() <= tol);
    CHECK(std::abs(a.C[i] - b.C[i]) <= tol);
    CHECK(std::abs(a.E[i] - b.E[i]) <= tol);
  }
}

} // namespace

TEST_CASE("pair coefficients") {
  SUBCASE("mid swimmer has no dipole asymmetry") {
    const auto c = bulk(0);
    CHECK(c.alpha0 == 0.5);
    CHECK(c.A == 0);
    CHECK(c.D < 0);
  }
  SUBCASE("appendix convention closed form") {
    const auto c = bulk(-2, 0.1, DragConvention::AppendixC);
    CHECK(c.alpha0 == doctest::Approx(0.574074074074).epsilon(1e-11));
    CHECK(1 - (-2) - 2 * c.alpha0 == doctest::Approx(1.851852).epsilon(1e-6));
    CHECK(c.A > 0);
    CHECK(bulk(2, 0.1, DragConvention::AppendixC).A < 0);
  }
  SUBCASE("closed form over the grid") {
    for (double z : {-3.0, -2.0, -0.5, 0.0, 0.5, 2.0, 3.0})
      for (double xi : {0.02, 0.05, 0.1}) {
        SwimmerParams p;
        p.zeta = z;
        p.R = xi;
        p.drag = DragConvention::AppendixC;
        const double expect = 0.5 * (1 - xi * (1 + 2 / std::abs(1 - z) - 2 / std::abs(1 + z))) / (1 - xi);
        CHECK(alpha0_closed_form(p, 1) == doctest::Approx(expect).epsilon(1e-13));
      }
  }
  SUBCASE("D sign") {
    CHECK(bulk(0.5).D < 0);
    CHECK(bulk(-0.5).D < 0);
    CHECK(bulk(2).D > 0);
    CHECK(bulk(-3).D > 0);
  }
  SUBCASE("sign law") {
    for (double z : {0.5, 2.0}) {
      CHECK(bulk(-z).A > 0);
      CHECK(bulk(z).A < 0);
      CHECK((bulk(-z).A > 0) != (bulk(z).A > 0));
    }
  }
  SUBCASE("film coefficients") {
    SwimmerParams p;
    p.R = 0.04;
    p.zeta = 0;
    const Medium f = Medium::film(1, 0.2);
    const auto c = pair_coefficients(p, f);
    CHECK(c.alpha0 == 0.5);
    CHECK(c.P1 == 0);
    p.zeta = -2;
    const auto film = pair_coefficients(p, f);
    const auto bulk_alpha = pair_coefficients(p, f, Q2DAlpha::BulkClosedForm);
    CHECK(film.alpha0 == doctest::Approx(isolated_alpha(p, f)).epsilon(1e-15));
    CHECK(bulk_alpha.alpha0 == doctest::Approx(alpha0_closed_form(p, 1)).epsilon(1e-15));
    CHECK(film.alpha0 != bulk_alpha.alpha0);
    CHECK(film.P2 == doctest::Approx(3 * 0.2 / (16 * pi) * 3).epsilon(1e-14));
  }
}

TEST_CASE("trig factors") {
  SUBCASE("aligned head to tail") {
    const auto f = trig_factors(0, 0, 0);
    CHECK(f.C[0] == 0);
  }
  SUBCASE("mirror at pi/4") {
    const auto f = trig_factors(pi / 4, -pi / 4, pi / 2);
    CHECK(f.C[0] == doctest::Approx(-9).epsilon(1e-14));
  }
  SUBCASE("mirror at 0") {
    const auto f = trig_factors(0, 0, pi / 2);
    CHECK((f.B[0] - Vector2(0, 4)).norm() < 1e-14);
    CHECK(f.E[0] == doctest::Approx(-48).epsilon(1e-14));
  }
  SUBCASE("bounds") {
    std::mt19937 rng(2);
    std::uniform_real_distribution<double> a(-pi, pi);
    for (int k = 0; k < 500; ++k) {
      const auto f = trig_factors(a(rng), a(rng), a(rng));
      for (int i = 0; i < 2; ++i) {
        CHECK(std::abs(f.C[i]) <= 24);
        CHECK(std::abs(f.E[i]) <= 72);
      }
    }
  }
  SUBCASE("swimmer-2 rule") {
    std::mt19937 rng(4);
    std::uniform_real_distribution<double> a(-pi, pi);
    for (int k = 0; k < 100; ++k) {
      const double t1 = a(rng), t2 = a(rng), p = a(rng);
      const auto f = trig_factors(t1, t2, p);
      const auto g = trig_factors(t2, t1, p + pi);
      CHECK((f.B[1] - g.B[0]).norm() < 1e-12);
      CHECK(std::abs(f.C[1] - g.C[0]) < 1e-12);
      CHECK(std::abs(f.E[1] - g.E[0]) < 1e-12);
    }
  }
}

TEST_CASE("specialisations agree with the general factors") {
  std::mt19937 rng(6);
  std::uniform_real_distribution<double> a(-pi, pi);
  for (int k = 0; k < 200; ++k) {
    const double t = a(rng);
    check_same(mirror_factors(t), trig_factors(t, -t, pi / 2), 1e-12);
    const double pt = a(rng);
    check_same(parallel_factors(pt), trig_factors(0, 0, pt), 1e-12);
    const double th = a(rng);
    const auto rotated = trig_factors(th, th, th + pt);
    const Eigen::Rotation2Dd back(-th);
    const auto par = parallel_factors(pt);
    for (int i = 0; i < 2; ++i) {
      CHECK((back * rotated.B[i] - par.B[i]).norm() < 1e-11);
      CHECK(std::abs(rotated.C[i] - par.C[i]) < 1e-11);
      CHECK(std::abs(rotated.E[i] - par.E[i]) < 1e-11);
    }
  }
  check_same(mirror_factors(0.3), trig_factors(0.3, -0.3, pi / 2), 1e-12);
  SUBCASE("mirror antisymmetries") {
    const auto f = mirror_factors(0.7);
    CHECK(f.C[1] == -f.C[0]);
    CHECK(f.E[1] == -f.E[0]);
    CHECK(f.B[1].x() == f.B[0].x());
    CHECK(f.B[1].y() == -f.B[0].y());
  }
  SUBCASE("vertical alignment and alignment") {
    CHECK(std::abs(mirror_factors(pi / 2).C[0]) < 1e-14);
    CHECK(mirror_factors(0).C[0] == 0);
    CHECK(mirror_factors(0).E[0] == -48);
  }
  SUBCASE("parallel") {
    const auto h = parallel_factors(0);
    CHECK(h.C[0] == 0);
    CHECK(h.E[0] == 0);
    CHECK(parallel_factors(pi / 4).C[0] == doctest::Approx(3).epsilon(1e-14));
    const auto g = parallel_factors(0.4);
    CHECK(g.C[0] == g.C[1]);
    CHECK(g.E[0] != g.E[1]);
  }
}

TEST_CASE("3D series velocities") {
  const auto c = bulk(-2);
  const PairAngles g{0.3, -0.8, 1.2, 40};
  const auto v0 = pair_velocities_3d(g, c, 0);
  const auto v1 = pair_velocities_3d(g, c, 1);
  for (int i = 0; i < 2; ++i) {
    CHECK(v0.omega[i] == 0);
    CHECK(v1.omega[i] == 0);
    CHECK(v0.v[i] == v1.v[i]);
  }
  CHECK(v0.v[0].x() == doctest::Approx(c.v0 * std::cos(0.3)).epsilon(1e-15));

  SUBCASE("mirror pusher at theta = 0") {
    const PairAngles m{0, 0, pi / 2, 100};
    const auto o3 = pair_velocities_3d(m, c, 3);
    const auto o4 = pair_velocities_3d(m, c, 4);
    CHECK(std::abs(o3.omega[0]) < 1e-12 * std::abs(o4.omega[0]));
    CHECK(o4.omega[0] == doctest::Approx(1e-8 * c.D * -48).epsilon(1e-14));
    CHECK(o4.omega[0] < 0);
  }
  SUBCASE("range") {
    try {
      pair_velocities_3d({0, 0, 0, 1.5}, c, 4);
      FAIL("expected SeriesOutOfRange");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SeriesOutOfRange);
    }
    CHECK_NOTHROW(pair_velocities_3d({0, 0, 0, 3}, c, 4));
  }
}

TEST_CASE("film series velocities") {
  SwimmerParams p;
  p.R = 0.04;
  p.zeta = -2;
  const auto c = pair_coefficients(p, Medium::film(1, 0.2));
  const PairAngles g{0.3, -0.8, 1.2, 40};
  const auto o2 = pair_velocities_q2d(g, c, 2);
  for (int i = 0; i < 2; ++i) {
    CHECK(o2.omega[i] == 0);
    CHECK((o2.v[i] - pair_velocities_q2d(g, c, 0).v[i]).norm() == 0);
  }
  const auto o3 = pair_velocities_q2d({0, 0, 0, 10}, c, 3);
  const Vector2 d = o3.v[0] - c.v0 * Vector2(1, 0);
  CHECK(d.x() == doctest::Approx(-2 * c.P1 * 1e-3).epsilon(1e-12));
  CHECK(std::abs(d.y()) < 1e-18);
  SwimmerParams q = p;
  q.zeta = 1.0;
  const auto cq = pair_coefficients(q, Medium::film(1, 0.2));
  CHECK(cq.P2 == 0);
  CHECK(pair_velocities(g, c).omega[0] == pair_velocities_q2d(g, c, 5).omega[0]);
}

TEST_CASE("rotationally steady angles") {
  const auto c = bulk(-2);
  const double eps = 0.01;
  const auto r = rotationally_steady_angles(c, eps);
  REQUIRE(r.size() == 4);
  CHECK(std::count(r.begin(), r.end(), -pi / 2) == 1);
  CHECK(std::count(r.begin(), r.end(), pi / 2) == 1);
  int found0 = 0, foundpi = 0;
  for (double t : r) {
    if (std::abs(t) < 0.1) {
      ++found0;
      CHECK(t < 0);
      CHECK(std::abs(mirror_omega(c, eps, t)) < 1e-12 * std::abs(eps * eps * eps * c.A));
      CHECK(t == doctest::Approx(-4 * eps * c.D / c.A).epsilon(0.2));
    }
    if (std::abs(std::abs(t) - pi) < 0.1) {
      ++foundpi;
      CHECK(t < 0); // pi+ wraps to -pi + small
      CHECK(std::abs(mirror_omega(c, eps, t)) < 1e-12 * std::abs(eps * eps * eps * c.A));
    }
  }
  CHECK(found0 == 1);
  CHECK(foundpi == 1);

  const auto z = rotationally_steady_angles(c, 0);
  CHECK(z == std::vector<double>{-pi / 2, 0.0, pi / 2, pi});
  const auto small = rotationally_steady_angles(c, 1e-6);
  for (double t : small) CHECK(std::min({std::abs(t), std::abs(std::abs(t) - pi), std::abs(std::abs(t) - pi / 2)}) < 1e-4);

  SwimmerParams p;
  p.zeta = 1;
  PairCoefficients degenerate = c;
  degenerate.D = 0;
  try {
    rotationally_steady_angles(degenerate, eps);
    FAIL("expected DegenerateD");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateD);
  }
}

TEST_CASE("steady state scan") {
  for (double xi : {0.05, 0.1}) {
    const auto c = bulk(-2, xi);
    const auto rep = steady_state_scan(c, 0.01, 1024);
    CHECK(rep.rotational_roots.size() == 4);
    CHECK(std::count(rep.rotational_roots.begin(), rep.rotational_roots.end(), pi / 2) == 1);
    CHECK(std::count(rep.rotational_roots.begin(), rep.rotational_roots.end(), -pi / 2) == 1);
    CHECK(rep.joint_roots.empty());
    CHECK(rep.translational_roots.size() >= 2);
  }
  const auto inner = steady_state_scan(bulk(0.5), 0.01, 256);
  CHECK(inner.rotational_roots.size() == 4);
  CHECK(inner.joint_roots.empty());
}

TEST_CASE("mirror stability rate") {
  CHECK(mirror_stability_rate(0.4, 0, 0.01, 1) == 0);
  CHECK(mirror_stability_rate(pi / 2, 0.01, 0.01, 1) < 0);
  CHECK(mirror_stability_rate(-pi / 2, 0.01, 0.01, 1) > 0);
  CHECK(mirror_stability_rate(pi / 2, -0.01, 0.01, 1) > 0);
  CHECK(mirror_stability_rate(-pi / 2, -0.01, 0.01, 1) < 0);
}
