#include "swim/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/tools/roots.hpp>

#include "swim/solver.hpp"

namespace swim {

namespace {

constexpr double pi = std::numbers::pi;

Vector2 factor_B(double t2, double phi) {
  return -2 * (1 + 3 * std::cos(2 * (t2 - phi))) * Vector2(std::cos(phi), std::sin(phi));
}

double factor_C(double t1, double t2, double phi) {
  return 3 * std::sin(t1 - phi) *
         (5 * std::cos(t1 + 2 * t2 - 3 * phi) + 2 * std::cos(t1 - phi) +
          std::cos(t1 - 2 * t2 + phi));
}

double factor_E(double t1, double t2, double phi) {
  return 35 * std::sin(2 * t1 + 3 * t2 - 5 * phi) + 5 * std::sin(2 * t1 + t2 - 3 * phi) +
         5 * std::sin(2 * t1 - t2 - phi) - 4 * std::sin(t2 - phi) -
         20 * std::sin(3 * t2 - 3 * phi) + 3 * std::sin(2 * t1 - 3 * t2 + phi);
}

void check_range(const PairAngles& g, const PairCoefficients& c) {
  if (!(g.a > 0) || g.eps() * 2 * c.L >= 1)
    throw Error(ErrorKind::SeriesOutOfRange, "pair separation below the swimmer length");
}

} // namespace

double alpha0_closed_form(const SwimmerParams& p, double mu) {
  return isolated_alpha(p, Medium::bulk(mu));
}

PairCoefficients pair_coefficients(const SwimmerParams& p, const Medium& m, Q2DAlpha q2d_alpha) {
  PairCoefficients c;
  c.medium = m.kind;
  c.L = p.L;
  c.v0 = isolated_speed(p, m);
  if (m.kind == MediumKind::Bulk3D) {
    c.alpha0 = isolated_alpha(p, m);
  } else {
    c.alpha0 = q2d_alpha == Q2DAlpha::FilmSelfInteraction ? isolated_alpha(p, m)
                                                          : alpha0_closed_form(p, m.mu);
  }
  const double lever = 1 - p.zeta - 2 * c.alpha0;
  c.A = p.f_p * p.L / (32 * pi * m.mu) * lever;
  c.D = 3 * p.f_p * p.L * p.L * (p.zeta * p.zeta - 1) / (256 * pi * m.mu);
  if (m.kind == MediumKind::QuasiTwoD) {
    const double f = film_profile(m.h, m.h, m.mu);
    c.P1 = f * p.f_p * p.L * lever;
    c.P2 = f * p.f_p * p.L * p.L * (p.zeta * p.zeta - 1);
  }
  return c;
}

TrigFactors trig_factors(double t1, double t2, double phi) {
  TrigFactors f;
  f.B = {factor_B(t2, phi), factor_B(t1, phi + pi)};
  f.C = {factor_C(t1, t2, phi), factor_C(t2, t1, phi + pi)};
  f.E = {factor_E(t1, t2, phi), factor_E(t2, t1, phi + pi)};
  return f;
}

TrigFactors mirror_factors(double t) {
  const double c2 = std::cos(2 * t);
  const double C = -3 * std::sin(2 * t) * (3 - c2);
  const Vector2 B(0, -2 * (1 - 3 * c2));
  const double E = std::cos(t) * (2 - 56 * c2 + 6 * std::cos(4 * t));
  return {{B, -B}, {C, -C}, {E, -E}};
}

TrigFactors parallel_factors(double pt) {
  const double c2 = std::cos(2 * pt);
  const double C = 3 * std::sin(2 * pt) * (1 - 5 * c2);
  const Vector2 dir(std::cos(pt), std::sin(pt));
  const double E = -2 * std::sin(pt) * (9 + 20 * c2 + 35 * std::cos(4 * pt));
  return {{-2 * (1 + 3 * c2) * dir, 2 * (1 + 3 * c2) * dir}, {C, C}, {E, -E}};
}

PairVelocities pair_velocities_3d(const PairAngles& g, const PairCoefficients& c, int order) {
  check_range(g, c);
  const double e = g.eps();
  PairVelocities out;
  const std::array<double, 2> th{g.theta1, g.theta2};
  const TrigFactors f = trig_factors(g.theta1, g.theta2, g.phi);
  for (int i = 0; i < 2; ++i) {
    Vector2 v = c.v0 * Vector2(std::cos(th[i]), std::sin(th[i]));
    double w = 0;
    if (order >= 2) v += e * e * c.A * f.B[i];
    if (order >= 3) w += e * e * e * c.A * f.C[i];
    if (order >= 4) w += e * e * e * e * c.D * f.E[i];
    out.v[i] = v;
    out.omega[i] = w;
  }
  return out;
}

PairVelocities pair_velocities_q2d(const PairAngles& g, const PairCoefficients& c, int order) {
  check_range(g, c);
  const double e = g.eps();
  const double e3 = e * e * e;
  PairVelocities out;
  const std::array<double, 2> th{g.theta1, g.theta2};
  const std::array<double, 2> ph{g.phi, g.phi + pi};
  for (int i = 0; i < 2; ++i) {
    const double t1 = th[i], t2 = th[1 - i], p = ph[i];
    Vector2 v = c.v0 * Vector2(std::cos(t1), std::sin(t1));
    double w = 0;
    if (order >= 3)
      v += e3 * 2 * c.P1 * Vector2(-std::cos(2 * t2 - 3 * p), std::sin(2 * t2 - 3 * p));
    if (order >= 4) w += e3 * e * 6 * c.P1 * std::sin(2 * t1 + 2 * t2 - 4 * p);
    if (order >= 5) w += e3 * e * e * 12 * c.P2 * std::sin(2 * t1 + 3 * t2 - 5 * p);
    out.v[i] = v;
    out.omega[i] = w;
  }
  return out;
}

PairVelocities pair_velocities(const PairAngles& g, const PairCoefficients& c, int order) {
  if (c.medium == MediumKind::Bulk3D) return pair_velocities_3d(g, c, order < 0 ? 4 : order);
  return pair_velocities_q2d(g, c, order < 0 ? 5 : order);
}

double mirror_omega(const PairCoefficients& c, double eps, double t) {
  const TrigFactors f = mirror_factors(t);
  return eps * eps * eps * (c.A * f.C[0] + eps * c.D * f.E[0]);
}

double mirror_vertical_velocity(const PairCoefficients& c, double eps, double t) {
  return c.v0 * std::sin(t) + eps * eps * c.A * mirror_factors(t).B[0].y();
}

namespace {

// Root of fn in [lo, hi], which must bracket a sign change.
template <typename F>
double refine(F fn, double lo, double hi) {
  const double flo = fn(lo), fhi = fn(hi);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  std::uintmax_t iters = 200;
  auto tol = [](double a, double b) { return std::abs(b - a) <= 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(a)); };
  const auto r = boost::math::tools::toms748_solve(fn, lo, hi, flo, fhi, tol, iters);
  return 0.5 * (r.first + r.second);
}

// Expands [seed - w, seed + w] inside (lo, hi) until fn changes sign.
template <typename F>
double bracketed_root(F fn, double seed, double lo, double hi) {
  double w = std::max(1e-6, 0.5 * std::abs(seed));
  for (int k = 0; k < 60; ++k) {
    const double a = std::max(lo, seed - w), b = std::min(hi, seed + w);
    if (fn(a) * fn(b) <= 0) return refine(fn, a, b);
    w *= 2;
  }
  throw Error(ErrorKind::DegenerateD, "no sign change found near the perturbed steady angle");
}

} // namespace

std::vector<double> rotationally_steady_angles(const PairCoefficients& c, double eps) {
  if (c.D == 0) throw Error(ErrorKind::DegenerateD, "D = 0: zeta = +-1");
  if (eps == 0) return {-pi / 2, 0.0, pi / 2, pi};
  if (c.A == 0)
    throw Error(ErrorKind::DegenerateD, "A = 0: perturbed roots are not defined by the series");
  auto w = [&](double t) { return mirror_omega(c, eps, t); };
  const double shift = -4 * eps * c.D / c.A;
  const double r0 = bracketed_root(w, shift, -pi / 2 + 1e-9, pi / 2 - 1e-9);
  double rp = bracketed_root(w, pi - shift, pi / 2 + 1e-9, 3 * pi / 2 - 1e-9);
  if (rp > pi) rp -= 2 * pi;
  std::vector<double> roots{-pi / 2, r0, pi / 2, rp};
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

std::vector<double> scan_roots(const auto& fn, int n, const std::vector<double>& exact) {
  std::vector<double> roots = exact;
  auto near_exact = [&](double t) {
    for (double e : exact)
      if (std::abs(std::remainder(t - e, 2 * pi)) < 1e-9) return true;
    return false;
  };
  const double h = 2 * pi / n;
  for (int k = 0; k < n; ++k) {
    const double a = -pi + k * h, b = -pi + (k + 1) * h;
    const double fa = fn(a), fb = fn(b);
    double r;
    if (fa == 0) r = a;
    else if (fa * fb < 0) r = refine(fn, a, b);
    else continue;
    if (r >= pi) r -= 2 * pi;
    if (near_exact(r)) continue;
    bool dup = false;
    for (double q : roots)
      if (std::abs(std::remainder(r - q, 2 * pi)) < 1e-9) dup = true;
    if (!dup) roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

} // namespace

SteadyStateReport steady_state_scan(const PairCoefficients& c, double eps, int grid_n) {
  if (grid_n < 256) grid_n = 256;
  SteadyStateReport rep;
  auto w = [&](double t) { return mirror_omega(c, eps, t); };
  auto vy = [&](double t) { return mirror_vertical_velocity(c, eps, t); };
  rep.rotational_roots = scan_roots(w, grid_n, {-pi / 2, pi / 2});
  rep.translational_roots = scan_roots(vy, grid_n, {});

  const double w_scale = std::abs(eps * eps * eps) * (std::abs(c.A) * 24 + std::abs(eps * c.D) * 72);
  for (double t : rep.rotational_roots)
    if (std::abs(vy(t)) <= 1e-9 * std::abs(c.v0)) rep.joint_roots.push_back(t);
  for (double t : rep.translational_roots)
    if (std::abs(w(t)) <= 1e-9 * w_scale) {
      bool dup = false;
      for (double q : rep.joint_roots)
        if (std::abs(q - t) < 1e-9) dup = true;
      if (!dup) rep.joint_roots.push_back(t);
    }
  std::sort(rep.joint_roots.begin(), rep.joint_roots.end());
  return rep;
}

double mirror_stability_rate(double theta1, double delta, double eps, double v0) {
  return -2 * eps * v0 * std::sin(theta1 - delta / 2) * std::sin(delta / 2);
}

} // namespace swim
