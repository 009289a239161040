#include "swim/model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace swim {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out;
}

} // namespace

std::vector<std::string> validate(const SwimmerParams& p, const GeometryLimits& limits) {
  std::vector<std::string> bad;
  if (!(p.L > 0)) bad.push_back("L must be positive");
  if (!(p.R > 0)) bad.push_back("R must be positive");
  if (!(p.f_p >= 0) || !std::isfinite(p.f_p)) bad.push_back("f_p must be non-negative");
  if (!std::isfinite(p.zeta)) bad.push_back("zeta must be finite");
  if (p.L > 0 && p.R > 0 && p.R / p.L > limits.max_slenderness) {
    std::ostringstream os;
    os << "slenderness R/L = " << p.R / p.L << " exceeds " << limits.max_slenderness;
    bad.push_back(os.str());
  }
  const double margin = limits.zeta_margin * (1 - 1e-12);
  if (std::abs(p.zeta - 1) < margin || std::abs(p.zeta + 1) < margin) {
    std::ostringstream os;
    os << "zeta = " << p.zeta << " within margin " << limits.zeta_margin << " of a ball center";
    bad.push_back(os.str());
  }
  return bad;
}

std::vector<std::string> validate(const SwimmerParams& p, const Medium& m,
                                  const GeometryLimits& limits) {
  auto bad = validate(p, limits);
  if (!(m.mu > 0)) bad.push_back("mu must be positive");
  if (m.kind == MediumKind::QuasiTwoD) {
    if (!(m.h > 0)) bad.push_back("film half thickness h must be positive");
    else {
      if (p.R > m.h / 5) bad.push_back("film requires R <= h/5");
      if (m.h > p.L / 5) bad.push_back("film requires h <= L/5");
    }
  }
  return bad;
}

BallPoints derived_points(const SwimmerParams& p, const SwimmerState& s) {
  return {s.center + p.L * s.tau, s.center - p.L * s.tau, s.center + p.zeta * p.L * s.tau};
}

Swimmer make_swimmer(const SwimmerParams& params, const SwimmerState& state,
                     const GeometryLimits& limits) {
  auto bad = validate(params, limits);
  const double n = state.tau.norm();
  if (!(n > 0) || !std::isfinite(n)) bad.push_back("orientation tau must be a nonzero vector");
  if (!state.center.allFinite()) bad.push_back("center must be finite");
  if (!bad.empty()) throw Error(ErrorKind::InvalidGeometry, join(bad));

  Swimmer s;
  s.params_ = params;
  s.state_ = state;
  if (std::abs(n - 1) > 1e-12) s.state_.tau /= n;
  s.points_ = derived_points(params, s.state_);
  if (params.R / params.L > limits.warn_slenderness)
    s.warnings_.push_back("slenderness R/L above " + std::to_string(limits.warn_slenderness));
  return s;
}

SwimmerClass classify_swimmer(double zeta) {
  if (std::abs(std::abs(zeta) - 1) == 0)
    throw Error(ErrorKind::InvalidGeometry, "zeta = +-1 puts the propulsion point on a ball");
  SwimmerClass c;
  if (std::abs(zeta) < 1e-9) c.propulsion = Propulsion::Ambiguous;
  else c.propulsion = zeta < 0 ? Propulsion::Pusher : Propulsion::Puller;
  c.placement = std::abs(zeta) < 1 ? Placement::Inner : Placement::Outer;
  return c;
}

const char* to_string(Propulsion p) {
  switch (p) {
  case Propulsion::Pusher: return "pusher";
  case Propulsion::Puller: return "puller";
  case Propulsion::Ambiguous: return "ambiguous";
  }
  return "";
}

const char* to_string(Placement p) { return p == Placement::Inner ? "inner" : "outer"; }

const char* to_string(Verdict v) {
  switch (v) {
  case Verdict::SwimIn: return "SwimIn";
  case Verdict::SwimOff: return "SwimOff";
  case Verdict::Undecided: return "Undecided";
  }
  return "";
}

double brownian_deviation_time(double theta, double d_rot) {
  if (!(d_rot > 0)) throw Error(ErrorKind::NonPositiveDiffusion, "D_rot must be positive");
  return theta * theta / d_rot;
}

double rotational_diffusion(double l, double d, double temp, double eta) {
  if (!(d > 0) || !(l > d))
    throw Error(ErrorKind::DegenerateAspect, "rotational_diffusion needs l > d > 0");
  if (!(temp > 0) || !(eta > 0))
    throw Error(ErrorKind::InvalidGeometry, "temperature and viscosity must be positive");
  return 12.0 / std::numbers::pi * kBoltzmann * temp / (l * l * l * std::log(l / d) * eta);
}

PairAngles pair_angles(const SwimmerState& s1, const SwimmerState& s2) {
  PairAngles a;
  const Vector3 d = s2.center - s1.center;
  a.theta1 = std::atan2(s1.tau.y(), s1.tau.x());
  a.theta2 = std::atan2(s2.tau.y(), s2.tau.x());
  a.phi = std::atan2(d.y(), d.x());
  a.a = std::hypot(d.x(), d.y());
  return a;
}

std::vector<SwimmerState> pair_states(const PairAngles& g, const Vector3& mid) {
  const Vector3 half = 0.5 * g.a * Vector3(std::cos(g.phi), std::sin(g.phi), 0.0);
  SwimmerState s1{mid - half, Vector3(std::cos(g.theta1), std::sin(g.theta1), 0.0)};
  SwimmerState s2{mid + half, Vector3(std::cos(g.theta2), std::sin(g.theta2), 0.0)};
  return {s1, s2};
}

double axial_kernel(const Medium& m, double q) {
  q = std::abs(q);
  if (m.kind == MediumKind::Bulk3D) return 1.0 / (4 * std::numbers::pi * m.mu * q);
  return film_profile(m.h, m.h, m.mu) / (q * q);
}

} // namespace swim
