#include "swim/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "swim/solver.hpp"

namespace swim {

namespace {

constexpr double pi = std::numbers::pi;

std::vector<BodyRate> series_rates(const std::vector<SwimmerState>& s, const System& sys) {
  if (s.size() != 2)
    throw Error(ErrorKind::InvalidGeometry, "the asymptotic model needs exactly two swimmers");
  if (sys.params.size() > 1 && !(sys.params[0] == sys.params[1]))
    throw Error(ErrorKind::InvalidGeometry, "the asymptotic model needs identical swimmers");
  const auto& p = sys.params_of(0);
  const auto bad = validate(p, sys.medium);
  if (!bad.empty()) throw Error(ErrorKind::InvalidGeometry, bad.front());
  const PairCoefficients c = pair_coefficients(p, sys.medium, sys.model.q2d_alpha);
  const PairVelocities pv = pair_velocities(pair_angles(s[0], s[1]), c, sys.model.order);
  std::vector<BodyRate> out(2);
  for (int i = 0; i < 2; ++i)
    out[i] = {Vector3(pv.v[i].x(), pv.v[i].y(), 0), Vector3(0, 0, pv.omega[i])};
  return out;
}

std::vector<SwimmerState> advance(const std::vector<SwimmerState>& s,
                                  const std::vector<BodyRate>& k, double h) {
  std::vector<SwimmerState> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    out[i].center = s[i].center + h * k[i].v;
    out[i].tau = s[i].tau + h * k[i].omega.cross(s[i].tau);
  }
  return out;
}

double min_separation(const std::vector<SwimmerState>& s) {
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      d = std::min(d, (s[i].center - s[j].center).norm());
  return d;
}

double radial_velocity(const std::vector<SwimmerState>& s, const std::vector<BodyRate>& k) {
  const Vector3 d = s[1].center - s[0].center;
  return (k[1].v - k[0].v).dot(d) / d.norm();
}

} // namespace

std::vector<BodyRate> body_rates(const std::vector<SwimmerState>& s, const System& sys) {
  if (sys.model.kind == ModelKind::AsymptoticPair) return series_rates(s, sys);
  const auto res = solve_configuration(sys.params, s, sys.medium);
  std::vector<BodyRate> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    out[i] = {res.kinematics[i].v_C, res.kinematics[i].omega};
  return out;
}

StepResult step(const std::vector<SwimmerState>& s, const System& sys,
                const IntegratorConfig& cfg, double h) {
  if (!(cfg.dt > 0)) throw Error(ErrorKind::ConfigError, "dt must be positive");
  if (h <= 0) h = cfg.dt;
  const auto k1 = body_rates(s, sys);
  const double sep = min_separation(s);
  const std::size_t n = s.size();

  for (int halving = 0; halving <= cfg.max_halvings; ++halving, h *= 0.5) {
    const auto k2 = body_rates(advance(s, k1, 0.5 * h), sys);
    const auto k3 = body_rates(advance(s, k2, 0.5 * h), sys);
    const auto k4 = body_rates(advance(s, k3, h), sys);

    StepResult r;
    r.states.resize(n);
    Vector3 mean = Vector3::Zero();
    for (std::size_t i = 0; i < n; ++i) {
      const Vector3 dv = (k1[i].v + 2 * k2[i].v + 2 * k3[i].v + k4[i].v) / 6;
      const Vector3 dt = (k1[i].omega.cross(s[i].tau) + 2 * k2[i].omega.cross(s[i].tau) +
                          2 * k3[i].omega.cross(s[i].tau) + k4[i].omega.cross(s[i].tau)) / 6;
      r.states[i].center = s[i].center + h * dv;
      r.states[i].tau = s[i].tau + h * dt;
      if (cfg.renorm) r.states[i].tau.normalize();
      mean += r.states[i].center - s[i].center;
    }
    mean /= static_cast<double>(n);

    double disp = 0, turn = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double L = sys.params_of(i).L;
      const Vector3 dc = r.states[i].center - s[i].center - mean;
      const Vector3 dtau = L * (r.states[i].tau - s[i].tau);
      disp = std::max({disp, (dc + dtau).norm(), (dc - dtau).norm()});
      turn = std::max(turn, (r.states[i].tau - s[i].tau).norm());
    }
    const double use = std::max(disp / (cfg.max_disp_frac * sep), turn / cfg.max_turn);
    if (use <= 1) {
      r.dt_taken = h;
      r.start_rates = k1;
      r.guard_use = use;
      return r;
    }
  }
  throw Error(ErrorKind::StepUnderflow, "displacement guard rejected the step at dt/2^10");
}

double separation(const std::vector<SwimmerState>& s) {
  if (s.size() < 2) return 0;
  return (s[1].center - s[0].center).norm();
}

Trajectory simulate(const std::vector<SwimmerState>& initial, const System& sys,
                    const IntegratorConfig& cfg, double t_max, double sample_every,
                    const std::optional<EncounterThresholds>& stop_on) {
  Trajectory tr;
  tr.system = sys;
  std::vector<SwimmerState> s = initial;
  auto record = [&](double t) {
    tr.times.push_back(t);
    tr.poses.push_back(s);
    tr.separations.push_back(separation(s));
  };
  record(0);
  if (!(t_max > 0)) return tr;
  if (sample_every <= 0) sample_every = t_max / 1000;

  double d_in = 0, d_off = std::numeric_limits<double>::infinity();
  const bool pair = s.size() == 2;
  if (stop_on && pair) {
    d_in = stop_on->d_in > 0 ? stop_on->d_in : 4 * sys.params_of(0).L;
    d_off = stop_on->d_off > 0 ? stop_on->d_off : 10 * tr.separations[0];
  }
  const bool grow = cfg.dt_max > cfg.dt;

  std::optional<std::pair<double, double>> last_radial;
  const auto full = static_cast<long long>(std::floor(t_max / sample_every));
  const double tail = t_max - static_cast<double>(full) * sample_every;
  const long long intervals = full + (tail > 0 ? 1 : 0);

  for (long long k = 0; k < intervals; ++k) {
    const double t0 = static_cast<double>(k) * sample_every;
    const double len = k < full ? sample_every : tail;
    double local = 0, h = cfg.dt;
    while (local < len) {
      const double remaining = len - local;
      const bool clipped = h >= remaining;
      const StepResult r = step(s, sys, cfg, clipped ? remaining : h);
      const bool reached = clipped && r.dt_taken == remaining;
      if (pair) {
        const double rv = radial_velocity(s, r.start_rates);
        const double t = t0 + local;
        if (!tr.t_turn && last_radial && last_radial->second != 0 &&
            (rv == 0 || (rv > 0) != (last_radial->second > 0))) {
          const auto [tp, rp] = *last_radial;
          tr.t_turn = tp + (t - tp) * rp / (rp - rv);
        }
        last_radial = {t, rv};
      }
      s = r.states;
      local = reached ? len : local + r.dt_taken;
      ++tr.steps;
      if (r.dt_taken < (clipped ? remaining : h)) h = r.dt_taken;
      else if (grow && r.guard_use < 0.25) h = std::min(2 * h, cfg.dt_max);

      if (stop_on && pair) {
        const double sep = separation(s);
        const double prev = tr.separations.back();
        if (sep <= d_in || (sep >= d_off && sep > prev)) {
          record(local >= len ? t0 + len : t0 + local);
          return tr;
        }
      }
    }
    record(k + 1 == intervals ? t_max : static_cast<double>(k + 1) * sample_every);
  }
  return tr;
}

EncounterOutcome classify_encounter(const Trajectory& tr, const EncounterThresholds& th) {
  EncounterOutcome out;
  out.t0_turn = tr.t_turn;
  if (tr.separations.size() < 2 || tr.poses.front().size() != 2) return out;
  const double d_in = th.d_in > 0 ? th.d_in : 4 * tr.system.params_of(0).L;
  const double d_off = th.d_off > 0 ? th.d_off : 10 * tr.separations.front();
  for (std::size_t k = 1; k < tr.separations.size(); ++k) {
    const double d = tr.separations[k];
    if (d <= d_in) {
      out.verdict = Verdict::SwimIn;
      out.t_event = tr.times[k];
      return out;
    }
    if (d >= d_off && d > tr.separations[k - 1]) {
      out.verdict = Verdict::SwimOff;
      out.t_event = tr.times[k];
      return out;
    }
  }
  return out;
}

std::vector<SwimmerState> mirror_states(double a0, double theta1, double delta) {
  const double theta2 = -theta1 - delta;
  return {{Vector3(0, 0.5 * a0, 0), Vector3(std::cos(theta1), std::sin(theta1), 0)},
          {Vector3(0, -0.5 * a0, 0), Vector3(std::cos(theta2), std::sin(theta2), 0)}};
}

std::vector<SwimmerState> parallel_states(double a0, double theta, double phi_tilde) {
  const Vector3 tau(std::cos(theta), std::sin(theta), 0);
  Vector3 half = Vector3(0.5 * a0, 0, 0);
  if (theta + phi_tilde != 0) {
    const double phi = theta + phi_tilde;
    half = 0.5 * a0 * Vector3(std::cos(phi), std::sin(phi), 0);
  }
  return {{-half, tau}, {half, tau}};
}

double mirror_deviation(const std::vector<SwimmerState>& s) {
  const PairAngles g = pair_angles(s[0], s[1]);
  double d = std::remainder(pi + 2 * g.phi - (g.theta1 + g.theta2), 2 * pi);
  if (d <= -pi) d += 2 * pi;
  return d;
}

PerturbedRun perturbed_mirror_run(double delta0, const MirrorSetup& base,
                                  const IntegratorConfig& cfg, double t_max, double sample_every,
                                  const std::optional<EncounterThresholds>& stop_on) {
  if (std::abs(delta0) > 0.3)
    throw Error(ErrorKind::ConfigError, "|delta0| must not exceed 0.3");
  PerturbedRun r;
  r.trajectory = simulate(mirror_states(base.a0, base.theta1, delta0), base.system, cfg, t_max,
                          sample_every, stop_on);
  r.final_separation = r.trajectory.separations.back();
  return r;
}

double head_to_tail_rate(const System& sys, double a) {
  const auto s = parallel_states(a);
  const auto k = body_rates(s, sys);
  return (k[1].v - k[0].v).x();
}

} // namespace swim
