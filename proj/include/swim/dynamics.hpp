#pragma once

#include <optional>
#include <vector>

#include "swim/asymptotics.hpp"
#include "swim/model.hpp"

namespace swim {

enum class ModelKind { FullSolver, AsymptoticPair };

struct Model {
  ModelKind kind = ModelKind::FullSolver;
  int order = -1; // series truncation; < 0 selects the highest available
  Q2DAlpha q2d_alpha = Q2DAlpha::FilmSelfInteraction;
};

// Everything a run needs besides the poses. A single params entry is shared
// by all swimmers.
struct System {
  std::vector<SwimmerParams> params{SwimmerParams{}};
  Medium medium;
  Model model;

  const SwimmerParams& params_of(std::size_t i) const {
    return params.size() == 1 ? params[0] : params.at(i);
  }
};

struct IntegratorConfig {
  double dt = 1.0;
  bool renorm = true;
  double max_disp_frac = 1e-3;
  double max_turn = 0.05;   // radians per step
  double dt_max = 0.0;      // step growth cap; <= dt disables growth
  int max_halvings = 10;
};

struct BodyRate {
  Vector3 v;
  Vector3 omega;
};

std::vector<BodyRate> body_rates(const std::vector<SwimmerState>& states, const System& system);

struct StepResult {
  std::vector<SwimmerState> states;
  double dt_taken = 0;
  std::vector<BodyRate> start_rates;
  // Fraction of the displacement/turn budget used by the accepted step.
  double guard_use = 0;
};

// One RK4 step of size h (cfg.dt when h <= 0), halved until the displacement
// guard accepts it.
StepResult step(const std::vector<SwimmerState>& states, const System& system,
                const IntegratorConfig& cfg, double h = 0);

struct EncounterThresholds {
  double d_in = 0;  // <= 0: 4 L
  double d_off = 0; // <= 0: 10 x initial separation
};

struct Trajectory {
  std::vector<double> times;
  std::vector<std::vector<SwimmerState>> poses;
  std::vector<double> separations;
  std::optional<double> t_turn;
  std::size_t steps = 0;
  System system;
};

double separation(const std::vector<SwimmerState>& states);

// Samples every sample_every (<= 0: t_max / 1000). With stop_on set, the run
// ends at the first step that crosses a swim-in or swim-off threshold.
Trajectory simulate(const std::vector<SwimmerState>& initial, const System& system,
                    const IntegratorConfig& cfg, double t_max, double sample_every = 0,
                    const std::optional<EncounterThresholds>& stop_on = std::nullopt);

EncounterOutcome classify_encounter(const Trajectory& traj, const EncounterThresholds& th = {});

// Mirror pair about the x axis: swimmer 1 at (0, a0/2) with angle theta1,
// swimmer 2 at (0, -a0/2) with angle -theta1 - delta.
std::vector<SwimmerState> mirror_states(double a0, double theta1, double delta = 0);

// Swimmer 2 ahead of swimmer 1 on the line at angle theta + phi_tilde, both
// with angle theta.
std::vector<SwimmerState> parallel_states(double a0, double theta = 0, double phi_tilde = 0);

// Orientation-sum deviation pi + 2 phi - (theta1 + theta2), wrapped to (-pi, pi].
double mirror_deviation(const std::vector<SwimmerState>& states);

struct MirrorSetup {
  System system;
  double a0 = 200;
  double theta1 = 0;
};

struct PerturbedRun {
  Trajectory trajectory;
  double final_separation = 0;
};

PerturbedRun perturbed_mirror_run(double delta0, const MirrorSetup& base,
                                  const IntegratorConfig& cfg, double t_max,
                                  double sample_every = 0,
                                  const std::optional<EncounterThresholds>& stop_on = std::nullopt);

double head_to_tail_rate(const System& system, double a);

} // namespace swim
