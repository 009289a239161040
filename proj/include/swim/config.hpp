#pragma once

#include <optional>
#include <string>
#include <vector>

#include "swim/dynamics.hpp"

namespace swim {

enum class Scenario { Mirror, Parallel, HeadToTail, Custom, Single };

struct RunConfig {
  Scenario scenario = Scenario::Mirror;
  MediumKind medium = MediumKind::Bulk3D;
  ModelKind model = ModelKind::FullSolver;
  int order = -1;
  Q2DAlpha q2d_alpha = Q2DAlpha::FilmSelfInteraction;

  double mu = 1.0;
  double h = 0.2;

  double f_p = 1.0;
  double L = 1.0;
  std::optional<double> R; // unset: 0.05 in bulk, 0.04 in a film
  double zeta = -2.0;
  DragConvention drag = DragConvention::MainText;

  double a0 = 200.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  double phi = 0.0;
  double delta0 = 0.0;

  double dt = 1.0;
  double dt_max = 0.0;
  std::optional<double> t_max; // unset: 5 a0 / v0
  double sample_every = 0.0;
  double max_disp_frac = 1e-3;
  double max_turn = 0.05;

  double d_in = 0.0;
  double d_off = 0.0;

  std::string out_dir = "out";

  bool operator==(const RunConfig&) const = default;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);
std::string serialize_config(const RunConfig& cfg);

// Throws Error(ConfigError) / Error(InvalidGeometry) naming the violated invariant.
void validate_config(const RunConfig& cfg);

SwimmerParams swimmer_params(const RunConfig& cfg);
Medium medium_of(const RunConfig& cfg);
System system_of(const RunConfig& cfg);
IntegratorConfig integrator_of(const RunConfig& cfg);
EncounterThresholds thresholds_of(const RunConfig& cfg);
std::vector<SwimmerState> initial_states(const RunConfig& cfg);
double horizon(const RunConfig& cfg);

const char* to_string(Scenario s);
Scenario parse_scenario(const std::string& s);
MediumKind parse_medium(const std::string& s);
ModelKind parse_model(const std::string& s);

// Shortest decimal form that reads back to the same double (17 significant digits).
std::string format_double(double v);

} // namespace swim
