#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "swim/asymptotics.hpp"
#include "swim/config.hpp"

namespace swim {

struct FieldGrid {
  double x0 = -4, x1 = 4;
  int nx = 41;
  double y0 = -4, y1 = 4;
  int ny = 41;
};

// "xmin:xmax:nx,ymin:ymax:ny"
FieldGrid parse_grid(const std::string& spec);

struct SweepSpec {
  std::string key; // zeta | delta0 | a0
  double start = 0, stop = 0, step = 0;

  std::vector<double> values() const;
};

// "key=start:stop:step"
SweepSpec parse_sweep(const std::string& spec);

// Worker count for sweeps: SWIM_THREADS when set, else the hardware count.
unsigned sweep_threads();

void write_trajectory_csv(const Trajectory& traj, std::ostream& out);

void cmd_run(const RunConfig& cfg, std::ostream& log);
void cmd_field(const RunConfig& cfg, const std::optional<FieldGrid>& grid, std::ostream& log);
void cmd_sweep(const RunConfig& cfg, const SweepSpec& sweep, std::ostream& log);
SteadyStateReport cmd_steady(const RunConfig& cfg, bool eps_zero, std::ostream& out);

} // namespace swim
