#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "swim/commands.hpp"

namespace {

struct Overrides {
  std::string config;
  std::string scenario, medium, model, out;
  std::optional<int> order;
  std::optional<double> zeta, a0, dt, dt_max, tmax;
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config, "Config file (key = value with sections)");
  cmd->add_option("--scenario", o.scenario, "mirror | parallel | head_to_tail | custom | single");
  cmd->add_option("--medium", o.medium, "bulk3d | q2d");
  cmd->add_option("--model", o.model, "full | asym");
  cmd->add_option("--order", o.order, "Series truncation order");
  cmd->add_option("--zeta", o.zeta, "Propulsion position zeta");
  cmd->add_option("--a0", o.a0, "Initial center separation");
  cmd->add_option("--dt", o.dt, "Base time step");
  cmd->add_option("--dt-max", o.dt_max, "Largest step the adaptive growth may reach (0: fixed dt)");
  cmd->add_option("--tmax", o.tmax, "Horizon");
  cmd->add_option("--out", o.out, "Output directory");
}

swim::RunConfig resolve(const Overrides& o) {
  swim::RunConfig c = o.config.empty() ? swim::RunConfig{} : swim::load_config(o.config);
  if (!o.scenario.empty()) c.scenario = swim::parse_scenario(o.scenario);
  if (!o.medium.empty()) c.medium = swim::parse_medium(o.medium);
  if (!o.model.empty()) c.model = swim::parse_model(o.model);
  if (o.order) c.order = *o.order;
  if (o.zeta) c.zeta = *o.zeta;
  if (o.a0) c.a0 = *o.a0;
  if (o.dt) c.dt = *o.dt;
  if (o.dt_max) c.dt_max = *o.dt_max;
  if (o.tmax) c.t_max = *o.tmax;
  if (!o.out.empty()) c.out_dir = o.out;
  return c;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pairwise hydrodynamics of dumbbell swimmers"};
  app.require_subcommand(1);

  Overrides o;
  std::string grid, sweep;
  bool eps_zero = false;

  auto* run = app.add_subcommand("run", "Integrate a scenario and classify the encounter");
  add_common(run, o);
  auto* field = app.add_subcommand("field", "Sample the fluid velocity on a grid");
  add_common(field, o);
  field->add_option("--grid", grid, "xmin:xmax:nx,ymin:ymax:ny");
  auto* sw = app.add_subcommand("sweep", "Sweep zeta, delta0 or a0");
  add_common(sw, o);
  sw->add_option("--sweep", sweep, "key=start:stop:step")->required();
  auto* steady = app.add_subcommand("steady", "Steady states of the mirror configuration");
  add_common(steady, o);
  steady->add_flag("--eps-zero", eps_zero, "Evaluate the eps -> 0 limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const swim::RunConfig cfg = resolve(o);
    if (run->parsed()) swim::cmd_run(cfg, std::cout);
    else if (field->parsed())
      swim::cmd_field(cfg, grid.empty() ? std::nullopt : std::optional(swim::parse_grid(grid)),
                      std::cout);
    else if (sw->parsed()) swim::cmd_sweep(cfg, swim::parse_sweep(sweep), std::cout);
    else if (steady->parsed()) swim::cmd_steady(cfg, eps_zero, std::cout);
  } catch (const swim::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool config = e.kind() == swim::ErrorKind::ConfigError ||
                        e.kind() == swim::ErrorKind::InvalidGeometry;
    return config ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
