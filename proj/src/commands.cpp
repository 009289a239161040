#include "swim/commands.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include "swim/solver.hpp"

namespace swim {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void config_error(const std::string& msg) { throw Error(ErrorKind::ConfigError, msg); }

double parse_number(const std::string& what, const std::string& s) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  config_error(what + ": not a number: '" + s + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::ofstream open_output(const RunConfig& cfg, const std::string& name) {
  fs::create_directories(cfg.out_dir);
  std::ofstream f(fs::path(cfg.out_dir) / name);
  if (!f) config_error("cannot write " + (fs::path(cfg.out_dir) / name).string());
  return f;
}

double angle_of(const Vector3& tau) { return std::atan2(tau.y(), tau.x()); }

std::string opt_str(const std::optional<double>& v) { return v ? format_double(*v) : ""; }

template <typename F>
void parallel_for(std::size_t n, F fn) {
  const unsigned workers = std::max(1u, std::min<unsigned>(sweep_threads(), static_cast<unsigned>(n)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) fn(i);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
}

} // namespace

FieldGrid parse_grid(const std::string& spec) {
  const auto axes = split(spec, ',');
  if (axes.size() != 2) config_error("grid: expected xmin:xmax:nx,ymin:ymax:ny");
  FieldGrid g;
  const auto x = split(axes[0], ':'), y = split(axes[1], ':');
  if (x.size() != 3 || y.size() != 3) config_error("grid: expected xmin:xmax:nx,ymin:ymax:ny");
  g.x0 = parse_number("grid", x[0]);
  g.x1 = parse_number("grid", x[1]);
  g.nx = static_cast<int>(parse_number("grid", x[2]));
  g.y0 = parse_number("grid", y[0]);
  g.y1 = parse_number("grid", y[1]);
  g.ny = static_cast<int>(parse_number("grid", y[2]));
  if (g.nx < 1 || g.ny < 1) config_error("grid: point counts must be positive");
  return g;
}

std::vector<double> SweepSpec::values() const {
  std::vector<double> v;
  const double n = std::floor((stop - start) / step + 1e-9);
  for (long k = 0; k <= static_cast<long>(n); ++k) v.push_back(start + static_cast<double>(k) * step);
  return v;
}

SweepSpec parse_sweep(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos) config_error("sweep: expected key=start:stop:step");
  SweepSpec s;
  s.key = spec.substr(0, eq);
  if (s.key != "zeta" && s.key != "delta0" && s.key != "a0")
    config_error("sweep: key must be zeta, delta0 or a0");
  const auto r = split(spec.substr(eq + 1), ':');
  if (r.size() != 3) config_error("sweep: expected key=start:stop:step");
  s.start = parse_number("sweep", r[0]);
  s.stop = parse_number("sweep", r[1]);
  s.step = parse_number("sweep", r[2]);
  if (!(s.step > 0) || s.stop < s.start) config_error("sweep: need step > 0 and stop >= start");
  return s;
}

unsigned sweep_threads() {
  if (const char* env = std::getenv("SWIM_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void write_trajectory_csv(const Trajectory& tr, std::ostream& out) {
  out << "# swim trajectory v1\n";
  out << "t,x1,y1,theta1,x2,y2,theta2,sep\n";
  for (std::size_t k = 0; k < tr.times.size(); ++k) {
    const auto& p = tr.poses[k];
    out << format_double(tr.times[k]) << ',' << format_double(p[0].center.x()) << ','
        << format_double(p[0].center.y()) << ',' << format_double(angle_of(p[0].tau)) << ',';
    if (p.size() > 1)
      out << format_double(p[1].center.x()) << ',' << format_double(p[1].center.y()) << ','
          << format_double(angle_of(p[1].tau)) << ',' << format_double(tr.separations[k]);
    else
      out << ",,,";
    out << '\n';
  }
}

void cmd_run(const RunConfig& cfg, std::ostream& log) {
  validate_config(cfg);
  const auto states = initial_states(cfg);
  const System sys = system_of(cfg);
  const double t_max = horizon(cfg);
  std::optional<EncounterThresholds> stop;
  if (states.size() == 2) stop = thresholds_of(cfg);
  const Trajectory tr = simulate(states, sys, integrator_of(cfg), t_max, cfg.sample_every, stop);
  const EncounterOutcome out = classify_encounter(tr, thresholds_of(cfg));

  auto csv = open_output(cfg, "trajectory.csv");
  write_trajectory_csv(tr, csv);

  auto sum = open_output(cfg, "summary.txt");
  sum << "# swim summary v1\n"
      << "scenario = " << to_string(cfg.scenario) << "\n"
      << "verdict = " << to_string(out.verdict) << "\n"
      << "t_event = " << opt_str(out.t_event) << "\n"
      << "t_turn = " << opt_str(out.t0_turn) << "\n"
      << "initial_separation = " << format_double(tr.separations.front()) << "\n"
      << "final_separation = " << format_double(tr.separations.back()) << "\n"
      << "t_end = " << format_double(tr.times.back()) << "\n"
      << "t_max = " << format_double(t_max) << "\n"
      << "steps = " << tr.steps << "\n"
      << "samples = " << tr.times.size() << "\n";
  log << "verdict " << to_string(out.verdict) << " after " << tr.steps << " steps, t_end "
      << format_double(tr.times.back()) << "\n";
}

void cmd_field(const RunConfig& cfg, const std::optional<FieldGrid>& grid_in, std::ostream& log) {
  validate_config(cfg);
  const auto states = initial_states(cfg);
  const auto params = swimmer_params(cfg);
  const Medium medium = medium_of(cfg);
  std::vector<Swimmer> sw;
  for (const auto& s : states) sw.push_back(make_swimmer(params, s));
  const AlphaSolution sol = solve_alpha(assemble_alpha_system(sw, medium));

  FieldGrid g;
  if (grid_in) {
    g = *grid_in;
  } else {
    double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
    for (const auto& s : states) {
      lo_x = std::min(lo_x, s.center.x());
      hi_x = std::max(hi_x, s.center.x());
      lo_y = std::min(lo_y, s.center.y());
      hi_y = std::max(hi_y, s.center.y());
    }
    const double pad = 4 * cfg.L;
    g = {lo_x - pad, hi_x + pad, 41, lo_y - pad, hi_y + pad, 41};
  }

  auto f = open_output(cfg, "field.csv");
  f << "# swim field v1\n";
  f << "x,y,z,u_x,u_y,u_z\n";
  std::size_t masked = 0;
  for (int j = 0; j < g.ny; ++j) {
    const double y = g.ny == 1 ? g.y0 : g.y0 + (g.y1 - g.y0) * j / (g.ny - 1);
    for (int i = 0; i < g.nx; ++i) {
      const double x = g.nx == 1 ? g.x0 : g.x0 + (g.x1 - g.x0) * i / (g.nx - 1);
      f << format_double(x) << ',' << format_double(y) << ",0,";
      try {
        const Vector3 u = flow_field(Vector3(x, y, 0), sw, sol, medium);
        f << format_double(u.x()) << ',' << format_double(u.y()) << ',' << format_double(u.z());
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::SingularPoint) throw;
        f << ",,";
        ++masked;
      }
      f << '\n';
    }
  }
  log << "field " << g.nx << "x" << g.ny << ", " << masked << " masked cells\n";
}

void cmd_sweep(const RunConfig& cfg, const SweepSpec& sweep, std::ostream& log) {
  if (sweep.key == "delta0" && cfg.scenario != Scenario::Mirror)
    config_error("sweep over delta0 needs scenario = mirror");
  const auto values = sweep.values();
  struct Row {
    std::string rate, final_sep, verdict, error;
  };
  std::vector<Row> rows(values.size());

  parallel_for(values.size(), [&](std::size_t i) {
    RunConfig c = cfg;
    if (sweep.key == "zeta") c.zeta = values[i];
    else if (sweep.key == "delta0") c.delta0 = values[i];
    else c.a0 = values[i];
    Row& row = rows[i];
    try {
      validate_config(c);
      if (c.scenario == Scenario::HeadToTail && sweep.key != "delta0") {
        row.rate = format_double(head_to_tail_rate(system_of(c), c.a0));
      } else {
        const auto states = initial_states(c);
        std::optional<EncounterThresholds> stop;
        if (states.size() == 2) stop = thresholds_of(c);
        const Trajectory tr =
            simulate(states, system_of(c), integrator_of(c), horizon(c), c.sample_every, stop);
        row.final_sep = format_double(tr.separations.back());
        row.verdict = to_string(classify_encounter(tr, thresholds_of(c)).verdict);
      }
    } catch (const Error& e) {
      row.error = to_string(e.kind());
    }
  });

  auto f = open_output(cfg, "sweep.csv");
  f << "# swim sweep v1\n";
  f << "param,value,rate,final_separation,verdict,error\n";
  std::size_t failed = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const Row& r = rows[i];
    failed += r.error.empty() ? 0 : 1;
    f << sweep.key << ',' << format_double(values[i]) << ',' << r.rate << ',' << r.final_sep << ','
      << r.verdict << ',' << r.error << '\n';
  }
  log << "sweep " << sweep.key << ": " << values.size() << " rows, " << failed << " with errors\n";
}

SteadyStateReport cmd_steady(const RunConfig& cfg, bool eps_zero, std::ostream& out) {
  validate_config(cfg);
  if (cfg.scenario != Scenario::Mirror) config_error("steady needs scenario = mirror");
  if (cfg.medium != MediumKind::Bulk3D) config_error("steady analysis is available for bulk3d only");
  const PairCoefficients c = pair_coefficients(swimmer_params(cfg), medium_of(cfg));
  const double eps = eps_zero ? 0.0 : 1.0 / cfg.a0;

  SteadyStateReport rep;
  if (eps == 0) {
    rep.rotational_roots = rotationally_steady_angles(c, 0);
    rep.translational_roots = {-std::numbers::pi, 0.0};
    for (double t : rep.rotational_roots)
      for (double q : rep.translational_roots)
        if (std::abs(std::remainder(t - q, 2 * std::numbers::pi)) < 1e-12) rep.joint_roots.push_back(t);
  } else {
    rep = steady_state_scan(c, eps, 1024);
  }

  std::ostringstream s;
  auto list = [&](const char* name, const std::vector<double>& v) {
    s << name << " =";
    for (double x : v) s << ' ' << format_double(x);
    s << '\n';
  };
  s << "# swim steady v1\n";
  s << "eps = " << format_double(eps) << '\n';
  s << "A = " << format_double(c.A) << '\n';
  s << "D = " << format_double(c.D) << '\n';
  list("rotational_roots", rep.rotational_roots);
  list("translational_roots", rep.translational_roots);
  list("joint_roots", rep.joint_roots);
  s << "intersection_empty = " << (rep.joint_roots.empty() ? "true" : "false") << '\n';
  auto f = open_output(cfg, "steady.txt");
  f << s.str();
  out << s.str();
  return rep;
}

} // namespace swim
