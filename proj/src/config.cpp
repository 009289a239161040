#include "swim/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "swim/solver.hpp"

namespace swim {

namespace {

[[noreturn]] void config_error(const std::string& msg) { throw Error(ErrorKind::ConfigError, msg); }

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  double out = 0;
  const char* end = v.data() + v.size();
  auto [p, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || p != end) config_error(key + ": not a number: '" + v + "'");
  return out;
}

int to_int(const std::string& key, const std::string& v) {
  int out = 0;
  const char* end = v.data() + v.size();
  auto [p, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || p != end) config_error(key + ": not an integer: '" + v + "'");
  return out;
}

const char* drag_name(DragConvention d) {
  return d == DragConvention::MainText ? "main_text" : "appendix_c";
}

const char* medium_name(MediumKind m) { return m == MediumKind::Bulk3D ? "bulk3d" : "q2d"; }
const char* model_name(ModelKind m) { return m == ModelKind::FullSolver ? "full" : "asym"; }
const char* q2d_alpha_name(Q2DAlpha a) {
  return a == Q2DAlpha::FilmSelfInteraction ? "film" : "bulk";
}

using Setter = std::function<void(RunConfig&, const std::string&, const std::string&)>;

template <typename T>
Setter num(T RunConfig::*field) {
  return [field](RunConfig& c, const std::string& k, const std::string& v) {
    c.*field = to_double(k, v);
  };
}

Setter opt_num(std::optional<double> RunConfig::*field) {
  return [field](RunConfig& c, const std::string& k, const std::string& v) {
    if (v == "auto") c.*field = std::nullopt;
    else c.*field = to_double(k, v);
  };
}

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"scenario", [](RunConfig& c, const std::string&, const std::string& v) { c.scenario = parse_scenario(v); }},
      {"medium", [](RunConfig& c, const std::string&, const std::string& v) { c.medium = parse_medium(v); }},
      {"model", [](RunConfig& c, const std::string&, const std::string& v) { c.model = parse_model(v); }},
      {"order", [](RunConfig& c, const std::string& k, const std::string& v) { c.order = to_int(k, v); }},
      {"q2d_alpha", [](RunConfig& c, const std::string& k, const std::string& v) {
         if (v == "film") c.q2d_alpha = Q2DAlpha::FilmSelfInteraction;
         else if (v == "bulk") c.q2d_alpha = Q2DAlpha::BulkClosedForm;
         else config_error(k + ": expected film or bulk");
       }},
      {"medium.mu", num(&RunConfig::mu)},
      {"medium.h", num(&RunConfig::h)},
      {"swimmer.f_p", num(&RunConfig::f_p)},
      {"swimmer.L", num(&RunConfig::L)},
      {"swimmer.R", opt_num(&RunConfig::R)},
      {"swimmer.zeta", num(&RunConfig::zeta)},
      {"swimmer.drag", [](RunConfig& c, const std::string& k, const std::string& v) {
         if (v == "main_text") c.drag = DragConvention::MainText;
         else if (v == "appendix_c") c.drag = DragConvention::AppendixC;
         else config_error(k + ": expected main_text or appendix_c");
       }},
      {"pose.a0", num(&RunConfig::a0)},
      {"pose.theta1", num(&RunConfig::theta1)},
      {"pose.theta2", num(&RunConfig::theta2)},
      {"pose.phi", num(&RunConfig::phi)},
      {"pose.delta0", num(&RunConfig::delta0)},
      {"integrator.dt", num(&RunConfig::dt)},
      {"integrator.dt_max", num(&RunConfig::dt_max)},
      {"integrator.t_max", opt_num(&RunConfig::t_max)},
      {"integrator.sample_every", num(&RunConfig::sample_every)},
      {"integrator.max_disp_frac", num(&RunConfig::max_disp_frac)},
      {"integrator.max_turn", num(&RunConfig::max_turn)},
      {"thresholds.d_in", num(&RunConfig::d_in)},
      {"thresholds.d_off", num(&RunConfig::d_off)},
      {"output.dir", [](RunConfig& c, const std::string&, const std::string& v) { c.out_dir = v; }},
  };
  return table;
}

} // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const char* to_string(Scenario s) {
  switch (s) {
  case Scenario::Mirror: return "mirror";
  case Scenario::Parallel: return "parallel";
  case Scenario::HeadToTail: return "head_to_tail";
  case Scenario::Custom: return "custom";
  case Scenario::Single: return "single";
  }
  return "";
}

Scenario parse_scenario(const std::string& s) {
  for (Scenario v : {Scenario::Mirror, Scenario::Parallel, Scenario::HeadToTail, Scenario::Custom,
                     Scenario::Single})
    if (s == to_string(v)) return v;
  config_error("scenario: unknown value '" + s + "'");
}

MediumKind parse_medium(const std::string& s) {
  if (s == "bulk3d") return MediumKind::Bulk3D;
  if (s == "q2d") return MediumKind::QuasiTwoD;
  config_error("medium: expected bulk3d or q2d, got '" + s + "'");
}

ModelKind parse_model(const std::string& s) {
  if (s == "full") return ModelKind::FullSolver;
  if (s == "asym") return ModelKind::AsymptoticPair;
  config_error("model: expected full or asym, got '" + s + "'");
}

RunConfig parse_config(const std::string& text) {
  RunConfig c;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') config_error("line " + std::to_string(lineno) + ": bad section header");
      section = trim(line.substr(1, line.size() - 2));
      static const char* known[] = {"medium", "swimmer", "pose", "integrator", "thresholds", "output"};
      bool ok = false;
      for (const char* k : known) ok = ok || section == k;
      if (!ok) config_error("unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      config_error("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const std::string full = section.empty() ? key : section + "." + key;
    const auto it = setters().find(full);
    if (it == setters().end()) config_error("unknown key '" + full + "'");
    it->second(c, full, value);
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) config_error("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const RunConfig& c) {
  std::ostringstream o;
  auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string("auto"); };
  o << "scenario = " << to_string(c.scenario) << "\n"
    << "medium = " << medium_name(c.medium) << "\n"
    << "model = " << model_name(c.model) << "\n"
    << "order = " << c.order << "\n"
    << "q2d_alpha = " << q2d_alpha_name(c.q2d_alpha) << "\n\n"
    << "[medium]\n"
    << "mu = " << format_double(c.mu) << "\n"
    << "h = " << format_double(c.h) << "\n\n"
    << "[swimmer]\n"
    << "f_p = " << format_double(c.f_p) << "\n"
    << "L = " << format_double(c.L) << "\n"
    << "R = " << opt(c.R) << "\n"
    << "zeta = " << format_double(c.zeta) << "\n"
    << "drag = " << drag_name(c.drag) << "\n\n"
    << "[pose]\n"
    << "a0 = " << format_double(c.a0) << "\n"
    << "theta1 = " << format_double(c.theta1) << "\n"
    << "theta2 = " << format_double(c.theta2) << "\n"
    << "phi = " << format_double(c.phi) << "\n"
    << "delta0 = " << format_double(c.delta0) << "\n\n"
    << "[integrator]\n"
    << "dt = " << format_double(c.dt) << "\n"
    << "dt_max = " << format_double(c.dt_max) << "\n"
    << "t_max = " << opt(c.t_max) << "\n"
    << "sample_every = " << format_double(c.sample_every) << "\n"
    << "max_disp_frac = " << format_double(c.max_disp_frac) << "\n"
    << "max_turn = " << format_double(c.max_turn) << "\n\n"
    << "[thresholds]\n"
    << "d_in = " << format_double(c.d_in) << "\n"
    << "d_off = " << format_double(c.d_off) << "\n\n"
    << "[output]\n"
    << "dir = " << c.out_dir << "\n";
  return o.str();
}

SwimmerParams swimmer_params(const RunConfig& c) {
  SwimmerParams p;
  p.f_p = c.f_p;
  p.L = c.L;
  p.R = c.R ? *c.R : (c.medium == MediumKind::Bulk3D ? 0.05 : 0.04);
  p.zeta = c.zeta;
  p.drag = c.drag;
  return p;
}

Medium medium_of(const RunConfig& c) {
  return c.medium == MediumKind::Bulk3D ? Medium::bulk(c.mu) : Medium::film(c.mu, c.h);
}

System system_of(const RunConfig& c) {
  System s;
  s.params = {swimmer_params(c)};
  s.medium = medium_of(c);
  s.model = {c.model, c.order, c.q2d_alpha};
  return s;
}

IntegratorConfig integrator_of(const RunConfig& c) {
  IntegratorConfig ic;
  ic.dt = c.dt;
  ic.dt_max = c.dt_max;
  ic.max_disp_frac = c.max_disp_frac;
  ic.max_turn = c.max_turn;
  return ic;
}

EncounterThresholds thresholds_of(const RunConfig& c) { return {c.d_in, c.d_off}; }

std::vector<SwimmerState> initial_states(const RunConfig& c) {
  switch (c.scenario) {
  case Scenario::Mirror: return mirror_states(c.a0, c.theta1, c.delta0);
  case Scenario::Parallel: return parallel_states(c.a0, c.theta1, c.phi - c.theta1);
  case Scenario::HeadToTail: return parallel_states(c.a0, 0, c.phi);
  case Scenario::Custom: return pair_states({c.theta1, c.theta2, c.phi, c.a0});
  case Scenario::Single:
    return {{Vector3::Zero(), Vector3(std::cos(c.theta1), std::sin(c.theta1), 0)}};
  }
  return {};
}

double horizon(const RunConfig& c) {
  if (c.t_max) return *c.t_max;
  return 5 * c.a0 / isolated_speed(swimmer_params(c), medium_of(c));
}

void validate_config(const RunConfig& c) {
  const auto bad = validate(swimmer_params(c), medium_of(c));
  if (!bad.empty()) {
    std::string msg;
    for (const auto& b : bad) msg += (msg.empty() ? "" : "; ") + b;
    throw Error(ErrorKind::InvalidGeometry, msg);
  }
  if (!(c.f_p > 0)) config_error("swimmer.f_p must be positive");
  if (!(c.dt > 0)) config_error("integrator.dt must be positive");
  if (c.t_max && !(*c.t_max >= 0)) config_error("integrator.t_max must be non-negative");
  if (!(c.max_disp_frac > 0)) config_error("integrator.max_disp_frac must be positive");
  if (!(c.max_turn > 0)) config_error("integrator.max_turn must be positive");
  if (c.scenario != Scenario::Single && !(c.a0 > 2 * c.L))
    config_error("pose.a0 must exceed the swimmer length 2L");
  if (std::abs(c.delta0) > 0.3) config_error("pose.delta0 must satisfy |delta0| <= 0.3");
  if (c.model == ModelKind::AsymptoticPair && c.scenario == Scenario::Single)
    config_error("model asym needs a pair scenario");
  const int max_order = c.medium == MediumKind::Bulk3D ? 4 : 5;
  if (c.order > max_order) config_error("order exceeds the series order available for this medium");
}

} // namespace swim
