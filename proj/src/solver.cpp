#include "swim/solver.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/LU>

namespace swim {

namespace {

double inv_drag(const SwimmerParams& p, const Medium& m) {
  return 1.0 / drag_coefficient(p.drag, m.mu, p.R);
}

double tKt(const Medium& m, const Vector3& ti, const Vector3& r, const Vector3& tj) {
  return ti.dot(green(m, r) * tj);
}

void check_medium(const Swimmer& s, const Medium& m) {
  auto bad = validate(s.params(), m);
  if (m.kind == MediumKind::QuasiTwoD && s.state().tau.z() != 0.0)
    bad.push_back("film swimmers must lie in the plane (tau_z = 0)");
  if (!bad.empty()) {
    std::string msg;
    for (const auto& b : bad) msg += (msg.empty() ? "" : "; ") + b;
    throw Error(ErrorKind::InvalidGeometry, msg);
  }
}

struct SelfTerms {
  double s2L, sHP, sTP, g;
};

SelfTerms self_terms(const Swimmer& s, const Medium& m) {
  const auto& p = s.params();
  return {axial_kernel(m, 2 * p.L), axial_kernel(m, (1 - p.zeta) * p.L),
          axial_kernel(m, (1 + p.zeta) * p.L), inv_drag(p, m)};
}

} // namespace

AlphaSystem assemble_alpha_system(const std::vector<Swimmer>& sw, const Medium& m) {
  const auto n = static_cast<Eigen::Index>(sw.size());
  AlphaSystem sys;
  sys.matrix = Eigen::MatrixXd::Zero(n, n);
  sys.rhs = Eigen::VectorXd::Zero(n);
  for (const auto& s : sw) check_medium(s, m);

  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const auto &pi = sw[i].points(), &pj = sw[j].points();
      const double rmin = sw[i].params().R + sw[j].params().R;
      for (const Vector3* a : {&pi.head, &pi.tail})
        for (const Vector3* b : {&pj.head, &pj.tail})
          if ((*a - *b).norm() < rmin) {
            std::ostringstream os;
            os << "balls of swimmers " << i << " and " << j << " closer than 2R";
            throw Error(ErrorKind::OverlappingSwimmers, os.str());
          }
      const double sep = (sw[i].state().center - sw[j].state().center).norm();
      if (sep < 5 * 2 * std::max(sw[i].params().L, sw[j].params().L)) {
        std::ostringstream os;
        os << "swimmers " << i << " and " << j << " not well separated (distance " << sep << ")";
        sys.warnings.push_back(os.str());
      }
    }
  }

  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& P = sw[i].points();
    const Vector3& ti = sw[i].state().tau;
    const SelfTerms st = self_terms(sw[i], m);
    sys.matrix(i, i) = 2 * st.s2L - 2 * st.g;
    double b = (st.s2L - st.g) + (st.sHP - st.sTP);
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == i) continue;
      const auto& Q = sw[j].points();
      const Vector3& tj = sw[j].state().tau;
      const double hh = tKt(m, ti, P.head - Q.head, tj);
      const double th = tKt(m, ti, P.tail - Q.head, tj);
      sys.matrix(i, j) = -hh + th + tKt(m, ti, P.head - Q.tail, tj) - tKt(m, ti, P.tail - Q.tail, tj);
      b += -hh + th + tKt(m, ti, P.head - Q.prop, tj) - tKt(m, ti, P.tail - Q.prop, tj);
    }
    sys.rhs(i) = b;
    sys.propulsion.push_back(sw[i].params().f_p * ti);
  }
  return sys;
}

AlphaSolution solve_alpha(const AlphaSystem& sys) {
  const auto n = sys.matrix.rows();
  AlphaSolution sol;
  if (n == 0) return sol;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(sys.matrix);
  const double rc = lu.rcond();
  if (!(rc > 1e-12)) throw Error(ErrorKind::SingularSystem, "alpha system is singular");
  sol.alpha = lu.solve(sys.rhs);
  sol.forces.reserve(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Vector3& fp = sys.propulsion[i];
    const double a = sol.alpha(i);
    sol.forces.push_back({-(1 - a) * fp, -a * fp, fp});
  }
  return sol;
}

std::vector<BallVelocities> ball_velocities(const std::vector<Swimmer>& sw,
                                            const AlphaSolution& sol, const Medium& m) {
  std::vector<BallVelocities> out(sw.size());
  for (std::size_t i = 0; i < sw.size(); ++i) {
    const auto& P = sw[i].points();
    Vector3 uh = Vector3::Zero(), ut = Vector3::Zero();
    for (std::size_t j = 0; j < sw.size(); ++j) {
      if (j == i) continue;
      const auto& Q = sw[j].points();
      const auto& F = sol.forces[j];
      uh -= green(m, P.head - Q.head) * F.head + green(m, P.head - Q.tail) * F.tail +
            green(m, P.head - Q.prop) * F.prop;
      ut -= green(m, P.tail - Q.head) * F.head + green(m, P.tail - Q.tail) * F.tail +
            green(m, P.tail - Q.prop) * F.prop;
    }
    const SelfTerms st = self_terms(sw[i], m);
    const double a = sol.alpha(i);
    const double fp = sw[i].params().f_p;
    const Vector3& tau = sw[i].state().tau;
    const double sh = fp * (a * st.s2L - st.sHP + (1 - a) * st.g);
    const double stl = fp * ((1 - a) * st.s2L - st.sTP + a * st.g);
    out[i] = {uh + sh * tau, ut + stl * tau, uh, ut};
  }
  return out;
}

namespace {

void check_rigidity(const Vector3& v_H, const Vector3& v_T, const Vector3& tau) {
  const double scale = std::max(v_H.norm(), v_T.norm());
  const double res = std::abs(tau.dot(v_H - v_T));
  if (res > 1e-6 * scale) {
    std::ostringstream os;
    os << "tau.(v_H - v_T) = " << res;
    throw Error(ErrorKind::RigidityViolation, os.str());
  }
}

} // namespace

Kinematics body_kinematics(const Vector3& v_H, const Vector3& v_T, const Vector3& tau, double L) {
  check_rigidity(v_H, v_T, tau);
  return {0.5 * (v_H + v_T), tau.cross(v_H - v_T) / (2 * L), v_H, v_T};
}

Kinematics body_kinematics(const BallVelocities& v, const Vector3& tau, double L) {
  check_rigidity(v.head, v.tail, tau);
  return {0.5 * (v.head + v.tail), tau.cross(v.head_induced - v.tail_induced) / (2 * L), v.head,
          v.tail};
}

Vector3 flow_field(const Vector3& x, const std::vector<Swimmer>& sw, const AlphaSolution& sol,
                   const Medium& m) {
  Vector3 u = Vector3::Zero();
  for (std::size_t i = 0; i < sw.size(); ++i) {
    const auto& P = sw[i].points();
    const double R = sw[i].params().R;
    if ((x - P.head).norm() < 2 * R || (x - P.tail).norm() < 2 * R)
      throw Error(ErrorKind::SingularPoint, "field point inside the exclusion disk of a ball");
    if ((x - P.prop).norm() < 1e-6)
      throw Error(ErrorKind::SingularPoint, "field point on the propulsion point");
    const auto& F = sol.forces[i];
    u -= green(m, x - P.head) * F.head + green(m, x - P.tail) * F.tail +
         green(m, x - P.prop) * F.prop;
  }
  return u;
}

BalanceResidual balance_residual(const std::vector<Swimmer>& sw, const AlphaSolution& sol) {
  BalanceResidual r;
  for (std::size_t i = 0; i < sw.size(); ++i) {
    const auto& F = sol.forces[i];
    r.force = std::max(r.force, (F.head + F.tail + F.prop).norm());
    r.torque = std::max(r.torque, sw[i].state().tau.cross(F.head - F.tail).norm());
  }
  return r;
}

SolveResult solve_configuration(const std::vector<SwimmerParams>& params,
                                const std::vector<SwimmerState>& states, const Medium& medium) {
  std::vector<Swimmer> sw;
  sw.reserve(states.size());
  for (std::size_t i = 0; i < states.size(); ++i)
    sw.push_back(make_swimmer(params.size() == 1 ? params[0] : params.at(i), states[i]));
  auto sys = assemble_alpha_system(sw, medium);
  SolveResult res;
  res.solution = solve_alpha(sys);
  res.warnings = std::move(sys.warnings);
  const auto v = ball_velocities(sw, res.solution, medium);
  for (std::size_t i = 0; i < sw.size(); ++i)
    res.kinematics.push_back(body_kinematics(v[i], sw[i].state().tau, sw[i].params().L));
  return res;
}

double single_swimmer_speed(const SwimmerParams& p, double mu) {
  const double z = p.zeta;
  return p.f_p / (8 * std::numbers::pi * mu * p.L) *
         (0.5 + 4 * p.L / (3 * p.R) + 1 / std::abs(z - 1) + 1 / std::abs(z + 1));
}

double isolated_alpha(const SwimmerParams& p, const Medium& m) {
  const double s2 = axial_kernel(m, 2 * p.L);
  const double g = inv_drag(p, m);
  return ((s2 - g) + (axial_kernel(m, (1 - p.zeta) * p.L) - axial_kernel(m, (1 + p.zeta) * p.L))) /
         (2 * s2 - 2 * g);
}

double isolated_speed(const SwimmerParams& p, const Medium& m) {
  const double s2 = axial_kernel(m, 2 * p.L);
  const double g = inv_drag(p, m);
  return p.f_p * (0.5 * s2 - 0.5 * axial_kernel(m, (1 - p.zeta) * p.L) -
                  0.5 * axial_kernel(m, (1 + p.zeta) * p.L) + 0.5 * g);
}

} // namespace swim
