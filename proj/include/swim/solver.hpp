#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "swim/model.hpp"

namespace swim {

struct AlphaSystem {
  Eigen::MatrixXd matrix;
  Eigen::VectorXd rhs;
  std::vector<Vector3> propulsion; // F_P per swimmer
  std::vector<std::string> warnings;
};

struct BallForces {
  Vector3 head;
  Vector3 tail;
  Vector3 prop;
};

struct AlphaSolution {
  Eigen::VectorXd alpha;
  std::vector<BallForces> forces;
};

struct BallVelocities {
  Vector3 head;
  Vector3 tail;
  // Parts induced by the other swimmers; the self parts are parallel to tau.
  Vector3 head_induced;
  Vector3 tail_induced;
};

struct Kinematics {
  Vector3 v_C;
  Vector3 omega;
  Vector3 v_H;
  Vector3 v_T;

  double omega_z() const { return omega.z(); }
};

AlphaSystem assemble_alpha_system(const std::vector<Swimmer>& swimmers, const Medium& medium);

AlphaSolution solve_alpha(const AlphaSystem& system);

std::vector<BallVelocities> ball_velocities(const std::vector<Swimmer>& swimmers,
                                            const AlphaSolution& solution,
                                            const Medium& medium);

Kinematics body_kinematics(const Vector3& v_H, const Vector3& v_T, const Vector3& tau, double L);

// Same as above, but the rotation is taken from the induced parts only, which
// keeps it free of round-off from the much larger self-propulsion terms.
Kinematics body_kinematics(const BallVelocities& v, const Vector3& tau, double L);

Vector3 flow_field(const Vector3& x, const std::vector<Swimmer>& swimmers,
                   const AlphaSolution& solution, const Medium& medium);

// Largest |F_H + F_T + F_P| and |tau x (F_H - F_T)| over all swimmers.
struct BalanceResidual {
  double force = 0;
  double torque = 0;
};
BalanceResidual balance_residual(const std::vector<Swimmer>& swimmers,
                                 const AlphaSolution& solution);

// Whole pipeline: validate, assemble, solve, ball velocities, kinematics.
struct SolveResult {
  AlphaSolution solution;
  std::vector<Kinematics> kinematics;
  std::vector<std::string> warnings;
};
SolveResult solve_configuration(const std::vector<SwimmerParams>& params,
                                const std::vector<SwimmerState>& states, const Medium& medium);

// Closed-form isolated swimmer speed as printed for the main-text convention.
double single_swimmer_speed(const SwimmerParams& params, double mu);

// Isolated speed and dipole split of this model (N = 1 exactly).
double isolated_speed(const SwimmerParams& params, const Medium& medium);
double isolated_alpha(const SwimmerParams& params, const Medium& medium);

} // namespace swim
