#pragma once

#include <array>
#include <vector>

#include <Eigen/Core>

#include "swim/model.hpp"

namespace swim {

using Vector2 = Eigen::Vector2d;

// Which alpha0 feeds the film series.
enum class Q2DAlpha { FilmSelfInteraction, BulkClosedForm };

struct PairCoefficients {
  MediumKind medium = MediumKind::Bulk3D;
  double A = 0;      // 3D dipole factor
  double D = 0;      // 3D quadrupole factor
  double alpha0 = 0.5;
  double v0 = 0;
  double L = 1;
  // Film series amplitudes f(h) f_p L (1 - zeta - 2 alpha0) and f(h) f_p L^2 (zeta^2 - 1).
  double P1 = 0;
  double P2 = 0;
};

// alpha0 from the exact N = 1 closed form of the bulk model.
double alpha0_closed_form(const SwimmerParams& params, double mu);

PairCoefficients pair_coefficients(const SwimmerParams& params, const Medium& medium,
                                   Q2DAlpha q2d_alpha = Q2DAlpha::FilmSelfInteraction);

struct TrigFactors {
  std::array<Vector2, 2> B;
  std::array<double, 2> C;
  std::array<double, 2> E;
};

TrigFactors trig_factors(double theta1, double theta2, double phi);
TrigFactors mirror_factors(double theta1);
TrigFactors parallel_factors(double phi_tilde);

struct PairVelocities {
  std::array<Vector2, 2> v;
  std::array<double, 2> omega;
};

PairVelocities pair_velocities_3d(const PairAngles& angles, const PairCoefficients& c,
                                  int order = 4);
PairVelocities pair_velocities_q2d(const PairAngles& angles, const PairCoefficients& c,
                                   int order = 5);
// Dispatches on c.medium with the maximum order of that medium when order < 0.
PairVelocities pair_velocities(const PairAngles& angles, const PairCoefficients& c,
                               int order = -1);

// Series rotation of swimmer 1 in the mirror configuration (3D, order 4).
double mirror_omega(const PairCoefficients& c, double eps, double theta1);
// Vertical velocity of swimmer 1 in the mirror configuration (3D, order 2).
double mirror_vertical_velocity(const PairCoefficients& c, double eps, double theta1);

std::vector<double> rotationally_steady_angles(const PairCoefficients& c, double eps);

struct SteadyStateReport {
  std::vector<double> rotational_roots;
  std::vector<double> translational_roots;
  std::vector<double> joint_roots;
};

SteadyStateReport steady_state_scan(const PairCoefficients& c, double eps, int grid_n = 1024);

double mirror_stability_rate(double theta1, double delta, double eps, double v0);

} // namespace swim
