#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "swim/kernels.hpp"

namespace swim {

using Vector3 = Eigen::Vector3d;
using Matrix3 = Eigen::Matrix3d;

struct SwimmerParams {
  double f_p = 1.0;
  double L = 1.0;
  double R = 0.05;
  double zeta = 0.0;
  DragConvention drag = DragConvention::MainText;

  bool operator==(const SwimmerParams&) const = default;
};

struct GeometryLimits {
  double max_slenderness = 0.2;
  double warn_slenderness = 0.1;
  double zeta_margin = 0.2;
};

struct SwimmerState {
  Vector3 center = Vector3::Zero();
  Vector3 tau = Vector3::UnitX();
};

enum class MediumKind { Bulk3D, QuasiTwoD };

struct Medium {
  MediumKind kind = MediumKind::Bulk3D;
  double mu = 1.0;
  double h = 0.0;

  static Medium bulk(double mu) { return {MediumKind::Bulk3D, mu, 0.0}; }
  static Medium film(double mu, double h) { return {MediumKind::QuasiTwoD, mu, h}; }

  bool operator==(const Medium&) const = default;
};

struct BallPoints {
  Vector3 head;
  Vector3 tail;
  Vector3 prop;
};

// Swimmer whose parameters passed validation; derived points are cached.
class Swimmer {
public:
  const SwimmerParams& params() const { return params_; }
  const SwimmerState& state() const { return state_; }
  const BallPoints& points() const { return points_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

private:
  Swimmer() = default;
  friend Swimmer make_swimmer(const SwimmerParams&, const SwimmerState&, const GeometryLimits&);
  SwimmerParams params_;
  SwimmerState state_;
  BallPoints points_;
  std::vector<std::string> warnings_;
};

// Returns every violated invariant; empty when params are valid.
std::vector<std::string> validate(const SwimmerParams& params,
                                  const GeometryLimits& limits = {});
std::vector<std::string> validate(const SwimmerParams& params, const Medium& medium,
                                  const GeometryLimits& limits = {});

Swimmer make_swimmer(const SwimmerParams& params, const SwimmerState& state,
                     const GeometryLimits& limits = {});

BallPoints derived_points(const SwimmerParams& params, const SwimmerState& state);
inline BallPoints derived_points(const Swimmer& s) { return s.points(); }

enum class Propulsion { Pusher, Puller, Ambiguous };
enum class Placement { Inner, Outer };

struct SwimmerClass {
  Propulsion propulsion;
  Placement placement;
};

SwimmerClass classify_swimmer(double zeta);
const char* to_string(Propulsion p);
const char* to_string(Placement p);

double brownian_deviation_time(double theta, double d_rot);

inline constexpr double kBoltzmann = 1.3806503e-23;
double rotational_diffusion(double l, double d, double temp, double eta);

struct PairAngles {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double phi = 0.0;
  double a = 1.0;

  double eps() const { return 1.0 / a; }
  double phi_tilde() const { return phi - theta1; }
};

// Angles of a coplanar pair (z components ignored).
PairAngles pair_angles(const SwimmerState& s1, const SwimmerState& s2);

// Poses realising the angles with the pair midpoint at `mid`.
std::vector<SwimmerState> pair_states(const PairAngles& angles,
                                      const Vector3& mid = Vector3::Zero());

enum class Verdict { SwimIn, SwimOff, Undecided };
const char* to_string(Verdict v);

struct EncounterOutcome {
  Verdict verdict = Verdict::Undecided;
  std::optional<double> t_event;
  std::optional<double> t0_turn;
};

// Kernel of the medium: Oseen tensor in bulk, film kernel at the midplane.
inline Matrix3 green(const Medium& medium, const Vector3& r) {
  if (medium.kind == MediumKind::Bulk3D) return oseen_tensor(r, medium.mu);
  return q2d_green(r, medium.h, medium.h, medium.mu);
}

// Projection tau^T K(q tau) tau of the medium kernel on a swimmer axis, for
// axial distance q > 0.
double axial_kernel(const Medium& medium, double q);

} // namespace swim
