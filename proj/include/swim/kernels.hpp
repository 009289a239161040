#pragma once

#include <cmath>
#include <numbers>

#include <Eigen/Core>

#include "swim/errors.hpp"

namespace swim {

template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Mat3 = Eigen::Matrix<Scalar, 3, 3>;

enum class DragConvention { MainText, AppendixC };

inline constexpr double kSingularCutoff = 1e-12;

// gamma0 = 6 pi mu R (MainText) or 8 pi mu R (AppendixC)
template <typename Scalar>
Scalar drag_coefficient(DragConvention conv, Scalar mu, Scalar R) {
  const Scalar k = conv == DragConvention::MainText ? Scalar(6) : Scalar(8);
  return k * Scalar(std::numbers::pi) * mu * R;
}

// Oseen tensor G(x) = (I + x x^T / |x|^2) / (8 pi mu |x|).
template <typename Derived>
Mat3<typename Derived::Scalar> oseen_tensor(const Eigen::MatrixBase<Derived>& x,
                                            typename Derived::Scalar mu,
                                            typename Derived::Scalar length_scale = 1) {
  EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(Derived, 3);
  using Scalar = typename Derived::Scalar;
  const Scalar r = x.norm();
  if (!(r > Scalar(kSingularCutoff) * length_scale))
    throw Error(ErrorKind::SingularPoint, "oseen_tensor evaluated at the origin");
  const Scalar c = Scalar(1) / (Scalar(8) * Scalar(std::numbers::pi) * mu * r);
  return c * (Mat3<Scalar>::Identity() + x * x.transpose() / (r * r));
}

// Field of a sphere of radius R translating with unit velocity, evaluated at
// offset x from its center.
template <typename Derived>
Mat3<typename Derived::Scalar> sphere_field(const Eigen::MatrixBase<Derived>& x,
                                            typename Derived::Scalar R) {
  EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(Derived, 3);
  using Scalar = typename Derived::Scalar;
  const Scalar r = x.norm();
  if (r < R)
    throw Error(ErrorKind::InsideSphere, "sphere_field evaluated inside the ball");
  const Scalar q = (R * R) / (r * r);
  const Scalar a = Scalar(1) + q / Scalar(3);
  const Scalar b = Scalar(1) - q;
  const Vec3<Scalar> n = x / r;
  return (Scalar(3) * R / (Scalar(4) * r)) *
         (a * Mat3<Scalar>::Identity() + b * n * n.transpose());
}

// F = -gamma0 (v - u)
template <typename D1, typename D2>
Vec3<typename D1::Scalar> stokes_drag(const Eigen::MatrixBase<D1>& v_ball,
                                      const Eigen::MatrixBase<D2>& u_background,
                                      typename D1::Scalar R, typename D1::Scalar mu,
                                      DragConvention conv) {
  return -drag_coefficient(conv, mu, R) * (v_ball - u_background);
}

// Film profile f(z) = 3 z (1 - z/2h) / (8 pi mu), walls at z = 0 and z = 2h.
template <typename Scalar>
Scalar film_profile(Scalar z, Scalar h, Scalar mu) {
  if (z < Scalar(0) || z > Scalar(2) * h)
    throw Error(ErrorKind::OutOfFilm, "height outside [0, 2h]");
  return Scalar(3) * z * (Scalar(1) - z / (Scalar(2) * h)) /
         (Scalar(8) * Scalar(std::numbers::pi) * mu);
}

// Leading far-field term of the thin-film Green's function. Only the in-plane
// components of r are used.
template <typename Derived>
Mat3<typename Derived::Scalar> q2d_green(const Eigen::MatrixBase<Derived>& r,
                                         typename Derived::Scalar z,
                                         typename Derived::Scalar h,
                                         typename Derived::Scalar mu,
                                         typename Derived::Scalar length_scale = 1) {
  using Scalar = typename Derived::Scalar;
  const Scalar f = film_profile(z, h, mu);
  const Scalar x = r(0), y = r(1);
  const Scalar rho2 = x * x + y * y;
  if (!(std::sqrt(rho2) > Scalar(kSingularCutoff) * length_scale))
    throw Error(ErrorKind::SingularPoint, "q2d_green evaluated at the origin");
  const Scalar c = f / (rho2 * rho2);
  Mat3<Scalar> g = Mat3<Scalar>::Zero();
  g(0, 0) = c * (x * x - y * y);
  g(0, 1) = c * (Scalar(2) * x * y);
  g(1, 0) = g(0, 1);
  g(1, 1) = -g(0, 0);
  return g;
}

// The exponentially decaying corrections dropped from q2d_green are below
// e^{-10} once rho >= 5h.
template <typename Scalar>
bool q2d_near_field(Scalar rho, Scalar h) {
  return rho < Scalar(5) * h;
}

} // namespace swim
