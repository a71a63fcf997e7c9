#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <deque>

#include "slamnc/errors.hpp"

namespace slamnc {

/// Wraps an angle to (-pi, pi].
double wrap_angle(double a);

/**
 * A 3D rotation backed by a unit quaternion, renormalized after every
 * composition so long chains do not drift.
 */
class Rotation3 {
 public:
  Rotation3() : q_(Eigen::Quaterniond::Identity()) {}

  static Rotation3 identity() { return Rotation3(); }
  static Rotation3 from_quaternion(double w, double x, double y, double z);
  /// Rotation by `angle` radians around the +z axis.
  static Rotation3 about_z(double angle);
  /// Minimal rotation taking direction `from` onto direction `to`.
  static Rotation3 from_two_directions(const Eigen::Vector3d& from,
                                       const Eigen::Vector3d& to);

  Eigen::Vector3d apply(const Eigen::Vector3d& v) const { return q_ * v; }
  Rotation3 inverse() const { return Rotation3(q_.conjugate()); }

  /// Composition: (a * b) applies b first, then a.
  friend Rotation3 operator*(const Rotation3& a, const Rotation3& b) {
    return Rotation3(a.q_ * b.q_);
  }

  const Eigen::Quaterniond& quaternion() const { return q_; }

 private:
  explicit Rotation3(const Eigen::Quaterniond& q) : q_(q.normalized()) {}
  Eigen::Quaterniond q_;
};

/// Applies rotation r to vector v.
inline Eigen::Vector3d rotate(const Rotation3& r, const Eigen::Vector3d& v) {
  return r.apply(v);
}

/// Planar pose: position in meters, heading in radians wrapped to (-pi, pi].
struct Pose2 {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;

  Eigen::Vector2d position() const { return {x, y}; }
};

/// Advances a pose by a body-frame step (dx, dy) using the pre-step heading,
/// then turns by dtheta.
Pose2 advance(const Pose2& p, double dx, double dy, double dtheta);

/**
 * Extracts the sensor-to-planar rotation from a gravity-dominated
 * acceleration sample: the minimal rotation aligning the measured gravity
 * direction with planar +z. Yaw-free by construction.
 *
 * Throws DegenerateGravity when |accel| <= 0.5 m/s^2.
 */
Rotation3 planar_rotation_from_gravity(const Eigen::Vector3d& accel);

/// Sensor-to-world rotation: r_sp followed by a yaw of theta about +z.
Rotation3 sensor_to_world(const Rotation3& r_sp, double theta);

/**
 * Moving-average low-pass over acceleration samples, used to smooth
 * pitch/roll extraction while walking. Window is in seconds.
 */
class GravityLowPass {
 public:
  explicit GravityLowPass(double window_s = 0.5) : window_(window_s) {}

  void add(double t, const Eigen::Vector3d& accel);
  Eigen::Vector3d filtered() const;
  bool empty() const { return samples_.empty(); }

 private:
  double window_;
  std::deque<std::pair<double, Eigen::Vector3d>> samples_;
  Eigen::Vector3d sum_ = Eigen::Vector3d::Zero();
};

}  // namespace slamnc
