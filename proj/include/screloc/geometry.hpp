#ifndef SCRELOC_GEOMETRY_HPP
#define SCRELOC_GEOMETRY_HPP

#include <Eigen/Core>
#include <Eigen/SVD>
#include <cmath>
#include <optional>
#include <vector>

#include "screloc/core.hpp"

namespace screloc {

/// Element of SE(3), mapping camera-space points to world space: p' = R p + t.
template <typename Scalar>
struct RigidTransformT {
  using Mat = Eigen::Matrix<Scalar, 3, 3>;
  using Vec = Eigen::Matrix<Scalar, 3, 1>;

  Mat rotation = Mat::Identity();
  Vec translation = Vec::Zero();

  RigidTransformT() = default;
  RigidTransformT(const Mat& r, const Vec& t) : rotation(r), translation(t) {}

  static RigidTransformT identity() { return {}; }

  Vec operator*(const Vec& p) const { return rotation * p + translation; }

  Eigen::Matrix<Scalar, 4, 4> matrix() const {
    Eigen::Matrix<Scalar, 4, 4> m = Eigen::Matrix<Scalar, 4, 4>::Identity();
    m.template topLeftCorner<3, 3>() = rotation;
    m.template topRightCorner<3, 1>() = translation;
    return m;
  }

  static RigidTransformT from_matrix(const Eigen::Matrix<Scalar, 4, 4>& m) {
    return {m.template topLeftCorner<3, 3>(), m.template topRightCorner<3, 1>()};
  }
};

using RigidTransform = RigidTransformT<double>;

/// Twist in se(3): (omega, rho) with the rotational part first.
using TwistVector = Vec6;

struct PinholeIntrinsics {
  double fx = 0, fy = 0;  // focal lengths, pixels
  double cx = 0, cy = 0;  // principal point, pixels
  int width = 0, height = 0;

  bool valid() const {
    return fx > 0 && fy > 0 && cx >= 0 && cx < width && cy >= 0 && cy < height;
  }

  PinholeIntrinsics scaled(int factor) const {
    PinholeIntrinsics s;
    s.fx = fx / factor;
    s.fy = fy / factor;
    s.cx = cx / factor;
    s.cy = cy / factor;
    s.width = width / factor;
    s.height = height / factor;
    return s;
  }
};

struct PoseError {
  double translation_error = 0;  // metres
  double angular_error = 0;      // degrees
};

template <typename Scalar>
Eigen::Matrix<Scalar, 3, 3> skew(const Eigen::Matrix<Scalar, 3, 1>& v) {
  Eigen::Matrix<Scalar, 3, 3> s;
  s << Scalar(0), -v.z(), v.y(),
       v.z(), Scalar(0), -v.x(),
      -v.y(), v.x(), Scalar(0);
  return s;
}

/// Exponential map se(3) -> SE(3) (Rodrigues closed form; series below 1e-8).
template <typename Scalar>
RigidTransformT<Scalar> exp_se3(const Eigen::Matrix<Scalar, 6, 1>& twist) {
  using Mat = Eigen::Matrix<Scalar, 3, 3>;
  const Eigen::Matrix<Scalar, 3, 1> omega = twist.template head<3>();
  const Eigen::Matrix<Scalar, 3, 1> rho = twist.template tail<3>();
  const Scalar theta = omega.norm();
  const Mat hat = skew(omega);
  const Mat hat2 = hat * hat;

  Mat rot, v;
  if (theta < Scalar(1e-8)) {
    rot = Mat::Identity() + hat + hat2 / Scalar(2);
    v = Mat::Identity() + hat / Scalar(2) + hat2 / Scalar(6);
  } else {
    const Scalar t2 = theta * theta;
    const Scalar a = std::sin(theta) / theta;
    const Scalar b = (Scalar(1) - std::cos(theta)) / t2;
    const Scalar c = (theta - std::sin(theta)) / (t2 * theta);
    rot = Mat::Identity() + a * hat + b * hat2;
    v = Mat::Identity() + b * hat + c * hat2;
  }
  return {rot, v * rho};
}

/// Logarithmic map SE(3) -> se(3). Throws AngleNearPi for rotation angles
/// within 1e-6 of pi, where the map is ill-conditioned.
template <typename Scalar>
Eigen::Matrix<Scalar, 6, 1> log_se3(const RigidTransformT<Scalar>& transform) {
  using Mat = Eigen::Matrix<Scalar, 3, 3>;
  const Mat& rot = transform.rotation;
  const Scalar cos_theta =
      std::min(Scalar(1), std::max(Scalar(-1), (rot.trace() - Scalar(1)) / Scalar(2)));
  const Scalar theta = std::acos(cos_theta);
  if (theta >= Scalar(M_PI) - Scalar(1e-6)) {
    throw AngleNearPi("log_se3: rotation angle within 1e-6 of pi");
  }

  Eigen::Matrix<Scalar, 3, 1> omega;
  Mat v_inv;
  if (theta < Scalar(1e-8)) {
    omega << (rot(2, 1) - rot(1, 2)) / Scalar(2), (rot(0, 2) - rot(2, 0)) / Scalar(2),
        (rot(1, 0) - rot(0, 1)) / Scalar(2);
    const Mat hat = skew(omega);
    v_inv = Mat::Identity() - hat / Scalar(2) + (hat * hat) / Scalar(12);
  } else {
    const Scalar factor = theta / (Scalar(2) * std::sin(theta));
    omega << factor * (rot(2, 1) - rot(1, 2)), factor * (rot(0, 2) - rot(2, 0)),
        factor * (rot(1, 0) - rot(0, 1));
    const Mat hat = skew(omega);
    const Scalar t2 = theta * theta;
    const Scalar coeff =
        (Scalar(1) - theta / (Scalar(2) * std::tan(theta / Scalar(2)))) / t2;
    v_inv = Mat::Identity() - hat / Scalar(2) + coeff * (hat * hat);
  }

  Eigen::Matrix<Scalar, 6, 1> twist;
  twist.template head<3>() = omega;
  twist.template tail<3>() = v_inv * transform.translation;
  return twist;
}

template <typename Scalar>
RigidTransformT<Scalar> compose(const RigidTransformT<Scalar>& a, const RigidTransformT<Scalar>& b) {
  return {a.rotation * b.rotation, a.rotation * b.translation + a.translation};
}

template <typename Scalar>
RigidTransformT<Scalar> invert(const RigidTransformT<Scalar>& a) {
  const Eigen::Matrix<Scalar, 3, 3> rt = a.rotation.transpose();
  return {rt, -(rt * a.translation)};
}

/// Least-squares rigid alignment of paired point sets (SVD with reflection
/// correction): returns H minimising sum ||H * camera_i - world_i||^2, or
/// nullopt for a degenerate (collinear/coincident) configuration.
template <typename Scalar>
std::optional<RigidTransformT<Scalar>> kabsch(
    const std::vector<Eigen::Matrix<Scalar, 3, 1>>& camera_points,
    const std::vector<Eigen::Matrix<Scalar, 3, 1>>& world_points) {
  using Mat = Eigen::Matrix<Scalar, 3, 3>;
  using Vec = Eigen::Matrix<Scalar, 3, 1>;
  const std::size_t n = camera_points.size();
  if (n < 3 || world_points.size() != n) return std::nullopt;

  Vec cam_centroid = Vec::Zero(), world_centroid = Vec::Zero();
  for (std::size_t i = 0; i < n; ++i) {
    cam_centroid += camera_points[i];
    world_centroid += world_points[i];
  }
  cam_centroid /= Scalar(n);
  world_centroid /= Scalar(n);

  Mat cross = Mat::Zero();
  for (std::size_t i = 0; i < n; ++i) {
    cross += (world_points[i] - world_centroid) * (camera_points[i] - cam_centroid).transpose();
  }

  Eigen::JacobiSVD<Mat> svd(cross, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  // Rank >= 2 is required for a unique rotation: coincident points give
  // sv(0) ~ 0, collinear ones sv(1) ~ 0. A planar set (sv(2) ~ 0) is fine --
  // it is the standard 3-point case.
  if (!(sv(0) > Scalar(0)) || sv(1) < Scalar(1e-12) * sv(0)) return std::nullopt;

  Mat d = Mat::Identity();
  if ((svd.matrixU() * svd.matrixV().transpose()).determinant() < Scalar(0)) d(2, 2) = Scalar(-1);
  const Mat rot = svd.matrixU() * d * svd.matrixV().transpose();
  return RigidTransformT<Scalar>{rot, world_centroid - rot * cam_centroid};
}

/// Back-projects a pixel with a metric depth into camera space.
inline Vec3 backproject(const Vec2i& pixel, double depth_m, const PinholeIntrinsics& k) {
  if (!(depth_m > 0) || !std::isfinite(depth_m)) {
    throw InvalidDepth("backproject: non-positive or non-finite depth");
  }
  return {(pixel.x() - k.cx) * depth_m / k.fx, (pixel.y() - k.cy) * depth_m / k.fy, depth_m};
}

/// Projects a camera-space point to continuous pixel coordinates (x, y).
inline Eigen::Vector2d project(const Vec3& p, const PinholeIntrinsics& k) {
  return {k.fx * p.x() / p.z() + k.cx, k.fy * p.y() / p.z() + k.cy};
}

inline double rotation_angle_deg(const Mat3& r) {
  const double c = std::min(1.0, std::max(-1.0, (r.trace() - 1.0) / 2.0));
  return std::acos(c) * 180.0 / M_PI;
}

inline PoseError pose_error(const RigidTransform& estimate, const RigidTransform& ground_truth) {
  PoseError e;
  e.translation_error = (estimate.translation - ground_truth.translation).norm();
  e.angular_error = rotation_angle_deg(ground_truth.rotation.transpose() * estimate.rotation);
  return e;
}

/// Orthonormality / determinant drift of a would-be rotation matrix.
inline double rotation_defect(const Mat3& r) {
  const double ortho = (r.transpose() * r - Mat3::Identity()).cwiseAbs().maxCoeff();
  return std::max(ortho, std::abs(r.determinant() - 1.0));
}

}  // namespace screloc

#endif
