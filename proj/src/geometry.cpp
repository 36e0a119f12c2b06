#include "screloc/geometry.hpp"

namespace screloc {

// Explicit instantiations for the scalar type used across the pipeline.
template struct RigidTransformT<double>;
template RigidTransformT<double> exp_se3<double>(const Eigen::Matrix<double, 6, 1>&);
template Eigen::Matrix<double, 6, 1> log_se3<double>(const RigidTransformT<double>&);
template std::optional<RigidTransformT<double>> kabsch<double>(
    const std::vector<Eigen::Matrix<double, 3, 1>>&,
    const std::vector<Eigen::Matrix<double, 3, 1>>&);

}  // namespace screloc
