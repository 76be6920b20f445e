#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mbf {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Caller passed something that violates a documented precondition.
class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

/// Geometry too degenerate to proceed (parallel normals, collinear points, ...).
class DegenerateError : public Error {
public:
    explicit DegenerateError(const std::string& msg) : Error(msg) {}
};

namespace tol {
// Orthonormality / reconstruction tolerance used by frame and box checks.
inline constexpr double kFrame = 1e-9;
// Absolute slack for closed-box point containment, well below any feature size.
inline constexpr double kContain = 1e-9;
}  // namespace tol

}  // namespace mbf
