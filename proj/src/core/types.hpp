#pragma once

#include <Eigen/Dense>
#include <complex>

namespace frameineq {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Relative magnitude threshold for numerical support (|a_k| > tol * max|a|).
inline constexpr double kDefaultSupportTol = 1e-8;

/// Condition-number cap for the frame operator before canonical duals are refused.
inline constexpr double kDefaultConditionCap = 1e12;

/// Relative frame-bound gap (B-A)/B below which a frame counts as tight.
inline constexpr double kTightnessTol = 1e-9;

/// Default slack tolerance for inequality checks.
inline constexpr double kDefaultSlackTol = 1e-9;

/// Default tolerance for equality-case diagnostics (they compound more float error).
inline constexpr double kDefaultEqualityTol = 1e-6;

}  // namespace frameineq
