#pragma once

#include <Eigen/Dense>
#include <array>

#include "foodchain/params.hpp"

namespace foodchain {

// Components clamped to zero when they fall in [-eps_neg, 0): adaptive
// integration can overshoot the invariant coordinate faces by roundoff.
inline constexpr double kEpsNeg = 1e-12;

struct State {
  double x{0.0}, y{0.0}, z{0.0};
};

State clamp_nonnegative(const State& s, double eps_neg = kEpsNeg);

// Vector field of the nondimensional chain. Written multiplicatively so a
// coordinate that is exactly zero has derivative exactly zero (the faces
// x=0, y=0, z=0 stay invariant bitwise under any Runge-Kutta step).
State rhs(const ParameterSet& p, const State& s);

Eigen::Matrix3d jacobian(const ParameterSet& p, const State& s);

// The x-y subsystem on the invariant plane z = 0.
std::array<double, 2> subsystem_rhs(const ParameterSet& p, double x, double y);
Eigen::Matrix2d subsystem_jacobian(const ParameterSet& p, double x, double y);

}  // namespace foodchain
