#include "foodchain/model.hpp"

namespace foodchain {

State clamp_nonnegative(const State& s, double eps_neg) {
  auto clamp1 = [eps_neg](double v) {
    return (v < 0.0 && v >= -eps_neg) ? 0.0 : v;
  };
  return State{clamp1(s.x), clamp1(s.y), clamp1(s.z)};
}

State rhs(const ParameterSet& p, const State& s) {
  const double g1 = s.y / (p.a1 + s.x);
  const double g2 = s.z / (p.a2 + s.y);
  const double h1 = p.m1 * s.x / (p.a1 + s.x);
  const double h2 = p.m2 * s.y / (p.a2 + s.y);
  return State{s.x * (1.0 - s.x - g1),
               s.y * (-p.d1 + h1 - g2),
               s.z * (-p.d2 + h2)};
}

Eigen::Matrix3d jacobian(const ParameterSet& p, const State& s) {
  const double q1 = p.a1 + s.x;
  const double q2 = p.a2 + s.y;
  Eigen::Matrix3d j;
  j(0, 0) = 1.0 - 2.0 * s.x - p.a1 * s.y / (q1 * q1);
  j(0, 1) = -s.x / q1;
  j(0, 2) = 0.0;
  j(1, 0) = p.a1 * p.m1 * s.y / (q1 * q1);
  j(1, 1) = -p.d1 + p.m1 * s.x / q1 - p.a2 * s.z / (q2 * q2);
  j(1, 2) = -s.y / q2;
  j(2, 0) = 0.0;
  j(2, 1) = p.a2 * p.m2 * s.z / (q2 * q2);
  j(2, 2) = -p.d2 + p.m2 * s.y / q2;
  return j;
}

std::array<double, 2> subsystem_rhs(const ParameterSet& p, double x, double y) {
  return {x * (1.0 - x - y / (p.a1 + x)),
          y * (-p.d1 + p.m1 * x / (p.a1 + x))};
}

Eigen::Matrix2d subsystem_jacobian(const ParameterSet& p, double x, double y) {
  const double q1 = p.a1 + x;
  Eigen::Matrix2d j;
  j(0, 0) = 1.0 - 2.0 * x - p.a1 * y / (q1 * q1);
  j(0, 1) = -x / q1;
  j(1, 0) = p.a1 * p.m1 * y / (q1 * q1);
  j(1, 1) = -p.d1 + p.m1 * x / q1;
  return j;
}

}  // namespace foodchain
