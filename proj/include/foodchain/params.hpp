#pragma once

#include <optional>
#include <string>

namespace foodchain {

// Dimensional food-chain parameters: a logistic resource X consumed by an
// intermediate predator Y, itself consumed by a top predator Z, both with
// saturating (half-saturation A_i) functional responses.
struct DimensionalParams {
  double R;   // intrinsic growth rate of the resource
  double K;   // carrying capacity
  double C1;  // conversion rate prey -> intermediate predator
  double C2;  // conversion rate intermediate -> top predator
  double D1;  // death rate of the intermediate predator
  double D2;  // death rate of the top predator
  double M1;  // maximal predation rate, level 1
  double M2;  // maximal predation rate, level 2
  double A1;  // half-saturation density, level 1
  double A2;  // half-saturation density, level 2
};

// Nondimensional parameters of the rescaled system
//   x' = x (1 - x - y/(a1+x))
//   y' = y (-d1 + m1 x/(a1+x) - z/(a2+y))
//   z' = z (-d2 + m2 y/(a2+y))
struct ParameterSet {
  double a1, a2, d1, d2, m1, m2;
};

// Why a break-even density lambda_i = a_i d_i / (m_i - d_i) can be undefined.
enum class UndefinedReason { m1_not_above_d1, m2_not_above_d2 };

struct DerivedParams {
  std::optional<double> lambda1;  // break-even prey density for y
  std::optional<double> lambda2;  // break-even density of y for z
  std::optional<UndefinedReason> lambda1_reason;
  std::optional<UndefinedReason> lambda2_reason;
  std::optional<double> p_of_lambda1;  // p(lambda1), needs lambda1
  double hopf_threshold;               // (1 - a1)/2
  double p_max;                        // (1 + a1)^2 / 4 = p(hopf_threshold)
  bool a1_ge_one;
  bool A1_holds;  // 0 < lambda1 < 1
  bool A2_holds;  // d2 < m2
};

// Literature parameters with functional responses written as a_i u/(1 + b_i u).
struct SaturationRateParams {
  double a1, b1;  // level-1 response
  double a2, b2;  // level-2 response
  double d1, d2;  // death rates, unchanged by the conversion
};

// Prey isocline polynomial p(x) = (1 - x)(a1 + x).
double prey_isocline(const ParameterSet& p, double x);

// Throws std::domain_error naming the offending field if any entry is not
// strictly positive.
void validate(const ParameterSet& p);
void validate(const DimensionalParams& p);

// Nondimensionalization: a1 = A1/K, a2 = M1 A2/(C1 K R), d_i = D_i/R,
// m_i = M_i/R.
ParameterSet rescale(const DimensionalParams& p);

DerivedParams derived(const ParameterSet& p);

// Convert a_i u/(1 + b_i u) responses to the m_i u/(a_i + u) form:
// m_i = a_i/b_i, new a_i = 1/b_i.
ParameterSet hp_convert(const SaturationRateParams& r);

}  // namespace foodchain
