#include "foodchain/params.hpp"

#include <stdexcept>

namespace foodchain {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) {
    throw std::domain_error(std::string("parameter '") + name +
                            "' must be strictly positive");
  }
}

}  // namespace

double prey_isocline(const ParameterSet& p, double x) {
  return (1.0 - x) * (p.a1 + x);
}

void validate(const ParameterSet& p) {
  require_positive(p.a1, "a1");
  require_positive(p.a2, "a2");
  require_positive(p.d1, "d1");
  require_positive(p.d2, "d2");
  require_positive(p.m1, "m1");
  require_positive(p.m2, "m2");
}

void validate(const DimensionalParams& p) {
  require_positive(p.R, "R");
  require_positive(p.K, "K");
  require_positive(p.C1, "C1");
  require_positive(p.C2, "C2");
  require_positive(p.D1, "D1");
  require_positive(p.D2, "D2");
  require_positive(p.M1, "M1");
  require_positive(p.M2, "M2");
  require_positive(p.A1, "A1");
  require_positive(p.A2, "A2");
}

ParameterSet rescale(const DimensionalParams& p) {
  validate(p);
  ParameterSet q;
  q.a1 = p.A1 / p.K;
  q.a2 = p.M1 * p.A2 / (p.C1 * p.K * p.R);
  q.d1 = p.D1 / p.R;
  q.d2 = p.D2 / p.R;
  q.m1 = p.M1 / p.R;
  q.m2 = p.M2 / p.R;
  return q;
}

DerivedParams derived(const ParameterSet& p) {
  validate(p);
  DerivedParams d;
  d.hopf_threshold = (1.0 - p.a1) / 2.0;
  d.p_max = (1.0 + p.a1) * (1.0 + p.a1) / 4.0;
  d.a1_ge_one = p.a1 >= 1.0;
  if (p.m1 > p.d1) {
    d.lambda1 = p.a1 * p.d1 / (p.m1 - p.d1);
    d.p_of_lambda1 = prey_isocline(p, *d.lambda1);
  } else {
    d.lambda1_reason = UndefinedReason::m1_not_above_d1;
  }
  if (p.m2 > p.d2) {
    d.lambda2 = p.a2 * p.d2 / (p.m2 - p.d2);
  } else {
    d.lambda2_reason = UndefinedReason::m2_not_above_d2;
  }
  d.A1_holds = d.lambda1.has_value() && *d.lambda1 > 0.0 && *d.lambda1 < 1.0;
  d.A2_holds = p.d2 < p.m2;
  return d;
}

ParameterSet hp_convert(const SaturationRateParams& r) {
  require_positive(r.a1, "a1");
  require_positive(r.b1, "b1");
  require_positive(r.a2, "a2");
  require_positive(r.b2, "b2");
  require_positive(r.d1, "d1");
  require_positive(r.d2, "d2");
  ParameterSet q;
  q.m1 = r.a1 / r.b1;
  q.a1 = 1.0 / r.b1;
  q.m2 = r.a2 / r.b2;
  q.a2 = 1.0 / r.b2;
  q.d1 = r.d1;
  q.d2 = r.d2;
  return q;
}

}  // namespace foodchain
