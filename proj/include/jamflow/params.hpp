#pragma once

#include <cstdint>

#include "jamflow/errors.hpp"
#include "jamflow/rational.hpp"

namespace jamflow {

// Model parameters: acceleration a and speed limit vmax, plus the derived
// step count w = ceil(1/a) a stopped particle needs to reach velocity 1.
struct ModelParams {
  Rational a;
  std::int64_t vmax = 1;
  std::int64_t w = 1;
};

inline ModelParams make_params(const Rational& a, std::int64_t vmax) {
  if (vmax <= 0) throw DomainError("vmax must be a positive integer");
  if (!(Rational(0) < a) || Rational(vmax) < a) {
    throw DomainError("acceleration must satisfy 0 < a <= vmax");
  }
  ModelParams p;
  p.a = a;
  p.vmax = vmax;
  p.w = (Rational(1) / a).ceil();
  return p;
}

// Steps a particle at velocity z needs before it reaches velocity 1:
// ceil((1 - z)/a) for z >= 0, and 0 for holes / negative velocities.
inline std::int64_t weight_fn(const Rational& z, const ModelParams& p) {
  if (z.is_negative()) return 0;
  const Rational gap = Rational(1) - z;
  if (gap <= Rational(0)) return 0;
  return (gap / p.a).ceil();
}

}  // namespace jamflow
