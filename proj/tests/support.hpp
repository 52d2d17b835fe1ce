#pragma once

#include <cmath>
#include <random>

#include "esfv/thermo.hpp"

namespace esfv::test {

inline GasModel air(double mu = 0.0) { return GasModel::make(1.4, 1.0 / 1.4, mu); }

/// Random admissible state with moderate Mach numbers.
inline ConservedState random_state(std::mt19937_64& rng, const GasModel& gas, double vmax = 2.0) {
  std::uniform_real_distribution<double> lr(std::log(0.05), std::log(5.0));
  std::uniform_real_distribution<double> vel(-vmax, vmax);
  return conserved_from_primitive(std::exp(lr(rng)), vel(rng), vel(rng), std::exp(lr(rng)), gas);
}

inline double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace esfv::test
