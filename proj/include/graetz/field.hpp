#pragma once

#include <cstddef>
#include <vector>

namespace graetz {

/// One evaluated point of the temperature field.
struct FieldSample {
  double r = 0.0;
  double z = 0.0;
  double T = 0.0;
};

/// Temperature on a tensor grid, stored row-major by axial station:
/// value(k, i) is T(r[i], z[k]).
struct FieldGrid {
  std::vector<double> r;
  std::vector<double> z;
  std::vector<double> T;

  std::size_t nr() const { return r.size(); }
  std::size_t nz() const { return z.size(); }
  double value(std::size_t k, std::size_t i) const { return T[k * r.size() + i]; }
  double& value(std::size_t k, std::size_t i) { return T[k * r.size() + i]; }
  FieldSample sample(std::size_t k, std::size_t i) const { return {r[i], z[k], value(k, i)}; }
};

}  // namespace graetz
