#include "graetz/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "graetz/errors.hpp"
#include "graetz/series.hpp"

namespace graetz {

namespace {

constexpr double kShootScanStep = 0.5;
constexpr double kShootRootWidth = 1e-10;
constexpr int kStartupHalfSteps = 4;

using State = std::array<double, 2>;  // (R, R')

State radial_rhs(double r, const State& y, double lambda_sq) {
  return {y[1], -y[1] / r - lambda_sq * (1.0 - r * r) * y[0]};
}

// Tridiagonal system lower[i] x[i-1] + diag[i] x[i] + upper[i] x[i+1] = rhs[i],
// solved in place into rhs.
void thomas(const std::vector<double>& lower, const std::vector<double>& diag,
            const std::vector<double>& upper, std::vector<double>& rhs, std::vector<double>& scratch) {
  const std::size_t n = diag.size();
  scratch.resize(n);
  double beta = diag[0];
  rhs[0] /= beta;
  for (std::size_t i = 1; i < n; ++i) {
    scratch[i] = upper[i - 1] / beta;
    beta = diag[i] - lower[i] * scratch[i];
    rhs[i] = (rhs[i] - lower[i] * rhs[i - 1]) / beta;
  }
  for (std::size_t i = n - 1; i-- > 0;) rhs[i] -= scratch[i + 1] * rhs[i + 1];
}

}  // namespace

ShootResult shoot_radial(double lambda, double step, bool keep_trajectory) {
  if (!(lambda > 0.0)) throw DomainError("shoot_radial: lambda must be positive");
  if (!(step > 0.0) || step > 1e-3) throw DomainError("shoot_radial: step must lie in (0, 1e-3]");
  const double lsq = lambda * lambda;
  const double r0 = step;
  const auto nsteps = static_cast<std::size_t>(std::ceil((1.0 - r0) / step));
  const double h = (1.0 - r0) / static_cast<double>(nsteps);

  ShootResult out;
  State y{1.0 - 0.25 * lsq * r0 * r0, -0.5 * lsq * r0};
  if (keep_trajectory) {
    out.trajectory.reserve(nsteps + 1);
    out.trajectory.push_back({r0, y[0], y[1]});
  }
  for (std::size_t k = 0; k < nsteps; ++k) {
    const double r = r0 + static_cast<double>(k) * h;
    const State k1 = radial_rhs(r, y, lsq);
    const State k2 = radial_rhs(r + 0.5 * h, {y[0] + 0.5 * h * k1[0], y[1] + 0.5 * h * k1[1]}, lsq);
    const State k3 = radial_rhs(r + 0.5 * h, {y[0] + 0.5 * h * k2[0], y[1] + 0.5 * h * k2[1]}, lsq);
    const State k4 = radial_rhs(r + h, {y[0] + h * k3[0], y[1] + h * k3[1]}, lsq);
    for (int c = 0; c < 2; ++c) y[c] += h / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
    if (keep_trajectory) {
      const double rn = k + 1 == nsteps ? 1.0 : r0 + static_cast<double>(k + 1) * h;
      out.trajectory.push_back({rn, y[0], y[1]});
    }
  }
  out.wall_value = y[0];
  return out;
}

std::vector<double> shoot_eigenvalues(std::size_t count, const OracleConfig& config) {
  if (count == 0) throw DomainError("shoot_eigenvalues: count must be positive");
  config.validate();
  auto wall = [&](double lambda) { return shoot_radial(lambda, config.rk4_step, false).wall_value; };

  std::vector<double> roots;
  const double lambda_max = 4.0 * static_cast<double>(count) + 4.0;
  double lo = kShootScanStep;
  double w_lo = wall(lo);
  for (std::size_t k = 2; roots.size() < count; ++k) {
    const double hi = static_cast<double>(k) * kShootScanStep;
    if (hi > lambda_max)
      throw ConvergenceError("shoot_eigenvalues: only " + std::to_string(roots.size()) +
                             " roots below lambda = " + std::to_string(lambda_max));
    const double w_hi = wall(hi);
    if (std::signbit(w_lo) != std::signbit(w_hi)) {
      double a = lo, b = hi, wa = w_lo;
      while (b - a > kShootRootWidth) {
        const double m = 0.5 * (a + b);
        const double wm = wall(m);
        if (std::signbit(wm) == std::signbit(wa)) {
          a = m;
          wa = wm;
        } else {
          b = m;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    lo = hi;
    w_lo = w_hi;
  }
  return roots;
}

FieldGrid fd_march(const OracleConfig& config) {
  config.validate();
  const std::size_t nr = config.fd_nr;
  const std::size_t nz = config.fd_nz;
  const double dr = 1.0 / static_cast<double>(nr - 1);
  const double dz = config.fd_zmax / static_cast<double>(nz - 1);

  FieldGrid grid;
  grid.r.resize(nr);
  grid.z.resize(nz);
  for (std::size_t i = 0; i < nr; ++i) grid.r[i] = static_cast<double>(i) * dr;
  grid.r.back() = 1.0;
  for (std::size_t k = 0; k < nz; ++k) grid.z[k] = static_cast<double>(k) * dz;
  grid.z.back() = config.fd_zmax;
  grid.T.assign(nr * nz, 0.0);

  // Spatial operator L on the unknowns i = 0 .. nr-2 (wall node fixed at 0):
  // centerline uses the symmetric limit 2 T_rr = 4 (T_1 - T_0) / dr^2.
  const std::size_t n = nr - 1;
  std::vector<double> lo(n, 0.0), di(n, 0.0), up(n, 0.0);
  di[0] = -4.0 / (dr * dr);
  up[0] = 4.0 / (dr * dr);
  for (std::size_t i = 1; i < n; ++i) {
    const double r = grid.r[i];
    const double c = 1.0 / ((1.0 - r * r) * r * dr * dr);
    lo[i] = c * (r - 0.5 * dr);
    up[i] = c * (r + 0.5 * dr);
    di[i] = -2.0 * c * r;
  }

  std::vector<double> T(n, 1.0), rhs(n), scratch;
  std::vector<double> a(n), b(n), c(n);
  // One theta-step of size h: (I - theta h L) T+ = (I + (1-theta) h L) T.
  auto advance = [&](double theta, double h) {
    const double ex = (1.0 - theta) * h;
    for (std::size_t i = 0; i < n; ++i) {
      double lt = di[i] * T[i];
      if (i > 0) lt += lo[i] * T[i - 1];
      if (i + 1 < n) lt += up[i] * T[i + 1];
      rhs[i] = T[i] + ex * lt;
      a[i] = -theta * h * lo[i];
      b[i] = 1.0 - theta * h * di[i];
      c[i] = -theta * h * up[i];
    }
    thomas(a, b, c, rhs, scratch);
    T.swap(rhs);
  };

  for (std::size_t i = 0; i < n; ++i) grid.value(0, i) = 1.0;
  for (std::size_t k = 1; k < nz; ++k) {
    if (k <= kStartupHalfSteps / 2) {
      advance(1.0, 0.5 * dz);
      advance(1.0, 0.5 * dz);
    } else {
      advance(0.5, dz);
    }
    for (std::size_t i = 0; i < n; ++i) grid.value(k, i) = T[i];
  }
  return grid;
}

double compare_fields(const SeriesSolution& spectral, const FieldGrid& fd, double z_min) {
  if (!(z_min >= 0.01)) throw DomainError("compare_fields: z_min must be at least 0.01");
  std::vector<double> zs;
  std::size_t first = fd.nz();
  for (std::size_t k = 0; k < fd.nz(); ++k) {
    if (fd.z[k] >= z_min) {
      if (first == fd.nz()) first = k;
      zs.push_back(fd.z[k]);
    }
  }
  if (zs.empty())
    throw DomainError("compare_fields: grid has no axial stations at or beyond z = " + std::to_string(z_min));

  const FieldGrid sp = sample_field(spectral, fd.r, zs);
  double err = 0.0;
  for (std::size_t k = 0; k < zs.size(); ++k)
    for (std::size_t i = 0; i < fd.nr(); ++i)
      err = std::max(err, std::fabs(sp.value(k, i) - fd.value(first + k, i)));
  return err;
}

}  // namespace graetz
