// Copyright 2026 The wnnm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "wnnm/svd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "wnnm/error.hpp"

namespace wnnm {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Column-major working copy; Jacobi rotates whole columns.
using Columns = std::vector<std::vector<double>>;

Columns to_columns(const Matrix& m) {
  Columns out(m.cols(), std::vector<double>(m.rows()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[c][r] = m(r, c);
  return out;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const std::vector<double>& a) {
  double scale = 0.0;
  for (double v : a) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0.0;
  double s = 0.0;
  for (double v : a) s += (v / scale) * (v / scale);
  return scale * std::sqrt(s);
}

void rotate(std::vector<double>& p, std::vector<double>& q, double c,
            double s) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double xp = p[i];
    const double xq = q[i];
    p[i] = c * xp - s * xq;
    q[i] = s * xp + c * xq;
  }
}

// Extends `basis` with unit vectors orthogonal to every column already in it,
// filling the slots flagged in `missing`. Candidates are the standard basis
// vectors, orthogonalized twice by modified Gram-Schmidt.
void complete_basis(Columns& basis, const std::vector<bool>& missing) {
  const std::size_t m = basis.empty() ? 0 : basis.front().size();
  std::size_t candidate = 0;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (!missing[j]) continue;
    for (;; ++candidate) {
      if (candidate >= m) {
        throw NumericalFailure("svd: could not complete orthonormal basis", 0);
      }
      std::vector<double> e(m, 0.0);
      e[candidate] = 1.0;
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t k = 0; k < basis.size(); ++k) {
          if (k == j || (missing[k] && k > j)) continue;
          const double proj = dot(basis[k], e);
          for (std::size_t i = 0; i < m; ++i) e[i] -= proj * basis[k][i];
        }
      }
      const double len = norm(e);
      if (len > 0.5) {
        for (double& v : e) v /= len;
        basis[j] = std::move(e);
        ++candidate;
        break;
      }
    }
  }
}

// Decomposes a tall (rows >= cols) matrix.
SvdFactors svd_tall(const Matrix& y, const SvdOptions& options) {
  const std::size_t m = y.rows();
  const std::size_t n = y.cols();
  Columns a = to_columns(y);
  Columns v(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;

  // Columns below this squared norm are rounding noise; rotating them can
  // cycle forever without reaching relative orthogonality.
  const double noise_floor = [&] {
    const double t = kEps * static_cast<double>(m + n) * frobenius_norm(y);
    return t * t;
  }();
  // Pairs count as orthogonal once |cos| falls below this; a dot product of
  // m terms cannot resolve much finer.
  const double tol = kEps * std::sqrt(static_cast<double>(m));

  int sweep = 0;
  for (;; ++sweep) {
    if (sweep >= options.max_sweeps) {
      throw NumericalFailure("svd: Jacobi sweeps did not converge after " +
                                 std::to_string(sweep) + " sweeps",
                             sweep);
    }
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double alpha = dot(a[p], a[p]);
        const double beta = dot(a[q], a[q]);
        const double gamma = dot(a[p], a[q]);
        if (alpha <= noise_floor || beta <= noise_floor) continue;
        if (gamma == 0.0 || std::abs(gamma) <= tol * std::sqrt(alpha * beta))
          continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        rotate(a[p], a[q], c, s);
        rotate(v[p], v[q], c, s);
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) sigma[j] = norm(a[j]);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i,
                                                   std::size_t j) {
    return sigma[i] > sigma[j];
  });

  // Columns at or below the noise floor were never rotated and carry no
  // reliable direction; their u column is replaced by an orthonormal
  // completion.

  Columns u(n, std::vector<double>(m, 0.0));
  Columns vs(n);
  std::vector<double> sorted_sigma(n);
  std::vector<bool> missing(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = order[k];
    sorted_sigma[k] = sigma[j];
    vs[k] = std::move(v[j]);
    if (dot(a[j], a[j]) > noise_floor && sigma[j] > 0.0) {
      for (std::size_t i = 0; i < m; ++i) u[k][i] = a[j][i] / sigma[j];
    } else {
      missing[k] = true;
    }
  }
  if (std::find(missing.begin(), missing.end(), true) != missing.end())
    complete_basis(u, missing);

  SvdFactors f{Matrix(m, n), std::move(sorted_sigma), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < m; ++i) f.u(i, k) = u[k][i];
    for (std::size_t i = 0; i < n; ++i) f.v(i, k) = vs[k][i];
  }
  return f;
}

void normalize_signs(SvdFactors& f) {
  for (std::size_t k = 0; k < f.sigma.size(); ++k) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < f.u.rows(); ++i)
      if (std::abs(f.u(i, k)) > std::abs(f.u(best, k))) best = i;
    if (f.u(best, k) >= 0.0) continue;
    for (std::size_t i = 0; i < f.u.rows(); ++i) f.u(i, k) = -f.u(i, k);
    for (std::size_t i = 0; i < f.v.rows(); ++i) f.v(i, k) = -f.v(i, k);
  }
}

}  // namespace

SvdFactors svd(const Matrix& y, const SvdOptions& options) {
  if (y.empty()) throw InvalidInput("svd: empty matrix");
  if (!y.all_finite()) throw InvalidInput("svd: non-finite entry");

  // Work on y / max|y_ij| so squared norms neither overflow nor underflow.
  double scale = 0.0;
  for (double v : y.data()) scale = std::max(scale, std::abs(v));
  Matrix scaled = y;
  if (scale > 0.0) {
    for (double& v : scaled.data()) v /= scale;
  }

  SvdFactors f;
  if (y.rows() >= y.cols()) {
    f = svd_tall(scaled, options);
  } else {
    SvdFactors t = svd_tall(scaled.transposed(), options);
    f = SvdFactors{std::move(t.v), std::move(t.sigma), std::move(t.u)};
  }
  for (double& s : f.sigma) s *= scale;
  normalize_signs(f);
  return f;
}

std::vector<double> singular_values(const Matrix& y) { return svd(y).sigma; }

Matrix reconstruct(const SvdFactors& f, std::span<const double> d) {
  const std::size_t k = f.sigma.size();
  if (d.size() != k) {
    throw InvalidInput("reconstruct: expected " + std::to_string(k) +
                       " diagonal entries, got " + std::to_string(d.size()));
  }
  for (double di : d) {
    if (!(di >= 0.0) || !std::isfinite(di))
      throw InvalidInput("reconstruct: diagonal entries must be finite and >= 0");
  }
  Matrix out(f.u.rows(), f.v.rows());
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) {
      double s = 0.0;
      for (std::size_t l = 0; l < k; ++l) s += f.u(i, l) * d[l] * f.v(j, l);
      out(i, j) = s;
    }
  }
  return out;
}

}  // namespace wnnm
