// Copyright 2026 The nbwalk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "nbwalk/error.hpp"
#include "nbwalk/linalg.hpp"

namespace nbwalk::linalg {
namespace {

void reduce_to_hessenberg(Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<double> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double norm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) norm2 += a(i, k) * a(i, k);
    const double norm = std::sqrt(norm2);
    if (norm == 0.0) continue;
    const double alpha = a(k + 1, k) > 0.0 ? -norm : norm;
    std::fill(v.begin(), v.end(), 0.0);
    for (std::size_t i = k + 1; i < n; ++i) v[i] = a(i, k);
    v[k + 1] -= alpha;
    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm2 += v[i] * v[i];
    if (vnorm2 == 0.0) continue;
    const double beta = 2.0 / vnorm2;

    // A <- H A
    for (std::size_t j = 0; j < n; ++j) {
      double dot = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) dot += v[i] * a(i, j);
      dot *= beta;
      for (std::size_t i = k + 1; i < n; ++i) a(i, j) -= dot * v[i];
    }
    // A <- A H
    for (std::size_t i = 0; i < n; ++i) {
      double dot = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) dot += a(i, j) * v[j];
      dot *= beta;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= dot * v[j];
    }
    a(k + 1, k) = alpha;
    for (std::size_t i = k + 2; i < n; ++i) a(i, k) = 0.0;
  }
}

double sign_of(double magnitude, double sign_source) {
  return sign_source >= 0.0 ? std::abs(magnitude) : -std::abs(magnitude);
}

}  // namespace

// Francis double-shift QR on an upper Hessenberg matrix, eigenvalues only.
// Indices below are 1-based to follow the classical EISPACK hqr layout;
// h(i, j) maps onto a(i - 1, j - 1).
std::vector<Complex> hessenberg_qr_eigenvalues(Matrix a) {
  if (!a.is_square()) throw Error(ErrorCode::NotSquare, "hessenberg_qr_eigenvalues");
  const int n = static_cast<int>(a.rows());
  std::vector<Complex> out;
  if (n == 0) return out;
  out.reserve(static_cast<std::size_t>(n));
  reduce_to_hessenberg(a);

  auto h = [&a](int i, int j) -> double& {
    return a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
  };
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr int kMaxIterationsPerRoot = 60;

  double anorm = 0.0;
  for (int i = 1; i <= n; ++i)
    for (int j = std::max(i - 1, 1); j <= n; ++j) anorm += std::abs(h(i, j));

  int nn = n;
  double t = 0.0;
  double p = 0.0, q = 0.0, r = 0.0, s = 0.0, w = 0.0, x = 0.0, y = 0.0, z = 0.0;
  while (nn >= 1) {
    int its = 0;
    int l = 1;
    do {
      for (l = nn; l >= 2; --l) {
        s = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
        if (s == 0.0) s = anorm;
        if (std::abs(h(l, l - 1)) <= eps * s) {
          h(l, l - 1) = 0.0;
          break;
        }
      }
      x = h(nn, nn);
      if (l == nn) {
        out.emplace_back(x + t, 0.0);
        --nn;
      } else {
        y = h(nn - 1, nn - 1);
        w = h(nn, nn - 1) * h(nn - 1, nn);
        if (l == nn - 1) {
          p = 0.5 * (y - x);
          q = p * p + w;
          z = std::sqrt(std::abs(q));
          x += t;
          if (q >= 0.0) {
            z = p + sign_of(z, p);
            const double first = x + z;
            const double second = z != 0.0 ? x - w / z : first;
            out.emplace_back(first, 0.0);
            out.emplace_back(second, 0.0);
          } else {
            out.emplace_back(x + p, z);
            out.emplace_back(x + p, -z);
          }
          nn -= 2;
        } else {
          if (its == kMaxIterationsPerRoot) {
            throw Error(ErrorCode::NoConvergence, "Francis QR iteration limit reached");
          }
          if (its > 0 && its % 10 == 0) {
            // Exceptional shift breaks cycles such as permutation matrices.
            t += x;
            for (int i = 1; i <= nn; ++i) h(i, i) -= x;
            s = std::abs(h(nn, nn - 1)) + std::abs(h(nn - 1, nn - 2));
            y = x = 0.75 * s;
            w = -0.4375 * s * s;
          }
          ++its;
          int m = nn - 2;
          for (; m >= l; --m) {
            z = h(m, m);
            r = x - z;
            s = y - z;
            p = (r * s - w) / h(m + 1, m) + h(m, m + 1);
            q = h(m + 1, m + 1) - z - r - s;
            r = h(m + 2, m + 1);
            s = std::abs(p) + std::abs(q) + std::abs(r);
            p /= s;
            q /= s;
            r /= s;
            if (m == l) break;
            const double u = std::abs(h(m, m - 1)) * (std::abs(q) + std::abs(r));
            const double v =
                std::abs(p) * (std::abs(h(m - 1, m - 1)) + std::abs(z) + std::abs(h(m + 1, m + 1)));
            if (u <= eps * v) break;
          }
          for (int i = m + 2; i <= nn; ++i) {
            h(i, i - 2) = 0.0;
            if (i != m + 2) h(i, i - 3) = 0.0;
          }
          for (int k = m; k <= nn - 1; ++k) {
            if (k != m) {
              p = h(k, k - 1);
              q = h(k + 1, k - 1);
              r = 0.0;
              if (k != nn - 1) r = h(k + 2, k - 1);
              if ((x = std::abs(p) + std::abs(q) + std::abs(r)) != 0.0) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            s = sign_of(std::sqrt(p * p + q * q + r * r), p);
            if (s != 0.0) {
              if (k == m) {
                if (l != m) h(k, k - 1) = -h(k, k - 1);
              } else {
                h(k, k - 1) = -s * x;
              }
              p += s;
              x = p / s;
              y = q / s;
              z = r / s;
              q /= p;
              r /= p;
              for (int j = k; j <= nn; ++j) {
                p = h(k, j) + q * h(k + 1, j);
                if (k != nn - 1) {
                  p += r * h(k + 2, j);
                  h(k + 2, j) -= p * z;
                }
                h(k + 1, j) -= p * y;
                h(k, j) -= p * x;
              }
              const int mmin = nn < k + 3 ? nn : k + 3;
              for (int i = l; i <= mmin; ++i) {
                p = x * h(i, k) + y * h(i, k + 1);
                if (k != nn - 1) {
                  p += z * h(i, k + 2);
                  h(i, k + 2) -= p * r;
                }
                h(i, k + 1) -= p * q;
                h(i, k) -= p;
              }
            }
          }
        }
      }
    } while (l < nn - 1);
  }
  return out;
}

}  // namespace nbwalk::linalg
