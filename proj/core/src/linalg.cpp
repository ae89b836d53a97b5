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

#include "nbwalk/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "nbwalk/error.hpp"

namespace nbwalk::linalg {
namespace {

void require_square(const Matrix& m, const char* what) {
  if (!m.is_square()) {
    throw Error(ErrorCode::NotSquare, std::string(what) + ": matrix is " +
                                          std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()));
  }
}

struct LuFactors {
  Matrix lu;
  std::vector<std::size_t> perm;
  int sign = 1;
  bool singular = false;
};

LuFactors lu_factor(Matrix a) {
  const std::size_t n = a.rows();
  LuFactors f{std::move(a), std::vector<std::size_t>(n), 1, false};
  std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});
  Matrix& lu = f.lu;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::abs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(lu(i, k)) > best) {
        best = std::abs(lu(i, k));
        pivot = i;
      }
    }
    if (best == 0.0) {
      f.singular = true;
      continue;
    }
    if (pivot != k) {
      std::swap_ranges(lu.row(k).begin(), lu.row(k).end(), lu.row(pivot).begin());
      std::swap(f.perm[k], f.perm[pivot]);
      f.sign = -f.sign;
    }
    const double diag = lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double factor = lu(i, k) / diag;
      lu(i, k) = factor;
      if (factor == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= factor * lu(k, j);
    }
  }
  return f;
}

// Canonical ordering key: real parts closer than this compare by imaginary part.
constexpr double kOrderQuantum = 1e-9;

long long quantize(double v) noexcept { return std::llround(v / kOrderQuantum); }

}  // namespace

double lu_determinant(const Matrix& m) {
  require_square(m, "lu_determinant");
  if (m.rows() == 0) return 1.0;
  const LuFactors f = lu_factor(m);
  if (f.singular) return 0.0;
  double det = f.sign;
  for (std::size_t i = 0; i < m.rows(); ++i) det *= f.lu(i, i);
  return det;
}

Matrix inverse(const Matrix& m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  const LuFactors f = lu_factor(m);
  if (f.singular) throw Error(ErrorCode::SingularMatrix, "zero pivot during LU");
  Matrix inv(n, n);
  std::vector<double> x(n);
  for (std::size_t col = 0; col < n; ++col) {
    // Solve L U x = P e_col.
    for (std::size_t i = 0; i < n; ++i) x[i] = f.perm[i] == col ? 1.0 : 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) x[i] -= f.lu(i, j) * x[j];
    for (std::size_t i = n; i-- > 0;) {
      for (std::size_t j = i + 1; j < n; ++j) x[i] -= f.lu(i, j) * x[j];
      x[i] /= f.lu(i, i);
    }
    for (std::size_t i = 0; i < n; ++i) inv(i, col) = x[i];
  }
  return inv;
}

SymmetricEigen symmetric_eigen(const Matrix& m, const Tolerances& tol) {
  require_square(m, "symmetric_eigen");
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(m(i, j) - m(j, i)) > tol.symmetry) {
        throw Error(ErrorCode::NotSymmetric,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }

  Matrix a = m;
  Matrix v = Matrix::identity(n);
  double frobenius = 0.0;
  for (double x : a.data()) frobenius += x * x;
  const double threshold = tol.jacobi_off_diagonal * std::max(1.0, std::sqrt(frobenius));

  constexpr int kMaxSweeps = 100;
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) off += a(i, j) * a(i, j);
    if (std::sqrt(off) < threshold) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (!converged) {
    throw Error(ErrorCode::NoConvergence, "Jacobi sweeps exhausted");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });
  SymmetricEigen out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

bool canonical_less(const Complex& a, const Complex& b) noexcept {
  const long long ra = quantize(a.real());
  const long long rb = quantize(b.real());
  if (ra != rb) return ra < rb;
  return quantize(a.imag()) < quantize(b.imag());
}

ComplexMultiset ComplexMultiset::from_values(const std::vector<Complex>& values,
                                             double cluster_tol) {
  struct Cluster {
    Complex first;
    Complex sum;
    std::size_t count;
  };
  std::vector<Complex> sorted = values;
  std::sort(sorted.begin(), sorted.end(), canonical_less);
  std::vector<Cluster> clusters;
  for (const Complex& z : sorted) {
    auto it = std::find_if(clusters.begin(), clusters.end(),
                           [&](const Cluster& c) { return std::abs(c.first - z) <= cluster_tol; });
    if (it == clusters.end()) {
      clusters.push_back({z, z, 1});
    } else {
      it->sum += z;
      ++it->count;
    }
  }
  ComplexMultiset out;
  out.entries_.reserve(clusters.size());
  for (const Cluster& c : clusters) {
    out.entries_.push_back({c.sum / static_cast<double>(c.count), c.count});
  }
  std::stable_sort(out.entries_.begin(), out.entries_.end(),
                   [](const Entry& x, const Entry& y) { return canonical_less(x.value, y.value); });
  return out;
}

std::size_t ComplexMultiset::total_multiplicity() const noexcept {
  std::size_t total = 0;
  for (const Entry& e : entries_) total += e.multiplicity;
  return total;
}

std::vector<Complex> ComplexMultiset::expanded() const {
  std::vector<Complex> out;
  out.reserve(total_multiplicity());
  for (const Entry& e : entries_) out.insert(out.end(), e.multiplicity, e.value);
  return out;
}

double multiset_distance(const ComplexMultiset& a, const ComplexMultiset& b) {
  if (a.total_multiplicity() != b.total_multiplicity()) {
    return std::numeric_limits<double>::infinity();
  }
  const std::vector<Complex> xs = a.expanded();
  std::vector<Complex> ys = b.expanded();
  std::vector<bool> used(ys.size(), false);
  double worst = 0.0;
  for (const Complex& x : xs) {
    std::size_t best = ys.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(ys[j] - x);
      if (d < best_dist) {
        best_dist = d;
        best = j;
      }
    }
    used[best] = true;
    worst = std::max(worst, best_dist);
  }
  return worst;
}

ComplexMultiset general_eigenvalues(const Matrix& m, const Tolerances& tol) {
  require_square(m, "general_eigenvalues");
  if (m.rows() > kMaxGeneralEigenDimension) {
    throw Error(ErrorCode::DimensionOverflow,
                "dimension " + std::to_string(m.rows()) + " exceeds " +
                    std::to_string(kMaxGeneralEigenDimension));
  }
  return ComplexMultiset::from_values(hessenberg_qr_eigenvalues(m), tol.eigen_cluster);
}

Matrix null_complement_basis(const Matrix& m, const Tolerances& tol) {
  const std::size_t rows = m.rows();
  const std::size_t n = m.cols();
  if (n > rows) {
    throw Error(ErrorCode::RankDeficient, "more columns than rows");
  }

  // Orthonormal basis of range(M), two Gram-Schmidt passes per column.
  std::vector<std::vector<double>> basis;
  basis.reserve(rows);
  auto orthogonalize = [&](std::vector<double>& v) {
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) {
        const double proj = std::inner_product(q.begin(), q.end(), v.begin(), 0.0);
        for (std::size_t i = 0; i < rows; ++i) v[i] -= proj * q[i];
      }
    }
    return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
  };
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<double> v = m.column(c);
    const double original = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
    const double residual = orthogonalize(v);
    if (residual <= tol.null_drop * std::max(1.0, original)) {
      throw Error(ErrorCode::RankDeficient, "column " + std::to_string(c) +
                                                " is dependent on earlier columns");
    }
    for (double& x : v) x /= residual;
    basis.push_back(std::move(v));
  }

  // residual2[i] = squared norm of e_i after projecting out the current basis;
  // taking the largest each time keeps the accepted vectors well conditioned.
  std::vector<double> residual2(rows, 1.0);
  for (const auto& q : basis)
    for (std::size_t i = 0; i < rows; ++i) residual2[i] -= q[i] * q[i];

  Matrix r(rows, rows - n);
  for (std::size_t k = 0; k < rows - n; ++k) {
    const auto it = std::max_element(residual2.begin(), residual2.end());
    const std::size_t pick = static_cast<std::size_t>(it - residual2.begin());
    std::vector<double> v(rows, 0.0);
    v[pick] = 1.0;
    const double norm = orthogonalize(v);
    if (norm <= tol.null_drop) {
      throw Error(ErrorCode::RankDeficient, "complement basis exhausted");
    }
    for (double& x : v) x /= norm;
    for (std::size_t i = 0; i < rows; ++i) {
      residual2[i] -= v[i] * v[i];
      r(i, k) = v[i];
    }
    residual2[pick] = -1.0;
    basis.push_back(std::move(v));
  }
  return r;
}

std::array<Complex, 2> quadratic_roots(double b, double c) {
  const double disc = b * b - 4.0 * c;
  if (disc < 0.0) {
    const double re = -0.5 * b;
    const double im = 0.5 * std::sqrt(-disc);
    return {Complex(re, im), Complex(re, -im)};
  }
  const double sq = std::sqrt(disc);
  // Avoid cancellation: take the root of larger magnitude first.
  const double q = -0.5 * (b + (b >= 0.0 ? sq : -sq));
  if (q == 0.0) return {Complex(0.0, 0.0), Complex(0.0, 0.0)};
  return {Complex(q, 0.0), Complex(c / q, 0.0)};
}

std::array<Complex, 4> quartic_even_roots(double p, double q) {
  const auto squares = quadratic_roots(p, q);
  const Complex a = std::sqrt(squares[0]);
  const Complex b = std::sqrt(squares[1]);
  return {a, -a, b, -b};
}

}  // namespace nbwalk::linalg
