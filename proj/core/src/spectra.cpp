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

#include "nbwalk/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "nbwalk/edge_space.hpp"
#include "nbwalk/error.hpp"

namespace nbwalk {
namespace {

constexpr double kModulusTolerance = 1e-10;
constexpr double kComplexModulusTolerance = 1e-12;

std::vector<double> adjacency_spectrum_descending(const Graph& g, const Tolerances& tol) {
  std::vector<double> values = linalg::symmetric_eigen(adjacency_matrix(g), tol).values;
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

}  // namespace

ComplexMultiset nb_spectrum_regular(const Graph& g, const Tolerances& tol) {
  const DegreeProfile profile = classify(g);
  const auto* regular = profile.regular();
  if (regular == nullptr) {
    throw Error(ErrorCode::NotRegular, "graph is " + describe(profile));
  }
  const double dm1 = static_cast<double>(regular->d - 1);
  const std::size_t excess = g.edge_count() - g.vertex_count();

  std::vector<Complex> values;
  values.reserve(2 * g.edge_count());
  values.insert(values.end(), excess, Complex(1.0 / dm1, 0.0));
  values.insert(values.end(), excess, Complex(-1.0 / dm1, 0.0));
  for (double lambda : adjacency_spectrum_descending(g, tol)) {
    const auto roots = linalg::quadratic_roots(-lambda / dm1, 1.0 / dm1);
    values.insert(values.end(), roots.begin(), roots.end());
  }
  return ComplexMultiset::from_values(values, tol.eigen_cluster);
}

ComplexMultiset nb_spectrum_biregular(const Graph& g, const Tolerances& tol) {
  const DegreeProfile profile = classify(g);
  const auto* bi = profile.biregular();
  if (bi == nullptr) {
    throw Error(ErrorCode::NotBiregular, "graph is " + describe(profile));
  }
  const double cm1 = static_cast<double>(bi->c - 1);
  const double dm1 = static_cast<double>(bi->d - 1);
  const std::size_t excess = g.edge_count() - g.vertex_count();

  std::vector<Complex> values;
  values.reserve(2 * g.edge_count());
  const double real_root = 1.0 / std::sqrt(cm1 * dm1);
  values.insert(values.end(), excess, Complex(real_root, 0.0));
  values.insert(values.end(), excess, Complex(-real_root, 0.0));
  const double imag_root = 1.0 / std::sqrt(dm1);
  values.insert(values.end(), bi->r - bi->s, Complex(0.0, imag_root));
  values.insert(values.end(), bi->r - bi->s, Complex(0.0, -imag_root));

  const std::vector<double> spectrum = adjacency_spectrum_descending(g, tol);
  const double q = 1.0 / (cm1 * dm1);
  for (std::size_t i = 0; i < bi->s; ++i) {
    const double lambda2 = std::max(0.0, spectrum[i]) * std::max(0.0, spectrum[i]);
    const double p = 1.0 / cm1 + 1.0 / dm1 - lambda2 * q;
    const auto roots = linalg::quartic_even_roots(p, q);
    values.insert(values.end(), roots.begin(), roots.end());
  }
  return ComplexMultiset::from_values(values, tol.eigen_cluster);
}

ComplexMultiset nb_spectrum_dense(const Graph& g, const Tolerances& tol) {
  if (g.volume() > linalg::kMaxGeneralEigenDimension) {
    throw Error(ErrorCode::DimensionOverflow,
                "2m = " + std::to_string(g.volume()) + " exceeds " +
                    std::to_string(linalg::kMaxGeneralEigenDimension));
  }
  return linalg::general_eigenvalues(op_P_tilde(DirectedEdgeSpace(g)), tol);
}

SecondModulus second_eigenvalue_modulus(const ComplexMultiset& spectrum, const Tolerances& tol) {
  std::vector<Complex> values = spectrum.expanded();
  const auto perron = std::min_element(values.begin(), values.end(), [](Complex a, Complex b) {
    return std::abs(a - 1.0) < std::abs(b - 1.0);
  });
  if (perron == values.end() || std::abs(*perron - 1.0) > tol.perron) {
    throw Error(ErrorCode::MissingPerron, "no eigenvalue within tolerance of 1");
  }
  values.erase(perron);
  if (values.empty()) return {Complex(0.0, 0.0), 0.0};
  SecondModulus best{values.front(), std::abs(values.front())};
  for (const Complex& z : values) {
    // Strict comparison keeps the first in canonical order on ties.
    if (std::abs(z) > best.modulus + kModulusTolerance) best = {z, std::abs(z)};
  }
  return best;
}

RegularMixingReport regular_mixing_comparison(std::size_t d, double lambda) {
  if (d < 3) {
    throw Error(ErrorCode::DegreeTooSmall, "d = " + std::to_string(d) + " (need d >= 3)");
  }
  const double dd = static_cast<double>(d);
  if (!(lambda >= 0.0) || lambda > dd) {
    throw Error(ErrorCode::InvalidArgument, "lambda must lie in [0, d]");
  }
  RegularMixingReport r;
  r.d = d;
  r.lambda = lambda;
  const double dm1 = dd - 1.0;
  r.lower_bound = lambda / (2.0 * dm1);
  r.upper_bound = lambda / dd;
  const double disc = lambda * lambda - 4.0 * dm1;
  if (disc >= 0.0) {
    r.regime = MixingRegime::Real;
    r.mu = Complex((lambda + std::sqrt(disc)) / (2.0 * dm1), 0.0);
    r.modulus = r.mu.real();
    const bool lower_ok = disc > 0.0 ? r.lower_bound < r.modulus : r.lower_bound <= r.modulus;
    r.claim_holds = lower_ok && r.modulus <= r.upper_bound * (1.0 + 1e-15);
  } else {
    r.regime = MixingRegime::Complex;
    r.mu = Complex(lambda / (2.0 * dm1), std::sqrt(-disc) / (2.0 * dm1));
    r.modulus = std::abs(r.mu);
    r.modulus_squared_gap = std::abs(std::norm(r.mu) - 1.0 / dm1);
    r.claim_holds = r.modulus_squared_gap < kComplexModulusTolerance;
  }
  return r;
}

BiregularMixingReport biregular_mixing_comparison(std::size_t c, std::size_t d, double lambda) {
  if (c < 2 || d < 2) {
    throw Error(ErrorCode::DegreeTooSmall, "biregular degrees must be >= 2");
  }
  const double cm1 = static_cast<double>(c - 1);
  const double dm1 = static_cast<double>(d - 1);
  const double perron = std::sqrt(static_cast<double>(c * d));
  if (!(lambda >= 0.0) || lambda > perron * (1.0 + 1e-12)) {
    throw Error(ErrorCode::InvalidArgument, "lambda must lie in [0, sqrt(cd)]");
  }
  BiregularMixingReport r;
  r.c = c;
  r.d = d;
  r.lambda = lambda;
  const double q = 1.0 / (cm1 * dm1);
  const double lambda2 = lambda * lambda;
  const double p = 1.0 / cm1 + 1.0 / dm1 - lambda2 * q;
  r.roots = linalg::quartic_even_roots(p, q);
  for (std::size_t k = 0; k < 4; ++k) r.moduli[k] = std::abs(r.roots[k]);

  r.window_lower = std::pow(std::sqrt(cm1) - std::sqrt(dm1), 2);
  r.window_upper = std::pow(std::sqrt(cm1) + std::sqrt(dm1), 2);
  r.inside_window = r.window_lower < lambda2 && lambda2 < r.window_upper;
  r.shared_modulus = std::pow(cm1 * dm1, -0.25);
  for (double m : r.moduli) {
    r.max_modulus_deviation = std::max(r.max_modulus_deviation, std::abs(m - r.shared_modulus));
  }
  std::vector<double> sorted(r.moduli.begin(), r.moduli.end());
  std::sort(sorted.begin(), sorted.end());
  r.distinct_moduli = 1;
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    if (sorted[k] - sorted[k - 1] > kModulusTolerance) ++r.distinct_moduli;
  }
  r.usual_walk_rho = lambda2 / static_cast<double>(c * d);

  const bool all_share = r.max_modulus_deviation < kModulusTolerance;
  const double disc = p * p - 4.0 * q;
  const bool on_boundary = std::abs(disc) <= 1e-12;
  r.claim_holds = r.inside_window ? all_share : (!all_share || on_boundary);
  return r;
}

SpectrumReport spectrum_report(const Graph& g, SpectrumMethod method, const Tolerances& tol) {
  SpectrumReport report;
  const DegreeProfile profile = classify(g);
  report.closed_form_case = profile.regular() ? "regular" : profile.biregular() ? "biregular" : "none";

  if (method != SpectrumMethod::Dense) {
    if (profile.regular()) {
      report.closed_form = nb_spectrum_regular(g, tol);
    } else if (profile.biregular()) {
      report.closed_form = nb_spectrum_biregular(g, tol);
    } else if (method == SpectrumMethod::ClosedForm) {
      throw Error(ErrorCode::NotRegular,
                  "closed form needs a regular or biregular graph; got " + describe(profile));
    }
  }
  if (method != SpectrumMethod::ClosedForm) report.dense = nb_spectrum_dense(g, tol);
  if (report.closed_form && report.dense) {
    report.max_matching_distance = linalg::multiset_distance(*report.closed_form, *report.dense);
    report.matched = *report.max_matching_distance < tol.spectrum_match;
  }

  const ComplexMultiset& reference = report.dense ? *report.dense : *report.closed_form;
  report.second = second_eigenvalue_modulus(reference, tol);
  report.periodic = report.second.modulus >= 1.0 - tol.perron;

  const std::vector<double> adjacency = adjacency_spectrum_descending(g, tol);
  if (const auto* regular = profile.regular(); regular && regular->d >= 3) {
    // Second largest adjacency eigenvalue in absolute value.
    double lambda = 0.0;
    for (std::size_t i = 1; i < adjacency.size(); ++i) lambda = std::max(lambda, std::abs(adjacency[i]));
    const double dd = static_cast<double>(regular->d);
    report.regular_case = regular_mixing_comparison(regular->d, std::min(lambda, dd));
  } else if (const auto* bi = profile.biregular()) {
    const double perron = std::sqrt(static_cast<double>(bi->c * bi->d));
    const double lambda = std::clamp(adjacency.size() > 1 ? adjacency[1] : 0.0, 0.0, perron);
    report.biregular_case = biregular_mixing_comparison(bi->c, bi->d, lambda);
  }
  return report;
}

}  // namespace nbwalk
