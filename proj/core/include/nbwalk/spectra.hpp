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

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "nbwalk/graph.hpp"
#include "nbwalk/linalg.hpp"
#include "nbwalk/tolerances.hpp"

namespace nbwalk {

using linalg::Complex;
using linalg::ComplexMultiset;

// Closed-form spectrum of P~ for a d-regular graph: +-1/(d-1) with
// multiplicity m - n each, and the roots of (d-1)u^2 - lambda u + 1 for every
// adjacency eigenvalue lambda. Throws NotRegular.
ComplexMultiset nb_spectrum_regular(const Graph& g, const Tolerances& tol = kDefaultTolerances);

// Closed-form spectrum of P~ for a (c,d)-biregular graph: +-((c-1)(d-1))^(-1/2)
// with multiplicity m - n each, +-i (d-1)^(-1/2) with multiplicity r - s each,
// and the four roots of
//   u^4 + (1/(c-1) + 1/(d-1) - lambda^2/((c-1)(d-1))) u^2 + 1/((c-1)(d-1))
// for each of the s largest adjacency eigenvalues. Throws NotBiregular.
ComplexMultiset nb_spectrum_biregular(const Graph& g, const Tolerances& tol = kDefaultTolerances);

// Dense QR spectrum of P~. Throws DimensionOverflow when 2m > 512.
ComplexMultiset nb_spectrum_dense(const Graph& g, const Tolerances& tol = kDefaultTolerances);

struct SecondModulus {
  Complex value;
  double modulus = 0.0;
};

// Drops one eigenvalue within `perron` of 1 and returns the largest-modulus
// remainder (first in canonical order on ties). Throws MissingPerron.
SecondModulus second_eigenvalue_modulus(const ComplexMultiset& spectrum,
                                        const Tolerances& tol = kDefaultTolerances);

enum class MixingRegime { Real, Complex };

struct RegularMixingReport {
  std::size_t d = 0;
  double lambda = 0.0;
  MixingRegime regime = MixingRegime::Real;
  Complex mu;                 // (lambda + sqrt(lambda^2 - 4(d-1))) / (2(d-1))
  double modulus = 0.0;       // |mu|
  double lower_bound = 0.0;   // lambda / (2(d-1))
  double upper_bound = 0.0;   // lambda / d, the simple-walk eigenvalue
  double modulus_squared_gap = 0.0;  // | |mu|^2 - 1/(d-1) |, complex regime
  // Real regime: lower < mu <= upper (lower <= mu on the discriminant-zero
  // boundary). Complex regime: modulus_squared_gap < 1e-12.
  bool claim_holds = false;
};

// Throws DegreeTooSmall (d < 3) or InvalidArgument (lambda outside [0, d]).
RegularMixingReport regular_mixing_comparison(std::size_t d, double lambda);

struct BiregularMixingReport {
  std::size_t c = 0;
  std::size_t d = 0;
  double lambda = 0.0;
  std::array<Complex, 4> roots{};
  std::array<double, 4> moduli{};
  // Single-modulus window for lambda^2: (sqrt(c-1) -+ sqrt(d-1))^2.
  double window_lower = 0.0;
  double window_upper = 0.0;
  bool inside_window = false;
  double shared_modulus = 0.0;        // ((c-1)(d-1))^(-1/4)
  double max_modulus_deviation = 0.0; // max_k | |root_k| - shared_modulus |
  std::size_t distinct_moduli = 0;
  double usual_walk_rho = 0.0;        // lambda^2 / (cd)
  // Inside the window all four moduli equal shared_modulus to 1e-10; outside
  // it they do not all coincide with it.
  bool claim_holds = false;
};

// Throws DegreeTooSmall (c or d < 2) or InvalidArgument.
BiregularMixingReport biregular_mixing_comparison(std::size_t c, std::size_t d, double lambda);

enum class SpectrumMethod { ClosedForm, Dense, Both };

struct SpectrumReport {
  std::string closed_form_case;  // "regular", "biregular" or "none"
  std::optional<ComplexMultiset> closed_form;
  std::optional<ComplexMultiset> dense;
  std::optional<double> max_matching_distance;  // when both are present
  bool matched = true;
  SecondModulus second;
  bool periodic = false;  // |mu*| within `perron` of 1
  std::optional<RegularMixingReport> regular_case;
  std::optional<BiregularMixingReport> biregular_case;
};

// ClosedForm requires a Regular or Biregular profile (NotRegular otherwise);
// Both falls back to the dense spectrum alone for general graphs.
SpectrumReport spectrum_report(const Graph& g, SpectrumMethod method,
                               const Tolerances& tol = kDefaultTolerances);

}  // namespace nbwalk
