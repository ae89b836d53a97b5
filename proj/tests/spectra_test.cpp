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

#include <gtest/gtest.h>

#include <cmath>

#include "nbwalk/edge_space.hpp"
#include "nbwalk/generate.hpp"
#include "nbwalk/spectra.hpp"
#include "oracles.hpp"
#include "expect_error.hpp"
#include "support.hpp"

namespace {

using nbwalk::Complex;
using nbwalk::ComplexMultiset;
using nbwalk::ErrorCode;
using nbwalk::Graph;
using testing_support::fixture;

const double kRoot2 = std::sqrt(0.5);

ComplexMultiset make_set(const std::vector<std::pair<Complex, std::size_t>>& entries) {
  std::vector<Complex> values;
  for (const auto& [z, k] : entries) values.insert(values.end(), k, z);
  return ComplexMultiset::from_values(values, 1e-9);
}

// Largest gap between each listed value and the nearest computed eigenvalue
// of matching multiplicity class.
void expect_contains(const ComplexMultiset& spectrum, Complex value, std::size_t multiplicity,
                     double tol) {
  std::size_t found = 0;
  for (const auto& e : spectrum.entries())
    if (std::abs(e.value - value) < tol) found += e.multiplicity;
  EXPECT_EQ(found, multiplicity) << "value " << value;
}

TEST(RegularClosedForm, CompleteGraphK4) {
  const ComplexMultiset got = nbwalk::nb_spectrum_regular(fixture("k4"));
  const double s7 = std::sqrt(7.0) / 4.0;
  const ComplexMultiset expected = make_set({{Complex(1, 0), 1},
                                             {Complex(0.5, 0), 3},
                                             {Complex(-0.5, 0), 2},
                                             {Complex(-0.25, s7), 3},
                                             {Complex(-0.25, -s7), 3}});
  EXPECT_LT(nbwalk::linalg::multiset_distance(got, expected), 1e-12);
}

TEST(RegularClosedForm, PetersenGraph) {
  const ComplexMultiset got = nbwalk::nb_spectrum_regular(fixture("petersen"));
  const double s7 = std::sqrt(7.0) / 4.0;
  const ComplexMultiset expected = make_set({{Complex(1, 0), 1},
                                             {Complex(0.5, 0), 6},
                                             {Complex(-0.5, 0), 5},
                                             {Complex(0.25, s7), 5},
                                             {Complex(0.25, -s7), 5},
                                             {Complex(-0.5, 0.5), 4},
                                             {Complex(-0.5, -0.5), 4}});
  EXPECT_LT(nbwalk::linalg::multiset_distance(got, expected), 1e-12);
}

TEST(RegularClosedForm, MatchesPowerSumsOfTheTransitionMatrix) {
  std::vector<Graph> graphs{fixture("k4"), fixture("petersen"), fixture("c4")};
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    graphs.push_back(nbwalk::generate_test_graph(nbwalk::RegularSpec{3, 10}, seed));
    graphs.push_back(nbwalk::generate_test_graph(nbwalk::RegularSpec{4, 9}, seed));
  }
  for (const Graph& g : graphs) {
    const auto closed = nbwalk::nb_spectrum_regular(g);
    EXPECT_EQ(closed.total_multiplicity(), g.volume());
    const auto p = nbwalk::op_P_tilde(nbwalk::build_edge_space(g));
    EXPECT_LT(oracle::power_sum_mismatch(p, closed, 12), 1e-10L) << nbwalk::serialize_edge_list(g);
  }
}

TEST(RegularClosedForm, AgreesWithDenseSolver) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = nbwalk::generate_test_graph(nbwalk::RegularSpec{3 + seed % 2, 12}, seed);
    const double distance = nbwalk::linalg::multiset_distance(nbwalk::nb_spectrum_regular(g),
                                                              nbwalk::nb_spectrum_dense(g));
    EXPECT_LT(distance, 1e-6) << "seed " << seed;
  }
}

TEST(RegularClosedForm, RequiresARegularGraph) {
  EXPECT_NBWALK_ERROR(nbwalk::nb_spectrum_regular(fixture("diamond")), ErrorCode::NotRegular);
}

TEST(BiregularClosedForm, CompleteBipartiteK23) {
  const ComplexMultiset got = nbwalk::nb_spectrum_biregular(fixture("k23"));
  const ComplexMultiset expected = make_set({{Complex(1, 0), 1},
                                             {Complex(-1, 0), 1},
                                             {Complex(0, 1), 1},
                                             {Complex(0, -1), 1},
                                             {Complex(kRoot2, 0), 2},
                                             {Complex(-kRoot2, 0), 2},
                                             {Complex(0, kRoot2), 2},
                                             {Complex(0, -kRoot2), 2}});
  EXPECT_LT(nbwalk::linalg::multiset_distance(got, expected), 1e-12);
}

TEST(BiregularClosedForm, MatchesPowerSumsAndDenseSolver) {
  std::vector<Graph> graphs{fixture("k23"), nbwalk::parse_edge_list(
                                                "a0 b0\na0 b1\na0 b2\na0 b3\n"
                                                "a1 b0\na1 b1\na1 b2\na1 b3\n"
                                                "a2 b0\na2 b1\na2 b2\na2 b3\n")};
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    graphs.push_back(nbwalk::generate_test_graph(nbwalk::BiregularSpec{2, 3, 6, 4}, seed));
    graphs.push_back(nbwalk::generate_test_graph(nbwalk::BiregularSpec{2, 4, 8, 4}, seed));
  }
  for (const Graph& g : graphs) {
    const auto closed = nbwalk::nb_spectrum_biregular(g);
    const auto* profile = nbwalk::classify(g).biregular();
    ASSERT_NE(profile, nullptr);
    const std::size_t m = g.edge_count(), n = g.vertex_count();
    EXPECT_EQ(closed.total_multiplicity(), 2 * (m - n) + 2 * (profile->r - profile->s) + 4 * profile->s);
    EXPECT_EQ(closed.total_multiplicity(), 2 * m);
    const auto p = nbwalk::op_P_tilde(nbwalk::build_edge_space(g));
    EXPECT_LT(oracle::power_sum_mismatch(p, closed, 12), 1e-10L);
    EXPECT_LT(nbwalk::linalg::multiset_distance(closed, nbwalk::nb_spectrum_dense(g)), 1e-6);
  }
}

TEST(BiregularClosedForm, RequiresABiregularGraph) {
  EXPECT_NBWALK_ERROR(nbwalk::nb_spectrum_biregular(fixture("k4")), ErrorCode::NotBiregular);
}

TEST(DenseSpectrum, DiamondMatchesTheFactoredCharacteristicPolynomial) {
  // 16 det(xI - P~) = (x - 1)(2x^2 - 1)(2x^2 + 1)(2x^2 + 2x + 1)(2x^3 + x - 1).
  std::vector<Complex> roots{Complex(1, 0),        Complex(kRoot2, 0),  Complex(-kRoot2, 0),
                             Complex(0, kRoot2),   Complex(0, -kRoot2), Complex(-0.5, 0.5),
                             Complex(-0.5, -0.5)};
  for (const auto& z : oracle::cubic_roots(2, 0, 1, -1))
    roots.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  const ComplexMultiset expected = ComplexMultiset::from_values(roots, 1e-9);
  const ComplexMultiset dense = nbwalk::nb_spectrum_dense(fixture("diamond"));
  EXPECT_LT(nbwalk::linalg::multiset_distance(dense, expected), 1e-10);

  const auto p = nbwalk::op_P_tilde(nbwalk::build_edge_space(fixture("diamond")));
  EXPECT_LT(oracle::power_sum_mismatch(p, expected, 10), 1e-12L);
}

TEST(DenseSpectrum, DiamondPublishedValues) {
  // The listed values 1, 0.7071, 0.5897, +-0.7071i, -0.5+-0.5i, -0.7071 and
  // the real part -0.2949 of the remaining pair are reproduced; that pair has
  // imaginary part +-0.8723 (a root of 2x^3 + x - 1), not +-0.7071.
  const ComplexMultiset dense = nbwalk::nb_spectrum_dense(fixture("diamond"));
  ASSERT_EQ(dense.total_multiplicity(), 10u);
  expect_contains(dense, Complex(1, 0), 1, 1e-4);
  expect_contains(dense, Complex(0.7071, 0), 1, 1e-4);
  expect_contains(dense, Complex(0.5897, 0), 1, 1e-4);
  expect_contains(dense, Complex(0, 0.7071), 1, 1e-4);
  expect_contains(dense, Complex(0, -0.7071), 1, 1e-4);
  expect_contains(dense, Complex(-0.5, 0.5), 1, 1e-4);
  expect_contains(dense, Complex(-0.5, -0.5), 1, 1e-4);
  expect_contains(dense, Complex(-0.7071, 0), 1, 1e-4);
  expect_contains(dense, Complex(-0.2949, 0.8723), 1, 1e-4);
  expect_contains(dense, Complex(-0.2949, -0.8723), 1, 1e-4);
}

TEST(DenseSpectrum, BowtiePublishedValues) {
  const ComplexMultiset dense = nbwalk::nb_spectrum_dense(fixture("bowtie"));
  ASSERT_EQ(dense.total_multiplicity(), 12u);
  const double r = std::cbrt(1.0 / 3.0);  // 0.69336
  expect_contains(dense, Complex(1, 0), 1, 1e-4);
  expect_contains(dense, Complex(0.6933, 0), 2, 2e-4);
  expect_contains(dense, Complex(-0.6933, 0), 1, 2e-4);
  expect_contains(dense, Complex(-0.5, 0.866), 1, 1e-3);
  expect_contains(dense, Complex(-0.5, -0.866), 1, 1e-3);
  expect_contains(dense, Complex(-0.34668, 0.6), 2, 1e-3);
  expect_contains(dense, Complex(-0.34668, -0.6), 2, 1e-3);
  // The remaining pair completes the cube-root-of-unity orbits of r.
  expect_contains(dense, Complex(r / 2, r * std::sqrt(3.0) / 2), 1, 1e-9);
  expect_contains(dense, Complex(r / 2, -r * std::sqrt(3.0) / 2), 1, 1e-9);
  const auto second = nbwalk::second_eigenvalue_modulus(dense);
  EXPECT_NEAR(second.modulus, 1.0, 1e-10);
}

TEST(DenseSpectrum, PendantTrianglesPublishedValues) {
  const ComplexMultiset dense = nbwalk::nb_spectrum_dense(fixture("pendant-triangles"));
  ASSERT_EQ(dense.total_multiplicity(), 14u);
  expect_contains(dense, Complex(1, 0), 1, 1e-4);
  expect_contains(dense, Complex(0.7937, 0), 2, 1e-4);
  expect_contains(dense, Complex(0.6068, 0.4028), 1, 1e-4);
  expect_contains(dense, Complex(0.6068, -0.4028), 1, 1e-4);
  expect_contains(dense, Complex(-0.1761, 0.86), 1, 1e-3);
  expect_contains(dense, Complex(-0.1761, -0.86), 1, 1e-3);
  expect_contains(dense, Complex(-0.39685, 0.687), 2, 1e-3);
  expect_contains(dense, Complex(-0.39685, -0.687), 2, 1e-3);
  expect_contains(dense, Complex(-0.606, 0.75778), 1, 1e-3);
  expect_contains(dense, Complex(-0.606, -0.75778), 1, 1e-3);
  expect_contains(dense, Complex(-0.6477, 0), 1, 2e-4);
  // Exactly one eigenvalue on the unit circle.
  std::size_t on_circle = 0;
  for (const auto& e : dense.entries())
    if (std::abs(std::abs(e.value) - 1.0) < 1e-9) on_circle += e.multiplicity;
  EXPECT_EQ(on_circle, 1u);
}

TEST(DenseSpectrum, GuardsDimension) {
  // 2m = 2 * 260 > 512.
  std::vector<nbwalk::UndirectedEdge> edges;
  for (std::size_t i = 0; i < 260; ++i) edges.emplace_back(i, (i + 1) % 260);
  EXPECT_NBWALK_ERROR(nbwalk::nb_spectrum_dense(Graph::from_edges(260, edges)),
                      ErrorCode::DimensionOverflow);
}

TEST(SecondEigenvalue, Fixtures) {
  EXPECT_NEAR(nbwalk::second_eigenvalue_modulus(nbwalk::nb_spectrum_dense(fixture("k4"))).modulus,
              kRoot2, 1e-12);
  // Modulus of the complex roots of 2x^3 + x - 1.
  const auto cubic = oracle::cubic_roots(2, 0, 1, -1);
  const double expected = static_cast<double>(std::abs(cubic[1]));
  const auto diamond = nbwalk::second_eigenvalue_modulus(nbwalk::nb_spectrum_dense(fixture("diamond")));
  EXPECT_NEAR(diamond.modulus, expected, 1e-10);
  EXPECT_NEAR(diamond.modulus, 0.920766, 1e-6);
}

TEST(SecondEigenvalue, RequiresThePerronEigenvalue) {
  const auto set = make_set({{Complex(0.5, 0), 2}});
  EXPECT_NBWALK_ERROR(nbwalk::second_eigenvalue_modulus(set), ErrorCode::MissingPerron);
  const auto with_perron = make_set({{Complex(1, 0), 1}, {Complex(-0.5, 0), 1}, {Complex(0.5, 0), 1}});
  const auto second = nbwalk::second_eigenvalue_modulus(with_perron);
  EXPECT_EQ(second.modulus, 0.5);
  EXPECT_EQ(second.value, Complex(-0.5, 0));
}

TEST(RegularMixing, RealRegimeBounds) {
  for (std::size_t d = 3; d <= 10; ++d) {
    const double threshold = 2.0 * std::sqrt(static_cast<double>(d - 1));
    for (int i = 1; i < 20; ++i) {
      const double lambda = threshold + (static_cast<double>(d) - threshold) * i / 20.0;
      const auto r = nbwalk::regular_mixing_comparison(d, lambda);
      EXPECT_EQ(r.regime, nbwalk::MixingRegime::Real);
      EXPECT_TRUE(r.claim_holds) << d << " " << lambda;
      // mu solves (d-1) mu^2 - lambda mu + 1 = 0.
      const double mu = r.mu.real();
      EXPECT_NEAR((d - 1.0) * mu * mu - lambda * mu + 1.0, 0.0, 1e-12);
      EXPECT_GT(mu, lambda / (2.0 * (d - 1.0)));
      EXPECT_LE(mu, lambda / d + 1e-15);
    }
  }
}

TEST(RegularMixing, PerronEigenvalueMapsToOne) {
  const auto r = nbwalk::regular_mixing_comparison(4, 4.0);
  EXPECT_NEAR(r.mu.real(), 1.0, 1e-15);
  EXPECT_NEAR(r.upper_bound, 1.0, 1e-15);
  EXPECT_TRUE(r.claim_holds);
}

TEST(RegularMixing, ComplexRegimeModulus) {
  for (std::size_t d = 3; d <= 10; ++d) {
    const double threshold = 2.0 * std::sqrt(static_cast<double>(d - 1));
    for (int i = 0; i < 20; ++i) {
      const double lambda = threshold * i / 20.0;
      const auto r = nbwalk::regular_mixing_comparison(d, lambda);
      EXPECT_EQ(r.regime, nbwalk::MixingRegime::Complex);
      EXPECT_NEAR(r.modulus * r.modulus, 1.0 / (d - 1.0), 1e-12);
      EXPECT_TRUE(r.claim_holds);
    }
  }
}

TEST(RegularMixing, ArgumentChecks) {
  EXPECT_NBWALK_ERROR(nbwalk::regular_mixing_comparison(2, 1.0), ErrorCode::DegreeTooSmall);
  EXPECT_NBWALK_ERROR(nbwalk::regular_mixing_comparison(3, 3.5), ErrorCode::InvalidArgument);
  EXPECT_NBWALK_ERROR(nbwalk::regular_mixing_comparison(3, -0.1), ErrorCode::InvalidArgument);
}

TEST(BiregularMixing, SharedModulusInsideTheWindow) {
  for (std::size_t c = 2; c <= 4; ++c) {
    for (std::size_t d = c + 1; d <= 6; ++d) {
      const auto probe = nbwalk::biregular_mixing_comparison(c, d, 0.0);
      for (int i = 1; i < 20; ++i) {
        const double l2 = probe.window_lower + (probe.window_upper - probe.window_lower) * i / 20.0;
        const auto r = nbwalk::biregular_mixing_comparison(c, d, std::sqrt(l2));
        EXPECT_TRUE(r.inside_window);
        EXPECT_TRUE(r.claim_holds);
        const double shared = std::pow((c - 1.0) * (d - 1.0), -0.25);
        for (double modulus : r.moduli) EXPECT_NEAR(modulus, shared, 1e-10);
      }
    }
  }
}

TEST(BiregularMixing, K23AtZeroHasTwoModuli) {
  const auto r = nbwalk::biregular_mixing_comparison(2, 3, 0.0);
  EXPECT_FALSE(r.inside_window);
  EXPECT_EQ(r.distinct_moduli, 2u);
  std::vector<double> moduli(r.moduli.begin(), r.moduli.end());
  std::sort(moduli.begin(), moduli.end());
  EXPECT_NEAR(moduli[0], kRoot2, 1e-12);
  EXPECT_NEAR(moduli[1], kRoot2, 1e-12);
  EXPECT_NEAR(moduli[2], 1.0, 1e-12);
  EXPECT_NEAR(moduli[3], 1.0, 1e-12);
  EXPECT_TRUE(r.claim_holds);
}

TEST(SpectrumReport, BothMethodsOnK4) {
  const auto report = nbwalk::spectrum_report(fixture("k4"), nbwalk::SpectrumMethod::Both);
  EXPECT_EQ(report.closed_form_case, "regular");
  ASSERT_TRUE(report.max_matching_distance.has_value());
  EXPECT_LT(*report.max_matching_distance, 1e-6);
  EXPECT_TRUE(report.matched);
  EXPECT_FALSE(report.periodic);
  ASSERT_TRUE(report.regular_case.has_value());
  EXPECT_NEAR(report.regular_case->lambda, 1.0, 1e-12);
}

TEST(SpectrumReport, GeneralGraphs) {
  const auto both = nbwalk::spectrum_report(fixture("bowtie"), nbwalk::SpectrumMethod::Both);
  EXPECT_EQ(both.closed_form_case, "none");
  EXPECT_FALSE(both.closed_form.has_value());
  EXPECT_TRUE(both.periodic);
  EXPECT_NBWALK_ERROR(nbwalk::spectrum_report(fixture("bowtie"), nbwalk::SpectrumMethod::ClosedForm),
                      ErrorCode::NotRegular);
}

}  // namespace
