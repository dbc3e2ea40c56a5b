/*
 * Copyright 2026 The bsenergy Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "bsenergy/rng.hpp"

/// Desk-scale exact Boson Sampling used to check the click-count statistics
/// the hardness metric relies on.
namespace bsenergy::oracle {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
/// Photon count per mode.
using OccupationVector = std::vector<int>;

inline constexpr int kMaxPermanentSize = 20;
inline constexpr int kMaxDistributionPhotons = 5;
inline constexpr int kMaxDistributionModes = 10;

struct OracleOptions {
  double unitarity_tol = 1e-8;
  bool reject_non_unitary = true;
};

/// Ryser's formula with Gray-code subset order, O(2^n n).
Complex permanent(const ComplexMatrix& a);

/// max |U^dagger U - 1|.
double unitarity_error(const ComplexMatrix& u);

/// n! for 0 <= n <= 20, exact.
std::uint64_t factorial(int n);

/// U restricted to input columns repeated s_i times and output rows repeated
/// v_j times.
ComplexMatrix interference_matrix(const ComplexMatrix& u,
                                  const OccupationVector& input,
                                  const OccupationVector& output);

/// |Per(U_V^S)|^2 / (prod s_i! prod v_j!).
double outcome_probability(const ComplexMatrix& u,
                           const OccupationVector& input,
                           const OccupationVector& output,
                           const OracleOptions& options = {});

/// All occupation vectors of n photons over m modes, lexicographically
/// descending; there are C(m + n - 1, n) of them.
std::vector<OccupationVector> enumerate_occupations(int m, int n);

using OutputDistribution = std::map<OccupationVector, double>;

OutputDistribution output_distribution(const ComplexMatrix& u,
                                       const OccupationVector& input,
                                       const OracleOptions& options = {});

/// QR of a complex Ginibre matrix with R's diagonal phases moved into Q.
ComplexMatrix haar_random_unitary(int m, CounterRng& rng);

/// Number of modes with at least one photon.
int occupied_modes(const OccupationVector& v);

/// One photon in each of the first n modes.
OccupationVector standard_input(int n, int m);

struct TailPoint {
  double t = 0.0;
  double empirical = 0.0;  ///< Pr[|c - centering| >= t n]
  double bound = 0.0;      ///< 2 exp(-2 t^2 n)
  double mc_error = 0.0;   ///< standard error over trials
  bool violated = false;   ///< empirical > bound + 3 mc_error
};

struct ClickStatistics {
  int n = 0;
  int m = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double mean_clicks = 0.0;  ///< trial mean of the exact expected clicks
  double std_clicks = 0.0;   ///< spread of the per-trial expectation
  double standard_error = 0.0;
  double predicted = 0.0;           ///< typical_clicks(n, m)
  double bose_einstein_mean = 0.0;  ///< m n / (m + n - 1), Haar average
  double centering = 0.0;           ///< m n / (m + n + 1)
  double z_score = 0.0;             ///< (mean - predicted) / standard_error
  double normalization_max_err = 0.0;
  std::vector<double> click_pmf;  ///< indexed by click count 0..n
  std::vector<TailPoint> tail;
  int ld_violations = 0;

  /// Pr[|c - centering| >= t n] under the trial-averaged click pmf.
  double empirical_tail(double t) const;
};

/// Exact click distribution for `trials` Haar unitaries; trial i draws from
/// CounterRng::stream(seed, i). `tail_points` t values are spaced evenly on
/// [0, 1].
ClickStatistics click_statistics(int n, int m, std::size_t trials,
                                 std::uint64_t seed, unsigned threads = 1,
                                 int tail_points = 101);

}  // namespace bsenergy::oracle
