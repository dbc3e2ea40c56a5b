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

#include "bsenergy/sampling_oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bsenergy/complexity_metric.hpp"
#include "bsenergy/parallel.hpp"
#include "bsenergy/units.hpp"

namespace bsenergy::oracle {

using detail::require;

namespace {

constexpr std::array<std::uint64_t, 21> kFactorials = [] {
  std::array<std::uint64_t, 21> f{};
  f[0] = 1;
  for (std::size_t i = 1; i < f.size(); ++i) f[i] = f[i - 1] * i;
  return f;
}();

double occupation_factorials(const OccupationVector& v) {
  double prod = 1.0;
  for (int k : v) prod *= static_cast<double>(factorial(k));
  return prod;
}

void check_occupation(const OccupationVector& v, int modes, const char* what) {
  if (static_cast<int>(v.size()) != modes) {
    throw std::invalid_argument(std::string(what) + " has " +
                                std::to_string(v.size()) + " modes, expected " +
                                std::to_string(modes));
  }
  for (int k : v) {
    require(k >= 0, std::string(what) + " has a negative occupation");
  }
}

int total_photons(const OccupationVector& v) {
  return std::accumulate(v.begin(), v.end(), 0);
}

void check_unitary(const ComplexMatrix& u, const OracleOptions& options) {
  require(u.rows() == u.cols(), "interferometer matrix must be square");
  if (options.reject_non_unitary && unitarity_error(u) > options.unitarity_tol) {
    throw std::invalid_argument("interferometer matrix is not unitary within " +
                                std::to_string(options.unitarity_tol));
  }
}

double probability_unchecked(const ComplexMatrix& u,
                             const OccupationVector& input,
                             const OccupationVector& output) {
  const Complex per = permanent(interference_matrix(u, input, output));
  return std::norm(per) /
         (occupation_factorials(input) * occupation_factorials(output));
}

}  // namespace

std::uint64_t factorial(int n) {
  require(n >= 0 && n <= 20, "factorial: n must lie in [0, 20]");
  return kFactorials[static_cast<std::size_t>(n)];
}

Complex permanent(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("permanent: matrix is " +
                                std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + ", not square");
  }
  const int n = static_cast<int>(a.rows());
  if (n > kMaxPermanentSize) {
    throw std::invalid_argument("permanent: size " + std::to_string(n) +
                                " exceeds " + std::to_string(kMaxPermanentSize));
  }
  if (n == 0) return Complex(1.0, 0.0);

  // Ryser: Per(A) = (-1)^n sum_S (-1)^|S| prod_i sum_{j in S} a_ij, with the
  // subsets visited in Gray-code order so each step adds or removes a column.
  Eigen::VectorXcd row_sums = Eigen::VectorXcd::Zero(n);
  Complex total(0.0, 0.0);
  std::uint32_t gray = 0;
  const std::uint32_t subsets = 1u << n;
  for (std::uint32_t k = 1; k < subsets; ++k) {
    const int column = std::countr_zero(k);
    const std::uint32_t bit = 1u << column;
    gray ^= bit;
    if (gray & bit) {
      row_sums += a.col(column);
    } else {
      row_sums -= a.col(column);
    }
    Complex prod = row_sums.prod();
    if (std::popcount(gray) % 2 == 1) prod = -prod;
    total += prod;
  }
  return n % 2 == 1 ? -total : total;
}

double unitarity_error(const ComplexMatrix& u) {
  require(u.rows() == u.cols(), "unitarity_error: matrix must be square");
  const ComplexMatrix gram = u.adjoint() * u;
  return (gram - ComplexMatrix::Identity(u.rows(), u.cols()))
      .cwiseAbs()
      .maxCoeff();
}

ComplexMatrix interference_matrix(const ComplexMatrix& u,
                                  const OccupationVector& input,
                                  const OccupationVector& output) {
  const int m = static_cast<int>(u.rows());
  check_occupation(input, m, "input");
  check_occupation(output, m, "output");
  const int n = total_photons(input);
  if (n != total_photons(output)) {
    throw std::invalid_argument("photon number mismatch: input has " +
                                std::to_string(n) + ", output has " +
                                std::to_string(total_photons(output)));
  }
  std::vector<int> rows, cols;
  for (int i = 0; i < m; ++i) cols.insert(cols.end(), input[i], i);
  for (int j = 0; j < m; ++j) rows.insert(rows.end(), output[j], j);
  ComplexMatrix sub(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) sub(r, c) = u(rows[r], cols[c]);
  }
  return sub;
}

double outcome_probability(const ComplexMatrix& u,
                           const OccupationVector& input,
                           const OccupationVector& output,
                           const OracleOptions& options) {
  check_unitary(u, options);
  return probability_unchecked(u, input, output);
}

std::vector<OccupationVector> enumerate_occupations(int m, int n) {
  require(m >= 1 && n >= 0, "enumerate_occupations: need m >= 1, n >= 0");
  std::vector<OccupationVector> out;
  OccupationVector current(m, 0);
  auto recurse = [&](auto&& self, int mode, int remaining) -> void {
    if (mode == m - 1) {
      current[mode] = remaining;
      out.push_back(current);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      current[mode] = k;
      self(self, mode + 1, remaining - k);
    }
  };
  recurse(recurse, 0, n);
  return out;
}

OutputDistribution output_distribution(const ComplexMatrix& u,
                                       const OccupationVector& input,
                                       const OracleOptions& options) {
  const int m = static_cast<int>(u.rows());
  check_occupation(input, m, "input");
  const int n = total_photons(input);
  if (n > kMaxDistributionPhotons || m > kMaxDistributionModes) {
    throw std::invalid_argument(
        "output_distribution: (n, m) = (" + std::to_string(n) + ", " +
        std::to_string(m) + ") exceeds the enumeration guard (" +
        std::to_string(kMaxDistributionPhotons) + ", " +
        std::to_string(kMaxDistributionModes) + ")");
  }
  check_unitary(u, options);
  OutputDistribution dist;
  for (auto& v : enumerate_occupations(m, n)) {
    const double p = probability_unchecked(u, input, v);
    dist.emplace(std::move(v), p);
  }
  return dist;
}

ComplexMatrix haar_random_unitary(int m, CounterRng& rng) {
  require(m >= 1, "haar_random_unitary: m must be >= 1");
  ComplexMatrix z(m, m);
  const double scale = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) {
      const double re = rng.normal();
      const double im = rng.normal();
      z(i, j) = Complex(re, im) * scale;
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (int j = 0; j < m; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= mag > 0.0 ? d / mag : Complex(1.0, 0.0);
  }
  return q;
}

int occupied_modes(const OccupationVector& v) {
  return static_cast<int>(std::count_if(v.begin(), v.end(),
                                        [](int k) { return k > 0; }));
}

OccupationVector standard_input(int n, int m) {
  require(n >= 0 && m >= n, "standard_input: need 0 <= n <= m");
  OccupationVector s(m, 0);
  std::fill(s.begin(), s.begin() + n, 1);
  return s;
}

double ClickStatistics::empirical_tail(double t) const {
  double mass = 0.0;
  for (std::size_t c = 0; c < click_pmf.size(); ++c) {
    if (std::abs(static_cast<double>(c) - centering) >= t * n) mass += click_pmf[c];
  }
  return mass;
}

ClickStatistics click_statistics(int n, int m, std::size_t trials,
                                 std::uint64_t seed, unsigned threads,
                                 int tail_points) {
  require(n >= 1 && m >= n, "click_statistics: need 1 <= n <= m");
  require(n <= kMaxDistributionPhotons && m <= kMaxDistributionModes,
          "click_statistics: (n, m) exceeds the enumeration guard");
  require(trials >= 2, "click_statistics: need at least two trials");
  require(tail_points >= 2, "click_statistics: need at least two tail points");

  const OccupationVector input = standard_input(n, m);
  const auto outcomes = enumerate_occupations(m, n);
  const OracleOptions options;

  // Per-trial pmf over click counts 0..n plus the normalization error.
  std::vector<std::vector<double>> pmfs(trials);
  std::vector<double> norm_err(trials);
  detail::parallel_for(trials, threads, [&](std::size_t i) {
    auto rng = CounterRng::stream(seed, i);
    const ComplexMatrix u = haar_random_unitary(m, rng);
    check_unitary(u, options);
    std::vector<double> pmf(n + 1, 0.0);
    detail::CompensatedSum total;
    for (const auto& v : outcomes) {
      const double p = probability_unchecked(u, input, v);
      pmf[occupied_modes(v)] += p;
      total.add(p);
    }
    pmfs[i] = std::move(pmf);
    norm_err[i] = std::abs(total.value() - 1.0);
  });

  ClickStatistics out;
  out.n = n;
  out.m = m;
  out.trials = trials;
  out.seed = seed;
  out.predicted = metric::typical_clicks(n, m);
  out.bose_einstein_mean = static_cast<double>(m) * n / (m + n - 1.0);
  out.centering = metric::large_deviation_centering(n, m);
  out.click_pmf.assign(n + 1, 0.0);

  const auto count = static_cast<double>(trials);
  std::vector<double> per_trial_mean(trials);
  detail::CompensatedSum sum_mean;
  for (std::size_t i = 0; i < trials; ++i) {
    double mean = 0.0;
    for (int c = 0; c <= n; ++c) {
      mean += c * pmfs[i][c];
      out.click_pmf[c] += pmfs[i][c] / count;
    }
    per_trial_mean[i] = mean;
    sum_mean.add(mean);
    out.normalization_max_err = std::max(out.normalization_max_err, norm_err[i]);
  }
  out.mean_clicks = sum_mean.value() / count;
  detail::CompensatedSum sum_sq;
  for (double x : per_trial_mean) {
    sum_sq.add((x - out.mean_clicks) * (x - out.mean_clicks));
  }
  out.std_clicks = std::sqrt(sum_sq.value() / (count - 1.0));
  out.standard_error = out.std_clicks / std::sqrt(count);
  out.z_score = out.standard_error > 0.0
                    ? (out.mean_clicks - out.predicted) / out.standard_error
                    : 0.0;

  for (int k = 0; k < tail_points; ++k) {
    TailPoint tp;
    tp.t = static_cast<double>(k) / (tail_points - 1);
    detail::CompensatedSum mass, mass_sq;
    std::vector<double> per_trial(trials);
    for (std::size_t i = 0; i < trials; ++i) {
      double q = 0.0;
      for (int c = 0; c <= n; ++c) {
        if (std::abs(c - out.centering) >= tp.t * n) q += pmfs[i][c];
      }
      per_trial[i] = q;
      mass.add(q);
    }
    tp.empirical = mass.value() / count;
    for (double q : per_trial) {
      mass_sq.add((q - tp.empirical) * (q - tp.empirical));
    }
    tp.mc_error = std::sqrt(mass_sq.value() / (count - 1.0) / count);
    tp.bound = metric::large_deviation_bound(n, tp.t);
    tp.violated = tp.empirical > tp.bound + 3.0 * tp.mc_error;
    out.ld_violations += tp.violated ? 1 : 0;
    out.tail.push_back(tp);
  }
  return out;
}

}  // namespace bsenergy::oracle
