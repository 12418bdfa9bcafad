// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "amoc/cusum.hpp"
#include "amoc/dates.hpp"
#include "amoc/series.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <string>

namespace amoc {

enum class SignificanceMethod { Permutation, Penalty };

SignificanceMethod parseSignificanceMethod(const std::string& tag);
std::string toString(SignificanceMethod method);

struct SignificanceConfig {
    double alpha = 0.05;
    SignificanceMethod method = SignificanceMethod::Permutation;
    int permutations = 999; // B
    std::uint64_t seed = 0;
    // Threshold for the penalty method; defaults to 3 ln T when unset.
    std::optional<double> penalty_value;
};

// alpha in (0,1), permutations >= 19, penalty_value > 0 when set.
void validate(const SignificanceConfig& config);

struct ChangepointResult {
    Eigen::Index tau_hat = 0; // 1-based index of the last pre-change day
    double max_stat = 0;
    CusumCurve curve;
    double pre_mean = 0;
    double post_mean = 0;
    double delta_hat = 0; // post_mean - pre_mean
    std::optional<double> p_value; // absent in penalty mode
    bool significant = false;
    Date tau_date{}; // series.start + (tau_hat - 1) days
};

// Estimates the split maximizing Q (smallest s on ties) and assesses
// significance per config. A zero-variance series yields max_stat = 0,
// significant = false and, in permutation mode, p = 1. Deterministic given
// config.seed. Throws DataError when T < 4.
ChangepointResult detectAmoc(const DailySeries& series, const SignificanceConfig& config);

// p = (1 + #{b : M_b >= M_obs}) / (B + 1) over B uniformly random
// permutations of the values, where M is the max cusum statistic. Replicate
// b draws its randomness from deriveSeed(seed, b), so the p-value does not
// depend on evaluation order. Zero-variance input gives p = 1.
double permutationPvalue(const Eigen::Ref<const Eigen::ArrayXd>& values, int permutations,
                         std::uint64_t seed);

// Significant iff max Q(s) / noise_variance > penalty (strict). Throws
// DataError on non-positive variance; callers handle constant series first.
bool penaltyTest(const CusumCurve& curve, double noise_variance, double penalty);

// ML-style pooled residual variance around the two-segment mean fit at the
// split (denominator T). tau is 1-based.
double pooledVariance(const Eigen::Ref<const Eigen::ArrayXd>& values, Eigen::Index tau);

} // namespace amoc
