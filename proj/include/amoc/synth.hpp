// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "amoc/changepoint.hpp"
#include "amoc/series.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace amoc {

enum class NoiseModel { Gaussian, Poisson };

NoiseModel parseNoiseModel(const std::string& tag);
std::string toString(NoiseModel noise);

// Daily-count series with a known injected mean shift: mean mu up to and
// including day tau, mean mu + delta afterwards. tau absent means the null
// model (delta must then be 0).
struct SyntheticSpec {
    Eigen::Index length = 0; // T
    std::optional<Eigen::Index> tau; // 1-based, in 1..T-1
    double mu = 0;
    double delta = 0;
    NoiseModel noise = NoiseModel::Gaussian;
    double sigma = 1.0; // gaussian only
    std::uint64_t seed = 0;
};

// Throws ConfigError on an inconsistent spec.
void validate(const SyntheticSpec& spec);

// Independent draws per day; gaussian draws are rounded to the nearest
// integer and clamped at 0 so the output is count-valued. Deterministic per
// seed. The series starts at 2020-01-01 with label "synthetic".
DailySeries generate(const SyntheticSpec& spec);

struct TrialOutcome {
    int trial = 0;
    Eigen::Index tau_hat = 0;
    bool significant = false;
    std::optional<double> p_value;
};

struct EvalSummary {
    int trials = 0;
    double detection_rate = 0;
    std::optional<double> false_positive_rate; // present iff delta == 0
    std::optional<double> median_abs_localization_error; // over significant trials
    SyntheticSpec spec;
    SignificanceConfig config;
};

// Runs generate + detectAmoc per trial. Trial t derives its generator and
// permutation seeds from (spec.seed, t), so the summary is identical across
// runs no matter how trials are scheduled; config.seed is unused here.
EvalSummary evaluate(const SyntheticSpec& spec, int trials, const SignificanceConfig& config,
                     std::vector<TrialOutcome>* per_trial = nullptr);

} // namespace amoc
