// SPDX-License-Identifier: Apache-2.0
#include "amoc/synth.hpp"

#include "amoc/error.hpp"
#include "amoc/rng.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace amoc {

NoiseModel parseNoiseModel(const std::string& tag) {
    if (tag == "gaussian") {
        return NoiseModel::Gaussian;
    }
    if (tag == "poisson") {
        return NoiseModel::Poisson;
    }
    throw ConfigError("unknown noise model \"" + tag + "\" (expected gaussian or poisson)");
}

std::string toString(NoiseModel noise) {
    return noise == NoiseModel::Gaussian ? "gaussian" : "poisson";
}

void validate(const SyntheticSpec& spec) {
    if (spec.length < 1) {
        throw ConfigError("series length must be positive");
    }
    if (spec.tau) {
        if (*spec.tau < 1 || *spec.tau >= spec.length) {
            throw ConfigError("tau must be in 1..T-1");
        }
    } else if (spec.delta != 0.0) {
        throw ConfigError("delta must be 0 when tau is absent (null model)");
    }
    if (spec.noise == NoiseModel::Gaussian && !(spec.sigma > 0.0)) {
        throw ConfigError("sigma must be positive");
    }
    if (spec.noise == NoiseModel::Poisson && (!(spec.mu > 0.0) || !(spec.mu + spec.delta > 0.0))) {
        throw ConfigError("poisson noise needs mu > 0 and mu + delta > 0");
    }
}

DailySeries generate(const SyntheticSpec& spec) {
    validate(spec);

    DailySeries series;
    series.label = "synthetic";
    series.start = Date{std::chrono::year{2020}, std::chrono::month{1}, std::chrono::day{1}};
    series.counts.resize(spec.length);

    std::mt19937_64 rng{spec.seed};
    const Eigen::Index tau = spec.tau.value_or(spec.length); // no post segment when absent
    for (Eigen::Index i = 0; i < spec.length; ++i) {
        const double mean = (i + 1 <= tau) ? spec.mu : spec.mu + spec.delta;
        double value = 0;
        if (spec.noise == NoiseModel::Gaussian) {
            std::normal_distribution<double> noise{mean, spec.sigma};
            value = std::max(0.0, static_cast<double>(std::llround(noise(rng))));
        } else {
            std::poisson_distribution<long long> noise{mean};
            value = static_cast<double>(noise(rng));
        }
        series.counts[i] = value;
    }
    return series;
}

EvalSummary evaluate(const SyntheticSpec& spec, int trials, const SignificanceConfig& config,
                     std::vector<TrialOutcome>* per_trial) {
    validate(spec);
    validate(config);
    if (trials < 1) {
        throw ConfigError("need at least one trial");
    }

    int significant_count = 0;
    std::vector<double> localization_errors;
    if (per_trial) {
        per_trial->clear();
        per_trial->reserve(trials);
    }

    for (int t = 0; t < trials; ++t) {
        const std::uint64_t trial_base = deriveSeed(spec.seed, static_cast<std::uint64_t>(t));
        SyntheticSpec trial_spec = spec;
        trial_spec.seed = deriveSeed(trial_base, 0);
        SignificanceConfig trial_config = config;
        trial_config.seed = deriveSeed(trial_base, 1);

        DailySeries series = generate(trial_spec);
        ChangepointResult result = detectAmoc(series, trial_config);

        if (result.significant) {
            ++significant_count;
            if (spec.tau) {
                localization_errors.push_back(
                    std::abs(static_cast<double>(result.tau_hat - *spec.tau)));
            }
        }
        if (per_trial) {
            per_trial->push_back(TrialOutcome{t, result.tau_hat, result.significant,
                                              result.p_value});
        }
    }

    EvalSummary summary;
    summary.trials = trials;
    summary.detection_rate = static_cast<double>(significant_count) / trials;
    if (spec.delta == 0.0) {
        summary.false_positive_rate = summary.detection_rate;
    }
    if (spec.tau && !localization_errors.empty()) {
        auto mid = localization_errors.begin() + localization_errors.size() / 2;
        std::nth_element(localization_errors.begin(), mid, localization_errors.end());
        double median = *mid;
        if (localization_errors.size() % 2 == 0) {
            double lower = *std::max_element(localization_errors.begin(), mid);
            median = (lower + median) / 2.0;
        }
        summary.median_abs_localization_error = median;
    }
    summary.spec = spec;
    summary.config = config;
    return summary;
}

} // namespace amoc
