// SPDX-License-Identifier: Apache-2.0
#include "amoc/changepoint.hpp"

#include "amoc/error.hpp"
#include "amoc/rng.hpp"

#include <cmath>
#include <random>

namespace amoc {

SignificanceMethod parseSignificanceMethod(const std::string& tag) {
    if (tag == "permutation") {
        return SignificanceMethod::Permutation;
    }
    if (tag == "penalty") {
        return SignificanceMethod::Penalty;
    }
    throw ConfigError("unknown significance method \"" + tag +
                      "\" (expected permutation or penalty)");
}

std::string toString(SignificanceMethod method) {
    return method == SignificanceMethod::Permutation ? "permutation" : "penalty";
}

void validate(const SignificanceConfig& config) {
    if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
        throw ConfigError("alpha must be in (0,1)");
    }
    if (config.permutations < 19) {
        throw ConfigError("need at least 19 permutations");
    }
    if (config.penalty_value && !(*config.penalty_value > 0.0)) {
        throw ConfigError("penalty value must be positive");
    }
}

double permutationPvalue(const Eigen::Ref<const Eigen::ArrayXd>& values, int permutations,
                         std::uint64_t seed) {
    if (values.size() < 4) {
        throw DataError("permutation test needs at least 4 observations");
    }
    if (permutations < 19) {
        throw ConfigError("need at least 19 permutations");
    }
    if (values.minCoeff() == values.maxCoeff()) {
        return 1.0; // every permutation is identical
    }

    const double observed = maxCusumStat(values);
    int at_least = 0;
    Eigen::ArrayXd work(values.size());
    for (int b = 1; b <= permutations; ++b) {
        work = values;
        std::mt19937_64 rng{deriveSeed(seed, static_cast<std::uint64_t>(b))};
        shuffleValues(work, rng);
        if (maxCusumStat(work) >= observed) {
            ++at_least;
        }
    }
    return (1.0 + at_least) / (permutations + 1.0);
}

double pooledVariance(const Eigen::Ref<const Eigen::ArrayXd>& values, Eigen::Index tau) {
    const Eigen::Index n = values.size();
    const auto left = values.head(tau);
    const auto right = values.tail(n - tau);
    double rss = (left - left.mean()).square().sum() + (right - right.mean()).square().sum();
    return rss / static_cast<double>(n);
}

bool penaltyTest(const CusumCurve& curve, double noise_variance, double penalty) {
    if (!(noise_variance > 0.0)) {
        throw DataError("penalty test needs a positive noise variance estimate");
    }
    return curve.values.maxCoeff() / noise_variance > penalty;
}

ChangepointResult detectAmoc(const DailySeries& series, const SignificanceConfig& config) {
    validate(config);
    const Eigen::Index n = series.length();
    if (n < 4) {
        throw DataError("series \"" + series.label + "\" is too short for detection (T = " +
                        std::to_string(n) + ", need T >= 4)");
    }

    ChangepointResult result;
    result.curve = cusumCurve(series);

    const Eigen::ArrayXd& x = series.counts;
    if (x.minCoeff() == x.maxCoeff()) {
        result.tau_hat = 1;
        result.max_stat = 0.0;
        result.pre_mean = x[0];
        result.post_mean = x[0];
        result.delta_hat = 0.0;
        result.significant = false;
        if (config.method == SignificanceMethod::Permutation) {
            result.p_value = 1.0;
        }
        result.tau_date = series.start;
        return result;
    }

    result.tau_hat = argmaxSplit(result.curve.values);
    result.max_stat = result.curve.values[result.tau_hat - 1];
    result.pre_mean = x.head(result.tau_hat).mean();
    result.post_mean = x.tail(n - result.tau_hat).mean();
    result.delta_hat = result.post_mean - result.pre_mean;
    result.tau_date = addDays(series.start, result.tau_hat - 1);

    if (config.method == SignificanceMethod::Permutation) {
        double p = permutationPvalue(x, config.permutations, config.seed);
        result.p_value = p;
        result.significant = p <= config.alpha;
    } else {
        double penalty = config.penalty_value.value_or(3.0 * std::log(static_cast<double>(n)));
        double variance = pooledVariance(x, result.tau_hat);
        if (variance > 0.0) {
            result.significant = penaltyTest(result.curve, variance, penalty);
        } else {
            // Exact two-level series: the fit is perfect and the shift is real.
            result.significant = result.max_stat > 0.0;
        }
    }
    return result;
}

} // namespace amoc
