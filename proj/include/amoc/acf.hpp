// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "amoc/error.hpp"
#include "amoc/series.hpp"

#include <Eigen/Core>

#include <ostream>
#include <string>
#include <type_traits>

namespace amoc {

// Sample autocorrelations r_0..r_K with the white-noise confidence band
// half-width 1.96/sqrt(T). r_0 is exactly 1 and |r_k| <= 1 for all k.
struct AcfResult {
    std::string label;
    Eigen::ArrayXd correlations;
    double band_halfwidth = 0;
    Eigen::Index series_length = 0;
};

// Biased estimator with the common mean:
//
//   r_k = sum_{t=1}^{T-k} (x_t - xbar)(x_{t+k} - xbar) / sum_t (x_t - xbar)^2
//
// which keeps every r_k inside [-1, 1]. Throws DataError on zero variance
// and ConfigError when max_lag is out of range.
template <typename Derived>
Eigen::Array<typename Derived::Scalar, Eigen::Dynamic, 1>
autocorrelations(const Eigen::DenseBase<Derived>& input, Eigen::Index max_lag) {
    using Scalar = typename Derived::Scalar;
    static_assert(std::is_floating_point_v<Scalar>);
    using ArrayX = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

    const ArrayX x = input.derived();
    const Eigen::Index n = x.size();
    if (n < 2) {
        throw DataError("autocorrelation needs at least 2 observations");
    }
    if (max_lag < 1 || max_lag >= n) {
        throw ConfigError("max lag must be in [1, T-1], got " + std::to_string(max_lag) +
                          " for T = " + std::to_string(n));
    }

    const ArrayX centered = x - x.mean();
    const Scalar denom = centered.square().sum();
    if (!(denom > 0)) {
        throw DataError("autocorrelation undefined for a zero-variance series");
    }

    ArrayX r(max_lag + 1);
    r[0] = 1;
    for (Eigen::Index k = 1; k <= max_lag; ++k) {
        r[k] = (centered.head(n - k) * centered.tail(n - k)).sum() / denom;
    }
    return r;
}

AcfResult acf(const DailySeries& series, Eigen::Index max_lag);

// Plot-ready two-column CSV: header "lag,r".
void writeAcfCsv(std::ostream& out, const AcfResult& result);

} // namespace amoc
