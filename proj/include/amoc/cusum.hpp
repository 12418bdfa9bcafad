// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "amoc/error.hpp"
#include "amoc/series.hpp"

#include <Eigen/Core>

#include <type_traits>

namespace amoc {

// Q(s) for s = 1..T-1, where
//
//   Q(s) = s(T-s)/T * (mean(x_1..x_s) - mean(x_{s+1}..x_T))^2
//
// i.e. the squared difference of segment means, weighted so the statistic is
// comparable across split points. The maximizing s estimates the last
// pre-change index under an at-most-one-changepoint mean-shift model.
struct CusumCurve {
    Eigen::ArrayXd values;          // Q(1)..Q(T-1)
    Eigen::Index series_length = 0; // T
};

// Prefix-sum evaluation of Q over all split points, O(T).
template <typename Derived>
Eigen::Array<typename Derived::Scalar, Eigen::Dynamic, 1>
cusumStatistics(const Eigen::DenseBase<Derived>& input) {
    using Scalar = typename Derived::Scalar;
    static_assert(std::is_floating_point_v<Scalar>);
    using ArrayX = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

    const ArrayX x = input.derived();
    const Eigen::Index n = x.size();
    if (n < 2) {
        throw DataError("cusum statistics need at least 2 observations");
    }

    ArrayX prefix(n);
    Scalar run = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        run += x[i];
        prefix[i] = run;
    }
    const Scalar total = prefix[n - 1];

    const ArrayX s = ArrayX::LinSpaced(n - 1, Scalar(1), Scalar(n - 1));
    const ArrayX left = prefix.head(n - 1);
    const ArrayX weight = s * (Scalar(n) - s) / Scalar(n);
    const ArrayX diff = left / s - (total - left) / (Scalar(n) - s);
    return weight * diff.square();
}

// Throws DataError if the series is shorter than 2 days.
inline CusumCurve cusumCurve(const DailySeries& series) {
    if (series.length() < 2) {
        throw DataError("series \"" + series.label + "\" is too short for cusum (T = " +
                        std::to_string(series.length()) + ", need T >= 2)");
    }
    return CusumCurve{cusumStatistics(series.counts), series.length()};
}

// 1-based split index s of the largest value; the smallest s wins ties.
inline Eigen::Index argmaxSplit(const Eigen::Ref<const Eigen::ArrayXd>& q) {
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < q.size(); ++i) {
        if (q[i] > q[best]) {
            best = i;
        }
    }
    return best + 1;
}

// max_s Q(s) without materializing the curve; the permutation loop hot path.
inline double maxCusumStat(const Eigen::Ref<const Eigen::ArrayXd>& x) {
    const Eigen::Index n = x.size();
    double total = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        total += x[i];
    }
    double best = 0;
    double run = 0;
    for (Eigen::Index s = 1; s < n; ++s) {
        run += x[s - 1];
        const double ds = static_cast<double>(s);
        const double rest = static_cast<double>(n) - ds;
        const double weight = ds * rest / static_cast<double>(n);
        const double diff = run / ds - (total - run) / rest;
        // Same association as the vectorized curve so both routes agree
        // to the last bit on identical input.
        const double q = weight * (diff * diff);
        if (q > best) {
            best = q;
        }
    }
    return best;
}

} // namespace amoc
