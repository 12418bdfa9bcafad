// SPDX-License-Identifier: Apache-2.0
#include "amoc/acf.hpp"

#include <cmath>
#include <iomanip>

namespace amoc {

AcfResult acf(const DailySeries& series, Eigen::Index max_lag) {
    AcfResult result;
    result.label = series.label;
    result.series_length = series.length();
    result.correlations = autocorrelations(series.counts, max_lag);
    result.band_halfwidth = 1.96 / std::sqrt(static_cast<double>(series.length()));
    return result;
}

void writeAcfCsv(std::ostream& out, const AcfResult& result) {
    auto old_precision = out.precision();
    out << std::setprecision(12) << "lag,r\n";
    for (Eigen::Index k = 0; k < result.correlations.size(); ++k) {
        out << k << ',' << result.correlations[k] << '\n';
    }
    out.precision(old_precision);
}

} // namespace amoc
