#pragma once

#include <limits>

namespace ricci {

/// Per-snapshot scalar observables. Fields that are not available yet (or
/// not configured) hold NaN and serialize as empty CSV cells.
struct DiagnosticsRecord {
    static constexpr double missing = std::numeric_limits<double>::quiet_NaN();

    double t = 0.0;
    double tNormalized = missing;  ///< filled by the normalization pass
    double rMax = 0.0;
    double rMin = 0.0;
    double rAvg = 0.0;  ///< area-averaged scalar curvature
    double area = 0.0;
    double boundaryLength = 0.0;
    double isoRatio = missing;   ///< isoperimetric infimum of the realized metric
    double kMeasured = missing;  ///< boundary geodesic curvature, realized metric
    double wMax = missing;       ///< max of w = F * dR/drho
    double shiRatio = missing;   ///< sqrt(t)|dR/dnu|_boundary / max(1, sup R_max)
    double boundaryIdentityResidual = missing;
    double areaRateResidual = missing;  ///< filled by the post-run pass
    double mu = missing;                ///< optional entropy value
};

} // namespace ricci
