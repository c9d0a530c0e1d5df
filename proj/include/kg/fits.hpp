#pragma once
#include <vector>

namespace kg {

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
    bool ok = false;
};

// least squares on (log x, log y); the usual scaling-exponent fit
FitResult loglog_fit(const std::vector<double>& x, const std::vector<double>& y);

// ordinary least squares y ~ a + b x
FitResult linear_fit(const std::vector<double>& x, const std::vector<double>& y);

// power-law fit y ~ A x^s minimizing squared error in raw space
// (Gauss-Newton on s with closed-form A); weights the asymptotic regime,
// which is what a scaling exponent means when the small-x end is curved
FitResult raw_power_fit(const std::vector<double>& x, const std::vector<double>& y);

} // namespace kg
