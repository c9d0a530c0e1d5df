#include "kg/fits.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace kg {

FitResult linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    FitResult r;
    size_t n = x.size();
    if (n != y.size() || n < 2) return r;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    double den = n * sxx - sx * sx;
    if (den <= 0) return r;
    r.slope = (n * sxy - sx * sy) / den;
    r.intercept = (sy - r.slope * sx) / n;
    double ss = 0;
    for (size_t i = 0; i < n; ++i) {
        double e = y[i] - (r.intercept + r.slope * x[i]);
        ss += e * e;
    }
    if (n > 2) r.slope_stderr = std::sqrt(ss / double(n - 2) * n / den);
    r.ok = true;
    return r;
}

FitResult loglog_fit(const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> lx(x.size()), ly(y.size());
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] <= 0 || y[i] <= 0) return {};
        lx[i] = std::log(x[i]);
        ly[i] = std::log(y[i]);
    }
    return linear_fit(lx, ly);
}

FitResult raw_power_fit(const std::vector<double>& x, const std::vector<double>& y) {
    FitResult init = loglog_fit(x, y);
    if (!init.ok) return {};
    size_t n = x.size();
    // profile objective: amplitude has a closed form at fixed exponent
    auto sse = [&](double s) {
        double num = 0, den = 0;
        for (size_t i = 0; i < n; ++i) {
            double xs = std::pow(x[i], s);
            num += y[i] * xs;
            den += xs * xs;
        }
        double a = den > 0 ? num / den : 0.0;
        double e = 0;
        for (size_t i = 0; i < n; ++i) {
            double d = y[i] - a * std::pow(x[i], s);
            e += d * d;
        }
        return e;
    };
    // golden-section search; the Newton iteration stalls on this objective
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = init.slope - 1.5, hi = init.slope + 1.5;
    double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
    double fc = sse(c), fd = sse(d);
    while (hi - lo > 1e-11) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - gr * (hi - lo);
            fc = sse(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + gr * (hi - lo);
            fd = sse(d);
        }
    }
    double s = 0.5 * (lo + hi);
    double num = 0, den = 0;
    for (size_t i = 0; i < n; ++i) {
        double xs = std::pow(x[i], s);
        num += y[i] * xs;
        den += xs * xs;
    }
    FitResult r;
    r.slope = s;
    r.intercept = den > 0 && num > 0 ? std::log(num / den) : 0.0;
    if (n > 2) {
        double h = 0.5e-4;
        double curv = (sse(s + h) - 2.0 * sse(s) + sse(s - h)) / (h * h);
        if (curv > 0) r.slope_stderr = std::sqrt(2.0 * sse(s) / double(n - 2) / curv);
    }
    r.ok = true;
    return r;
}

} // namespace kg
