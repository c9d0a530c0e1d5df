#include "kg/krylov.hpp"

#include <cmath>
#include <stdexcept>

#include "kg/linalg.hpp"

namespace kg {

Eigen::VectorXd log_grid(double tmin, double tmax, int npts) {
    if (npts < 2 || tmin <= 0 || tmax <= tmin)
        throw std::invalid_argument("bad log grid");
    Eigen::VectorXd t(npts);
    const double l0 = std::log10(tmin), l1 = std::log10(tmax);
    for (int i = 0; i < npts; ++i)
        t(i) = std::pow(10.0, l0 + (l1 - l0) * i / (npts - 1));
    return t;
}

Eigen::VectorXd lin_grid(double tmin, double tmax, int npts) {
    if (npts < 2 || tmax <= tmin) throw std::invalid_argument("bad lin grid");
    return Eigen::VectorXd::LinSpaced(npts, tmin, tmax);
}

namespace {

EigDecomp jacobi_eig(const Eigen::VectorXd& b) {
    const int d = static_cast<int>(b.size()) + 1;
    return tridiag_eig(Eigen::VectorXd::Zero(d), b);
}

} // namespace

Eigen::VectorXcd evolve_phi(const Eigen::VectorXd& b, double t) {
    if (b.size() == 0) {
        Eigen::VectorXcd phi(1);
        phi(0) = 1.0;
        return phi;
    }
    auto [theta, q] = jacobi_eig(b);
    const int d = static_cast<int>(theta.size());
    Eigen::VectorXcd mix(d);
    for (int j = 0; j < d; ++j)
        mix(j) = std::polar(1.0, theta(j) * t) * q(0, j);
    return q.cast<cxd>() * mix;
}

KrylovSeries complexity_series(const Eigen::VectorXd& b, const Eigen::VectorXd& ts) {
    KrylovSeries s;
    s.t = ts;
    s.c.resize(ts.size());
    if (b.size() == 0) {
        s.c.setZero();
        return s;
    }
    auto [theta, q] = jacobi_eig(b);
    const int d = static_cast<int>(theta.size());
    Eigen::VectorXcd mix(d);
    for (int i = 0; i < ts.size(); ++i) {
        for (int j = 0; j < d; ++j)
            mix(j) = std::polar(1.0, theta(j) * ts(i)) * q(0, j);
        Eigen::VectorXcd phi = q.cast<cxd>() * mix;
        double cval = 0.0, nrm = 0.0;
        for (int n = 0; n < d; ++n) {
            const double p = std::norm(phi(n));
            cval += n * p;
            nrm += p;
        }
        s.c(i) = cval;
        s.max_norm_err = std::max(s.max_norm_err, std::abs(nrm - 1.0));
    }
    return s;
}

double complexity_time_average(const Eigen::VectorXd& b) {
    if (b.size() == 0) return 0.0;
    auto [theta, q] = jacobi_eig(b);
    const int d = static_cast<int>(theta.size());
    double avg = 0.0;
    for (int j = 0; j < d; ++j) {
        const double w = q(0, j) * q(0, j);
        double m = 0.0;
        for (int n = 0; n < d; ++n) m += n * q(n, j) * q(n, j);
        avg += w * m;
    }
    return avg;
}

PlateauResult plateau_average(const KrylovSeries& s, double drift_tol,
                              double min_coverage) {
    PlateauResult r;
    const int n = static_cast<int>(s.t.size());
    if (n < 2) return r;

    int first_pos = 0;
    while (first_pos < n && s.t(first_pos) <= 0) ++first_pos;
    if (n - first_pos < 2) return r;

    // longest trailing window [i, n) whose fit in log10 t drifts slowly
    // relative to the window mean
    for (int i = first_pos; i <= n - 2; ++i) {
        const int m = n - i;
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (int k = i; k < n; ++k) {
            const double x = std::log10(s.t(k)), y = s.c(k);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double den = m * sxx - sx * sx;
        if (den <= 0) continue;
        const double slope = (m * sxy - sx * sy) / den;
        const double mean = sy / m;
        if (std::abs(slope) < drift_tol * std::max(std::abs(mean), 1e-300)) {
            r.value = mean;
            r.t_start = s.t(i);
            r.coverage = static_cast<double>(m) / n;
            r.found = r.coverage >= min_coverage;
            return r;
        }
    }
    // fall back to the final two points so callers always get a number
    r.value = 0.5 * (s.c(n - 1) + s.c(n - 2));
    r.t_start = s.t(n - 2);
    r.coverage = 2.0 / n;
    r.found = false;
    return r;
}

} // namespace kg
