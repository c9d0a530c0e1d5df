#pragma once
#include <Eigen/Dense>

#include "kg/lanczos.hpp"

namespace kg {

struct KrylovSeries {
    Eigen::VectorXd t;
    Eigen::VectorXd c;
    double max_norm_err = 0.0; // worst |sum_n |phi_n|^2 - 1| over the grid
};

struct PlateauResult {
    double value = 0.0;
    double t_start = 0.0;
    double coverage = 0.0; // window length / grid length
    bool found = false;
};

Eigen::VectorXd log_grid(double tmin, double tmax, int npts);
Eigen::VectorXd lin_grid(double tmin, double tmax, int npts);

// phi(t) = exp(i T t) e_0 for the zero-diagonal tridiagonal T built from b.
Eigen::VectorXcd evolve_phi(const Eigen::VectorXd& b, double t);

// C(t) = sum_n n |phi_n(t)|^2 on a time grid, via one eigendecomposition of T.
KrylovSeries complexity_series(const Eigen::VectorXd& b, const Eigen::VectorXd& ts);

// Infinite-time average of C(t) from the dephased ensemble of T's eigenvectors.
double complexity_time_average(const Eigen::VectorXd& b);

// Longest trailing window whose running mean drifts by less than drift_tol
// per decade of time (slope of the window's fit in log10 t over its mean).
// Windows shorter than min_coverage of the grid do not count as a plateau.
PlateauResult plateau_average(const KrylovSeries& s, double drift_tol = 0.02,
                              double min_coverage = 0.25);

} // namespace kg
