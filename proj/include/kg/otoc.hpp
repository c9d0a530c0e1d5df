#pragma once
#include <Eigen/Dense>
#include <cstdint>

#include "kg/fockspace.hpp"
#include "kg/graphs.hpp"

namespace kg {

// F(t) = Tr[O(t) Q O(t) Q]/2^N for O = 2n_o - I, Q = 2n_q - I (Hermitian
// reflections), C(t) = 2(1 - Re F(t)).
struct OtocSeries {
    Eigen::VectorXd t;
    Eigen::VectorXcd f;
    Eigen::VectorXd c;
    Eigen::VectorXd err; // per-time standard error; zero for exact methods
};

// Free-fermion evaluation through the Gaussian reflection identity:
// F(t) = det(I + R_v(t) R_q R_v(t) R_q)/2^N with R = I - 2vv† and
// v(t) = e^{iht} e_site. Reaches N in the hundreds.
OtocSeries otoc_free(const Eigen::MatrixXd& h, int site_o, int site_q,
                     const Eigen::VectorXd& ts);

// Exact many-body trace, sector by sector (feasible to N = 12).
OtocSeries otoc_exact(const Graph& g, const ManyBodyParams& p, int site_o,
                      int site_q, const Eigen::VectorXd& ts);

// Trace estimate from complex-Gaussian vectors split across sectors; err
// reports the standard error over samples.
OtocSeries otoc_typicality(const Graph& g, const ManyBodyParams& p, int site_o,
                           int site_q, const Eigen::VectorXd& ts, int samples,
                           uint64_t seed);

// Exact infinite-time average of F from the dephased (diagonal) ensemble.
double otoc_plateau_exact(const Graph& g, const ManyBodyParams& p, int site_o,
                          int site_q);

struct LyapunovFit {
    double lambda = 0.0;
    double stderr_ = 0.0;
    double t0 = 0.0, t1 = 0.0;
    bool ok = false;
};

// Slope of ln C over the growth window anchored to the saturation value:
// the plateau proxy P is the mean of the trailing quarter of the curve, the
// window is the longest contiguous run with C in [lo*P, hi*P], and the rate
// is the least-squares slope of ln C vs t there. Residual-threshold window
// searches latch onto the steep ballistic shoulder, where the slope reads
// 3-4x too high; pinning the window to fixed fractions of the plateau keeps
// the fit in the regime where the growth is actually exponential. Pure
// exponentials are recovered exactly; curves with no window of at least four
// points (e.g. constants) return the failure flag.
LyapunovFit lyapunov_fit(const Eigen::VectorXd& ts, const Eigen::VectorXd& c,
                         double lo = 0.15, double hi = 0.85,
                         double tmin = -1e300, double tmax = 1e300);

} // namespace kg
