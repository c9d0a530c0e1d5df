#include "kg/lanczos.hpp"

#include <stdexcept>

namespace kg {

LanczosRun<QuadraticOp> quad_lanczos(const Eigen::MatrixXd& h,
                                     const QuadraticOp& o0, double tol,
                                     int max_dim, int reorth_passes) {
    const int n = static_cast<int>(h.rows());
    if (max_dim < 0) max_dim = n * n + 1;
    LanczosSpace<QuadraticOp> sp;
    sp.apply = [&h](const QuadraticOp& a) { return quad_liouville(h, a); };
    sp.inner = [](const QuadraticOp& a, const QuadraticOp& b) {
        return quad_inner(a, b);
    };
    sp.axpy = [](QuadraticOp& x, cxd s, const QuadraticOp& y) { x += s * y; };
    sp.scal = [](QuadraticOp& x, double s) { x *= s; };
    return lanczos(o0, sp, tol, max_dim, reorth_passes);
}

LanczosResult lanczos_diag(const SpectralMeasure& sm, double tol, int max_dim) {
    const int n = sm.dim();
    if (max_dim < 0) max_dim = n;
    LanczosSpace<Eigen::VectorXd> sp;
    Eigen::VectorXd om = Eigen::Map<const Eigen::VectorXd>(sm.omega.data(), n);
    sp.apply = [om](const Eigen::VectorXd& v) -> Eigen::VectorXd {
        return om.cwiseProduct(v);
    };
    sp.inner = [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
        return cxd(a.dot(b), 0.0);
    };
    sp.axpy = [](Eigen::VectorXd& x, cxd s, const Eigen::VectorXd& y) {
        x += s.real() * y;
    };
    sp.scal = [](Eigen::VectorXd& x, double s) { x *= s; };

    Eigen::VectorXd v0(n);
    for (int i = 0; i < n; ++i) v0(i) = std::sqrt(sm.weight[i]);
    return lanczos(v0, sp, tol, max_dim).r;
}

LanczosResult jacobi_from_measure(const SpectralMeasure& sm) {
    const int n = sm.dim();
    if (n == 0) throw std::invalid_argument("empty measure");
    Eigen::VectorXd alpha = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd beta2 = Eigen::VectorXd::Zero(n);
    alpha(0) = sm.omega[0];
    beta2(0) = sm.weight[0];
    for (int i = 0; i + 1 < n; ++i) {
        double pi = sm.weight[i + 1];
        double gam = 1.0, sig = 0.0, t = 0.0;
        const double xlam = sm.omega[i + 1];
        for (int k = 0; k <= i + 1; ++k) {
            const double rho = beta2(k) + pi;
            const double tmp = gam * rho;
            const double tsig = sig;
            if (rho <= 0.0) {
                gam = 1.0;
                sig = 0.0;
            } else {
                gam = beta2(k) / rho;
                sig = pi / rho;
            }
            const double tk = sig * (alpha(k) - xlam) - gam * t;
            alpha(k) -= tk - t;
            t = tk;
            pi = (sig <= 0.0) ? tsig * beta2(k) : t * t / sig;
            beta2(k) = tmp;
        }
    }
    LanczosResult r;
    r.dim = n;
    r.b.resize(n - 1);
    for (int k = 1; k < n; ++k) r.b(k - 1) = std::sqrt(std::max(beta2(k), 0.0));
    // diagnostic only: the Liouvillian recursion should have a zero diagonal
    r.max_residual = alpha.cwiseAbs().maxCoeff();
    r.reliable = true;
    return r;
}

} // namespace kg
