#include "kg/entanglement.hpp"

#include <cmath>
#include <stdexcept>

#include "kg/linalg.hpp"

namespace kg {

Eigen::MatrixXcd initial_correlation(int n) {
    if (n % 2 != 0) throw std::invalid_argument("half filling needs even N");
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n / 2; ++i) c(i, i) = 1.0;
    return c;
}

Eigen::MatrixXcd evolve_correlation(const Eigen::MatrixXd& h,
                                    const Eigen::MatrixXcd& c0, double t) {
    if (h.rows() != c0.rows()) throw std::invalid_argument("dimension mismatch");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
    const int n = static_cast<int>(h.rows());
    Eigen::VectorXcd ph(n);
    for (int i = 0; i < n; ++i) ph(i) = std::polar(1.0, -es.eigenvalues()(i) * t);
    Eigen::MatrixXcd p = es.eigenvectors().cast<cxd>() * ph.asDiagonal() *
                         es.eigenvectors().transpose().cast<cxd>();
    return p * c0 * p.adjoint();
}

namespace {

double binary_entropy_sum(const Eigen::VectorXd& z, double health_tol) {
    double s = 0.0;
    for (double v : z) {
        if (v < -health_tol || v > 1.0 + health_tol)
            throw std::runtime_error("correlation eigenvalue outside [0,1]");
        const double x = std::clamp(v, 0.0, 1.0);
        if (x > 0.0) s -= x * std::log(x);
        if (x < 1.0) s -= (1.0 - x) * std::log(1.0 - x);
    }
    return s;
}

} // namespace

double free_entropy(const Eigen::MatrixXcd& c, int l, double health_tol) {
    if (l < 1 || l > c.rows()) throw std::invalid_argument("bad subsystem size");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(c.topLeftCorner(l, l));
    if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
    return binary_entropy_sum(es.eigenvalues(), health_tol);
}

double many_body_entropy(const Eigen::VectorXcd& psi, int l, const FockBasis& basis) {
    if (l < 0 || l > basis.n) throw std::invalid_argument("bad cut");
    const uint32_t mask = (l == 32) ? ~0u : ((1u << l) - 1u);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(1 << l, 1 << (basis.n - l));
    for (int s = 0; s < basis.dim(); ++s) {
        const uint32_t w = basis.states[s];
        m(w & mask, w >> l) += psi(s);
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    double entropy = 0.0;
    for (double sv : svd.singularValues()) {
        const double p = sv * sv;
        if (p > 1e-15) entropy -= p * std::log(p);
    }
    return entropy;
}

Eigen::VectorXd free_entropy_series(const Eigen::MatrixXd& h,
                                    const Eigen::VectorXd& ts) {
    const int n = static_cast<int>(h.rows());
    const Eigen::MatrixXcd c0 = initial_correlation(n);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
    const Eigen::MatrixXcd v = es.eigenvectors().cast<cxd>();
    Eigen::MatrixXcd c0r = v.adjoint() * c0 * v; // rotate once, phase per time
    Eigen::VectorXd out(ts.size());
    for (int i = 0; i < ts.size(); ++i) {
        Eigen::VectorXcd ph(n);
        for (int a = 0; a < n; ++a)
            ph(a) = std::polar(1.0, -es.eigenvalues()(a) * ts(i));
        Eigen::MatrixXcd ct =
            v * (ph.asDiagonal() * c0r * ph.conjugate().asDiagonal()) * v.adjoint();
        out(i) = free_entropy(ct, n / 2);
    }
    return out;
}

Eigen::VectorXd many_body_entropy_series(const Graph& g, const ManyBodyParams& p,
                                         const Eigen::VectorXd& ts) {
    if (g.n % 2 != 0) throw std::invalid_argument("half filling needs even N");
    FockBasis basis = fock_basis(g.n, g.n / 2);
    auto [e, v] = sym_eig(many_body_hamiltonian(g, p, basis));
    const uint32_t w0 = (1u << (g.n / 2)) - 1u; // domain wall
    const int idx0 = basis.index[w0];
    Eigen::VectorXd c0 = v.row(idx0).transpose();
    Eigen::VectorXd out(ts.size());
    for (int i = 0; i < ts.size(); ++i) {
        Eigen::VectorXcd c(c0.size());
        for (int a = 0; a < c0.size(); ++a)
            c(a) = c0(a) * std::polar(1.0, -e(a) * ts(i));
        Eigen::VectorXcd psi = v.cast<cxd>() * c;
        out(i) = many_body_entropy(psi, g.n / 2, basis);
    }
    return out;
}

} // namespace kg
