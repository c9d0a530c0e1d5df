#include "kg/linalg.hpp"

#include <lapacke.h>

#include <stdexcept>
#include <vector>

namespace kg {

EigDecomp sym_eig(const Eigen::MatrixXd& a) {
    const int n = static_cast<int>(a.rows());
    if (a.cols() != n) throw std::invalid_argument("sym_eig needs square input");
    if (n <= 32) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
        if (es.info() != Eigen::Success)
            throw std::runtime_error("eigensolver failed");
        return {es.eigenvalues(), es.eigenvectors()};
    }
    EigDecomp out;
    out.vectors = a;
    out.values.resize(n);
    const lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n,
                                           out.vectors.data(), n,
                                           out.values.data());
    if (info != 0) throw std::runtime_error("dsyevd failed");
    return out;
}

EigDecomp tridiag_eig(const Eigen::VectorXd& diag, const Eigen::VectorXd& sub) {
    const int n = static_cast<int>(diag.size());
    if (sub.size() != n - 1 && !(n == 1 && sub.size() == 0))
        throw std::invalid_argument("tridiag_eig size mismatch");
    EigDecomp out;
    if (n == 1) {
        out.values = diag;
        out.vectors = Eigen::MatrixXd::Ones(1, 1);
        return out;
    }
    if (n <= 64) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
        es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
        if (es.info() != Eigen::Success)
            throw std::runtime_error("tridiagonal eigensolver failed");
        return {es.eigenvalues(), es.eigenvectors()};
    }
    std::vector<double> d(diag.data(), diag.data() + n);
    std::vector<double> e(n, 0.0);
    for (int i = 0; i < n - 1; ++i) e[i] = sub(i);
    out.values.resize(n);
    out.vectors.resize(n, n);
    std::vector<lapack_int> isuppz(2 * static_cast<size_t>(n));
    lapack_int m = 0;
    lapack_logical tryrac = 1;
    const lapack_int info = LAPACKE_dstemr(
        LAPACK_COL_MAJOR, 'V', 'A', n, d.data(), e.data(), 0.0, 0.0, 0, 0, &m,
        out.values.data(), out.vectors.data(), n, n, isuppz.data(), &tryrac);
    if (info != 0 || m != n) throw std::runtime_error("dstemr failed");
    return out;
}

} // namespace kg
