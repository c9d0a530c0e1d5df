#pragma once
#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "kg/freeops.hpp"

namespace kg {

struct LanczosResult {
    Eigen::VectorXd b;          // off-diagonal coefficients b_1..b_{D-1}
    int dim = 0;                // Krylov dimension D
    double max_residual = 0.0;  // worst Gram-matrix deviation of the stored basis
    bool reliable = true;       // false when the orthogonality budget is exceeded
};

// Operator-space Lanczos with a zero diagonal recursion. The Liouvillian is
// anti-symmetric in the (A|B) inner product for Hermitian seeds, so only the
// b sequence survives; diag contributions are removed by the re-orth passes.
// apply: L(op);  inner: (a|b);  axpy: x += s*y;  scal: x *= s.
template <class Op>
struct LanczosSpace {
    std::function<Op(const Op&)> apply;
    std::function<cxd(const Op&, const Op&)> inner;
    std::function<void(Op&, cxd, const Op&)> axpy;
    std::function<void(Op&, double)> scal;
};

template <class Op>
struct LanczosRun {
    LanczosResult r;
    std::vector<Op> basis;
};

template <class Op>
LanczosRun<Op> lanczos(const Op& o0, const LanczosSpace<Op>& sp, double tol,
                       int max_dim, int reorth_passes = 2,
                       double ortho_budget = 1e-10) {
    LanczosRun<Op> run;
    Op q0 = o0;
    double n0 = std::sqrt(std::abs(sp.inner(q0, q0).real()));
    sp.scal(q0, 1.0 / n0);
    run.basis.push_back(std::move(q0));

    std::vector<double> bs;
    double b1 = -1.0;
    while (static_cast<int>(run.basis.size()) < max_dim) {
        Op a = sp.apply(run.basis.back());
        for (int pass = 0; pass < reorth_passes; ++pass)
            for (const Op& q : run.basis) sp.axpy(a, -sp.inner(q, a), q);
        double b = std::sqrt(std::max(sp.inner(a, a).real(), 0.0));
        if (b1 < 0) b1 = b;
        if (b1 == 0.0 || b <= tol * b1) break;
        bs.push_back(b);
        sp.scal(a, 1.0 / b);
        run.basis.push_back(std::move(a));
    }

    run.r.dim = static_cast<int>(run.basis.size());
    run.r.b = Eigen::Map<Eigen::VectorXd>(bs.data(), static_cast<long>(bs.size()));
    double worst = 0.0;
    for (size_t i = 0; i < run.basis.size(); ++i)
        for (size_t j = i; j < run.basis.size(); ++j) {
            double g = std::abs(sp.inner(run.basis[i], run.basis[j]) -
                                (i == j ? 1.0 : 0.0));
            worst = std::max(worst, g);
        }
    run.r.max_residual = worst;
    run.r.reliable = worst < ortho_budget;
    return run;
}

// Honest Lanczos on the quadratic backend; max_dim defaults to N^2 + 1.
LanczosRun<QuadraticOp> quad_lanczos(const Eigen::MatrixXd& h,
                                     const QuadraticOp& o0, double tol = 1e-8,
                                     int max_dim = -1, int reorth_passes = 2);

// Honest Lanczos in the diagonal representation of a spectral measure, where
// the Liouvillian is multiplication by omega and the seed is sqrt(weight).
LanczosResult lanczos_diag(const SpectralMeasure& sm, double tol = 1e-8,
                           int max_dim = -1);

// Jacobi-matrix reconstruction from (nodes, weights): the Gragg-Harrod update
// produces all D-1 coefficients in O(D^2) without an orthogonalization sweep.
LanczosResult jacobi_from_measure(const SpectralMeasure& sm);

} // namespace kg
