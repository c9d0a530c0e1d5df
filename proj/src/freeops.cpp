#include "kg/freeops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kg {

Eigen::MatrixXd free_hamiltonian(const Graph& g, double j) {
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(g.n, g.n);
    for (auto [a, b] : g.edges) {
        h(a, b) += j;
        h(b, a) += j;
    }
    return h;
}

Eigen::MatrixXd free_hamiltonian_disordered(const Graph& g, double j, double w,
                                            std::mt19937_64& rng) {
    Eigen::MatrixXd h = free_hamiltonian(g, j);
    std::uniform_real_distribution<double> u(-0.5 * w, 0.5 * w);
    for (int i = 0; i < g.n; ++i) h(i, i) += u(rng);
    return h;
}

std::vector<double> quasiperiodic_potential(const Graph& g) {
    std::vector<double> v(g.n, 0.0);
    const double golden = 1.0 + std::sqrt(5.0);
    auto comps = connected_components(g);
    for (const auto& comp : comps) {
        int k = 1;
        for (int site : comp) {
            v[site] = 0.5 * std::cos(4.0 * M_PI * k / golden);
            ++k;
        }
    }
    return v;
}

QuadraticOp number_op(int n, int site) {
    QuadraticOp m = QuadraticOp::Zero(n, n);
    m(site, site) = 1.0;
    return m;
}

cxd quad_inner(const QuadraticOp& a, const QuadraticOp& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("quad_inner dimension mismatch");
    return 0.25 * ((a.conjugate().cwiseProduct(b)).sum() +
                   std::conj(a.trace()) * b.trace());
}

QuadraticOp quad_liouville(const Eigen::MatrixXd& h, const QuadraticOp& m) {
    if (h.rows() != m.rows())
        throw std::invalid_argument("quad_liouville dimension mismatch");
    return h * m - m * h;
}

SpectralMeasure group_pairs(std::vector<std::pair<double, double>>& pairs,
                            double group_tol, double drop_tol) {
    if (pairs.empty()) throw std::invalid_argument("empty spectral measure");
    std::sort(pairs.begin(), pairs.end());
    const double span = pairs.back().first - pairs.front().first;
    const double gap = group_tol * std::max(1.0, span);

    std::vector<double> om, wt;
    double total = 0.0;
    size_t i = 0;
    while (i < pairs.size()) {
        size_t k = i + 1;
        double wsum = pairs[i].second;
        double xw = pairs[i].first * pairs[i].second;
        while (k < pairs.size() && pairs[k].first - pairs[k - 1].first <= gap) {
            wsum += pairs[k].second;
            xw += pairs[k].first * pairs[k].second;
            ++k;
        }
        if (wsum > 0) {
            om.push_back(xw / wsum);
            wt.push_back(wsum);
            total += wsum;
        }
        i = k;
    }
    if (total <= 0) throw std::runtime_error("spectral measure has no weight");

    SpectralMeasure out;
    for (size_t t = 0; t < om.size(); ++t)
        if (wt[t] / total > drop_tol) {
            out.omega.push_back(om[t]);
            out.weight.push_back(wt[t]);
        }
    double s = 0.0;
    for (double w : out.weight) s += w;
    for (double& w : out.weight) w /= s;
    return out;
}

SpectralMeasure spectral_measure(const Eigen::MatrixXd& h, int site,
                                 double group_tol, double drop_tol) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
    const Eigen::VectorXd e = es.eigenvalues();
    const Eigen::VectorXd q = es.eigenvectors().row(site).transpose().cwiseAbs2();
    const int n = static_cast<int>(e.size());

    std::vector<std::pair<double, double>> pairs;
    pairs.reserve(static_cast<size_t>(n) * n + 1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) pairs.emplace_back(e(a) - e(b), q(a) * q(b));
    pairs.emplace_back(0.0, 1.0); // trace channel of n_site
    return group_pairs(pairs, group_tol, drop_tol);
}

} // namespace kg
