#include "kg/fockspace.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "kg/linalg.hpp"

namespace kg {

FockBasis fock_basis(int n, int k) {
    if (n < 1 || n > 28) throw std::invalid_argument("site count out of range");
    if (k > n) throw std::invalid_argument("particle number exceeds sites");
    FockBasis b;
    b.n = n;
    b.k = k;
    const uint32_t total = 1u << n;
    b.index.assign(total, -1);
    for (uint32_t w = 0; w < total; ++w)
        if (k < 0 || std::popcount(w) == k) {
            b.index[w] = static_cast<int32_t>(b.states.size());
            b.states.push_back(w);
        }
    return b;
}

namespace {

// parity of occupied sites strictly between the endpoints
inline int hop_sign(uint32_t word, int i, int j) {
    const int lo = std::min(i, j), hi = std::max(i, j);
    const uint32_t between = ((1u << hi) - 1u) & ~((1u << (lo + 1)) - 1u);
    return (std::popcount(word & between) & 1) ? -1 : 1;
}

} // namespace

Eigen::MatrixXd many_body_hamiltonian(const Graph& g, const ManyBodyParams& p,
                                      const FockBasis& basis) {
    if (basis.n != g.n) throw std::invalid_argument("basis/graph size mismatch");
    if (!p.onsite.empty() && static_cast<int>(p.onsite.size()) != g.n)
        throw std::invalid_argument("onsite field size mismatch");
    const int d = basis.dim();
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
    for (int s = 0; s < d; ++s) {
        const uint32_t w = basis.states[s];
        double diag = 0.0;
        for (auto [a, b] : g.edges) {
            const bool na = (w >> a) & 1u, nb = (w >> b) & 1u;
            if (p.interacting && na && nb) diag += p.j;
            if (na != nb) {
                const uint32_t w2 = w ^ (1u << a) ^ (1u << b);
                const int32_t s2 = basis.index[w2];
                if (s2 >= 0) h(s2, s) += p.j * hop_sign(w, a, b);
            }
        }
        if (!p.onsite.empty())
            for (int i = 0; i < g.n; ++i)
                if ((w >> i) & 1u) diag += p.onsite[i];
        h(s, s) += diag;
    }
    return h;
}

Eigen::VectorXd number_diagonal(const FockBasis& basis, int site) {
    if (site < 0 || site >= basis.n) throw std::invalid_argument("bad site");
    Eigen::VectorXd d(basis.dim());
    for (int s = 0; s < basis.dim(); ++s)
        d(s) = (basis.states[s] >> site) & 1u;
    return d;
}

Eigen::VectorXcd evolve_state(const Eigen::MatrixXd& h, const Eigen::VectorXcd& psi0,
                              double t) {
    auto [e, v] = sym_eig(h);
    Eigen::VectorXcd c = v.transpose().cast<cxd>() * psi0;
    for (int i = 0; i < c.size(); ++i) c(i) *= std::polar(1.0, -e(i) * t);
    return v.cast<cxd>() * c;
}

SpectralMeasure many_body_spectral_measure(const Graph& g, const ManyBodyParams& p,
                                           int site, double group_tol,
                                           double drop_tol) {
    std::vector<std::pair<double, double>> pairs;
    for (int k = 0; k <= g.n; ++k) {
        FockBasis basis = fock_basis(g.n, k);
        auto [e, v] = sym_eig(many_body_hamiltonian(g, p, basis));
        const Eigen::VectorXd o = number_diagonal(basis, site);
        // O restricted to the sector, rotated into the eigenbasis
        Eigen::MatrixXd ot = v.transpose() * o.asDiagonal() * v;
        const int m = basis.dim();
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                const double w = ot(a, b) * ot(a, b);
                if (w > 0) pairs.emplace_back(e(a) - e(b), w);
            }
    }
    return group_pairs(pairs, group_tol, drop_tol);
}

LanczosRun<Eigen::MatrixXcd> fock_lanczos(const Eigen::MatrixXd& h,
                                          const Eigen::MatrixXcd& o0, int n_sites,
                                          double tol, int max_dim,
                                          int reorth_passes) {
    const double norm = std::pow(2.0, n_sites);
    if (max_dim < 0) {
        double bound = sector_dimension_bound(n_sites);
        max_dim = static_cast<int>(std::min(bound, 1e6)) + 1;
    }
    LanczosSpace<Eigen::MatrixXcd> sp;
    sp.apply = [&h](const Eigen::MatrixXcd& a) -> Eigen::MatrixXcd {
        return h * a - a * h;
    };
    sp.inner = [norm](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
        return (a.conjugate().cwiseProduct(b)).sum() / norm;
    };
    sp.axpy = [](Eigen::MatrixXcd& x, cxd s, const Eigen::MatrixXcd& y) {
        x += s * y;
    };
    sp.scal = [](Eigen::MatrixXcd& x, double s) { x *= s; };
    return lanczos(o0, sp, tol, max_dim, reorth_passes);
}

double sector_dimension_bound(int n) {
    double total = 0.0;
    double c = 1.0; // binomial(n, 0)
    for (int k = 0; k <= n; ++k) {
        total += c * c;
        c = c * (n - k) / (k + 1);
    }
    return total;
}

} // namespace kg
