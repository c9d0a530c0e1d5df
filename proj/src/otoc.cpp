#include "kg/otoc.hpp"

#include <cmath>
#include <stdexcept>

#include "kg/linalg.hpp"
#include "kg/rng.hpp"

namespace kg {

OtocSeries otoc_free(const Eigen::MatrixXd& h, int site_o, int site_q,
                     const Eigen::VectorXd& ts) {
    const int n = static_cast<int>(h.rows());
    if (site_o < 0 || site_o >= n || site_q < 0 || site_q >= n)
        throw std::invalid_argument("site out of range");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
    const Eigen::MatrixXd& u = es.eigenvectors();
    const Eigen::VectorXd& e = es.eigenvalues();

    Eigen::MatrixXcd rq = Eigen::MatrixXcd::Identity(n, n);
    rq(site_q, site_q) = -1.0;

    OtocSeries s;
    s.t = ts;
    s.f.resize(ts.size());
    s.c.resize(ts.size());
    s.err = Eigen::VectorXd::Zero(ts.size());
    const double norm = std::pow(2.0, n);
    for (int i = 0; i < ts.size(); ++i) {
        Eigen::VectorXcd mode(n);
        for (int a = 0; a < n; ++a)
            mode(a) = std::polar(1.0, e(a) * ts(i)) * u(site_o, a);
        Eigen::VectorXcd v = u.cast<cxd>() * mode; // e^{iht} e_o
        Eigen::MatrixXcd rv =
            Eigen::MatrixXcd::Identity(n, n) - 2.0 * v * v.adjoint();
        Eigen::MatrixXcd m = rv * rq * rv * rq;
        s.f(i) = (Eigen::MatrixXcd::Identity(n, n) + m).determinant() / norm;
        s.c(i) = 2.0 * (1.0 - s.f(i).real());
    }
    return s;
}

namespace {

struct SectorOps {
    Eigen::VectorXd e;
    Eigen::MatrixXd u;
    Eigen::VectorXd o, q; // reflection diagonals, entries +-1
};

std::vector<SectorOps> sector_ops(const Graph& g, const ManyBodyParams& p,
                                  int site_o, int site_q) {
    if (site_o < 0 || site_o >= g.n || site_q < 0 || site_q >= g.n)
        throw std::invalid_argument("site out of range");
    std::vector<SectorOps> secs;
    secs.reserve(g.n + 1);
    for (int k = 0; k <= g.n; ++k) {
        FockBasis basis = fock_basis(g.n, k);
        auto [e, v] = sym_eig(many_body_hamiltonian(g, p, basis));
        SectorOps so;
        so.e = std::move(e);
        so.u = std::move(v);
        so.o = 2.0 * number_diagonal(basis, site_o).array() - 1.0;
        so.q = 2.0 * number_diagonal(basis, site_q).array() - 1.0;
        secs.push_back(std::move(so));
    }
    return secs;
}

} // namespace

OtocSeries otoc_exact(const Graph& g, const ManyBodyParams& p, int site_o,
                      int site_q, const Eigen::VectorXd& ts) {
    auto secs = sector_ops(g, p, site_o, site_q);
    OtocSeries s;
    s.t = ts;
    s.f.resize(ts.size());
    s.c.resize(ts.size());
    s.err = Eigen::VectorXd::Zero(ts.size());
    const double norm = std::pow(2.0, g.n);

    std::vector<Eigen::MatrixXd> ot, qt;
    for (const auto& so : secs) {
        ot.push_back(so.u.transpose() * so.o.asDiagonal() * so.u);
        qt.push_back(so.u.transpose() * so.q.asDiagonal() * so.u);
    }
    for (int i = 0; i < ts.size(); ++i) {
        double tot = 0.0;
        for (size_t si = 0; si < secs.size(); ++si) {
            const int m = static_cast<int>(secs[si].e.size());
            Eigen::VectorXcd ph(m);
            for (int a = 0; a < m; ++a)
                ph(a) = std::polar(1.0, secs[si].e(a) * ts(i));
            Eigen::MatrixXcd a =
                ph.asDiagonal() * ot[si].cast<cxd>() * ph.conjugate().asDiagonal();
            Eigen::MatrixXcd gmat = a * qt[si].cast<cxd>();
            tot += gmat.cwiseProduct(gmat.transpose()).sum().real();
        }
        s.f(i) = tot / norm;
        s.c(i) = 2.0 * (1.0 - s.f(i).real());
    }
    return s;
}

OtocSeries otoc_typicality(const Graph& g, const ManyBodyParams& p, int site_o,
                           int site_q, const Eigen::VectorXd& ts, int samples,
                           uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("samples must be positive");
    auto secs = sector_ops(g, p, site_o, site_q);
    const double norm = std::pow(2.0, g.n);
    const int nt = static_cast<int>(ts.size());
    Eigen::MatrixXd draws(nt, samples);

    for (int v = 0; v < samples; ++v) {
        auto rng = make_rng(task_seed(seed, 0x0707, v, 0));
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::vector<Eigen::VectorXcd> blocks;
        for (const auto& so : secs) {
            Eigen::VectorXcd r(so.e.size());
            for (int a = 0; a < r.size(); ++a)
                r(a) = cxd(gauss(rng), gauss(rng)) / std::sqrt(2.0);
            blocks.push_back(std::move(r));
        }
        for (int i = 0; i < nt; ++i) {
            double acc = 0.0;
            for (size_t si = 0; si < secs.size(); ++si) {
                const auto& so = secs[si];
                const int m = static_cast<int>(so.e.size());
                Eigen::VectorXcd fwd(m), bwd(m);
                for (int a = 0; a < m; ++a) {
                    fwd(a) = std::polar(1.0, -so.e(a) * ts(i));
                    bwd(a) = std::conj(fwd(a));
                }
                const Eigen::MatrixXcd u = so.u.cast<cxd>();
                auto evolve = [&](const Eigen::VectorXcd& x,
                                  const Eigen::VectorXcd& phase) -> Eigen::VectorXcd {
                    return u * phase.cwiseProduct(u.adjoint() * x);
                };
                Eigen::VectorXcd x = so.q.cast<cxd>().cwiseProduct(blocks[si]);
                x = evolve(x, fwd);
                x = so.o.cast<cxd>().cwiseProduct(x);
                x = evolve(x, bwd);
                x = so.q.cast<cxd>().cwiseProduct(x);
                x = evolve(x, fwd);
                x = so.o.cast<cxd>().cwiseProduct(x);
                x = evolve(x, bwd);
                acc += blocks[si].dot(x).real();
            }
            draws(i, v) = acc / norm;
        }
    }

    OtocSeries s;
    s.t = ts;
    s.f.resize(nt);
    s.c.resize(nt);
    s.err.resize(nt);
    for (int i = 0; i < nt; ++i) {
        const double mean = draws.row(i).mean();
        double var = 0.0;
        for (int v = 0; v < samples; ++v)
            var += (draws(i, v) - mean) * (draws(i, v) - mean);
        s.f(i) = mean;
        s.c(i) = 2.0 * (1.0 - mean);
        s.err(i) = samples > 1 ? std::sqrt(var / (samples - 1) / samples) : 0.0;
    }
    return s;
}

double otoc_plateau_exact(const Graph& g, const ManyBodyParams& p, int site_o,
                          int site_q) {
    auto secs = sector_ops(g, p, site_o, site_q);
    double tot = 0.0;
    for (const auto& so : secs) {
        Eigen::MatrixXd ot = so.u.transpose() * so.o.asDiagonal() * so.u;
        Eigen::MatrixXd qt = so.u.transpose() * so.q.asDiagonal() * so.u;
        Eigen::VectorXd d_o = ot.diagonal(), d_q = qt.diagonal();
        const double t1 = d_o.transpose() * qt.cwiseAbs2() * d_o;
        const double t2 = d_q.transpose() * ot.cwiseAbs2() * d_q;
        const double t3 = (d_o.cwiseAbs2().cwiseProduct(d_q.cwiseAbs2())).sum();
        tot += t1 + t2 - t3;
    }
    return tot / std::pow(2.0, g.n);
}

LyapunovFit lyapunov_fit(const Eigen::VectorXd& ts, const Eigen::VectorXd& c,
                         double lo, double hi, double tmin, double tmax) {
    std::vector<double> t, y;
    for (int i = 0; i < ts.size(); ++i)
        if (ts(i) >= tmin && ts(i) <= tmax) {
            t.push_back(ts(i));
            y.push_back(c(i));
        }
    const int n = static_cast<int>(t.size());
    LyapunovFit fit;
    if (n < 8) return fit;

    const int tail = std::max(n / 4, 2);
    double plateau = 0.0;
    for (int i = n - tail; i < n; ++i) plateau += y[i];
    plateau /= tail;
    if (plateau <= 0.0) return fit;

    int run_a = 0, run_b = -1;
    for (int i = 0; i < n;) {
        if (y[i] < lo * plateau || y[i] > hi * plateau || y[i] <= 0.0) {
            ++i;
            continue;
        }
        int j = i;
        while (j + 1 < n && y[j + 1] >= lo * plateau && y[j + 1] <= hi * plateau &&
               y[j + 1] > 0.0)
            ++j;
        if (j - i > run_b - run_a) {
            run_a = i;
            run_b = j;
        }
        i = j + 1;
    }
    const int m = run_b - run_a + 1;
    if (m < 4) return fit;

    double xm = 0.0, ym = 0.0;
    for (int k = run_a; k <= run_b; ++k) {
        xm += t[k];
        ym += std::log(y[k]);
    }
    xm /= m;
    ym /= m;
    double sxx = 0.0, sxy = 0.0;
    for (int k = run_a; k <= run_b; ++k) {
        sxx += (t[k] - xm) * (t[k] - xm);
        sxy += (t[k] - xm) * (std::log(y[k]) - ym);
    }
    const double slope = sxy / sxx;
    if (slope <= 0.0) return fit;
    double ssr = 0.0;
    for (int k = run_a; k <= run_b; ++k) {
        const double r = std::log(y[k]) - (ym + slope * (t[k] - xm));
        ssr += r * r;
    }
    fit.lambda = slope;
    fit.stderr_ = std::sqrt(ssr / std::max(m - 2, 1) / sxx);
    fit.t0 = t[run_a];
    fit.t1 = t[run_b];
    fit.ok = true;
    return fit;
}

} // namespace kg
