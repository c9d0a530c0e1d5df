#include "doctest.h"

#include <cmath>

#include "kg/krylov.hpp"
#include "kg/otoc.hpp"
#include "kg/rng.hpp"

using namespace kg;

TEST_CASE("correlator starts at one and respects the unitarity bound") {
    auto rng = make_rng(53);
    Graph g = sample_regular(8, 3, rng);
    Eigen::VectorXd ts = log_grid(0.1, 100.0, 24);
    Eigen::VectorXd ts0(1 + ts.size());
    ts0 << 0.0, ts;
    OtocSeries s = otoc_free(free_hamiltonian(g), 0, 3, ts0);
    CHECK(std::abs(s.f(0) - cxd(1.0, 0.0)) < 1e-10);
    CHECK(s.c(0) == doctest::Approx(0.0).epsilon(1e-10));
    for (int i = 0; i < s.f.size(); ++i) CHECK(std::abs(s.f(i)) <= 1.0 + 1e-9);
}

TEST_CASE("operators on different cycles never develop a commutator") {
    Graph g = cycles_from_partition(6, {3, 3});
    Eigen::VectorXd ts = lin_grid(0.0, 20.0, 15);
    OtocSeries free_s = otoc_free(free_hamiltonian(g), 0, 3, ts);
    for (int i = 0; i < ts.size(); ++i) CHECK(free_s.c(i) < 1e-10);

    ManyBodyParams p;
    p.interacting = true;
    OtocSeries int_s = otoc_exact(g, p, 0, 3, ts);
    for (int i = 0; i < ts.size(); ++i) CHECK(int_s.c(i) < 1e-10);
}

TEST_CASE("determinant route matches the full trace for free evolution") {
    for (int trial = 0; trial < 3; ++trial) {
        auto rng = make_rng(60 + trial);
        Graph g = trial == 0 ? cycles_from_partition(6, {6})
                             : sample_regular(8, 3, rng);
        ManyBodyParams p; // free
        Eigen::VectorXd ts = lin_grid(0.2, 12.0, 10);
        OtocSeries a = otoc_free(free_hamiltonian(g), 0, g.n / 2 - 1, ts);
        OtocSeries b = otoc_exact(g, p, 0, g.n / 2 - 1, ts);
        CHECK((a.f - b.f).cwiseAbs().maxCoeff() < 1e-8);
    }
}

TEST_CASE("random-vector trace estimate brackets the exact one") {
    auto rng = make_rng(77);
    Graph g = sample_regular(6, 3, rng);
    ManyBodyParams p;
    p.interacting = true;
    Eigen::VectorXd ts = lin_grid(0.5, 10.0, 8);
    OtocSeries ex = otoc_exact(g, p, 0, 2, ts);
    OtocSeries ty = otoc_typicality(g, p, 0, 2, ts, 200, 99);
    for (int i = 0; i < ts.size(); ++i) {
        CHECK(ty.err(i) > 0.0);
        CHECK(std::abs(ty.f(i).real() - ex.f(i).real()) <
              3.0 * ty.err(i) + 1e-10);
    }
}

TEST_CASE("dephased average sits on the late-time curve") {
    auto rng = make_rng(81);
    Graph g = sample_regular(8, 3, rng);
    ManyBodyParams p;
    p.interacting = true;
    double plat = otoc_plateau_exact(g, p, 0, 3);
    Eigen::VectorXd late = lin_grid(80.0, 400.0, 60);
    OtocSeries s = otoc_exact(g, p, 0, 3, late);
    CHECK(std::abs(s.f.real().mean() - plat) < 0.03);
    CHECK(std::abs(plat) < 1.0);
}

TEST_CASE("growth-rate fit on synthetic curves") {
    Eigen::VectorXd ts = lin_grid(0.1, 10.0, 60);
    Eigen::VectorXd c(60), flat(60);
    for (int i = 0; i < 60; ++i) {
        c(i) = 3.0 * std::exp(0.5 * ts(i));
        flat(i) = 2.0;
    }
    LyapunovFit f = lyapunov_fit(ts, c);
    CHECK(f.ok);
    CHECK(f.lambda == doctest::Approx(0.5).epsilon(1e-6));
    LyapunovFit g = lyapunov_fit(ts, flat);
    CHECK(!g.ok);
    CHECK(g.lambda == 0.0);

    // saturating growth: the window stays between the fixed plateau
    // fractions instead of sliding onto the steep early segment
    Eigen::VectorXd sat(60);
    for (int i = 0; i < 60; ++i)
        sat(i) = 2.0 * (1.0 - 1.0 / (1.0 + 0.02 * std::exp(0.4 * ts(i))));
    LyapunovFit s = lyapunov_fit(ts, sat);
    CHECK(s.ok);
    CHECK(s.lambda == doctest::Approx(0.3337).epsilon(1e-3));
    CHECK(s.t0 > 1.0);
}
