#include "doctest.h"

#include <cmath>
#include <complex>

#include "kg/freeops.hpp"
#include "kg/krylov.hpp"
#include "kg/lanczos.hpp"
#include "kg/rng.hpp"

using namespace kg;
using std::sqrt;

TEST_CASE("operator inner product closed form") {
    QuadraticOp n1 = number_op(4, 0), n2 = number_op(4, 1);
    CHECK(quad_inner(n1, n1).real() == doctest::Approx(0.5));
    CHECK(quad_inner(n1, n2).real() == doctest::Approx(0.25));
    QuadraticOp hop = QuadraticOp::Zero(4, 4);
    hop(0, 1) = 1.0;
    CHECK(quad_inner(hop, hop).real() == doctest::Approx(0.25));
    CHECK(std::abs(quad_inner(n1, hop)) == doctest::Approx(0.0));
}

TEST_CASE("commutation map is self-adjoint in the operator inner product") {
    auto rng = make_rng(23);
    std::normal_distribution<double> g;
    const int n = 5;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) h(i, j) = h(j, i) = g(rng);
    for (int rep = 0; rep < 10; ++rep) {
        QuadraticOp a(n, n), b(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                a(i, j) = cxd(g(rng), g(rng));
                b(i, j) = cxd(g(rng), g(rng));
            }
        cxd lhs = quad_inner(quad_liouville(h, a), b);
        cxd rhs = quad_inner(a, quad_liouville(h, b));
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("triangle recursion coefficients") {
    Graph tri = cycles_from_partition(3, {3});
    Eigen::MatrixXd h = free_hamiltonian(tri);
    auto run = quad_lanczos(h, number_op(3, 0));
    REQUIRE(run.r.dim == 3);
    CHECK(run.r.b(0) == doctest::Approx(sqrt(2.0)).epsilon(1e-12));
    CHECK(run.r.b(1) == doctest::Approx(sqrt(7.0)).epsilon(1e-12));
    CHECK(run.r.reliable);
    CHECK(run.r.max_residual < 1e-10);

    SpectralMeasure sm = spectral_measure(h, 0);
    REQUIRE(sm.dim() == 3);
    auto gh = jacobi_from_measure(sm);
    CHECK((gh.b - run.r.b).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("cycle dimensions, clean and with incommensurate potential") {
    const int clean[] = {3, 5, 7, 9, 21, 21};
    const int ls[] = {3, 4, 5, 6, 9, 12};
    for (int i = 0; i < 6; ++i) {
        int l = ls[i];
        Graph ring = cycles_from_partition(l, {l});
        Eigen::MatrixXd h = free_hamiltonian(ring);
        CHECK(spectral_measure(h, 0).dim() == clean[i]);
        auto pot = quasiperiodic_potential(ring);
        for (int k = 0; k < l; ++k) h(k, k) += pot[k];
        CHECK(spectral_measure(h, 0).dim() == l * l - l + 1);
    }
}

TEST_CASE("matrix recursion agrees with the reconstructed one") {
    for (int l : {4, 5, 6, 9}) {
        Graph ring = cycles_from_partition(l, {l});
        Eigen::MatrixXd h = free_hamiltonian(ring);
        auto pot = quasiperiodic_potential(ring);
        for (int k = 0; k < l; ++k) h(k, k) += pot[k];
        auto honest = quad_lanczos(h, number_op(l, 0));
        auto gh = jacobi_from_measure(spectral_measure(h, 0));
        REQUIRE(honest.r.dim == gh.dim);
        CHECK((honest.r.b - gh.b).cwiseAbs().maxCoeff() < 1e-8);
        CHECK(honest.r.max_residual < 1e-10);
    }
}

TEST_CASE("disordered cycle saturates the gap count") {
    Graph ring = cycles_from_partition(6, {6});
    auto rng = make_rng(11);
    Eigen::MatrixXd h = free_hamiltonian_disordered(ring, 1.0, 0.5, rng);
    CHECK(spectral_measure(h, 0).dim() == 31);
}

TEST_CASE("trace channel keeps a zero-frequency component") {
    Graph ring = cycles_from_partition(4, {4});
    SpectralMeasure sm = spectral_measure(free_hamiltonian(ring), 0);
    double w0 = 0.0, tot = 0.0;
    for (int i = 0; i < sm.dim(); ++i) {
        if (std::abs(sm.omega[i]) < 1e-12) w0 += sm.weight[i];
        tot += sm.weight[i];
    }
    CHECK(tot == doctest::Approx(1.0));
    CHECK(w0 > 0.0);
}

TEST_CASE("two-level complexity is an exact sine squared") {
    Eigen::VectorXd b(1);
    b << 1.0;
    Eigen::VectorXd ts = lin_grid(0.0, 6.0, 40);
    KrylovSeries s = complexity_series(b, ts);
    for (int i = 0; i < ts.size(); ++i) {
        double expect = std::sin(ts(i)) * std::sin(ts(i));
        CHECK(std::abs(s.c(i) - expect) < 1e-10);
    }
    CHECK(s.max_norm_err < 1e-8);
    CHECK(complexity_time_average(b) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("infinite-time average matches a long time average") {
    Graph ring = cycles_from_partition(5, {5});
    Eigen::MatrixXd h = free_hamiltonian(ring);
    auto pot = quasiperiodic_potential(ring);
    for (int k = 0; k < 5; ++k) h(k, k) += pot[k];
    auto gh = jacobi_from_measure(spectral_measure(h, 0));
    double exact = complexity_time_average(gh.b);
    Eigen::VectorXd ts = lin_grid(500.0, 4000.0, 2000);
    KrylovSeries s = complexity_series(gh.b, ts);
    CHECK(std::abs(s.c.mean() - exact) < 0.05 * exact);
}

TEST_CASE("plateau detector") {
    Eigen::VectorXd ts = log_grid(0.1, 1000.0, 200);
    KrylovSeries s;
    s.t = ts;
    s.c = Eigen::VectorXd::Constant(200, 3.25);
    PlateauResult p = plateau_average(s);
    CHECK(p.found);
    CHECK(p.value == doctest::Approx(3.25));

    // the trailing window reaches back into the shoulder, so the mean sits
    // a little under the asymptote; the drift budget is 2% per decade
    for (int i = 0; i < 200; ++i) s.c(i) = 2.0 * (1.0 - std::exp(-ts(i)));
    p = plateau_average(s);
    CHECK(p.found);
    CHECK(p.value == doctest::Approx(2.0).epsilon(0.02));
    CHECK(p.value < 2.0 + 1e-12);
}

TEST_CASE("evolution of the recursion wavefunction stays normalized") {
    auto rng = make_rng(2);
    std::uniform_real_distribution<double> u(0.5, 2.0);
    Eigen::VectorXd b(12);
    for (int i = 0; i < 12; ++i) b(i) = u(rng);
    for (double t : {0.0, 0.7, 3.1, 20.0}) {
        Eigen::VectorXcd phi = evolve_phi(b, t);
        CHECK(std::abs(phi.squaredNorm() - 1.0) < 1e-10);
    }
    CHECK(std::abs(evolve_phi(b, 0.0)(0) - cxd(1.0, 0.0)) < 1e-12);
}
