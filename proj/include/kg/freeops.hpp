#pragma once
#include <Eigen/Dense>
#include <complex>
#include <random>
#include <vector>

#include "kg/graphs.hpp"

namespace kg {

using cxd = std::complex<double>;

// Single-particle hopping matrix h: h_ij = J on edges, site energies on the
// diagonal when disorder is present. w is the box width: energies are drawn
// uniformly from [-w/2, w/2].
Eigen::MatrixXd free_hamiltonian(const Graph& g, double j = 1.0);
Eigen::MatrixXd free_hamiltonian_disordered(const Graph& g, double j, double w,
                                            std::mt19937_64& rng);

// Deterministic incommensurate site energies 0.5 cos(4 pi k / (1 + sqrt 5)),
// k = 1..len, restarting on each cycle of a disjoint-cycle graph. They lift
// the arithmetic eigenvalue collisions of clean cycles while keeping every
// cycle of a given length identical, so per-length results are cacheable.
std::vector<double> quasiperiodic_potential(const Graph& g);

// Operators in the span of a†_i a_j are stored by their coefficient matrix.
// Commutation with a quadratic Hamiltonian closes on this span, which keeps
// every Lanczos vector at N^2 numbers instead of 4^N.
using QuadraticOp = Eigen::MatrixXcd;

QuadraticOp number_op(int n, int site);

// (A|B) = Tr[A†B]/2^N in closed form:
// (1/4)(sum_ij conj(a_ij) b_ij + conj(tr a) tr b).
cxd quad_inner(const QuadraticOp& a, const QuadraticOp& b);

// Coefficient matrix of [H, O], the plain matrix commutator h m - m h.
QuadraticOp quad_liouville(const Eigen::MatrixXd& h, const QuadraticOp& m);

// Spectral content of the Liouvillian acting on n_site: frequencies E_a - E_b
// carry weight q_a q_b with q_a = |U_{site,a}|^2, and the operator's nonzero
// trace adds weight 1 at omega = 0. Weights are normalized to sum to 1.
struct SpectralMeasure {
    std::vector<double> omega;
    std::vector<double> weight;
    int dim() const { return static_cast<int>(omega.size()); }
};

SpectralMeasure spectral_measure(const Eigen::MatrixXd& h, int site,
                                 double group_tol = 1e-9, double drop_tol = 1e-14);

// Shared grouping step: sort (frequency, weight) pairs, merge frequencies
// closer than group_tol * span, drop relative weight below drop_tol, normalize.
SpectralMeasure group_pairs(std::vector<std::pair<double, double>>& pairs,
                            double group_tol, double drop_tol);

} // namespace kg
