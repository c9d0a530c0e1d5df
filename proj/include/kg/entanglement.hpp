#pragma once
#include <Eigen/Dense>

#include "kg/fockspace.hpp"
#include "kg/freeops.hpp"

namespace kg {

// Half-filled domain-wall start: first N/2 sites occupied.
Eigen::MatrixXcd initial_correlation(int n);

// c(t) = P c0 P† with the single-particle propagator P = e^{-iht}; eigenmode
// occupations are stationary and the trace is conserved.
Eigen::MatrixXcd evolve_correlation(const Eigen::MatrixXd& h,
                                    const Eigen::MatrixXcd& c0, double t);

// S(l) from the eigenvalues Z_m of the leading l x l block of c, via
// -sum (1-Z)ln(1-Z) + Z ln Z. Values outside [0,1] by more than health_tol
// raise; inside they are clamped.
double free_entropy(const Eigen::MatrixXcd& c, int l, double health_tol = 1e-9);

// Entropy of sites 0..l-1 for a state over the given basis, via the Schmidt
// decomposition across the contiguous cut (low bits left, high bits right).
double many_body_entropy(const Eigen::VectorXcd& psi, int l, const FockBasis& basis);

// S(N/2)(t) for the free chain started from the domain wall.
Eigen::VectorXd free_entropy_series(const Eigen::MatrixXd& h,
                                    const Eigen::VectorXd& ts);

// S(N/2)(t) for the many-body evolution from the domain-wall product state,
// restricted to the half-filling sector.
Eigen::VectorXd many_body_entropy_series(const Graph& g, const ManyBodyParams& p,
                                         const Eigen::VectorXd& ts);

} // namespace kg
