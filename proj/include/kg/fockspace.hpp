#pragma once
#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "kg/freeops.hpp"
#include "kg/graphs.hpp"
#include "kg/lanczos.hpp"

namespace kg {

// Occupation-number basis. Site i maps to bit i; words are listed in
// ascending order. k = -1 selects the full 2^N space, otherwise the
// fixed-particle-number sector.
struct FockBasis {
    int n = 0;
    int k = -1;
    std::vector<uint32_t> states;
    std::vector<int32_t> index; // word -> position, -1 outside the sector

    int dim() const { return static_cast<int>(states.size()); }
};

FockBasis fock_basis(int n, int k = -1);

struct ManyBodyParams {
    double j = 1.0;
    bool interacting = false;          // adds j * n_i n_j on every edge
    std::vector<double> onsite;        // optional site energies
};

// Dense matrix of sum_edges J(a†_i a_j + a†_j a_i) [+ J n_i n_j] [+ w_i n_i]
// over the given basis. Hopping signs follow the fixed site ordering: the
// parity of occupied sites strictly between the two endpoints.
Eigen::MatrixXd many_body_hamiltonian(const Graph& g, const ManyBodyParams& p,
                                      const FockBasis& basis);

// Diagonal of n_site over the basis (0/1 per word).
Eigen::VectorXd number_diagonal(const FockBasis& basis, int site);

// e^{-iHt} psi0 via full eigendecomposition of H.
Eigen::VectorXcd evolve_state(const Eigen::MatrixXd& h, const Eigen::VectorXcd& psi0,
                              double t);

// Spectral content of the Liouvillian on n_site for a many-body Hamiltonian,
// assembled sector by sector: frequencies E_m - E_n inside each sector with
// weights |O_mn|^2 in the eigenbasis. Number conservation keeps n_site
// block-diagonal, so cross-sector frequencies never appear.
SpectralMeasure many_body_spectral_measure(const Graph& g, const ManyBodyParams& p,
                                           int site, double group_tol = 1e-9,
                                           double drop_tol = 1e-14);

// Honest full-space Lanczos on dense Fock operators with (A|B) = Tr[A†B]/2^N,
// used as the cross-backend oracle at small N.
LanczosRun<Eigen::MatrixXcd> fock_lanczos(const Eigen::MatrixXd& h,
                                          const Eigen::MatrixXcd& o0, int n_sites,
                                          double tol = 1e-8, int max_dim = -1,
                                          int reorth_passes = 2);

// Upper bound sum_k binomial(N,k)^2 on the Krylov dimension of a
// number-conserving operator.
double sector_dimension_bound(int n);

} // namespace kg
