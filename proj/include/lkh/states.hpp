#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lkh/matrix.hpp"
#include "lkh/tensor.hpp"

namespace lkh {

// Eigenvalues at or below kRankTol times the largest are treated as zero for
// Schmidt rank, purification rank and kernel discarding.
inline constexpr double kRankTol = 1e-12;

// Minimum smallest eigenvalue (1e-6 / dim) enforced by the invertibility
// filter of the random generators.
inline constexpr double kInvertibilityFloor = 1e-6;

// Unit vector on a multipartite space. The constructor enforces unit norm
// within 1e-12; use `normalized` to build from unnormalized amplitudes.
class StateVector {
public:
    StateVector(std::vector<Complex> amplitudes, MultiSystem sys);
    static StateVector normalized(std::vector<Complex> amplitudes, MultiSystem sys);

    const std::vector<Complex>& vec() const { return vec_; }
    const MultiSystem& sys() const { return sys_; }
    std::size_t dim() const { return vec_.size(); }

private:
    std::vector<Complex> vec_;
    MultiSystem sys_;
};

// PSD, unit-trace operator tagged with its tensor structure.
//
// `create` checks the invariants (Hermitian within 1e-12*||m||_F, trace 1
// within 1e-12, smallest eigenvalue >= -1e-11); `trusted` skips the
// eigensolve and is reserved for constructions that guarantee them (partial
// traces of valid states, normalized Gram matrices, pure projectors).
class DensityMatrix {
public:
    static DensityMatrix create(ComplexMatrix mat, MultiSystem sys);
    static DensityMatrix trusted(ComplexMatrix mat, MultiSystem sys);

    const ComplexMatrix& mat() const { return mat_; }
    const MultiSystem& sys() const { return sys_; }
    std::size_t dim() const { return mat_.rows(); }

    // Partial trace over `out`, retagged with the surviving factors.
    DensityMatrix reduce(const SubsystemSet& out) const;

private:
    DensityMatrix(ComplexMatrix mat, MultiSystem sys) : mat_(std::move(mat)), sys_(std::move(sys)) {}
    ComplexMatrix mat_;
    MultiSystem sys_;
};

// rho = G G^dagger / Tr with G an n-by-rank matrix of i.i.d. complex
// Gaussians; deterministic per (sys, rank, seed).
DensityMatrix random_density(const MultiSystem& sys, std::size_t rank, std::uint64_t seed);

// Full-rank random_density filtered to min eigenvalue >= 1e-6/n; regenerates
// on substreams, at most 100 attempts.
DensityMatrix random_invertible_density(const MultiSystem& sys, std::uint64_t seed);

// Normalized i.i.d. complex Gaussian vector; deterministic per (sys, seed).
StateVector random_pure(const MultiSystem& sys, std::uint64_t seed);

// |psi><psi| as a density matrix.
DensityMatrix pure_density(const StateVector& psi);

// Tr_out |psi><psi| computed directly from the amplitudes (the big outer
// product is never formed).
DensityMatrix reduced_density(const StateVector& psi, const SubsystemSet& out);

// Bi-orthogonal decomposition phi = sum_j coeffs[j]^(1/2) u_j (x) v_j across
// the cut; coeffs descending, left/right hold u_j / v_j as columns.
struct SchmidtDecomposition {
    std::vector<double> coeffs;
    ComplexMatrix left;
    ComplexMatrix right;
    std::size_t rank = 0;
};

// `cut` splits the factors into [0, cut) and [cut, k). Computed through the
// eigendecomposition of C C^dagger for the reshaped coefficient matrix C.
SchmidtDecomposition schmidt_decompose(const StateVector& phi, std::size_t cut);

// sum_j coeffs[j]^(1/2) u_j (x) v_j as a flat vector.
std::vector<Complex> schmidt_reconstruct(const SchmidtDecomposition& sd);

// Nonzero spectra of the two reduced states of |phi><phi| across the cut,
// each sorted descending and truncated at the rank threshold. The two lists
// agree elementwise for every unit vector.
std::pair<std::vector<double>, std::vector<double>> reduced_spectra(const StateVector& phi,
                                                                    std::size_t cut);

// Pure state on sys (x) ancilla whose partial trace over the ancilla is rho.
// Requires ancilla_dim >= numerical rank of rho (AncillaTooSmallError).
StateVector purify(const DensityMatrix& rho, std::size_t ancilla_dim);

// Entropies on the 4-party purification of a tripartite state. s123 = s4 and
// s23 = s14 hold within 1e-9.
struct PurificationEntropies {
    double s123;
    double s4;
    double s23;
    double s14;
};
PurificationEntropies entropy_of_purification_identities(const DensityMatrix& rho123);

}  // namespace lkh
