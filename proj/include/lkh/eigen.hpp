#pragma once

#include <vector>

#include "lkh/matrix.hpp"

namespace lkh {

inline constexpr double kLoewnerTol = 1e-9;
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kConditionRatio = 1e-10;
inline constexpr double kNegClampRel = 1e-12;
inline constexpr double kJacobiOffTol = 1e-14;
inline constexpr int kJacobiMaxSweeps = 100;

// Result of a Hermitian eigendecomposition A = U diag(eigenvalues) U^dagger.
// Eigenvalues are ascending; column k of eigenvectors pairs with
// eigenvalues[k]. Residual and unitarity are held to 1e-12 relative targets
// (see the eigensolver tests).
struct HermitianEigen {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

// Cyclic Jacobi eigensolver for Hermitian matrices. 2x2 unitary rotations
// annihilate off-diagonal pairs until the off-diagonal Frobenius mass drops
// below kJacobiOffTol * ||A||_F; at most kJacobiMaxSweeps sweeps.
//
// Unless `symmetrize` is set, inputs whose Hermitian deviation exceeds
// kHermitianTol * max(1, ||A||_F) are rejected with NonHermitianError.
// With `symmetrize` set the input is replaced by (A + A^dagger)/2 first.
HermitianEigen eig_hermitian(const ComplexMatrix& a, bool symmetrize = false);

double min_eigenvalue(const ComplexMatrix& a);
double max_eigenvalue(const ComplexMatrix& a);

enum class MatFn { inverse, log, sqrt, inverse_sqrt };

// Spectral matrix function U f(Lambda) U^dagger.
//
// inverse, log and inverse_sqrt require the smallest eigenvalue to be
// positive and above kConditionRatio times the largest (IllConditionedError
// otherwise). sqrt clamps eigenvalues in [-kNegClampRel*||a||_F, 0) to zero;
// eigenvalues below that band raise DomainError (for log too).
ComplexMatrix mat_fn(const ComplexMatrix& a, MatFn f);

struct LoewnerResult {
    bool leq;        // verdict of a <= b in the operator order, up to tol
    double gap;      // min eigenvalue of b - a
    double tol_abs;  // resolved absolute tolerance: tol * max(1, ||b-a||_F)
};

// Operator-order comparison: a <= b iff min_eig(b - a) >= -tol*max(1,||b-a||_F).
LoewnerResult loewner_leq(const ComplexMatrix& a, const ComplexMatrix& b, double tol = kLoewnerTol);

}  // namespace lkh
