#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "lkh/eigen.hpp"
#include "lkh/states.hpp"

namespace lkh {

// Agreement tolerance between two independent evaluation routes of the same
// scalar (entropy gap vs. trace form, direct vs. purified).
inline constexpr double kRouteAgreementTol = 1e-8;

// An instance of the operator inequality: rho12 on (d1, d2), sigma23 on
// (d2, d3) with the shared middle dimension matching. rho12 must be
// invertible (min eigenvalue > 1e-6 / (d1*d2)) for the checks that invert it.
struct LkhInstance {
    DensityMatrix rho12;
    DensityMatrix sigma23;

    std::size_t d1() const { return rho12.sys().dim(0); }
    std::size_t d2() const { return rho12.sys().dim(1); }
    std::size_t d3() const { return sigma23.sys().dim(1); }
};

LkhInstance make_lkh_instance(DensityMatrix rho12, DensityMatrix sigma23);

// Deterministic random instance with both states passed through the
// invertibility filter.
LkhInstance random_lkh_instance(std::size_t d1, std::size_t d2, std::size_t d3, std::uint64_t seed);

// Pure-pair instance for the perturbation lemma: psi on (d1, d2), phi on
// (d2, d3) with sigma3 = Tr_2 |phi><phi| invertible (needs d2 >= d3).
struct LemmaInstance {
    StateVector psi;
    StateVector phi;
    double epsilon;
};

LemmaInstance random_lemma_instance(std::size_t d1, std::size_t d2, std::size_t d3, double epsilon,
                                    std::uint64_t seed);

// Outcome of one operator-order check plus named scalar diagnostics.
// verdict <=> min_eig_gap >= -relative_tol.
struct GapReport {
    double min_eig_gap = 0.0;
    double relative_tol = 0.0;
    bool verdict = false;
    std::map<std::string, double> diagnostics;
};

// rho1^{-1} (x) sigma23 <= rho12^{-1} (x) sigma3 on the canonical triple
// space; gap and verdict from loewner_leq at the given relative tolerance.
GapReport check_lkh_operator(const LkhInstance& inst, double tol = kLoewnerTol);

// log rho12 + log sigma23 - log rho1 - log sigma3 <= 0 (each factor embedded
// on the triple space); verdict uses an absolute tolerance on the largest
// eigenvalue. Requires all four operators invertible.
GapReport check_lkh_log(const LkhInstance& inst, double tol = 1e-9);

// -Tr[rho123 (log rho12 + log rho23 - log rho1 - log rho3)]. Equals
// lkh3_gap(rho123) within kRouteAgreementTol on well-conditioned states;
// near-singular reductions are first mixed with eta * I/n (eta = 1e-6),
// which perturbs the value by O(eta ln eta).
double lkh3_from_trace(const DensityMatrix& rho123);

// Strong-subadditivity slack computed twice: directly, and as the
// two-marginal form on the 4-party purification.
struct SsaReduction {
    double direct;
    double via_purification;
};
SsaReduction reduce_ssa_to_lkh3(const DensityMatrix& rho123);

// X23(eps) = |phi><phi| + eps * (I - |phi><phi|); spectrum {1, eps, ..., eps}.
ComplexMatrix lemma_construct_x23(const StateVector& phi, double epsilon);

// Closed-form sufficiency threshold eps* = (mu / (2 d2 d3^2))^2 under which
// the (1 + sqrt(eps)) bound is guaranteed.
double lemma_epsilon_star(double mu, std::size_t d2, std::size_t d3);

// Raw evaluation of rho12 (x) sigma3^{-1} <= factor * rho1 (x) X23(eps)^{-1}
// with no epsilon guard; used by sweeps and the necessity probe.
GapReport lemma_bound_eval(const LemmaInstance& inst, double tol, double factor);

// Guarded form: rejects epsilon > eps* with EpsilonTooLargeError, then checks
// the bound with factor 1 + sqrt(epsilon).
GapReport lemma_bound_check(const LemmaInstance& inst, double tol = kLoewnerTol);

// Diagnostics of the quadratic-form argument behind the lemma: the Gram
// matrix M of the two Schmidt families, and both sides of the single-block
// estimate <w1 (x) phi, A w1 (x) phi> <= <w1, rho1 w1>. delta only enters the
// reported split coefficients.
std::map<std::string, double> lemma_internals(const LemmaInstance& inst,
                                              const std::vector<Complex>& w1, double delta);

// Linearity of the inequality in sigma23: the mixed-instance difference
// operator equals the eigenvalue-weighted sum of pure-instance differences.
// min_eig_gap carries -max entrywise deviation.
GapReport pure_to_mixed_extension_check(const DensityMatrix& sigma23_mixed,
                                        const DensityMatrix& rho12, double tol);

// rho12 extended to (d1, d2_tilde) as rho12 + eps * id1 (x) P with P the
// projection onto the added directions of the enlarged middle space; positive
// and invertible for eps > 0. Not trace-normalized.
ComplexMatrix embed_and_regularize(const DensityMatrix& rho12, std::size_t d2_tilde, double epsilon);

// Gap of the enlarged-space inequality compressed back to the original triple
// space; decreases monotonically to the direct gap as epsilon -> 0.
double regularized_restricted_gap(const LkhInstance& inst, std::size_t d2_tilde, double epsilon);

// (x / Tr[x], Tr[x]) for a PSD x with positive trace. Operator-order verdicts
// are invariant under positive scaling of either side.
std::pair<DensityMatrix, double> normalize_positive(const ComplexMatrix& x, const MultiSystem& sys);

// Strict-positivity diagnostics for the no-equality statement: the gap of the
// difference operator, the reduced middle factors A (from sigma) and B (from
// rho) with their traces, and inv_trace_product = Tr[B^{-1}] * Tr[B], which
// exceeds 1 (indeed reaches d2^2) whenever d2 > 1. Kernel directions of
// sigma3 are discarded first.
std::map<std::string, double> equality_gap_check(const LkhInstance& inst);

}  // namespace lkh
