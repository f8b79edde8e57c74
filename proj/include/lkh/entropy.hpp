#pragma once

#include "lkh/states.hpp"

namespace lkh {

// Eigenvalues below this contribute zero to the entropy and are accumulated
// in clamped_mass instead of feeding lambda*ln(lambda) noise.
inline constexpr double kEntropyClampTol = 1e-15;

struct EntropyReport {
    double value;         // nats
    double clamped_mass;  // total |eigenvalue| mass clamped to zero
};

// Von Neumann entropy S = -sum lambda_i ln lambda_i, natural-log units.
EntropyReport von_neumann(const DensityMatrix& rho);

// ln Tr[rho^2]; never above -S(rho).
double renyi2_log_purity(const DensityMatrix& rho);

// Strong-subadditivity slack S(rho_12) + S(rho_23) - S(rho_123) - S(rho_2)
// for a state on three factors. Nonnegative up to eigensolver noise.
double ssa_gap(const DensityMatrix& rho123);

// S(rho_12) + S(rho_23) - S(rho_1) - S(rho_3), the equivalent two-marginal
// form reached through purification.
double lkh3_gap(const DensityMatrix& rho123);

// S(rho_12) + S(rho_23) - S(rho_123) - ln Tr[rho_2^2]; the weaker bound that
// replaces S(rho_2) by the log purity, so it dominates ssa_gap.
double araki_lieb_weak_gap(const DensityMatrix& rho123);

}  // namespace lkh
