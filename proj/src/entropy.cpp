#include "lkh/entropy.hpp"

#include <cmath>

#include "lkh/eigen.hpp"
#include "lkh/errors.hpp"

namespace lkh {

EntropyReport von_neumann(const DensityMatrix& rho) {
    const HermitianEigen eg = eig_hermitian(rho.mat());
    EntropyReport report{0.0, 0.0};
    for (double lambda : eg.eigenvalues) {
        if (lambda > kEntropyClampTol) {
            report.value -= lambda * std::log(lambda);
        } else {
            report.clamped_mass += std::abs(lambda);
        }
    }
    return report;
}

double renyi2_log_purity(const DensityMatrix& rho) {
    // Tr[rho^2] = ||rho||_F^2 for Hermitian rho.
    const double f = frobenius_norm(rho.mat());
    return 2.0 * std::log(f);
}

namespace {

void require_tripartite(const DensityMatrix& rho, const char* op) {
    if (rho.sys().factor_count() != 3) {
        throw ShapeError(std::string(op) + ": state must have three factors");
    }
}

double entropy_without(const DensityMatrix& rho, std::initializer_list<std::size_t> out) {
    return von_neumann(rho.reduce(SubsystemSet(out))).value;
}

}  // namespace

double ssa_gap(const DensityMatrix& rho123) {
    require_tripartite(rho123, "ssa_gap");
    const double s12 = entropy_without(rho123, {2});
    const double s23 = entropy_without(rho123, {0});
    const double s2 = entropy_without(rho123, {0, 2});
    const double s123 = von_neumann(rho123).value;
    return s12 + s23 - s123 - s2;
}

double lkh3_gap(const DensityMatrix& rho123) {
    require_tripartite(rho123, "lkh3_gap");
    const double s12 = entropy_without(rho123, {2});
    const double s23 = entropy_without(rho123, {0});
    const double s1 = entropy_without(rho123, {1, 2});
    const double s3 = entropy_without(rho123, {0, 1});
    return s12 + s23 - s1 - s3;
}

double araki_lieb_weak_gap(const DensityMatrix& rho123) {
    require_tripartite(rho123, "araki_lieb_weak_gap");
    const double s12 = entropy_without(rho123, {2});
    const double s23 = entropy_without(rho123, {0});
    const double s123 = von_neumann(rho123).value;
    const double log_purity2 = renyi2_log_purity(rho123.reduce(SubsystemSet{0, 2}));
    return s12 + s23 - s123 - log_purity2;
}

}  // namespace lkh
