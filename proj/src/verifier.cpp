#include "lkh/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lkh/entropy.hpp"
#include "lkh/errors.hpp"
#include "lkh/rng.hpp"
#include "lkh/tensor.hpp"

namespace lkh {

namespace {

constexpr double kMixEta = 1e-6;  // regularization weight for near-singular reductions

void require_invertible(const DensityMatrix& rho, const char* label) {
    const double floor = kInvertibilityFloor / static_cast<double>(rho.dim());
    if (min_eigenvalue(rho.mat()) <= floor) {
        throw IllConditionedError(std::string(label) + ": smallest eigenvalue at or below " +
                                  std::to_string(floor));
    }
}

double condition_number(const ComplexMatrix& a) {
    const auto vals = eig_hermitian(a).eigenvalues;
    return vals.front() > 0.0 ? vals.back() / vals.front() : std::numeric_limits<double>::infinity();
}

// rho mixed with the maximally mixed state: (1 - eta) rho + eta I/n.
DensityMatrix mix_with_identity(const DensityMatrix& rho, double eta) {
    const std::size_t n = rho.dim();
    ComplexMatrix m = scale(rho.mat(), 1.0 - eta);
    for (std::size_t i = 0; i < n; ++i) m(i, i) += eta / static_cast<double>(n);
    return DensityMatrix::trusted(std::move(m), rho.sys());
}

bool log_safe(const DensityMatrix& rho) {
    const auto vals = eig_hermitian(rho.mat()).eigenvalues;
    return vals.front() > 0.0 && vals.front() > kConditionRatio * vals.back();
}

}  // namespace

LkhInstance make_lkh_instance(DensityMatrix rho12, DensityMatrix sigma23) {
    if (rho12.sys().factor_count() != 2 || sigma23.sys().factor_count() != 2) {
        throw ShapeError("LkhInstance: both states must have two factors");
    }
    if (rho12.sys().dim(1) != sigma23.sys().dim(0)) {
        throw ShapeError("LkhInstance: middle dimensions do not match");
    }
    return LkhInstance{std::move(rho12), std::move(sigma23)};
}

LkhInstance random_lkh_instance(std::size_t d1, std::size_t d2, std::size_t d3, std::uint64_t seed) {
    return make_lkh_instance(
        random_invertible_density(MultiSystem{d1, d2}, Rng::substream_seed(seed, 0)),
        random_invertible_density(MultiSystem{d2, d3}, Rng::substream_seed(seed, 1)));
}

LemmaInstance random_lemma_instance(std::size_t d1, std::size_t d2, std::size_t d3, double epsilon,
                                    std::uint64_t seed) {
    if (d2 < d3) {
        throw ShapeError("random_lemma_instance: sigma3 can only be invertible if d2 >= d3");
    }
    StateVector psi = random_pure(MultiSystem{d1, d2}, Rng::substream_seed(seed, 0));
    const double floor = kInvertibilityFloor / static_cast<double>(d3);
    for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
        StateVector phi =
            random_pure(MultiSystem{d2, d3}, Rng::substream_seed(Rng::substream_seed(seed, 1), attempt));
        const double mu = min_eigenvalue(reduced_density(phi, SubsystemSet{0}).mat());
        if (mu >= floor) return LemmaInstance{std::move(psi), std::move(phi), epsilon};
    }
    throw IllConditionedError("random_lemma_instance: sigma3 eigenvalue floor not reached in 100 attempts");
}

GapReport check_lkh_operator(const LkhInstance& inst, double tol) {
    require_invertible(inst.rho12, "check_lkh_operator: rho12");
    const DensityMatrix rho1 = inst.rho12.reduce(SubsystemSet{1});
    const DensityMatrix sigma3 = inst.sigma23.reduce(SubsystemSet{0});

    const ComplexMatrix lhs = kron(mat_fn(rho1.mat(), MatFn::inverse), inst.sigma23.mat());
    const ComplexMatrix rhs = kron(mat_fn(inst.rho12.mat(), MatFn::inverse), sigma3.mat());
    const LoewnerResult lw = loewner_leq(lhs, rhs, tol);

    GapReport report;
    report.min_eig_gap = lw.gap;
    report.relative_tol = lw.tol_abs;
    report.verdict = lw.leq;
    report.diagnostics = {
        {"mu_sigma3", min_eigenvalue(sigma3.mat())},
        {"min_eig_rho12", min_eigenvalue(inst.rho12.mat())},
        {"cond_rho12", condition_number(inst.rho12.mat())},
        {"cond_sigma23", condition_number(inst.sigma23.mat())},
        {"total_dim", static_cast<double>(inst.d1() * inst.d2() * inst.d3())},
        {"diff_norm", frobenius_norm(sub(rhs, lhs))},
    };
    return report;
}

GapReport check_lkh_log(const LkhInstance& inst, double tol) {
    require_invertible(inst.rho12, "check_lkh_log: rho12");
    require_invertible(inst.sigma23, "check_lkh_log: sigma23");
    const DensityMatrix rho1 = inst.rho12.reduce(SubsystemSet{1});
    const DensityMatrix sigma3 = inst.sigma23.reduce(SubsystemSet{0});

    const MultiSystem triple{inst.d1(), inst.d2(), inst.d3()};
    const ComplexMatrix op =
        sub(add(embed(mat_fn(inst.rho12.mat(), MatFn::log), triple, SubsystemSet{0, 1}),
                embed(mat_fn(inst.sigma23.mat(), MatFn::log), triple, SubsystemSet{1, 2})),
            add(embed(mat_fn(rho1.mat(), MatFn::log), triple, SubsystemSet{0}),
                embed(mat_fn(sigma3.mat(), MatFn::log), triple, SubsystemSet{2})));
    const double max_eig = max_eigenvalue(op);

    GapReport report;
    report.min_eig_gap = -max_eig;
    report.relative_tol = tol;  // absolute bound on the largest eigenvalue
    report.verdict = max_eig <= tol;
    report.diagnostics = {
        {"max_eig", max_eig},
        {"mu_sigma3", min_eigenvalue(sigma3.mat())},
        {"min_eig_rho12", min_eigenvalue(inst.rho12.mat())},
        {"min_eig_sigma23", min_eigenvalue(inst.sigma23.mat())},
        {"op_norm", frobenius_norm(op)},
        {"total_dim", static_cast<double>(inst.d1() * inst.d2() * inst.d3())},
    };
    return report;
}

double lkh3_from_trace(const DensityMatrix& rho123) {
    if (rho123.sys().factor_count() != 3) {
        throw ShapeError("lkh3_from_trace: state must have three factors");
    }
    DensityMatrix state = rho123;
    {
        const DensityMatrix rho12 = state.reduce(SubsystemSet{2});
        const DensityMatrix rho23 = state.reduce(SubsystemSet{0});
        if (!log_safe(rho12) || !log_safe(rho23) || !log_safe(state)) {
            state = mix_with_identity(state, kMixEta);
        }
    }
    const DensityMatrix rho12 = state.reduce(SubsystemSet{2});
    const DensityMatrix rho23 = state.reduce(SubsystemSet{0});
    const DensityMatrix rho1 = state.reduce(SubsystemSet{1, 2});
    const DensityMatrix rho3 = state.reduce(SubsystemSet{0, 1});

    const MultiSystem& triple = state.sys();
    const ComplexMatrix op =
        sub(add(embed(mat_fn(rho12.mat(), MatFn::log), triple, SubsystemSet{0, 1}),
                embed(mat_fn(rho23.mat(), MatFn::log), triple, SubsystemSet{1, 2})),
            add(embed(mat_fn(rho1.mat(), MatFn::log), triple, SubsystemSet{0}),
                embed(mat_fn(rho3.mat(), MatFn::log), triple, SubsystemSet{2})));
    return -trace(mul(state.mat(), op)).real();
}

SsaReduction reduce_ssa_to_lkh3(const DensityMatrix& rho123) {
    if (rho123.sys().factor_count() != 3) {
        throw ShapeError("reduce_ssa_to_lkh3: state must have three factors");
    }
    // On the pure 4-party state, S(rho_123) = S(rho_4) and S(rho_23) = S(rho_14),
    // so the slack becomes S12 + S14 - S4 - S2.
    const StateVector psi = [&] {
        std::size_t rank = 0;
        const auto vals = eig_hermitian(rho123.mat()).eigenvalues;
        for (double v : vals)
            if (v > kRankTol * vals.back()) ++rank;
        return purify(rho123, std::max<std::size_t>(rank, 1));
    }();
    auto entropy_without = [&](std::initializer_list<std::size_t> out) {
        return von_neumann(reduced_density(psi, SubsystemSet(out))).value;
    };
    const double s12 = entropy_without({2, 3});
    const double s14 = entropy_without({1, 2});
    const double s4 = entropy_without({0, 1, 2});
    const double s2 = entropy_without({0, 2, 3});
    return SsaReduction{ssa_gap(rho123), s12 + s14 - s4 - s2};
}

ComplexMatrix lemma_construct_x23(const StateVector& phi, double epsilon) {
    if (!(epsilon > 0.0)) throw DomainError("lemma_construct_x23: epsilon must be positive");
    // |phi><phi| + eps (I - |phi><phi|) = eps I + (1 - eps) |phi><phi|
    ComplexMatrix x = scale(outer(phi.vec()), 1.0 - epsilon);
    for (std::size_t i = 0; i < x.rows(); ++i) x(i, i) += epsilon;
    return x;
}

double lemma_epsilon_star(double mu, std::size_t d2, std::size_t d3) {
    const double denom = 2.0 * static_cast<double>(d2) * static_cast<double>(d3 * d3);
    const double root = mu / denom;
    return root * root;
}

GapReport lemma_bound_eval(const LemmaInstance& inst, double tol, double factor) {
    const DensityMatrix sigma3 = reduced_density(inst.phi, SubsystemSet{0});
    const double mu = min_eigenvalue(sigma3.mat());
    const double floor = kInvertibilityFloor / static_cast<double>(sigma3.dim());
    if (mu <= floor) {
        throw IllConditionedError("lemma_bound_eval: sigma3 smallest eigenvalue at or below " +
                                  std::to_string(floor));
    }
    if (!(inst.epsilon > 0.0)) throw DomainError("lemma_bound_eval: epsilon must be positive");

    const DensityMatrix rho1 = reduced_density(inst.psi, SubsystemSet{1});

    // X23(eps)^{-1} in closed form: same eigenvectors, spectrum {1, 1/eps, ...}.
    ComplexMatrix x_inv = scale(outer(inst.phi.vec()), 1.0 - 1.0 / inst.epsilon);
    for (std::size_t i = 0; i < x_inv.rows(); ++i) x_inv(i, i) += 1.0 / inst.epsilon;

    const ComplexMatrix a = kron(outer(inst.psi.vec()), mat_fn(sigma3.mat(), MatFn::inverse));
    const ComplexMatrix b = kron(rho1.mat(), x_inv);
    const LoewnerResult lw = loewner_leq(a, scale(b, factor), tol);

    GapReport report;
    report.min_eig_gap = lw.gap;
    report.relative_tol = lw.tol_abs;
    report.verdict = lw.leq;
    report.diagnostics = {
        {"mu", mu},
        {"epsilon", inst.epsilon},
        {"epsilon_star", lemma_epsilon_star(mu, inst.phi.sys().dim(0), inst.phi.sys().dim(1))},
        {"factor", factor},
        {"total_dim", static_cast<double>(inst.psi.sys().dim(0) * inst.phi.sys().dim(0) *
                                          inst.phi.sys().dim(1))},
    };
    return report;
}

GapReport lemma_bound_check(const LemmaInstance& inst, double tol) {
    const DensityMatrix sigma3 = reduced_density(inst.phi, SubsystemSet{0});
    const double mu = min_eigenvalue(sigma3.mat());
    const double eps_star = lemma_epsilon_star(mu, inst.phi.sys().dim(0), inst.phi.sys().dim(1));
    if (inst.epsilon > eps_star) {
        throw EpsilonTooLargeError("lemma_bound_check: epsilon " + std::to_string(inst.epsilon) +
                                   " above the sufficiency threshold " + std::to_string(eps_star));
    }
    return lemma_bound_eval(inst, tol, 1.0 + std::sqrt(inst.epsilon));
}

std::map<std::string, double> lemma_internals(const LemmaInstance& inst,
                                              const std::vector<Complex>& w1, double delta) {
    const std::size_t d1 = inst.psi.sys().dim(0);
    const std::size_t d2 = inst.phi.sys().dim(0);
    const std::size_t d3 = inst.phi.sys().dim(1);
    if (w1.size() != d1) throw ShapeError("lemma_internals: w1 must live on the first factor");
    if (vec_norm(w1) > 1.0 + 1e-12) throw DomainError("lemma_internals: w1 must have norm at most one");
    if (!(delta > 0.0)) throw DomainError("lemma_internals: delta must be positive");

    const SchmidtDecomposition sp = schmidt_decompose(inst.psi, 1);  // u_j in H1, v_j in H2
    const SchmidtDecomposition sf = schmidt_decompose(inst.phi, 1);  // x_k in H2, y_k in H3

    // Gram matrix M_{j',j} = sum_k <v_{j'}, x_k><x_k, v_j> = (G G^dagger)
    // with G_{j,k} = <v_j, x_k>.
    ComplexMatrix g(sp.rank, sf.rank);
    for (std::size_t j = 0; j < sp.rank; ++j) {
        for (std::size_t k = 0; k < sf.rank; ++k) {
            Complex acc{0.0, 0.0};
            for (std::size_t r = 0; r < d2; ++r) acc += std::conj(sp.right(r, j)) * sf.left(r, k);
            g(j, k) = acc;
        }
    }
    const ComplexMatrix m = hermitian_part(mul(g, adjoint(g)));
    const auto m_eigs = eig_hermitian(m).eigenvalues;

    const DensityMatrix sigma3 = reduced_density(inst.phi, SubsystemSet{0});
    const double mu = min_eigenvalue(sigma3.mat());
    const DensityMatrix rho1 = reduced_density(inst.psi, SubsystemSet{1});

    // lhs of the single-block estimate, evaluated directly on the triple space.
    const ComplexMatrix a_op = kron(outer(inst.psi.vec()), mat_fn(sigma3.mat(), MatFn::inverse));
    const std::vector<Complex> w1_phi = kron_vec(w1, inst.phi.vec());
    const double lhs61 = inner(w1_phi, mat_vec(a_op, w1_phi)).real();
    const double rhs61 = inner(w1, mat_vec(rho1.mat(), w1)).real();

    // The same scalar through the Gram reduction: <a, M a> with
    // a_j = coeffs_j^(1/2) <w1, u_j>.
    std::vector<Complex> avec(sp.rank);
    for (std::size_t j = 0; j < sp.rank; ++j) {
        Complex acc{0.0, 0.0};
        for (std::size_t r = 0; r < d1; ++r) acc += std::conj(w1[r]) * sp.left(r, j);
        avec[j] = std::sqrt(sp.coeffs[j]) * acc;
    }
    const double lhs61_gram = inner(avec, mat_vec(m, avec)).real();

    const double dd = static_cast<double>(d2 * d3);
    return {
        {"lhs61", lhs61},
        {"rhs61", rhs61},
        {"lhs61_gram", lhs61_gram},
        {"gram_min", m_eigs.front()},
        {"gram_max", m_eigs.back()},
        {"gram_rank", static_cast<double>(sp.rank)},
        {"mu", mu},
        {"delta", delta},
        {"coeff_diag", 1.0 + delta * dd},
        {"coeff_tail", static_cast<double>(d3) / mu * (1.0 / delta + dd)},
        {"w1_norm", vec_norm(w1)},
    };
}

GapReport pure_to_mixed_extension_check(const DensityMatrix& sigma23_mixed,
                                        const DensityMatrix& rho12, double tol) {
    if (sigma23_mixed.sys().factor_count() != 2 || rho12.sys().factor_count() != 2) {
        throw ShapeError("pure_to_mixed_extension_check: both states must have two factors");
    }
    if (rho12.sys().dim(1) != sigma23_mixed.sys().dim(0)) {
        throw ShapeError("pure_to_mixed_extension_check: middle dimensions do not match");
    }
    require_invertible(rho12, "pure_to_mixed_extension_check: rho12");

    const ComplexMatrix rho12_inv = mat_fn(rho12.mat(), MatFn::inverse);
    const ComplexMatrix rho1_inv = mat_fn(rho12.reduce(SubsystemSet{1}).mat(), MatFn::inverse);
    const MultiSystem& sys23 = sigma23_mixed.sys();

    auto difference_for = [&](const ComplexMatrix& sigma23) {
        const ComplexMatrix sigma3 = partial_trace(sigma23, sys23, SubsystemSet{0});
        return sub(kron(rho12_inv, sigma3), kron(rho1_inv, sigma23));
    };

    const ComplexMatrix mixed_diff = difference_for(sigma23_mixed.mat());

    const HermitianEigen eg = eig_hermitian(sigma23_mixed.mat());
    const double threshold = kRankTol * std::max(eg.eigenvalues.back(), 0.0);
    ComplexMatrix recombined(mixed_diff.rows(), mixed_diff.cols());
    std::size_t rank = 0;
    double weight_sum = 0.0;
    for (std::size_t k = 0; k < eg.eigenvalues.size(); ++k) {
        const double p = eg.eigenvalues[k];
        if (p <= threshold) continue;
        std::vector<Complex> phi(sigma23_mixed.dim());
        for (std::size_t i = 0; i < phi.size(); ++i) phi[i] = eg.eigenvectors(i, k);
        recombined = add(recombined, scale(difference_for(outer(phi)), p));
        ++rank;
        weight_sum += p;
    }

    const double deviation = max_entry_distance(mixed_diff, recombined);
    GapReport report;
    report.min_eig_gap = -deviation;
    report.relative_tol = tol;
    report.verdict = deviation <= tol;
    report.diagnostics = {
        {"max_entry_deviation", deviation},
        {"ensemble_rank", static_cast<double>(rank)},
        {"weight_sum", weight_sum},
    };
    return report;
}

ComplexMatrix embed_and_regularize(const DensityMatrix& rho12, std::size_t d2_tilde, double epsilon) {
    if (rho12.sys().factor_count() != 2) {
        throw ShapeError("embed_and_regularize: state must have two factors");
    }
    const std::size_t d1 = rho12.sys().dim(0);
    const std::size_t d2 = rho12.sys().dim(1);
    if (d2_tilde <= d2) throw ShapeError("embed_and_regularize: enlarged dimension must exceed d2");
    if (!(epsilon > 0.0)) throw DomainError("embed_and_regularize: epsilon must be positive");

    // rho12 on the embedded block; eps on the added middle directions. The
    // projection is onto the orthogonal complement of the original middle
    // space, which is what makes the extension invertible.
    ComplexMatrix ext(d1 * d2_tilde, d1 * d2_tilde);
    for (std::size_t i1 = 0; i1 < d1; ++i1)
        for (std::size_t i2 = 0; i2 < d2; ++i2)
            for (std::size_t j1 = 0; j1 < d1; ++j1)
                for (std::size_t j2 = 0; j2 < d2; ++j2)
                    ext(i1 * d2_tilde + i2, j1 * d2_tilde + j2) = rho12.mat()(i1 * d2 + i2, j1 * d2 + j2);
    for (std::size_t i1 = 0; i1 < d1; ++i1)
        for (std::size_t i2 = d2; i2 < d2_tilde; ++i2) ext(i1 * d2_tilde + i2, i1 * d2_tilde + i2) += epsilon;
    return ext;
}

double regularized_restricted_gap(const LkhInstance& inst, std::size_t d2_tilde, double epsilon) {
    const std::size_t d1 = inst.d1();
    const std::size_t d2 = inst.d2();
    const std::size_t d3 = inst.d3();

    const ComplexMatrix ext = embed_and_regularize(inst.rho12, d2_tilde, epsilon);
    const MultiSystem sys12_ext{d1, d2_tilde};
    const ComplexMatrix ext_inv = mat_fn(ext, MatFn::inverse);
    const ComplexMatrix rho1_ext_inv =
        mat_fn(partial_trace(ext, sys12_ext, SubsystemSet{1}), MatFn::inverse);

    // sigma23 regarded on the enlarged middle space (zero on the added block).
    ComplexMatrix sigma23_ext(d2_tilde * d3, d2_tilde * d3);
    for (std::size_t i2 = 0; i2 < d2; ++i2)
        for (std::size_t i3 = 0; i3 < d3; ++i3)
            for (std::size_t j2 = 0; j2 < d2; ++j2)
                for (std::size_t j3 = 0; j3 < d3; ++j3)
                    sigma23_ext(i2 * d3 + i3, j2 * d3 + j3) = inst.sigma23.mat()(i2 * d3 + i3, j2 * d3 + j3);
    const ComplexMatrix sigma3 = inst.sigma23.reduce(SubsystemSet{0}).mat();

    const ComplexMatrix diff_ext = sub(kron(ext_inv, sigma3), kron(rho1_ext_inv, sigma23_ext));

    // Compress back to middle index < d2.
    const std::size_t n = d1 * d2 * d3;
    std::vector<std::size_t> sel;
    sel.reserve(n);
    for (std::size_t i1 = 0; i1 < d1; ++i1)
        for (std::size_t i2 = 0; i2 < d2; ++i2)
            for (std::size_t i3 = 0; i3 < d3; ++i3) sel.push_back((i1 * d2_tilde + i2) * d3 + i3);
    ComplexMatrix restricted(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) restricted(i, j) = diff_ext(sel[i], sel[j]);

    return min_eigenvalue(restricted);
}

std::pair<DensityMatrix, double> normalize_positive(const ComplexMatrix& x, const MultiSystem& sys) {
    if (!x.is_square() || x.rows() != sys.total_dim()) {
        throw ShapeError("normalize_positive: matrix dimension does not match subsystem dimensions");
    }
    const double norm = frobenius_norm(x);
    if (hermitian_deviation(x) > 1e-10 * std::max(1.0, norm)) {
        throw NonHermitianError("normalize_positive: input not Hermitian");
    }
    const double tr = trace(x).real();
    if (!(tr > 0.0)) throw DomainError("normalize_positive: trace must be positive");
    return {DensityMatrix::create(scale(x, 1.0 / tr), sys), tr};
}

std::map<std::string, double> equality_gap_check(const LkhInstance& inst) {
    require_invertible(inst.rho12, "equality_gap_check: rho12");
    const std::size_t d1 = inst.d1();
    const std::size_t d2 = inst.d2();

    // Discard the kernel of sigma3; it is contained in the kernel of sigma23,
    // so compressing H3 to the support keeps sigma23 a density matrix.
    DensityMatrix sigma23 = inst.sigma23;
    std::size_t d3 = inst.d3();
    {
        const ComplexMatrix sigma3_full = sigma23.reduce(SubsystemSet{0}).mat();
        const HermitianEigen eg = eig_hermitian(sigma3_full);
        const double threshold = kRankTol * std::max(eg.eigenvalues.back(), 0.0);
        std::vector<std::size_t> kept;
        for (std::size_t k = 0; k < eg.eigenvalues.size(); ++k)
            if (eg.eigenvalues[k] > threshold) kept.push_back(k);
        if (kept.size() < d3) {
            ComplexMatrix v3(d3, kept.size());
            for (std::size_t t = 0; t < kept.size(); ++t)
                for (std::size_t r = 0; r < d3; ++r) v3(r, t) = eg.eigenvectors(r, kept[t]);
            const ComplexMatrix iso = kron(ComplexMatrix::identity(d2), v3);
            sigma23 = DensityMatrix::trusted(
                hermitian_part(mul(adjoint(iso), mul(sigma23.mat(), iso))),
                MultiSystem{d2, kept.size()});
            d3 = kept.size();
        }
    }
    const DensityMatrix sigma3 = sigma23.reduce(SubsystemSet{0});
    const DensityMatrix rho1 = inst.rho12.reduce(SubsystemSet{1});

    const ComplexMatrix lhs = kron(mat_fn(rho1.mat(), MatFn::inverse), sigma23.mat());
    const ComplexMatrix rhs = kron(mat_fn(inst.rho12.mat(), MatFn::inverse), sigma3.mat());
    const ComplexMatrix diff = sub(rhs, lhs);
    const double gap = min_eigenvalue(diff);

    // X = (I (x) sigma3^{-1/2}) sigma23 (I (x) sigma3^{-1/2}) on (d2, d3'),
    // Y = (rho1^{-1/2} (x) I) rho12 (rho1^{-1/2} (x) I) on (d1, d2).
    const ComplexMatrix s3_inv_sqrt = mat_fn(sigma3.mat(), MatFn::inverse_sqrt);
    const ComplexMatrix r1_inv_sqrt = mat_fn(rho1.mat(), MatFn::inverse_sqrt);
    const ComplexMatrix conj_x = kron(ComplexMatrix::identity(d2), s3_inv_sqrt);
    const ComplexMatrix conj_y = kron(r1_inv_sqrt, ComplexMatrix::identity(d2));
    const ComplexMatrix x_op = hermitian_part(mul(conj_x, mul(sigma23.mat(), conj_x)));
    const ComplexMatrix y_op = hermitian_part(mul(conj_y, mul(inst.rho12.mat(), conj_y)));

    // Reduced middle factors: dimension-normalized partial traces over the
    // non-middle factor. Their scalar traces equal one identically.
    const MultiSystem sys23{d2, d3};
    const MultiSystem sys12{d1, d2};
    const ComplexMatrix a_mid = scale(partial_trace(x_op, sys23, SubsystemSet{1}), 1.0 / static_cast<double>(d3));
    const ComplexMatrix b_mid = scale(partial_trace(y_op, sys12, SubsystemSet{0}), 1.0 / static_cast<double>(d1));

    // Partial traces of X and Y over the middle factor; identity on the
    // surviving factor by construction, reported as deviations.
    const ComplexMatrix tr2_x = partial_trace(x_op, sys23, SubsystemSet{0});
    const ComplexMatrix tr2_y = partial_trace(y_op, sys12, SubsystemSet{1});

    const double tr_b = trace(b_mid).real();
    const double tr_b_inv = trace(mat_fn(b_mid, MatFn::inverse)).real();

    return {
        {"gap", gap},
        {"diff_norm", frobenius_norm(diff)},
        {"d2", static_cast<double>(d2)},
        {"d3_effective", static_cast<double>(d3)},
        {"tr_A", trace(a_mid).real()},
        {"tr_B", tr_b},
        {"inv_trace_product", tr_b_inv * tr_b},
        {"tr2X_dev_from_id", frobenius_norm(sub(tr2_x, ComplexMatrix::identity(tr2_x.rows())))},
        {"tr2Y_dev_from_id", frobenius_norm(sub(tr2_y, ComplexMatrix::identity(tr2_y.rows())))},
        {"min_eig_B", min_eigenvalue(b_mid)},
        {"mu_sigma3", min_eigenvalue(sigma3.mat())},
    };
}

}  // namespace lkh
