#include "lkh/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lkh/eigen.hpp"
#include "lkh/entropy.hpp"
#include "lkh/errors.hpp"
#include "lkh/rng.hpp"

namespace lkh {

namespace {

constexpr double kUnitNormTol = 1e-12;
constexpr double kDensityHermTol = 1e-12;
constexpr double kDensityTraceTol = 1e-12;
constexpr double kDensityMinEigFloor = -1e-11;

// Offsets of the composite indices spanned by `factors` (others fixed at 0).
std::vector<std::size_t> offsets_for(const MultiSystem& sys, const std::vector<std::size_t>& factors) {
    const std::size_t k = sys.factor_count();
    std::vector<std::size_t> stride(k, 1);
    for (std::size_t i = k; i-- > 1;) stride[i - 1] = stride[i] * sys.dim(i);
    std::vector<std::size_t> offsets{0};
    for (auto f : factors) {
        std::vector<std::size_t> next;
        next.reserve(offsets.size() * sys.dim(f));
        for (auto base : offsets)
            for (std::size_t v = 0; v < sys.dim(f); ++v) next.push_back(base + v * stride[f]);
        offsets = std::move(next);
    }
    return offsets;
}

}  // namespace

StateVector::StateVector(std::vector<Complex> amplitudes, MultiSystem sys)
    : vec_(std::move(amplitudes)), sys_(std::move(sys)) {
    if (vec_.size() != sys_.total_dim()) {
        throw ShapeError("StateVector: amplitude count does not match subsystem dimensions");
    }
    for (const auto& a : vec_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw DomainError("StateVector: non-finite amplitude");
        }
    }
    if (std::abs(vec_norm(vec_) - 1.0) > kUnitNormTol) {
        throw DomainError("StateVector: vector is not unit norm");
    }
}

StateVector StateVector::normalized(std::vector<Complex> amplitudes, MultiSystem sys) {
    const double n = vec_norm(amplitudes);
    if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("StateVector: cannot normalize zero vector");
    for (auto& a : amplitudes) a /= n;
    return StateVector(std::move(amplitudes), std::move(sys));
}

DensityMatrix DensityMatrix::create(ComplexMatrix mat, MultiSystem sys) {
    if (!mat.is_square() || mat.rows() != sys.total_dim()) {
        throw ShapeError("DensityMatrix: matrix dimension does not match subsystem dimensions");
    }
    if (!mat.all_finite()) throw DomainError("DensityMatrix: non-finite entries");
    const double norm = frobenius_norm(mat);
    if (hermitian_deviation(mat) > kDensityHermTol * std::max(1.0, norm)) {
        throw NonHermitianError("DensityMatrix: not Hermitian within tolerance");
    }
    const Complex tr = trace(mat);
    if (std::abs(tr - Complex{1.0, 0.0}) > kDensityTraceTol) {
        throw DomainError("DensityMatrix: trace differs from one by " + std::to_string(std::abs(tr - 1.0)));
    }
    if (min_eigenvalue(hermitian_part(mat)) < kDensityMinEigFloor) {
        throw DomainError("DensityMatrix: not positive semidefinite within tolerance");
    }
    return DensityMatrix(std::move(mat), std::move(sys));
}

DensityMatrix DensityMatrix::trusted(ComplexMatrix mat, MultiSystem sys) {
    if (!mat.is_square() || mat.rows() != sys.total_dim()) {
        throw ShapeError("DensityMatrix: matrix dimension does not match subsystem dimensions");
    }
    return DensityMatrix(std::move(mat), std::move(sys));
}

DensityMatrix DensityMatrix::reduce(const SubsystemSet& out) const {
    return trusted(partial_trace(mat_, sys_, out), reduced_system(sys_, out));
}

DensityMatrix random_density(const MultiSystem& sys, std::size_t rank, std::uint64_t seed) {
    const std::size_t n = sys.total_dim();
    if (rank < 1 || rank > n) throw ShapeError("random_density: rank out of range");

    Rng rng(seed);
    ComplexMatrix g(n, rank);
    for (auto& e : g.entries()) e = rng.complex_gaussian();

    // H = G G^dagger, assembled exactly Hermitian.
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < rank; ++k) acc += g(i, k) * std::conj(g(j, k));
            h(i, j) = acc;
            h(j, i) = std::conj(acc);
        }
        h(i, i) = Complex{h(i, i).real(), 0.0};
    }
    const double tr = trace(h).real();
    if (!(tr > 0.0)) throw DomainError("random_density: degenerate Gram trace");
    return DensityMatrix::create(scale(h, 1.0 / tr), sys);
}

DensityMatrix random_invertible_density(const MultiSystem& sys, std::uint64_t seed) {
    const std::size_t n = sys.total_dim();
    const double floor = kInvertibilityFloor / static_cast<double>(n);
    for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
        DensityMatrix rho = random_density(sys, n, Rng::substream_seed(seed, attempt));
        if (min_eigenvalue(rho.mat()) >= floor) return rho;
    }
    throw IllConditionedError("random_invertible_density: no instance above the eigenvalue floor in 100 attempts");
}

StateVector random_pure(const MultiSystem& sys, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Complex> v(sys.total_dim());
    for (auto& e : v) e = rng.complex_gaussian();
    return StateVector::normalized(std::move(v), sys);
}

DensityMatrix pure_density(const StateVector& psi) {
    return DensityMatrix::trusted(outer(psi.vec()), psi.sys());
}

DensityMatrix reduced_density(const StateVector& psi, const SubsystemSet& out) {
    const auto& sys = psi.sys();
    for (auto i : out.indices()) {
        if (i >= sys.factor_count()) throw ShapeError("reduced_density: subsystem index out of range");
    }
    const auto keep = out.complement(sys.factor_count());
    const auto keep_off = offsets_for(sys, keep.indices());
    const auto traced_off = offsets_for(sys, out.indices());
    const auto& v = psi.vec();

    const std::size_t nk = keep_off.size();
    ComplexMatrix r(nk, nk);
    for (std::size_t i = 0; i < nk; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            Complex acc{0.0, 0.0};
            for (auto t : traced_off) acc += v[keep_off[i] + t] * std::conj(v[keep_off[j] + t]);
            r(i, j) = acc;
            r(j, i) = std::conj(acc);
        }
        r(i, i) = Complex{r(i, i).real(), 0.0};
    }
    return DensityMatrix::trusted(std::move(r), reduced_system(sys, out));
}

SchmidtDecomposition schmidt_decompose(const StateVector& phi, std::size_t cut) {
    const auto& sys = phi.sys();
    if (cut == 0 || cut >= sys.factor_count()) {
        throw ShapeError("schmidt_decompose: cut must split the factors into two nonempty blocks");
    }
    std::size_t d_left = 1, d_right = 1;
    for (std::size_t i = 0; i < sys.factor_count(); ++i) {
        (i < cut ? d_left : d_right) *= sys.dim(i);
    }

    // Coefficient matrix C with phi[i*d_right + j] = C(i, j).
    ComplexMatrix c(d_left, d_right);
    for (std::size_t i = 0; i < d_left; ++i)
        for (std::size_t j = 0; j < d_right; ++j) c(i, j) = phi.vec()[i * d_right + j];

    // C C^dagger, exactly Hermitian by construction.
    ComplexMatrix w(d_left, d_left);
    for (std::size_t i = 0; i < d_left; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < d_right; ++k) acc += c(i, k) * std::conj(c(j, k));
            w(i, j) = acc;
            w(j, i) = std::conj(acc);
        }
        w(i, i) = Complex{w(i, i).real(), 0.0};
    }

    const HermitianEigen eg = eig_hermitian(w);
    const double lambda_max = eg.eigenvalues.back();
    if (!(lambda_max > 0.0)) throw DomainError("schmidt_decompose: degenerate normalization");
    const double threshold = kRankTol * lambda_max;

    std::vector<std::size_t> kept;  // descending eigenvalue order
    for (std::size_t k = eg.eigenvalues.size(); k-- > 0;) {
        if (eg.eigenvalues[k] > threshold) kept.push_back(k);
    }

    SchmidtDecomposition sd;
    sd.rank = kept.size();
    sd.coeffs.resize(sd.rank);
    sd.left = ComplexMatrix(d_left, sd.rank);
    sd.right = ComplexMatrix(d_right, sd.rank);
    const ComplexMatrix c_adj = adjoint(c);
    for (std::size_t t = 0; t < sd.rank; ++t) {
        const std::size_t k = kept[t];
        sd.coeffs[t] = eg.eigenvalues[k];
        std::vector<Complex> u(d_left);
        for (std::size_t i = 0; i < d_left; ++i) u[i] = eg.eigenvectors(i, k);
        // v_j[k] = <u_j (x) e_k, phi> / lambda_j^(1/2) = conj(C^dagger u_j)[k] / lambda_j^(1/2)
        const auto v = mat_vec(c_adj, u);
        const double inv_sqrt = 1.0 / std::sqrt(eg.eigenvalues[k]);
        for (std::size_t i = 0; i < d_left; ++i) sd.left(i, t) = u[i];
        for (std::size_t j = 0; j < d_right; ++j) sd.right(j, t) = std::conj(v[j]) * inv_sqrt;
    }
    return sd;
}

std::vector<Complex> schmidt_reconstruct(const SchmidtDecomposition& sd) {
    const std::size_t d_left = sd.left.rows();
    const std::size_t d_right = sd.right.rows();
    std::vector<Complex> v(d_left * d_right, Complex{0.0, 0.0});
    for (std::size_t t = 0; t < sd.rank; ++t) {
        const double w = std::sqrt(sd.coeffs[t]);
        for (std::size_t i = 0; i < d_left; ++i)
            for (std::size_t j = 0; j < d_right; ++j) v[i * d_right + j] += w * sd.left(i, t) * sd.right(j, t);
    }
    return v;
}

std::pair<std::vector<double>, std::vector<double>> reduced_spectra(const StateVector& phi,
                                                                    std::size_t cut) {
    const auto& sys = phi.sys();
    if (cut == 0 || cut >= sys.factor_count()) {
        throw ShapeError("reduced_spectra: cut must split the factors into two nonempty blocks");
    }
    std::vector<std::size_t> left_ix, right_ix;
    for (std::size_t i = 0; i < sys.factor_count(); ++i) (i < cut ? left_ix : right_ix).push_back(i);

    auto spectrum_of = [](const DensityMatrix& rho) {
        auto vals = eig_hermitian(rho.mat()).eigenvalues;
        std::sort(vals.begin(), vals.end(), std::greater<>());
        const double threshold = kRankTol * std::max(vals.front(), 0.0);
        std::vector<double> kept;
        for (double v : vals)
            if (v > threshold) kept.push_back(v);
        return kept;
    };

    return {spectrum_of(reduced_density(phi, SubsystemSet(right_ix))),
            spectrum_of(reduced_density(phi, SubsystemSet(left_ix)))};
}

StateVector purify(const DensityMatrix& rho, std::size_t ancilla_dim) {
    if (ancilla_dim < 1) throw ShapeError("purify: ancilla dimension must be positive");
    const HermitianEigen eg = eig_hermitian(rho.mat());
    const double lambda_max = eg.eigenvalues.back();
    if (!(lambda_max > 0.0)) throw DomainError("purify: state has no positive eigenvalue");
    const double threshold = kRankTol * lambda_max;

    std::vector<std::size_t> kept;  // descending
    for (std::size_t k = eg.eigenvalues.size(); k-- > 0;) {
        if (eg.eigenvalues[k] > threshold) kept.push_back(k);
    }
    if (ancilla_dim < kept.size()) {
        throw AncillaTooSmallError("purify: ancilla dimension " + std::to_string(ancilla_dim) +
                                   " below numerical rank " + std::to_string(kept.size()));
    }

    const std::size_t n = rho.dim();
    std::vector<Complex> psi(n * ancilla_dim, Complex{0.0, 0.0});
    for (std::size_t j = 0; j < kept.size(); ++j) {
        const double w = std::sqrt(eg.eigenvalues[kept[j]]);
        for (std::size_t i = 0; i < n; ++i) psi[i * ancilla_dim + j] = w * eg.eigenvectors(i, kept[j]);
    }

    std::vector<std::size_t> dims = rho.sys().dims();
    dims.push_back(ancilla_dim);
    return StateVector::normalized(std::move(psi), MultiSystem(std::move(dims)));
}

PurificationEntropies entropy_of_purification_identities(const DensityMatrix& rho123) {
    if (rho123.sys().factor_count() != 3) {
        throw ShapeError("entropy_of_purification_identities: state must have three factors");
    }
    const HermitianEigen eg = eig_hermitian(rho123.mat());
    std::size_t rank = 0;
    for (double v : eg.eigenvalues)
        if (v > kRankTol * eg.eigenvalues.back()) ++rank;
    const StateVector psi = purify(rho123, std::max<std::size_t>(rank, 1));

    auto entropy_without = [&](std::initializer_list<std::size_t> out) {
        return von_neumann(reduced_density(psi, SubsystemSet(out))).value;
    };
    PurificationEntropies e{};
    e.s123 = entropy_without({3});
    e.s4 = entropy_without({0, 1, 2});
    e.s23 = entropy_without({0, 3});
    e.s14 = entropy_without({1, 2});
    return e;
}

}  // namespace lkh
