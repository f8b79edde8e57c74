#include "lkh/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lkh/config.hpp"
#include "lkh/errors.hpp"

namespace lkh {

namespace {

double offdiag_norm(const ComplexMatrix& a) {
    double s = 0.0;
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// One Jacobi rotation in the (p, q) plane. J acts as [[c, -conj(s)], [s, c]]
// on columns p, q with c real; chosen so that (J^dagger W J)(p, q) = 0.
// W stays exactly Hermitian: only one triangle is computed and mirrored.
void jacobi_rotate(ComplexMatrix& w, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const std::size_t n = w.rows();
    const Complex b = w(p, q);
    const double babs = std::abs(b);

    const double app = w(p, p).real();
    const double aqq = w(q, q).real();
    const double tau = (app - aqq) / (2.0 * babs);
    const double sgn = tau >= 0.0 ? 1.0 : -1.0;
    const double t = sgn / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double sigma = t * c;
    const Complex s = sigma * (std::conj(b) / babs);

    // 2x2 block in closed form; b*s is real by the phase choice.
    const double cross = 2.0 * c * sigma * babs;
    w(p, p) = Complex{app * c * c + cross + aqq * sigma * sigma, 0.0};
    w(q, q) = Complex{app * sigma * sigma - cross + aqq * c * c, 0.0};
    w(p, q) = Complex{0.0, 0.0};
    w(q, p) = Complex{0.0, 0.0};

    for (std::size_t r = 0; r < n; ++r) {
        if (r == p || r == q) continue;
        const Complex wp = w(r, p);
        const Complex wq = w(r, q);
        const Complex nwp = c * wp + s * wq;
        const Complex nwq = -std::conj(s) * wp + c * wq;
        w(r, p) = nwp;
        w(p, r) = std::conj(nwp);
        w(r, q) = nwq;
        w(q, r) = std::conj(nwq);
    }

    for (std::size_t r = 0; r < n; ++r) {
        const Complex vp = v(r, p);
        const Complex vq = v(r, q);
        v(r, p) = c * vp + s * vq;
        v(r, q) = -std::conj(s) * vp + c * vq;
    }
}

}  // namespace

HermitianEigen eig_hermitian(const ComplexMatrix& a, bool symmetrize) {
    if (!a.is_square()) throw ShapeError("eig_hermitian: matrix not square");
    const std::size_t n = a.rows();
    if (n == 0) throw ShapeError("eig_hermitian: empty matrix");
    if (n > max_total_dim()) {
        throw ShapeError("eig_hermitian: dimension " + std::to_string(n) +
                         " exceeds the configured cap " + std::to_string(max_total_dim()));
    }
    if (!a.all_finite()) throw DomainError("eig_hermitian: non-finite entries");

    const double anorm = frobenius_norm(a);
    if (!symmetrize && hermitian_deviation(a) > kHermitianTol * std::max(1.0, anorm)) {
        throw NonHermitianError("eig_hermitian: Hermitian deviation exceeds tolerance");
    }
    // Work on the Hermitian part; within the admitted deviation this is a
    // no-op at the level of the residual target.
    ComplexMatrix w = hermitian_part(a);
    ComplexMatrix v = ComplexMatrix::identity(n);

    if (anorm > 0.0 && n > 1) {
        const double off_target = kJacobiOffTol * anorm;
        // Entries below rot_skip contribute at most off_target/2 in aggregate.
        const double rot_skip = off_target / (2.0 * static_cast<double>(n));
        bool converged = false;
        for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
            if (offdiag_norm(w) <= off_target) {
                converged = true;
                break;
            }
            for (std::size_t p = 0; p + 1 < n; ++p) {
                for (std::size_t q = p + 1; q < n; ++q) {
                    if (std::abs(w(p, q)) > rot_skip) jacobi_rotate(w, v, p, q);
                }
            }
        }
        if (!converged && offdiag_norm(w) > off_target) {
            throw NonConvergenceError("eig_hermitian: Jacobi sweep cap reached");
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return w(i, i).real() < w(j, j).real(); });

    HermitianEigen out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = w(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[k]);
    }
    return out;
}

double min_eigenvalue(const ComplexMatrix& a) { return eig_hermitian(a).eigenvalues.front(); }

double max_eigenvalue(const ComplexMatrix& a) { return eig_hermitian(a).eigenvalues.back(); }

ComplexMatrix mat_fn(const ComplexMatrix& a, MatFn f) {
    const HermitianEigen eg = eig_hermitian(a);
    const double anorm = frobenius_norm(a);
    const double lo = eg.eigenvalues.front();
    const double hi = eg.eigenvalues.back();

    std::vector<double> mapped(eg.eigenvalues.size());
    switch (f) {
        case MatFn::inverse:
        case MatFn::inverse_sqrt:
            if (lo <= 0.0 || lo <= kConditionRatio * hi) {
                throw IllConditionedError("mat_fn: smallest eigenvalue too close to zero for inversion");
            }
            for (std::size_t i = 0; i < mapped.size(); ++i) {
                mapped[i] = f == MatFn::inverse ? 1.0 / eg.eigenvalues[i]
                                                : 1.0 / std::sqrt(eg.eigenvalues[i]);
            }
            break;
        case MatFn::log:
            if (lo < -kNegClampRel * anorm) {
                throw DomainError("mat_fn: negative eigenvalue beyond clamp band for log");
            }
            if (lo <= 0.0 || lo <= kConditionRatio * hi) {
                throw IllConditionedError("mat_fn: smallest eigenvalue too close to zero for log");
            }
            for (std::size_t i = 0; i < mapped.size(); ++i) mapped[i] = std::log(eg.eigenvalues[i]);
            break;
        case MatFn::sqrt:
            if (lo < -kNegClampRel * anorm) {
                throw DomainError("mat_fn: negative eigenvalue beyond clamp band for sqrt");
            }
            for (std::size_t i = 0; i < mapped.size(); ++i) {
                mapped[i] = std::sqrt(std::max(eg.eigenvalues[i], 0.0));
            }
            break;
    }

    const std::size_t n = a.rows();
    ComplexMatrix scaled(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) scaled(r, k) = eg.eigenvectors(r, k) * mapped[k];
    // Symmetrize to strip the last roundoff; the exact result is Hermitian.
    return hermitian_part(mul(scaled, adjoint(eg.eigenvectors)));
}

LoewnerResult loewner_leq(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    if (hermitian_deviation(a) > kHermitianTol * std::max(1.0, frobenius_norm(a)) ||
        hermitian_deviation(b) > kHermitianTol * std::max(1.0, frobenius_norm(b))) {
        throw NonHermitianError("loewner_leq: inputs must be Hermitian");
    }
    const ComplexMatrix diff = sub(b, a);
    const double gap = min_eigenvalue(diff);
    const double tol_abs = tol * std::max(1.0, frobenius_norm(diff));
    return LoewnerResult{gap >= -tol_abs, gap, tol_abs};
}

}  // namespace lkh
