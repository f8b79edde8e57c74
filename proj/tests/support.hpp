// Shared fixtures and independent oracles for the test suites. Everything
// here is deliberately written against the naive definition of the quantity
// it checks, not against the library's evaluation path.
#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "lkh/matrix.hpp"
#include "lkh/rng.hpp"
#include "lkh/states.hpp"
#include "lkh/tensor.hpp"

namespace lkh::test {

// Partial trace by explicit multi-index bookkeeping: decompose every row and
// column index into subsystem digits with div/mod, require the traced digits
// to match, and accumulate. Quadratic over the full matrix, independent of
// the production stride/offset scheme.
inline ComplexMatrix naive_partial_trace(const ComplexMatrix& a, const MultiSystem& sys,
                                         const SubsystemSet& out) {
    const std::size_t k = sys.factor_count();
    const std::size_t n = sys.total_dim();

    auto digits_of = [&](std::size_t index) {
        std::vector<std::size_t> digits(k);
        for (std::size_t f = k; f-- > 0;) {
            digits[f] = index % sys.dim(f);
            index /= sys.dim(f);
        }
        return digits;
    };

    std::vector<std::size_t> kept_factors;
    for (std::size_t f = 0; f < k; ++f)
        if (!out.contains(f)) kept_factors.push_back(f);

    std::size_t nk = 1;
    for (auto f : kept_factors) nk *= sys.dim(f);

    auto kept_index = [&](const std::vector<std::size_t>& digits) {
        std::size_t idx = 0;
        for (auto f : kept_factors) idx = idx * sys.dim(f) + digits[f];
        return idx;
    };

    ComplexMatrix r(nk, nk);
    for (std::size_t row = 0; row < n; ++row) {
        const auto rd = digits_of(row);
        for (std::size_t col = 0; col < n; ++col) {
            const auto cd = digits_of(col);
            bool traced_match = true;
            for (auto f : out.indices()) {
                if (rd[f] != cd[f]) {
                    traced_match = false;
                    break;
                }
            }
            if (traced_match) r(kept_index(rd), kept_index(cd)) += a(row, col);
        }
    }
    return r;
}

// Matrix exponential by scaling and squaring with a Taylor tail; no spectral
// machinery involved, so it is an independent check on mat_fn(., log).
inline ComplexMatrix expm_taylor(const ComplexMatrix& a) {
    const std::size_t n = a.rows();
    int squarings = 0;
    double norm = frobenius_norm(a);
    while (norm > 0.5) {
        norm *= 0.5;
        ++squarings;
    }
    const double scale_factor = std::ldexp(1.0, -squarings);

    ComplexMatrix scaled = scale(a, scale_factor);
    ComplexMatrix term = ComplexMatrix::identity(n);
    ComplexMatrix sum = term;
    for (int k = 1; k <= 40; ++k) {
        term = scale(mul(term, scaled), 1.0 / k);
        sum = add(sum, term);
        if (frobenius_norm(term) < 1e-18) break;
    }
    for (int s = 0; s < squarings; ++s) sum = mul(sum, sum);
    return sum;
}

inline ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    ComplexMatrix a(n, n);
    for (auto& e : a.entries()) e = rng.complex_gaussian();
    return hermitian_part(a);
}

inline StateVector basis_state(const MultiSystem& sys, std::size_t index) {
    std::vector<Complex> v(sys.total_dim(), Complex{0.0, 0.0});
    v[index] = 1.0;
    return StateVector(std::move(v), sys);
}

// (|0...0> + |1...1>)/sqrt(2) on k qubits; k = 2 gives the Bell state.
inline StateVector ghz_state(std::size_t k) {
    MultiSystem sys(std::vector<std::size_t>(k, 2));
    std::vector<Complex> v(sys.total_dim(), Complex{0.0, 0.0});
    const double w = 1.0 / std::sqrt(2.0);
    v.front() = w;
    v.back() = w;
    return StateVector(std::move(v), sys);
}

inline StateVector product_state(const StateVector& a, const StateVector& b) {
    std::vector<std::size_t> dims = a.sys().dims();
    dims.insert(dims.end(), b.sys().dims().begin(), b.sys().dims().end());
    return StateVector(kron_vec(a.vec(), b.vec()), MultiSystem(std::move(dims)));
}

// rho_a (x) rho_b as a density matrix.
inline DensityMatrix product_density(const DensityMatrix& a, const DensityMatrix& b) {
    std::vector<std::size_t> dims = a.sys().dims();
    dims.insert(dims.end(), b.sys().dims().begin(), b.sys().dims().end());
    return DensityMatrix::trusted(kron(a.mat(), b.mat()), MultiSystem(std::move(dims)));
}

inline DensityMatrix maximally_mixed(const MultiSystem& sys) {
    const std::size_t n = sys.total_dim();
    return DensityMatrix::trusted(scale(ComplexMatrix::identity(n), 1.0 / static_cast<double>(n)), sys);
}

}  // namespace lkh::test
