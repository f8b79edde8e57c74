#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>

#include "lkh/eigen.hpp"
#include "lkh/errors.hpp"
#include "lkh/states.hpp"
#include "support.hpp"

using namespace lkh;
using lkh::test::ghz_state;
using lkh::test::product_state;

TEST_CASE("random_density satisfies the density-matrix invariants") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const MultiSystem sys{2, 3};
        const std::size_t rank = 1 + seed % 6;
        const DensityMatrix rho = random_density(sys, rank, seed);

        const double norm = frobenius_norm(rho.mat());
        CHECK(hermitian_deviation(rho.mat()) <= 1e-12 * norm);
        CHECK(std::abs(trace(rho.mat()) - Complex{1.0, 0.0}) <= 1e-12);
        CHECK(min_eigenvalue(rho.mat()) >= -1e-11);
    }
}

TEST_CASE("rank-1 random density is pure") {
    const DensityMatrix rho = random_density(MultiSystem{2, 2}, 1, 3);
    const double purity = frobenius_norm(rho.mat());  // sqrt(Tr rho^2)
    CHECK(purity * purity == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("(2,2) rank-4 seed-7 instance has full positive spectrum summing to one") {
    const DensityMatrix rho = random_density(MultiSystem{2, 2}, 4, 7);
    const auto vals = eig_hermitian(rho.mat()).eigenvalues;
    double sum = 0.0;
    for (double v : vals) {
        CHECK(v > 0.0);
        sum += v;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("generation is deterministic per seed") {
    const DensityMatrix a = random_density(MultiSystem{2, 2}, 4, 11);
    const DensityMatrix b = random_density(MultiSystem{2, 2}, 4, 11);
    CHECK(a.mat() == b.mat());

    const DensityMatrix c = random_density(MultiSystem{2, 2}, 4, 12);
    CHECK(max_entry_distance(a.mat(), c.mat()) > 1e-3);
}

TEST_CASE("rank out of range is rejected") {
    CHECK_THROWS_AS(random_density(MultiSystem{2, 2}, 5, 1), ShapeError);
    CHECK_THROWS_AS(random_density(MultiSystem{2, 2}, 0, 1), ShapeError);
}

TEST_CASE("random_invertible_density clears the eigenvalue floor") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const DensityMatrix rho = random_invertible_density(MultiSystem{2, 2}, seed);
        CHECK(min_eigenvalue(rho.mat()) >= 1e-6 / 4.0);
    }
}

TEST_CASE("random_pure basics") {
    const StateVector psi = random_pure(MultiSystem{2, 3}, 5);
    CHECK(vec_norm(psi.vec()) == doctest::Approx(1.0).epsilon(1e-12));

    // outer product is a pure (rank-1) density matrix
    const DensityMatrix rho = pure_density(psi);
    const auto vals = eig_hermitian(rho.mat()).eigenvalues;
    CHECK(vals.back() == doctest::Approx(1.0).epsilon(1e-12));

    const StateVector other = random_pure(MultiSystem{2, 3}, 6);
    CHECK(std::abs(inner(psi.vec(), other.vec())) < 1.0);
}

TEST_CASE("state vectors must be unit norm") {
    CHECK_THROWS_AS(StateVector(std::vector<Complex>{{2.0, 0.0}, {0.0, 0.0}}, MultiSystem{2}),
                    DomainError);
    CHECK_THROWS_AS(StateVector(std::vector<Complex>{{1.0, 0.0}}, MultiSystem{2}), ShapeError);
}

TEST_CASE("schmidt decomposition of a product vector has rank one") {
    const StateVector u = random_pure(MultiSystem{3}, 1);
    const StateVector v = random_pure(MultiSystem{4}, 2);
    const SchmidtDecomposition sd = schmidt_decompose(product_state(u, v), 1);
    CHECK(sd.rank == 1);
    CHECK(sd.coeffs[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("schmidt decomposition of the bell state is flat") {
    const SchmidtDecomposition sd = schmidt_decompose(ghz_state(2), 1);
    CHECK(sd.rank == 2);
    CHECK(sd.coeffs[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(sd.coeffs[1] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("schmidt coefficients match the reduced-state eigenvalues and reconstruction holds") {
    const StateVector phi = random_pure(MultiSystem{3, 4}, 9);
    const SchmidtDecomposition sd = schmidt_decompose(phi, 1);

    // independent route: eigenvalues of Tr_right |phi><phi|
    auto lambdas = eig_hermitian(reduced_density(phi, SubsystemSet{1}).mat()).eigenvalues;
    std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
    REQUIRE(sd.rank <= lambdas.size());
    for (std::size_t j = 0; j < sd.rank; ++j) {
        CHECK(sd.coeffs[j] == doctest::Approx(lambdas[j]).epsilon(1e-10));
    }

    const auto rebuilt = schmidt_reconstruct(sd);
    double err = 0.0;
    for (std::size_t i = 0; i < rebuilt.size(); ++i) err += std::norm(rebuilt[i] - phi.vec()[i]);
    CHECK(std::sqrt(err) <= 1e-10);
}

TEST_CASE("schmidt families are orthonormal and coefficients sum to one") {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const std::size_t dl = 2 + seed % 7;  // up to 8
        const std::size_t dr = 2 + (seed / 7) % 7;
        const StateVector phi = random_pure(MultiSystem{dl, dr}, 7000 + seed);
        const SchmidtDecomposition sd = schmidt_decompose(phi, 1);

        double sum = 0.0;
        for (double c : sd.coeffs) sum += c;
        REQUIRE(std::abs(sum - 1.0) <= 1e-12);

        REQUIRE(frobenius_norm(sub(mul(adjoint(sd.left), sd.left),
                                   ComplexMatrix::identity(sd.rank))) <= 1e-10);
        REQUIRE(frobenius_norm(sub(mul(adjoint(sd.right), sd.right),
                                   ComplexMatrix::identity(sd.rank))) <= 1e-10);

        const auto rebuilt = schmidt_reconstruct(sd);
        double err = 0.0;
        for (std::size_t i = 0; i < rebuilt.size(); ++i) err += std::norm(rebuilt[i] - phi.vec()[i]);
        REQUIRE(std::sqrt(err) <= 1e-10);
    }
}

TEST_CASE("reduced spectra agree across the cut") {
    const StateVector bell = ghz_state(2);
    const auto [l, r] = reduced_spectra(bell, 1);
    REQUIRE(l.size() == 2);
    REQUIRE(r.size() == 2);
    CHECK(l[0] == doctest::Approx(0.5));
    CHECK(r[1] == doctest::Approx(0.5));

    const StateVector u = random_pure(MultiSystem{2}, 21);
    const StateVector v = random_pure(MultiSystem{5}, 22);
    const auto [pl, pr] = reduced_spectra(product_state(u, v), 1);
    REQUIRE(pl.size() == 1);
    REQUIRE(pr.size() == 1);
    CHECK(pl[0] == doctest::Approx(1.0));

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const StateVector phi = random_pure(MultiSystem{2, 5}, 3000 + seed);
        const auto [sl, sr] = reduced_spectra(phi, 1);
        REQUIRE(sl.size() == sr.size());
        for (std::size_t i = 0; i < sl.size(); ++i) REQUIRE(std::abs(sl[i] - sr[i]) <= 1e-10);
    }
}

TEST_CASE("purification round-trips through the partial trace") {
    // pure state: ancilla of dimension 1 suffices and the round trip is exact
    const StateVector u = random_pure(MultiSystem{3}, 31);
    const DensityMatrix pure = pure_density(u);
    const StateVector psi_pure = purify(pure, 1);
    CHECK(max_entry_distance(reduced_density(psi_pure, SubsystemSet{1}).mat(), pure.mat()) <= 1e-12);

    // maximally mixed qubit with a qubit ancilla: maximally entangled pair
    const DensityMatrix mixed = test::maximally_mixed(MultiSystem{2});
    const StateVector psi_mixed = purify(mixed, 2);
    CHECK(max_entry_distance(reduced_density(psi_mixed, SubsystemSet{1}).mat(), mixed.mat()) <= 1e-12);
    const auto sd = schmidt_decompose(psi_mixed, 1);
    CHECK(sd.rank == 2);
    CHECK(sd.coeffs[0] == doctest::Approx(0.5));

    // full-rank 2x2-party state with an oversized ancilla
    const DensityMatrix rho = random_density(MultiSystem{2, 2}, 4, 33);
    const StateVector psi = purify(rho, 4);
    CHECK(frobenius_norm(sub(reduced_density(psi, SubsystemSet{2}).mat(), rho.mat())) <= 1e-10);
}

TEST_CASE("purification rejects undersized ancillas") {
    const DensityMatrix rho = random_density(MultiSystem{2, 2}, 3, 41);
    CHECK_THROWS_AS(purify(rho, 2), AncillaTooSmallError);
    CHECK_NOTHROW(purify(rho, 3));
}

TEST_CASE("schmidt coefficients of a purification are the state's eigenvalues") {
    const DensityMatrix rho = random_density(MultiSystem{2, 2}, 4, 55);
    const StateVector psi = purify(rho, 4);
    const SchmidtDecomposition sd = schmidt_decompose(psi, 2);  // cut system | ancilla

    auto lambdas = eig_hermitian(rho.mat()).eigenvalues;
    std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
    REQUIRE(sd.rank == 4);
    for (std::size_t j = 0; j < sd.rank; ++j) {
        CHECK(sd.coeffs[j] == doctest::Approx(lambdas[j]).epsilon(1e-10));
    }
}

TEST_CASE("purification entropy identities") {
    // product pure state: all four entropies vanish
    const StateVector p = product_state(product_state(random_pure(MultiSystem{2}, 61),
                                                      random_pure(MultiSystem{2}, 62)),
                                        random_pure(MultiSystem{2}, 63));
    const auto ep = entropy_of_purification_identities(pure_density(p));
    CHECK(std::abs(ep.s123) <= 1e-9);
    CHECK(std::abs(ep.s4) <= 1e-9);
    CHECK(std::abs(ep.s23) <= 1e-9);
    CHECK(std::abs(ep.s14) <= 1e-9);

    // GHZ is already pure: the ancilla is trivial
    const auto eg = entropy_of_purification_identities(pure_density(ghz_state(3)));
    CHECK(std::abs(eg.s123) <= 1e-9);
    CHECK(std::abs(eg.s4) <= 1e-9);
    CHECK(std::abs(eg.s23 - eg.s14) <= 1e-9);

    // random rank-3 tripartite state
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const DensityMatrix rho = random_density(MultiSystem{2, 2, 2}, 3, 800 + seed);
        const auto e = entropy_of_purification_identities(rho);
        REQUIRE(std::abs(e.s123 - e.s4) <= 1e-9);
        REQUIRE(std::abs(e.s23 - e.s14) <= 1e-9);
    }
}
