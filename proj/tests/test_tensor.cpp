#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lkh/eigen.hpp"
#include "lkh/errors.hpp"
#include "lkh/rng.hpp"
#include "lkh/tensor.hpp"
#include "support.hpp"

using namespace lkh;
using lkh::test::ghz_state;
using lkh::test::naive_partial_trace;

namespace {

ComplexMatrix random_square(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    ComplexMatrix a(n, n);
    for (auto& e : a.entries()) e = rng.complex_gaussian();
    return a;
}

}  // namespace

TEST_CASE("kron of identities is the identity") {
    CHECK(max_entry_distance(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(3)),
                             ComplexMatrix::identity(6)) == 0.0);
}

TEST_CASE("kron index convention pinned by the diagonal case") {
    // Slowest-varying left factor: diag(1,2) (x) diag(3,4) = diag(3,4,6,8).
    const ComplexMatrix k = kron(ComplexMatrix::diagonal({1.0, 2.0}), ComplexMatrix::diagonal({3.0, 4.0}));
    CHECK(max_entry_distance(k, ComplexMatrix::diagonal({3.0, 4.0, 6.0, 8.0})) == 0.0);
}

TEST_CASE("kron trace is the product of traces") {
    const ComplexMatrix a = random_square(3, 1);
    const ComplexMatrix b = random_square(4, 2);
    CHECK(std::abs(trace(kron(a, b)) - trace(a) * trace(b)) < 1e-12);
}

TEST_CASE("partial trace of a product state factorizes") {
    const DensityMatrix rho = random_density(MultiSystem{3}, 3, 5);
    const DensityMatrix sigma = random_density(MultiSystem{4}, 4, 6);
    const ComplexMatrix joint = kron(rho.mat(), sigma.mat());
    const MultiSystem sys{3, 4};

    const ComplexMatrix left = partial_trace(joint, sys, SubsystemSet{1});
    CHECK(max_entry_distance(left, rho.mat()) < 1e-14);  // trace(sigma) = 1

    const ComplexMatrix right = partial_trace(joint, sys, SubsystemSet{0});
    CHECK(max_entry_distance(right, sigma.mat()) < 1e-14);
}

TEST_CASE("bell state reduces to the maximally mixed qubit") {
    const StateVector bell = ghz_state(2);
    const ComplexMatrix reduced = partial_trace(outer(bell.vec()), bell.sys(), SubsystemSet{1});
    CHECK(max_entry_distance(reduced, scale(ComplexMatrix::identity(2), 0.5)) < 1e-15);
}

TEST_CASE("partial trace matches the naive index-sum oracle") {
    const MultiSystem sys{2, 3, 2};
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const DensityMatrix rho = random_density(sys, sys.total_dim(), 100 + seed);
        for (const SubsystemSet& out :
             {SubsystemSet{0, 2}, SubsystemSet{1}, SubsystemSet{2}, SubsystemSet{0, 1}}) {
            const ComplexMatrix fast = partial_trace(rho.mat(), sys, out);
            const ComplexMatrix slow = naive_partial_trace(rho.mat(), sys, out);
            REQUIRE(max_entry_distance(fast, slow) <= 1e-13);
        }
    }
}

TEST_CASE("partial trace preserves trace and positivity") {
    const MultiSystem sys{2, 2, 3};
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const DensityMatrix rho = random_density(sys, sys.total_dim(), 300 + seed);
        const ComplexMatrix reduced = partial_trace(rho.mat(), sys, SubsystemSet{2});
        CHECK(std::abs(trace(reduced) - trace(rho.mat())) <= 1e-13 * frobenius_norm(rho.mat()));
        CHECK(min_eigenvalue(reduced) >= -1e-11);
    }
}

TEST_CASE("tracing factors one at a time composes") {
    const MultiSystem sys{2, 3, 2};
    const DensityMatrix rho = random_density(sys, 12, 17);
    const ComplexMatrix oneshot = partial_trace(rho.mat(), sys, SubsystemSet{0, 2});
    const ComplexMatrix first = partial_trace(rho.mat(), sys, SubsystemSet{2});
    const ComplexMatrix stepwise = partial_trace(first, MultiSystem{2, 3}, SubsystemSet{0});
    CHECK(max_entry_distance(oneshot, stepwise) <= 1e-13);
}

TEST_CASE("embed is dual to the partial trace") {
    const MultiSystem sys{2, 3, 2};
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const DensityMatrix rho = random_density(sys, sys.total_dim(), 400 + seed);
        const ComplexMatrix a = test::random_hermitian(3, 900 + seed);
        const ComplexMatrix embedded = embed(a, sys, SubsystemSet{1});
        const Complex lhs = trace(mul(embedded, rho.mat()));
        const Complex rhs = trace(mul(a, partial_trace(rho.mat(), sys, SubsystemSet{0, 2})));
        REQUIRE(std::abs(lhs - rhs) <= 1e-12);
    }
}

TEST_CASE("Tr_23 of rho12 (x) I3 rescales rho1 by d3") {
    const MultiSystem sys12{2, 3};
    const DensityMatrix rho12 = random_density(sys12, 6, 21);
    const std::size_t d3 = 4;
    const ComplexMatrix joint = kron(rho12.mat(), ComplexMatrix::identity(d3));
    const ComplexMatrix traced = partial_trace(joint, MultiSystem{2, 3, d3}, SubsystemSet{1, 2});
    const ComplexMatrix rho1 = partial_trace(rho12.mat(), sys12, SubsystemSet{1});
    CHECK(max_entry_distance(traced, scale(rho1, static_cast<double>(d3))) <= 1e-13);
}

TEST_CASE("embed basics") {
    const MultiSystem sys{2, 3, 2};
    CHECK(max_entry_distance(embed(ComplexMatrix::identity(3), sys, SubsystemSet{1}),
                             ComplexMatrix::identity(12)) == 0.0);

    const ComplexMatrix a = test::random_hermitian(3, 8);
    CHECK(max_entry_distance(embed(a, MultiSystem{1, 3, 1}, SubsystemSet{1}), a) == 0.0);
}

TEST_CASE("embed on a contiguous pair matches kron directly") {
    const ComplexMatrix a = test::random_hermitian(6, 13);  // lives on factors {1, 2} of (2, 3, 2)
    const MultiSystem sys{2, 3, 2};
    const ComplexMatrix via_embed = embed(a, sys, SubsystemSet{1, 2});
    const ComplexMatrix direct = kron(ComplexMatrix::identity(2), a);
    CHECK(max_entry_distance(via_embed, direct) == 0.0);
}

TEST_CASE("embed on a non-contiguous set agrees with a manual kron-permute") {
    const MultiSystem sys{2, 3, 2};
    const ComplexMatrix a = test::random_hermitian(4, 14);  // factors {0, 2}
    const ComplexMatrix via_embed = embed(a, sys, SubsystemSet{0, 2});
    // Build on order (0, 2, 1) then gather factors (0, 2, 1) back to slots.
    const ComplexMatrix contiguous = kron(a, ComplexMatrix::identity(3));
    const ComplexMatrix manual =
        permute_systems(contiguous, MultiSystem{2, 2, 3}, std::vector<std::size_t>{0, 2, 1});
    CHECK(max_entry_distance(via_embed, manual) == 0.0);
}

TEST_CASE("permute_systems identity and swap") {
    const ComplexMatrix a = random_square(2, 31);
    const ComplexMatrix b = random_square(3, 32);
    const ComplexMatrix ab = kron(a, b);

    CHECK(max_entry_distance(permute_systems(ab, MultiSystem{2, 3}, {0, 1}), ab) == 0.0);
    CHECK(max_entry_distance(permute_systems(ab, MultiSystem{2, 3}, {1, 0}), kron(b, a)) == 0.0);
}

TEST_CASE("permute then inverse permute is exactly the identity") {
    const MultiSystem sys{2, 3, 4};
    Rng rng(77);
    ComplexMatrix a(24, 24);
    for (auto& e : a.entries()) e = rng.complex_gaussian();

    const std::vector<std::size_t> perm{2, 0, 1};
    std::vector<std::size_t> inverse(3);
    for (std::size_t i = 0; i < 3; ++i) inverse[perm[i]] = i;

    const ComplexMatrix shuffled = permute_systems(a, sys, perm);
    const ComplexMatrix back = permute_systems(shuffled, MultiSystem{4, 2, 3}, inverse);
    CHECK(max_entry_distance(back, a) == 0.0);  // pure index shuffle
}

TEST_CASE("dense kernels refuse dimensions beyond the configured cap") {
    // default cap is 512
    CHECK_THROWS_AS(kron(ComplexMatrix::identity(32), ComplexMatrix::identity(32)), ShapeError);
    CHECK_THROWS_AS(min_eigenvalue(ComplexMatrix::identity(600)), ShapeError);
}

TEST_CASE("invalid arguments throw") {
    const MultiSystem sys{2, 2};
    const ComplexMatrix a = ComplexMatrix::identity(4);
    CHECK_THROWS_AS(partial_trace(a, sys, SubsystemSet{5}), ShapeError);
    CHECK_THROWS_AS(partial_trace(ComplexMatrix::identity(3), sys, SubsystemSet{0}), ShapeError);
    CHECK_THROWS_AS(permute_systems(a, sys, {0, 0}), ShapeError);
    CHECK_THROWS_AS(permute_systems(a, sys, {0}), ShapeError);
    CHECK_THROWS_AS(embed(ComplexMatrix::identity(3), sys, SubsystemSet{0}), ShapeError);
    CHECK_THROWS_AS(SubsystemSet({1, 1}), ShapeError);
    CHECK_THROWS_AS(MultiSystem({2, 0}), ShapeError);
}
