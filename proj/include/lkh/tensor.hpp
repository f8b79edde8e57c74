#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "lkh/matrix.hpp"

namespace lkh {

// Ordered list of subsystem dimensions (d_0, ..., d_{k-1}) giving tensor
// structure to a square matrix of dimension prod(d_i). Composite indices are
// row-major with subsystem 0 slowest-varying, matching kron left-to-right.
class MultiSystem {
public:
    MultiSystem() = default;
    MultiSystem(std::initializer_list<std::size_t> dims);
    explicit MultiSystem(std::vector<std::size_t> dims);

    std::size_t factor_count() const { return dims_.size(); }
    std::size_t dim(std::size_t i) const { return dims_[i]; }
    std::size_t total_dim() const;
    const std::vector<std::size_t>& dims() const { return dims_; }

    bool operator==(const MultiSystem& other) const = default;

private:
    std::vector<std::size_t> dims_;
};

// Sorted set of 0-based factor positions into a MultiSystem. Designates which
// factors an operation traces out or embeds into.
class SubsystemSet {
public:
    SubsystemSet() = default;
    SubsystemSet(std::initializer_list<std::size_t> indices);
    explicit SubsystemSet(std::vector<std::size_t> indices);

    std::size_t size() const { return indices_.size(); }
    bool contains(std::size_t i) const;
    const std::vector<std::size_t>& indices() const { return indices_; }

    // All positions of a k-factor system not in this set, ascending.
    SubsystemSet complement(std::size_t factor_count) const;

    bool operator==(const SubsystemSet& other) const = default;

private:
    std::vector<std::size_t> indices_;  // ascending, unique
};

// Kronecker product, factor order left-to-right: row index i_a*rows_b + i_b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Dimensions of the factors that survive tracing `out` from `sys`.
MultiSystem reduced_system(const MultiSystem& sys, const SubsystemSet& out);

// Partial trace over the factors in `out`; result lives on the complementary
// factors in their original order. Direct index arithmetic, O(n_kept^2 * n_traced).
ComplexMatrix partial_trace(const ComplexMatrix& a, const MultiSystem& sys, const SubsystemSet& out);

// Places `a` on the factors listed in `at` (its dimension must equal their
// product) and the identity on all other factors of `sys`. Non-contiguous
// sets are realized as a contiguous embed followed by permute_systems.
ComplexMatrix embed(const ComplexMatrix& a, const MultiSystem& sys, const SubsystemSet& at);

// Reorders tensor factors: slot i of the result carries input factor perm[i].
// A pure index shuffle; exactly invertible by the inverse permutation.
ComplexMatrix permute_systems(const ComplexMatrix& a, const MultiSystem& sys,
                              const std::vector<std::size_t>& perm);

}  // namespace lkh
