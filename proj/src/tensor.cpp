#include "lkh/tensor.hpp"

#include <algorithm>
#include <string>

#include "lkh/config.hpp"
#include "lkh/errors.hpp"

namespace lkh {

MultiSystem::MultiSystem(std::initializer_list<std::size_t> dims) : dims_(dims) {
    for (auto d : dims_)
        if (d < 1) throw ShapeError("MultiSystem: dimensions must be positive");
}

MultiSystem::MultiSystem(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    for (auto d : dims_)
        if (d < 1) throw ShapeError("MultiSystem: dimensions must be positive");
}

std::size_t MultiSystem::total_dim() const {
    std::size_t n = 1;
    for (auto d : dims_) n *= d;
    return n;
}

SubsystemSet::SubsystemSet(std::initializer_list<std::size_t> indices) : indices_(indices) {
    std::sort(indices_.begin(), indices_.end());
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
        throw ShapeError("SubsystemSet: duplicate indices");
    }
}

SubsystemSet::SubsystemSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
        throw ShapeError("SubsystemSet: duplicate indices");
    }
}

bool SubsystemSet::contains(std::size_t i) const {
    return std::binary_search(indices_.begin(), indices_.end(), i);
}

SubsystemSet SubsystemSet::complement(std::size_t factor_count) const {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < factor_count; ++i)
        if (!contains(i)) rest.push_back(i);
    return SubsystemSet(std::move(rest));
}

namespace {

void require_valid_set(const SubsystemSet& set, std::size_t factor_count, const char* op) {
    for (auto i : set.indices()) {
        if (i >= factor_count) throw ShapeError(std::string(op) + ": subsystem index out of range");
    }
}

void require_tagged_square(const ComplexMatrix& a, const MultiSystem& sys, const char* op) {
    if (!a.is_square()) throw ShapeError(std::string(op) + ": matrix not square");
    if (a.rows() != sys.total_dim()) {
        throw ShapeError(std::string(op) + ": matrix dimension does not match subsystem dimensions");
    }
}

// stride[i] = product of dims to the right of factor i (subsystem 0 slowest).
std::vector<std::size_t> factor_strides(const MultiSystem& sys) {
    const std::size_t k = sys.factor_count();
    std::vector<std::size_t> stride(k, 1);
    for (std::size_t i = k; i-- > 1;) stride[i - 1] = stride[i] * sys.dim(i);
    return stride;
}

// Offsets of all composite indices spanned by the given factors (other factor
// indices fixed at zero), enumerated row-major over those factors.
std::vector<std::size_t> subspace_offsets(const MultiSystem& sys, const std::vector<std::size_t>& factors) {
    const auto stride = factor_strides(sys);
    std::vector<std::size_t> offsets{0};
    for (auto f : factors) {
        std::vector<std::size_t> next;
        next.reserve(offsets.size() * sys.dim(f));
        for (auto base : offsets) {
            for (std::size_t v = 0; v < sys.dim(f); ++v) next.push_back(base + v * stride[f]);
        }
        offsets = std::move(next);
    }
    return offsets;
}

}  // namespace

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    if (rows > max_total_dim() || cols > max_total_dim()) {
        throw ShapeError("kron: result dimension exceeds the configured cap " +
                         std::to_string(max_total_dim()));
    }
    ComplexMatrix r(rows, cols);
    for (std::size_t ia = 0; ia < a.rows(); ++ia)
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            const Complex f = a(ia, ja);
            if (f == Complex{0.0, 0.0}) continue;
            for (std::size_t ib = 0; ib < b.rows(); ++ib)
                for (std::size_t jb = 0; jb < b.cols(); ++jb)
                    r(ia * b.rows() + ib, ja * b.cols() + jb) = f * b(ib, jb);
        }
    return r;
}

MultiSystem reduced_system(const MultiSystem& sys, const SubsystemSet& out) {
    require_valid_set(out, sys.factor_count(), "reduced_system");
    std::vector<std::size_t> dims;
    for (std::size_t i = 0; i < sys.factor_count(); ++i)
        if (!out.contains(i)) dims.push_back(sys.dim(i));
    if (dims.empty()) dims.push_back(1);  // full trace leaves a 1x1 scalar
    return MultiSystem(std::move(dims));
}

ComplexMatrix partial_trace(const ComplexMatrix& a, const MultiSystem& sys, const SubsystemSet& out) {
    require_tagged_square(a, sys, "partial_trace");
    require_valid_set(out, sys.factor_count(), "partial_trace");

    const auto keep = out.complement(sys.factor_count());
    const auto keep_off = subspace_offsets(sys, keep.indices());
    const auto traced_off = subspace_offsets(sys, out.indices());

    const std::size_t nk = keep_off.size();
    ComplexMatrix r(nk, nk);
    for (std::size_t i = 0; i < nk; ++i) {
        for (std::size_t j = 0; j < nk; ++j) {
            Complex acc{0.0, 0.0};
            for (auto t : traced_off) acc += a(keep_off[i] + t, keep_off[j] + t);
            r(i, j) = acc;
        }
    }
    return r;
}

ComplexMatrix permute_systems(const ComplexMatrix& a, const MultiSystem& sys,
                              const std::vector<std::size_t>& perm) {
    require_tagged_square(a, sys, "permute_systems");
    const std::size_t k = sys.factor_count();
    if (perm.size() != k) throw ShapeError("permute_systems: permutation length mismatch");
    std::vector<bool> seen(k, false);
    for (auto p : perm) {
        if (p >= k || seen[p]) throw ShapeError("permute_systems: not a permutation");
        seen[p] = true;
    }

    const auto stride_old = factor_strides(sys);
    std::vector<std::size_t> new_dims(k);
    for (std::size_t i = 0; i < k; ++i) new_dims[i] = sys.dim(perm[i]);

    // map[new composite index] = old composite index
    const std::size_t n = sys.total_dim();
    std::vector<std::size_t> map(n);
    std::vector<std::size_t> digits(k, 0);
    for (std::size_t idx = 0; idx < n; ++idx) {
        std::size_t old_index = 0;
        for (std::size_t i = 0; i < k; ++i) old_index += digits[i] * stride_old[perm[i]];
        map[idx] = old_index;
        for (std::size_t i = k; i-- > 0;) {
            if (++digits[i] < new_dims[i]) break;
            digits[i] = 0;
        }
    }

    ComplexMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = a(map[i], map[j]);
    return r;
}

ComplexMatrix embed(const ComplexMatrix& a, const MultiSystem& sys, const SubsystemSet& at) {
    require_valid_set(at, sys.factor_count(), "embed");
    if (!a.is_square()) throw ShapeError("embed: matrix not square");
    std::size_t at_dim = 1;
    for (auto i : at.indices()) at_dim *= sys.dim(i);
    if (a.rows() != at_dim) {
        throw ShapeError("embed: matrix dimension does not match the designated factors");
    }

    const auto rest = at.complement(sys.factor_count());
    std::size_t rest_dim = 1;
    for (auto i : rest.indices()) rest_dim *= sys.dim(i);

    // Contiguous embed in the factor order [at..., rest...], then shuffle
    // factors back to canonical order.
    const ComplexMatrix contiguous = kron(a, ComplexMatrix::identity(rest_dim));

    std::vector<std::size_t> current_order = at.indices();
    current_order.insert(current_order.end(), rest.indices().begin(), rest.indices().end());

    std::vector<std::size_t> current_dims(sys.factor_count());
    std::vector<std::size_t> slot_of_factor(sys.factor_count());
    for (std::size_t slot = 0; slot < current_order.size(); ++slot) {
        current_dims[slot] = sys.dim(current_order[slot]);
        slot_of_factor[current_order[slot]] = slot;
    }
    return permute_systems(contiguous, MultiSystem(std::move(current_dims)), slot_of_factor);
}

}  // namespace lkh
