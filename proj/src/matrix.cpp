#include "lkh/matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "lkh/errors.hpp"

namespace lkh {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw ShapeError("ComplexMatrix: entry count does not match rows*cols");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    ComplexMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw ShapeError("from_rows: ragged row lengths");
        std::size_t j = 0;
        for (const auto& e : row) m(i, j++) = e;
        ++i;
    }
    return m;
}

bool ComplexMatrix::all_finite() const {
    for (const auto& e : entries_) {
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
    }
    return true;
}

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError(std::string(op) + ": shape mismatch");
    }
}

}  // namespace

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "add");
    ComplexMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.entries().size(); ++i) r.entries()[i] = a.entries()[i] + b.entries()[i];
    return r;
}

ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "sub");
    ComplexMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.entries().size(); ++i) r.entries()[i] = a.entries()[i] - b.entries()[i];
    return r;
}

ComplexMatrix scale(const ComplexMatrix& a, Complex factor) {
    ComplexMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.entries().size(); ++i) r.entries()[i] = factor * a.entries()[i];
    return r;
}

ComplexMatrix mul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw ShapeError("mul: inner dimensions do not match");
    ComplexMatrix r(a.rows(), b.cols());
    // i-k-j order keeps the inner loop contiguous in both b and r.
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                r(i, j) += aik * b(k, j);
            }
        }
    }
    return r;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
    return r;
}

Complex trace(const ComplexMatrix& a) {
    if (!a.is_square()) throw ShapeError("trace: matrix not square");
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const auto& e : a.entries()) s += std::norm(e);
    return std::sqrt(s);
}

double hermitian_deviation(const ComplexMatrix& a) {
    if (!a.is_square()) throw ShapeError("hermitian_deviation: matrix not square");
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(a(i, j) - std::conj(a(j, i)));
    return std::sqrt(s);
}

double max_entry_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "max_entry_distance");
    double m = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return m;
}

ComplexMatrix hermitian_part(const ComplexMatrix& a) {
    if (!a.is_square()) throw ShapeError("hermitian_part: matrix not square");
    ComplexMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const Complex v = 0.5 * (a(i, j) + std::conj(a(j, i)));
            r(i, j) = v;
            r(j, i) = std::conj(v);
        }
        r(i, i) = Complex{r(i, i).real(), 0.0};
    }
    return r;
}

std::vector<Complex> mat_vec(const ComplexMatrix& a, std::span<const Complex> v) {
    if (a.cols() != v.size()) throw ShapeError("mat_vec: vector length does not match columns");
    std::vector<Complex> r(a.rows(), Complex{0.0, 0.0});
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Complex acc{0.0, 0.0};
        for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * v[j];
        r[i] = acc;
    }
    return r;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) throw ShapeError("inner: length mismatch");
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

double vec_norm(std::span<const Complex> v) {
    double s = 0.0;
    for (const auto& e : v) s += std::norm(e);
    return std::sqrt(s);
}

ComplexMatrix outer(std::span<const Complex> v) {
    ComplexMatrix r(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r(i, j) = v[i] * std::conj(v[j]);
    return r;
}

std::vector<Complex> kron_vec(std::span<const Complex> a, std::span<const Complex> b) {
    std::vector<Complex> r(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i * b.size() + j] = a[i] * b[j];
    return r;
}

}  // namespace lkh
