#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace lkh {

using Complex = std::complex<double>;

// Dense row-major complex matrix. The single carrier type for operators,
// density matrices and intermediates in this library.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);  // zero-filled
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(const std::vector<double>& d);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Complex>& entries() const { return entries_; }
    std::vector<Complex>& entries() { return entries_; }

    bool all_finite() const;

    bool operator==(const ComplexMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

// Elementwise and product arithmetic. Shapes are checked; mismatches throw
// ShapeError.
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(const ComplexMatrix& a, Complex factor);
ComplexMatrix mul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);

// ||a - a^dagger||_F, the Hermitian deviation used by preconditions.
double hermitian_deviation(const ComplexMatrix& a);

// max_ij |a_ij - b_ij|
double max_entry_distance(const ComplexMatrix& a, const ComplexMatrix& b);

// Replaces a by its Hermitian part (a + a^dagger)/2.
ComplexMatrix hermitian_part(const ComplexMatrix& a);

inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) { return add(a, b); }
inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) { return sub(a, b); }
inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return mul(a, b); }
inline ComplexMatrix operator*(Complex factor, const ComplexMatrix& a) { return scale(a, factor); }
inline ComplexMatrix operator*(double factor, const ComplexMatrix& a) { return scale(a, factor); }

// Vector helpers on flat complex arrays.
std::vector<Complex> mat_vec(const ComplexMatrix& a, std::span<const Complex> v);
Complex inner(std::span<const Complex> a, std::span<const Complex> b);  // <a, b>, conjugate-linear in a
double vec_norm(std::span<const Complex> v);
ComplexMatrix outer(std::span<const Complex> v);  // |v><v|
std::vector<Complex> kron_vec(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace lkh
