#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

namespace sctk {

using BigInt = boost::multiprecision::cpp_int;

/// Dense matrix over the integers with arbitrary-precision entries.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix from_rows(
        const std::vector<std::vector<long long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }
    const BigInt& operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    /// Bounds-checked access.
    const BigInt& at(std::size_t r, std::size_t c) const;

    IntegerMatrix transposed() const;
    bool is_zero() const;

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> data_;
};

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);

/// Invariant factors d_1 | d_2 | ... | d_r of an integer matrix.
struct SNFResult {
    std::vector<BigInt> invariant_factors;
    std::size_t rank() const { return invariant_factors.size(); }
};

/// Unimodular transforms with left * A * right = diag(invariant factors).
struct SNFTransforms {
    IntegerMatrix left, left_inv, right, right_inv;
};

SNFResult smith_normal_form(IntegerMatrix a);
SNFResult smith_normal_form(IntegerMatrix a, SNFTransforms& out);

/// Lattice basis of the integer kernel of a, as matrix columns.
IntegerMatrix kernel_basis(const IntegerMatrix& a);

/// Solves a * x = b over the integers for a with full column rank; throws
/// std::domain_error when no integral solution exists.
IntegerMatrix solve_integer(const IntegerMatrix& a, const IntegerMatrix& b);

}  // namespace sctk
