#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "linrel/field.hpp"

namespace linrel {

/// Dense row-major matrix over one FieldSpec. Matrices with zero rows or
/// zero columns are first-class values; dim-0 spaces rely on them.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const FieldSpec& field)
        : rows_(rows), cols_(cols), field_(field), entries_(rows * cols, Scalar::zero(field)) {}

    static Matrix identity(std::size_t n, const FieldSpec& field);
    static Matrix from_rows(const FieldSpec& field, std::size_t cols,
                            const std::vector<std::vector<Scalar>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Scalar& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    std::vector<Scalar> row(std::size_t i) const;

    Matrix transposed() const;
    Matrix negated() const;
    /// Stacks rhs below this matrix; column counts and fields must agree.
    Matrix vstack(const Matrix& rhs) const;
    /// Concatenates rhs to the right; row counts and fields must agree.
    Matrix hstack(const Matrix& rhs) const;
    Matrix operator*(const Matrix& rhs) const;

    bool is_zero() const;

    bool operator==(const Matrix& rhs) const;
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

private:
    std::size_t rows_, cols_;
    FieldSpec field_;
    std::vector<Scalar> entries_;
};

struct RrefResult {
    Matrix mat;                        // reduced row-echelon form, zero rows removed
    std::vector<std::size_t> pivots;   // pivot column of each remaining row, increasing
};

RrefResult rref_with_pivots(const Matrix& m);

/// Unique reduced row-echelon form with zero rows removed; row space preserved.
Matrix rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace linrel
