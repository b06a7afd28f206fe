#include "linrel/matrix.hpp"

namespace linrel {

Matrix Matrix::identity(std::size_t n, const FieldSpec& field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::from_rows(const FieldSpec& field, std::size_t cols,
                         const std::vector<std::vector<Scalar>>& rows) {
    Matrix m(rows.size(), cols, field);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw ValidationError("row length does not match column count");
        for (std::size_t j = 0; j < cols; ++j) {
            if (rows[i][j].field() != field) throw ValidationError("entry field mismatch");
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
    std::vector<Scalar> r;
    r.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r.push_back(at(i, j));
    return r;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::negated() const {
    Matrix n(rows_, cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) n.at(i, j) = -at(i, j);
    return n;
}

Matrix Matrix::vstack(const Matrix& rhs) const {
    if (cols_ != rhs.cols_ || field_ != rhs.field_) {
        throw ValidationError("vstack: column count or field mismatch");
    }
    Matrix s(rows_ + rhs.rows_, cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) s.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < rhs.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) s.at(rows_ + i, j) = rhs.at(i, j);
    return s;
}

Matrix Matrix::hstack(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || field_ != rhs.field_) {
        throw ValidationError("hstack: row count or field mismatch");
    }
    Matrix s(rows_, cols_ + rhs.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) s.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < rhs.cols_; ++j) s.at(i, cols_ + j) = rhs.at(i, j);
    }
    return s;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_ || field_ != rhs.field_) {
        throw ValidationError("matrix product: shape or field mismatch");
    }
    Matrix p(rows_, rhs.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                p.at(i, j) = p.at(i, j) + a * rhs.at(k, j);
            }
        }
    }
    return p;
}

bool Matrix::is_zero() const {
    for (const Scalar& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

bool Matrix::operator==(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || field_ != rhs.field_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] != rhs.entries_[i]) return false;
    }
    return true;
}

RrefResult rref_with_pivots(const Matrix& m) {
    Matrix work = m;
    const std::size_t rows = work.rows(), cols = work.cols();
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t pivot_row = lead;
        while (pivot_row < rows && work.at(pivot_row, col).is_zero()) ++pivot_row;
        if (pivot_row == rows) continue;
        if (pivot_row != lead) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(work.at(lead, j), work.at(pivot_row, j));
        }
        Scalar inv = work.at(lead, col).inverse();
        for (std::size_t j = col; j < cols; ++j) work.at(lead, j) = work.at(lead, j) * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == lead) continue;
            Scalar factor = work.at(i, col);
            if (factor.is_zero()) continue;
            for (std::size_t j = col; j < cols; ++j) {
                work.at(i, j) = work.at(i, j) - factor * work.at(lead, j);
            }
        }
        pivots.push_back(col);
        ++lead;
    }
    Matrix out(pivots.size(), cols, work.field());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = work.at(i, j);
    }
    return RrefResult{std::move(out), std::move(pivots)};
}

Matrix rref(const Matrix& m) { return rref_with_pivots(m).mat; }

std::size_t rank(const Matrix& m) { return rref_with_pivots(m).pivots.size(); }

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw ValidationError("inverse: matrix is not square");
    const std::size_t n = m.rows();
    RrefResult r = rref_with_pivots(m.hstack(Matrix::identity(n, m.field())));
    if (r.pivots.size() != n) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) {
        if (r.pivots[i] != i) return std::nullopt;
    }
    Matrix inv(n, n, m.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
    return inv;
}

}  // namespace linrel
