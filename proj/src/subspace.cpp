#include "linrel/subspace.hpp"

namespace linrel {

Subspace Subspace::span(const Matrix& vectors) {
    RrefResult r = rref_with_pivots(vectors);
    return Subspace(std::move(r.mat), std::move(r.pivots));
}

Subspace Subspace::span(const Matrix& vectors, std::size_t ambient_dim) {
    if (vectors.cols() != ambient_dim) {
        throw ValidationError("span: vector length does not match ambient dimension");
    }
    return span(vectors);
}

Subspace Subspace::zero(std::size_t ambient_dim, const FieldSpec& field) {
    return span(Matrix(0, ambient_dim, field));
}

Subspace Subspace::full(std::size_t ambient_dim, const FieldSpec& field) {
    return span(Matrix::identity(ambient_dim, field));
}

namespace {

void require_compatible(const Subspace& a, const Subspace& b, const char* op) {
    if (a.field() != b.field()) throw ValidationError(std::string(op) + ": field mismatch");
    if (a.ambient_dim() != b.ambient_dim()) {
        throw ValidationError(std::string(op) + ": ambient dimension mismatch");
    }
}

}  // namespace

Subspace sum(const Subspace& a, const Subspace& b) {
    require_compatible(a, b, "sum");
    return Subspace::span(a.basis().vstack(b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    require_compatible(a, b, "intersect");
    const std::size_t n = a.ambient_dim();
    // Zassenhaus: row-reduce [A|A; B|0]; echelon rows with zero left half carry
    // a basis of the intersection in their right half.
    Matrix top = a.basis().hstack(a.basis());
    Matrix bottom = b.basis().hstack(Matrix(b.dim(), n, b.field()));
    Matrix reduced = rref(top.vstack(bottom));
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t i = 0; i < reduced.rows(); ++i) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j) left_zero = reduced.at(i, j).is_zero();
        if (!left_zero) continue;
        std::vector<Scalar> row;
        row.reserve(n);
        for (std::size_t j = 0; j < n; ++j) row.push_back(reduced.at(i, n + j));
        rows.push_back(std::move(row));
    }
    return Subspace::span(Matrix::from_rows(a.field(), n, rows));
}

Subspace right_nullspace(const Matrix& m) {
    RrefResult r = rref_with_pivots(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        std::vector<Scalar> v(n, Scalar::zero(m.field()));
        v[j] = Scalar::one(m.field());
        for (std::size_t i = 0; i < r.pivots.size(); ++i) {
            v[r.pivots[i]] = -r.mat.at(i, j);
        }
        rows.push_back(std::move(v));
    }
    return Subspace::span(Matrix::from_rows(m.field(), n, rows));
}

Subspace annihilator(const Subspace& a) { return right_nullspace(a.basis()); }

std::vector<Scalar> reduce_against(const Subspace& a, std::vector<Scalar> v) {
    if (v.size() != a.ambient_dim()) throw ValidationError("reduce: vector/ambient mismatch");
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const Scalar& c = v[a.pivots()[i]];
        if (c.is_zero()) continue;
        Scalar factor = c;
        for (std::size_t j = 0; j < v.size(); ++j) {
            v[j] = v[j] - factor * a.basis().at(i, j);
        }
    }
    return v;
}

bool contains(const Subspace& a, const std::vector<Scalar>& v) {
    std::vector<Scalar> rem = reduce_against(a, v);
    for (const Scalar& c : rem) {
        if (!c.is_zero()) return false;
    }
    return true;
}

bool subspace_contains(const Subspace& a, const Subspace& b) {
    require_compatible(a, b, "subspace_contains");
    for (std::size_t i = 0; i < b.dim(); ++i) {
        if (!contains(a, b.basis().row(i))) return false;
    }
    return true;
}

Subspace direct_sum(const Subspace& a, const Subspace& b) {
    if (a.field() != b.field()) throw ValidationError("direct_sum: field mismatch");
    const std::size_t m = a.ambient_dim(), n = b.ambient_dim();
    Matrix top = a.basis().hstack(Matrix(a.dim(), n, a.field()));
    Matrix bottom = Matrix(b.dim(), m, b.field()).hstack(b.basis());
    // Block-diagonal stacking of two RREFs is already RREF; span() keeps it canonical.
    return Subspace::span(top.vstack(bottom));
}

Subspace pivot_complement(const Subspace& a) {
    const std::size_t n = a.ambient_dim();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : a.pivots()) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        std::vector<Scalar> v(n, Scalar::zero(a.field()));
        v[j] = Scalar::one(a.field());
        rows.push_back(std::move(v));
    }
    return Subspace::span(Matrix::from_rows(a.field(), n, rows));
}

Subspace complement_in(const Subspace& a, const Subspace& b) {
    require_compatible(a, b, "complement_in");
    if (!subspace_contains(a, b)) throw ValidationError("complement_in: b is not contained in a");
    // Chart a by its pivot coordinates: x in a is determined by (x[p1],...,x[pk]),
    // and the inverse chart is u -> u * basis(a).
    std::vector<std::vector<Scalar>> chart_rows;
    for (std::size_t i = 0; i < b.dim(); ++i) {
        std::vector<Scalar> u;
        u.reserve(a.dim());
        for (std::size_t p : a.pivots()) u.push_back(b.basis().at(i, p));
        chart_rows.push_back(std::move(u));
    }
    Subspace b_in_chart = Subspace::span(Matrix::from_rows(a.field(), a.dim(), chart_rows));
    Subspace comp_in_chart = pivot_complement(b_in_chart);
    return apply_rows(comp_in_chart, a.basis());
}

Subspace preimage(const Matrix& map_rows, const Subspace& s) {
    if (map_rows.cols() != s.ambient_dim() || map_rows.field() != s.field()) {
        throw ValidationError("preimage: map/subspace mismatch");
    }
    Subspace ann = annihilator(s);
    // u * map_rows in s  <=>  (map_rows * ann_basis^T) annihilates u.
    Matrix cond = map_rows * ann.basis().transposed();
    return right_nullspace(cond.transposed());
}

Subspace apply_rows(const Subspace& s, const Matrix& map_rows) {
    if (s.ambient_dim() != map_rows.rows() || s.field() != map_rows.field()) {
        throw ValidationError("apply_rows: map/subspace mismatch");
    }
    return Subspace::span(s.basis() * map_rows);
}

Subspace permute_coords(const Subspace& s, const std::vector<std::size_t>& src_of_dst) {
    if (src_of_dst.size() != s.ambient_dim()) {
        throw ValidationError("permute_coords: permutation length mismatch");
    }
    Matrix m(s.dim(), s.ambient_dim(), s.field());
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.ambient_dim(); ++j) m.at(i, j) = s.basis().at(i, src_of_dst[j]);
    return Subspace::span(m);
}

Subspace select_coords(const Subspace& s, const std::vector<std::size_t>& coords) {
    Matrix m(s.dim(), coords.size(), s.field());
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < coords.size(); ++j) m.at(i, j) = s.basis().at(i, coords[j]);
    return Subspace::span(m);
}

}  // namespace linrel
