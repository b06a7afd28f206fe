#pragma once

#include <vector>

#include "linrel/matrix.hpp"

namespace linrel {

/// A subspace of a coordinate space, stored as the unique RREF basis of any
/// spanning set. Two Subspace values are equal as sets iff they are equal
/// entrywise, which gives decidable equality for everything built on top.
class Subspace {
public:
    /// Row space of `vectors`; ambient dimension is the column count.
    static Subspace span(const Matrix& vectors);
    /// As above but with the ambient dimension checked explicitly.
    static Subspace span(const Matrix& vectors, std::size_t ambient_dim);
    static Subspace zero(std::size_t ambient_dim, const FieldSpec& field);
    static Subspace full(std::size_t ambient_dim, const FieldSpec& field);

    std::size_t ambient_dim() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    const FieldSpec& field() const { return basis_.field(); }
    /// RREF basis, full row rank, zero rows removed.
    const Matrix& basis() const { return basis_; }
    /// Pivot column of each basis row, strictly increasing.
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_dim(); }

    bool operator==(const Subspace& rhs) const { return basis_ == rhs.basis_; }
    bool operator!=(const Subspace& rhs) const { return !(*this == rhs); }

private:
    Subspace(Matrix basis, std::vector<std::size_t> pivots)
        : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Smallest subspace containing both; ambient and field must match.
Subspace sum(const Subspace& a, const Subspace& b);

/// Set-theoretic intersection (Zassenhaus block reduction).
Subspace intersect(const Subspace& a, const Subspace& b);

/// {xi : xi(x) = 0 for all x in a}, in the dual coordinate space under the
/// dual-basis identification. An inclusion-reversing involution.
Subspace annihilator(const Subspace& a);

bool contains(const Subspace& a, const std::vector<Scalar>& v);
bool subspace_contains(const Subspace& a, const Subspace& b);  // b subset of a

/// Block concatenation into ambient dim(a) + dim(b); same field required.
Subspace direct_sum(const Subspace& a, const Subspace& b);

/// Span of the non-pivot coordinate axes of a's basis: a deterministic
/// complement with a + result = ambient, a intersect result = 0.
Subspace pivot_complement(const Subspace& a);

/// Deterministic complement of b inside a (requires b subset of a):
/// the pivot-complement rule applied in a's pivot-coordinate chart.
Subspace complement_in(const Subspace& a, const Subspace& b);

/// {v : m * v^T = 0}, a subspace of the column coordinate space.
Subspace right_nullspace(const Matrix& m);

/// {u : u * map_rows lies in s}; map_rows has s.ambient_dim() columns.
Subspace preimage(const Matrix& map_rows, const Subspace& s);

/// Image of s under u -> u * map_rows.
Subspace apply_rows(const Subspace& s, const Matrix& map_rows);

/// Coordinate permutation: new coordinate i reads old coordinate src_of_dst[i].
Subspace permute_coords(const Subspace& s, const std::vector<std::size_t>& src_of_dst);

/// Projection onto the selected coordinates (in the order given).
Subspace select_coords(const Subspace& s, const std::vector<std::size_t>& coords);

/// Reduces v against the RREF basis; the remainder is zero iff v lies in a.
std::vector<Scalar> reduce_against(const Subspace& a, std::vector<Scalar> v);

}  // namespace linrel
