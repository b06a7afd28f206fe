#pragma once

#include <cstdint>

#include "linrel/ww.hpp"

namespace linrel {

/// SplitMix64: the fixed generator behind every seeded suite. Identical seeds
/// produce identical streams on every platform, which is what makes reports
/// byte-reproducible.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

/// Scalars: rationals are n/d with n in [-4,4], d in {1,2,3}; GF(p) draws a residue.
Scalar random_scalar(SplitMix64& rng, const FieldSpec& field);

Matrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols, const FieldSpec& field);

/// Random matrix rows, then RREF: dimension at most max_rows.
Subspace random_subspace(SplitMix64& rng, std::size_t ambient, const FieldSpec& field);

Matrix random_invertible(SplitMix64& rng, std::size_t n, const FieldSpec& field);

LinearRelation random_relation(SplitMix64& rng, const VectorSpaceObj& target,
                               const VectorSpaceObj& source);

/// Chain of `length` relations over objects of dimension <= max_dim.
RelationChain random_chain(SplitMix64& rng, std::size_t length, std::size_t max_dim,
                           const FieldSpec& field);

/// Grown vector-by-vector inside the running symplectic orthogonal, up to
/// target_dim (capped at dim/2).
Subspace random_isotropic(SplitMix64& rng, const SymplecticSpace& x, std::size_t target_dim);
Subspace random_lagrangian(SplitMix64& rng, const SymplecticSpace& x);
Subspace random_coisotropic(SplitMix64& rng, const SymplecticSpace& x, std::size_t orth_dim);

/// A random valid morphism target <- source of the tagged category.
SympRelation random_symp_relation(SplitMix64& rng, CategoryTag tag, const SymplecticSpace& target,
                                  const SymplecticSpace& source);

/// Chain of valid morphisms between standard spaces with half-dim <= max_n.
SympChain random_symp_chain(SplitMix64& rng, CategoryTag tag, std::size_t length,
                            std::size_t max_n, const FieldSpec& field);

/// Random normal-form morphism: random shadow plus allowed (defect, excess).
WWMorphism random_ww_morphism(SplitMix64& rng, CategoryTag tag, std::size_t max_dim,
                              std::size_t max_index, const FieldSpec& field);

}  // namespace linrel
