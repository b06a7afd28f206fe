#pragma once

#include "linrel/symplectic.hpp"

namespace linrel {

/// Multiplicities of the elementary types of a subspace triple (A, B, C) with
/// B contained in A; types 3, 5 and 9 cannot occur in that case.
struct TripleMultiplicities {
    std::size_t n1, n2, n4, n6, n7, n8;
    bool operator==(const TripleMultiplicities&) const = default;
};

/// Multiplicities of the five elementary types of an isotropic pair (A, B),
/// counted by half the dimension of each elementary block.
struct IsoPairMultiplicities {
    std::size_t n1, n2, n3, n4, n5;
    bool operator==(const IsoPairMultiplicities&) const = default;
};

/// Closed-form dimension counting; additive over direct sums of elementary
/// types, so it recovers the unique multiplicities. Requires B inside A.
TripleMultiplicities triple_multiplicities(std::size_t v_dim, const Subspace& a,
                                           const Subspace& b, const Subspace& c);

/// As above for a pair of isotropic subspaces of a symplectic space.
IsoPairMultiplicities isotropic_pair_multiplicities(const SymplecticSpace& x, const Subspace& a,
                                                    const Subspace& b);

struct WWIndices {
    std::size_t defect, excess, shadow_dim;
    bool operator==(const WWIndices&) const = default;
};

/// Table-predicted (defect, excess, shadow dim) = (n1, n8, n6).
WWIndices ww_indices_from_multiplicities(const TripleMultiplicities& m);

/// Table-predicted (defect, excess, shadow dim) = (n1 + n2, n1, n3).
WWIndices ww_indices_from_multiplicities(const IsoPairMultiplicities& m);

}  // namespace linrel
