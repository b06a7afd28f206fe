#pragma once

#include <cstdint>

#include "linrel/relation.hpp"

namespace linrel::gf2 {

/// Brute-force GF(2) checker, deliberately independent of the Subspace
/// machinery: subspaces become bit masks, elimination is XOR on words, and
/// counting is exhaustive enumeration. Ambients are capped at 24 bits.
using Mask = std::uint32_t;

/// XOR-echelonized basis of masks.
class BitSpace {
public:
    explicit BitSpace(std::size_t ambient);
    void insert(Mask v);
    bool contains(Mask v) const;
    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient() const { return ambient_; }

private:
    std::size_t ambient_;
    std::vector<Mask> rows_;  // nonzero, decreasing leading bit
};

BitSpace from_subspace(const Subspace& s);

/// Number of vectors of the ambient cube lying in the space (must be 2^dim).
std::uint64_t count_members(const BitSpace& s);

/// Number of trajectories through the chain between the two endpoint masks,
/// counted by enumerating all intermediate tuples. Zero when the endpoints
/// are unrelated; 2^excess when they are.
std::uint64_t count_trajectories(const RelationChain& chain, Mask target_end, Mask source_end);

/// Trajectories with both endpoints zero.
std::uint64_t count_zero_trajectories(const RelationChain& chain);

/// Size of (f_1 x ... x f_r) + (X_0 x Diag x ... x Diag x X_r), measured by
/// exhaustively testing every vector of the doubled ambient space.
std::uint64_t count_sum_subspace_members(const RelationChain& chain);

/// The doubled ambient dimension the two counts above live in.
std::size_t chain_ambient(const RelationChain& chain);

}  // namespace linrel::gf2
