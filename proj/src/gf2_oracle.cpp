#include "linrel/gf2_oracle.hpp"

namespace linrel::gf2 {

namespace {

constexpr std::size_t kMaxAmbient = 24;

void require_gf2(const FieldSpec& field) {
    if (field.is_rational() || field.characteristic() != 2) {
        throw ValidationError("gf2 oracle: field must be GF(2)");
    }
}

}  // namespace

BitSpace::BitSpace(std::size_t ambient) : ambient_(ambient) {
    if (ambient > kMaxAmbient) throw ValidationError("gf2 oracle: ambient dimension too large");
}

void BitSpace::insert(Mask v) {
    // Reduce v by existing rows (each row keyed by its highest set bit).
    for (Mask row : rows_) {
        Mask high = Mask(1) << (31 - __builtin_clz(row));
        if (v & high) v ^= row;
    }
    if (v == 0) return;
    // Back-substitute so every pivot column is cleared elsewhere.
    Mask high = Mask(1) << (31 - __builtin_clz(v));
    for (Mask& row : rows_) {
        if (row & high) row ^= v;
    }
    rows_.push_back(v);
}

bool BitSpace::contains(Mask v) const {
    for (Mask row : rows_) {
        Mask high = Mask(1) << (31 - __builtin_clz(row));
        if (v & high) v ^= row;
    }
    return v == 0;
}

BitSpace from_subspace(const Subspace& s) {
    require_gf2(s.field());
    BitSpace space(s.ambient_dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
        Mask v = 0;
        for (std::size_t j = 0; j < s.ambient_dim(); ++j) {
            if (s.basis().at(i, j).residue() != 0) v |= Mask(1) << j;
        }
        space.insert(v);
    }
    return space;
}

std::uint64_t count_members(const BitSpace& s) {
    std::uint64_t count = 0;
    const std::uint64_t limit = std::uint64_t(1) << s.ambient();
    for (std::uint64_t v = 0; v < limit; ++v) {
        if (s.contains(static_cast<Mask>(v))) ++count;
    }
    return count;
}

std::uint64_t count_trajectories(const RelationChain& chain, Mask target_end, Mask source_end) {
    require_gf2(chain.links().front().field());
    const std::size_t r = chain.size();
    std::vector<BitSpace> links;
    for (const LinearRelation& f : chain.links()) links.push_back(from_subspace(f.space()));
    std::vector<std::size_t> inner_dims;
    for (std::size_t j = 0; j + 1 < r; ++j) inner_dims.push_back(chain.links()[j].source().dim);

    std::size_t inner_total = 0;
    for (std::size_t d : inner_dims) inner_total += d;
    if (inner_total > kMaxAmbient) throw ValidationError("gf2 oracle: chain too large");

    std::uint64_t count = 0;
    const std::uint64_t limit = std::uint64_t(1) << inner_total;
    for (std::uint64_t code = 0; code < limit; ++code) {
        // Decode (x_1, ..., x_{r-1}); the ends are fixed.
        std::vector<Mask> inner;
        std::uint64_t rest = code;
        for (std::size_t d : inner_dims) {
            inner.push_back(static_cast<Mask>(rest & ((std::uint64_t(1) << d) - 1)));
            rest >>= d;
        }
        bool ok = true;
        for (std::size_t j = 0; j < r && ok; ++j) {
            Mask target_part = (j == 0) ? target_end : inner[j - 1];
            Mask source_part = (j + 1 == r) ? source_end : inner[j];
            const std::size_t dx = chain.links()[j].target().dim;
            Mask pair = target_part | (source_part << dx);
            ok = links[j].contains(pair);
        }
        if (ok) ++count;
    }
    return count;
}

std::uint64_t count_zero_trajectories(const RelationChain& chain) {
    return count_trajectories(chain, 0, 0);
}

std::size_t chain_ambient(const RelationChain& chain) {
    std::size_t total = chain.links().front().target().dim;
    for (const LinearRelation& f : chain.links()) total += 2 * f.source().dim;
    total -= chain.links().back().source().dim;
    return total;
}

std::uint64_t count_sum_subspace_members(const RelationChain& chain) {
    require_gf2(chain.links().front().field());
    const std::size_t r = chain.size();
    const std::size_t total = chain_ambient(chain);
    BitSpace space(total);

    // Generators of f_1 x ... x f_r in the doubled layout.
    std::size_t offset = 0;
    for (std::size_t j = 0; j < r; ++j) {
        const LinearRelation& f = chain.links()[j];
        const Subspace& s = f.space();
        for (std::size_t i = 0; i < s.dim(); ++i) {
            Mask v = 0;
            for (std::size_t c = 0; c < s.ambient_dim(); ++c) {
                if (s.basis().at(i, c).residue() != 0) v |= Mask(1) << (offset + c);
            }
            space.insert(v);
        }
        offset += f.target().dim + f.source().dim;
    }

    // Generators of X_0 x Diag x ... x Diag x X_r.
    const std::size_t d0 = chain.links().front().target().dim;
    for (std::size_t t = 0; t < d0; ++t) space.insert(Mask(1) << t);
    const std::size_t dr = chain.links().back().source().dim;
    for (std::size_t t = 0; t < dr; ++t) space.insert(Mask(1) << (total - dr + t));
    offset = 0;
    for (std::size_t j = 0; j + 1 < r; ++j) {
        const LinearRelation& f = chain.links()[j];
        const std::size_t first_copy = offset + f.target().dim;
        const std::size_t second_copy = first_copy + f.source().dim;
        for (std::size_t t = 0; t < f.source().dim; ++t) {
            space.insert((Mask(1) << (first_copy + t)) | (Mask(1) << (second_copy + t)));
        }
        offset = second_copy;
    }

    return count_members(space);
}

}  // namespace linrel::gf2
