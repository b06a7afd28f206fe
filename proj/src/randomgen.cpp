#include "linrel/randomgen.hpp"

namespace linrel {

Scalar random_scalar(SplitMix64& rng, const FieldSpec& field) {
    if (field.is_rational()) {
        long num = static_cast<long>(rng.below(9)) - 4;
        long den = static_cast<long>(rng.below(3)) + 1;
        return Scalar::from_rational(mpq_class(num, den));
    }
    return Scalar::from_residue(field, rng.below(field.characteristic()));
}

Matrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols, const FieldSpec& field) {
    Matrix m(rows, cols, field);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_scalar(rng, field);
    return m;
}

Subspace random_subspace(SplitMix64& rng, std::size_t ambient, const FieldSpec& field) {
    std::size_t rows = rng.below(ambient + 1);
    return Subspace::span(random_matrix(rng, rows, ambient, field));
}

Matrix random_invertible(SplitMix64& rng, std::size_t n, const FieldSpec& field) {
    for (;;) {
        Matrix m = random_matrix(rng, n, n, field);
        if (rank(m) == n) return m;
    }
}

LinearRelation random_relation(SplitMix64& rng, const VectorSpaceObj& target,
                               const VectorSpaceObj& source) {
    return LinearRelation(target, source, random_subspace(rng, target.dim + source.dim, target.field));
}

RelationChain random_chain(SplitMix64& rng, std::size_t length, std::size_t max_dim,
                           const FieldSpec& field) {
    std::vector<std::size_t> dims;
    for (std::size_t i = 0; i <= length; ++i) dims.push_back(rng.below(max_dim + 1));
    std::vector<LinearRelation> links;
    for (std::size_t i = 0; i < length; ++i) {
        links.push_back(random_relation(rng, VectorSpaceObj{dims[i], field, {}},
                                        VectorSpaceObj{dims[i + 1], field, {}}));
    }
    return RelationChain(std::move(links));
}

Subspace random_isotropic(SplitMix64& rng, const SymplecticSpace& x, std::size_t target_dim) {
    const std::size_t cap = x.dim() / 2;
    if (target_dim > cap) target_dim = cap;
    Subspace s = Subspace::zero(x.dim(), x.field());
    while (s.dim() < target_dim) {
        Subspace orth = symp_orthogonal(x, s);
        Matrix coeffs = random_matrix(rng, 1, orth.dim(), x.field());
        Matrix candidate = coeffs * orth.basis();
        if (contains(s, candidate.row(0))) continue;  // zero or already present; redraw
        s = sum(s, Subspace::span(candidate));
    }
    return s;
}

Subspace random_lagrangian(SplitMix64& rng, const SymplecticSpace& x) {
    return random_isotropic(rng, x, x.dim() / 2);
}

Subspace random_coisotropic(SplitMix64& rng, const SymplecticSpace& x, std::size_t orth_dim) {
    return symp_orthogonal(x, random_isotropic(rng, x, orth_dim));
}

SympRelation random_symp_relation(SplitMix64& rng, CategoryTag tag, const SymplecticSpace& target,
                                  const SymplecticSpace& source) {
    SymplecticSpace graph = product(target, source.opposite());
    const std::size_t half = graph.dim() / 2;
    // One case in four is a block product A x B; those have large kernels and
    // indeterminacies and hit the nonzero-excess corners of the index region.
    const bool block_product = rng.below(4) == 0;
    switch (tag) {
        case CategoryTag::SLREL: {
            Subspace space = block_product
                                 ? direct_sum(random_lagrangian(rng, target),
                                              random_lagrangian(rng, source))
                                 : random_lagrangian(rng, graph);
            return SympRelation(target, source, std::move(space), SubspaceClass::Lagrangian);
        }
        case CategoryTag::ILREL: {
            Subspace space =
                block_product
                    ? direct_sum(random_isotropic(rng, target, rng.below(target.dim() / 2 + 1)),
                                 random_isotropic(rng, source, rng.below(source.dim() / 2 + 1)))
                    : random_isotropic(rng, graph, rng.below(half + 1));
            return SympRelation(target, source, std::move(space), SubspaceClass::Isotropic);
        }
        case CategoryTag::CLREL: {
            Subspace space =
                block_product
                    ? direct_sum(random_coisotropic(rng, target, rng.below(target.dim() / 2 + 1)),
                                 random_coisotropic(rng, source, rng.below(source.dim() / 2 + 1)))
                    : random_coisotropic(rng, graph, rng.below(half + 1));
            return SympRelation(target, source, std::move(space), SubspaceClass::Coisotropic);
        }
        default:
            throw ValidationError("random_symp_relation: tag must be symplectic");
    }
}

SympChain random_symp_chain(SplitMix64& rng, CategoryTag tag, std::size_t length,
                            std::size_t max_n, const FieldSpec& field) {
    std::vector<SympRelation> links;
    SymplecticSpace target = SymplecticSpace::standard(rng.below(max_n + 1), field);
    for (std::size_t i = 0; i < length; ++i) {
        // A quarter of the links revisit the previous one transposed; paired
        // with block products this populates the nonzero-excess corner.
        if (i > 0 && rng.below(4) == 0) {
            links.push_back(transpose(links.back()));
        } else {
            SymplecticSpace source = SymplecticSpace::standard(rng.below(max_n + 1), field);
            links.push_back(random_symp_relation(rng, tag, target, source));
        }
        target = links.back().source();
    }
    return SympChain(std::move(links));
}

WWMorphism random_ww_morphism(SplitMix64& rng, CategoryTag tag, std::size_t max_dim,
                              std::size_t max_index, const FieldSpec& field) {
    std::size_t defect = rng.below(max_index + 1);
    std::size_t excess = rng.below(max_index + 1);
    switch (tag) {
        case CategoryTag::ILREL: excess = excess % (defect + 1); break;
        case CategoryTag::CLREL: defect = defect % (excess + 1); break;
        case CategoryTag::SLREL: excess = defect; break;
        default: break;
    }
    if (tag == CategoryTag::LREL) {
        VectorSpaceObj target{rng.below(max_dim + 1), field, {}};
        VectorSpaceObj source{rng.below(max_dim + 1), field, {}};
        return WWMorphism(tag, random_relation(rng, target, source), defect, excess);
    }
    SymplecticSpace target = SymplecticSpace::standard(rng.below(max_dim / 2 + 1), field);
    SymplecticSpace source = SymplecticSpace::standard(rng.below(max_dim / 2 + 1), field);
    return WWMorphism(tag, random_symp_relation(rng, tag, target, source), defect, excess);
}

}  // namespace linrel
