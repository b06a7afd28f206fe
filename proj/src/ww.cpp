#include "linrel/ww.hpp"

namespace linrel {

LinearRelation any_as_linear(const AnyRelation& r) {
    if (const auto* lin = std::get_if<LinearRelation>(&r)) return *lin;
    return std::get<SympRelation>(r).as_linear();
}

AnyRelation any_compose(const AnyRelation& f, const AnyRelation& g) {
    if (std::holds_alternative<LinearRelation>(f) && std::holds_alternative<LinearRelation>(g)) {
        return compose(std::get<LinearRelation>(f), std::get<LinearRelation>(g));
    }
    if (std::holds_alternative<SympRelation>(f) && std::holds_alternative<SympRelation>(g)) {
        return compose(std::get<SympRelation>(f), std::get<SympRelation>(g));
    }
    throw ValidationError("compose: mixed plain and symplectic relations");
}

AnyRelation any_transpose(const AnyRelation& f) {
    if (const auto* lin = std::get_if<LinearRelation>(&f)) return transpose(*lin);
    return transpose(std::get<SympRelation>(f));
}

AnyRelation any_tensor(const AnyRelation& f, const AnyRelation& g) {
    if (std::holds_alternative<LinearRelation>(f) && std::holds_alternative<LinearRelation>(g)) {
        return tensor(std::get<LinearRelation>(f), std::get<LinearRelation>(g));
    }
    if (std::holds_alternative<SympRelation>(f) && std::holds_alternative<SympRelation>(g)) {
        return tensor(std::get<SympRelation>(f), std::get<SympRelation>(g));
    }
    throw ValidationError("tensor: mixed plain and symplectic relations");
}

bool any_equal(const AnyRelation& a, const AnyRelation& b) {
    if (a.index() != b.index()) return false;
    if (const auto* lin = std::get_if<LinearRelation>(&a)) {
        return *lin == std::get<LinearRelation>(b);
    }
    return std::get<SympRelation>(a) == std::get<SympRelation>(b);
}

namespace {

void require_tag_constraint(CategoryTag tag, std::size_t defect, std::size_t excess) {
    switch (tag) {
        case CategoryTag::LREL: return;
        case CategoryTag::ILREL:
            if (excess > defect) throw ValidationError("ILREL morphism requires excess <= defect");
            return;
        case CategoryTag::CLREL:
            if (defect > excess) throw ValidationError("CLREL morphism requires defect <= excess");
            return;
        case CategoryTag::SLREL:
            if (defect != excess) throw ValidationError("SLREL morphism requires defect = excess");
            return;
    }
}

void require_valid_shadow(CategoryTag tag, const AnyRelation& shadow) {
    if (tag == CategoryTag::LREL) {
        if (!std::holds_alternative<LinearRelation>(shadow)) {
            throw ValidationError("LREL morphism must have a plain linear shadow");
        }
        return;
    }
    const auto* symp = std::get_if<SympRelation>(&shadow);
    if (symp == nullptr) {
        throw ValidationError("symplectic WW morphism must have a symplectic shadow");
    }
    if (!check_morphism(*symp, tag)) {
        throw ValidationError("shadow is not a valid " + tag_name(tag) + " morphism");
    }
}

std::pair<std::size_t, std::size_t> pair_indices(const AnyRelation& f, const AnyRelation& g) {
    LinearRelation lf = any_as_linear(f), lg = any_as_linear(g);
    return {defect_pair(lf, lg), excess_pair(lf, lg)};
}

}  // namespace

WWMorphism::WWMorphism(CategoryTag tag, AnyRelation shadow, std::size_t defect, std::size_t excess)
    : tag_(tag), shadow_(std::move(shadow)), defect_(defect), excess_(excess) {
    require_valid_shadow(tag_, shadow_);
    require_tag_constraint(tag_, defect_, excess_);
}

WWMorphism ww_embed(const LinearRelation& f) {
    return WWMorphism(CategoryTag::LREL, f, 0, 0);
}

WWMorphism ww_embed(const SympRelation& f, CategoryTag tag) {
    // Viewing a symplectic relation in LREL forgets the forms.
    if (tag == CategoryTag::LREL) return WWMorphism(tag, f.as_linear(), 0, 0);
    return WWMorphism(tag, f, 0, 0);
}

WWMorphism ww_compose(const WWMorphism& m, const WWMorphism& n) {
    if (m.tag() != n.tag()) throw ValidationError("ww_compose: category tag mismatch");
    auto [pair_defect, pair_excess] = pair_indices(m.shadow(), n.shadow());
    return WWMorphism(m.tag(), any_compose(m.shadow(), n.shadow()),
                      m.defect() + n.defect() + pair_defect,
                      m.excess() + n.excess() + pair_excess);
}

WWMorphism ww_from_chain(const RelationChain& chain, CategoryTag tag) {
    if (tag != CategoryTag::LREL) {
        throw ValidationError("plain chains embed in LREL only; use a symplectic chain");
    }
    return WWMorphism(tag, compose_chain(chain), defect_seq(chain), excess_seq(chain));
}

WWMorphism ww_from_chain(const SympChain& chain, CategoryTag tag) {
    if (tag == CategoryTag::LREL) return ww_from_chain(chain.as_linear_chain(), tag);
    for (const SympRelation& link : chain.links()) {
        if (!check_morphism(link, tag)) {
            throw ValidationError("chain entry is not a valid " + tag_name(tag) + " morphism");
        }
    }
    return WWMorphism(tag, compose_chain(chain), defect_seq(chain), excess_seq(chain));
}

WWMorphism ww_transpose(const WWMorphism& m) {
    return WWMorphism(m.tag(), any_transpose(m.shadow()), m.defect(), m.excess());
}

WWMorphism ww_tensor(const WWMorphism& m, const WWMorphism& n) {
    if (m.tag() != n.tag()) throw ValidationError("ww_tensor: category tag mismatch");
    return WWMorphism(m.tag(), any_tensor(m.shadow(), n.shadow()), m.defect() + n.defect(),
                      m.excess() + n.excess());
}

namespace {

// One generator block over the unit object: the pair of subspaces (T, S) of a
// block space K, read as relations A = 0 x T in unit x K and B = S x 0 in K x unit.
struct GeneratorBlock {
    Subspace t, s;  // subspaces of the block space K
};

// Blocks realizing (defect, excess) on top of a strongly transversal base.
// LREL uses a 1-dim K; the symplectic tags use the standard 2-dim K.
std::vector<GeneratorBlock> generator_blocks(CategoryTag tag, std::size_t defect,
                                             std::size_t excess, const FieldSpec& k) {
    std::vector<GeneratorBlock> blocks;
    if (tag == CategoryTag::LREL) {
        Subspace line_zero = Subspace::zero(1, k);
        Subspace line_full = Subspace::full(1, k);
        for (std::size_t i = 0; i < defect; ++i) blocks.push_back({line_zero, line_zero});
        for (std::size_t i = 0; i < excess; ++i) blocks.push_back({line_full, line_full});
        return blocks;
    }
    Matrix q_row(1, 2, k);
    q_row.at(0, 0) = Scalar::one(k);
    Subspace q_line = Subspace::span(q_row);  // lagrangian line in the standard plane
    Subspace plane_zero = Subspace::zero(2, k);
    Subspace plane_full = Subspace::full(2, k);
    switch (tag) {
        case CategoryTag::ILREL:
            for (std::size_t i = 0; i < defect - excess; ++i) blocks.push_back({q_line, plane_zero});
            for (std::size_t i = 0; i < excess; ++i) blocks.push_back({q_line, q_line});
            break;
        case CategoryTag::CLREL:
            for (std::size_t i = 0; i < excess - defect; ++i) blocks.push_back({plane_full, q_line});
            for (std::size_t i = 0; i < defect; ++i) blocks.push_back({q_line, q_line});
            break;
        case CategoryTag::SLREL:
            for (std::size_t i = 0; i < defect; ++i) blocks.push_back({q_line, q_line});
            break;
        default: break;
    }
    return blocks;
}

TwoTermRep two_term_linear(const WWMorphism& m) {
    const LinearRelation shadow = std::get<LinearRelation>(m.shadow());
    const FieldSpec& k = shadow.field();
    StFactorization base = st_factorization(shadow);
    LinearRelation a = base.a, b = base.b;
    VectorSpaceObj unit{0, k, {}};
    VectorSpaceObj line{1, k, {}};
    for (const GeneratorBlock& blk : generator_blocks(m.tag(), m.defect(), m.excess(), k)) {
        a = tensor(a, LinearRelation(unit, line, blk.t));
        b = tensor(b, LinearRelation(line, unit, blk.s));
    }
    return TwoTermRep{a, b};
}

TwoTermRep two_term_symplectic(const WWMorphism& m) {
    const SympRelation shadow = std::get<SympRelation>(m.shadow());
    const FieldSpec& k = shadow.field();
    StFactorization base = st_factorization(shadow.as_linear());
    // Q = X x Ybar x Y carries the block form (form_X, -form_Y, form_Y).
    SymplecticSpace q = product(product(shadow.target(), shadow.source().opposite()),
                                shadow.source());
    SympRelation a(shadow.target(), q, base.a.space());
    SympRelation b(q, shadow.source(), base.b.space());
    SymplecticSpace unit = SymplecticSpace::standard(0, k);
    SymplecticSpace plane = SymplecticSpace::standard(1, k);
    for (const GeneratorBlock& blk : generator_blocks(m.tag(), m.defect(), m.excess(), k)) {
        a = tensor(a, SympRelation(unit, plane, blk.t));
        b = tensor(b, SympRelation(plane, unit, blk.s));
    }
    return TwoTermRep{a, b};
}

}  // namespace

TwoTermRep ww_two_term(const WWMorphism& m) {
    if (m.tag() == CategoryTag::LREL) return two_term_linear(m);
    return two_term_symplectic(m);
}

std::vector<UnitEndo> unit_generators(CategoryTag tag) {
    switch (tag) {
        case CategoryTag::LREL: return {{tag, 0, 1}, {tag, 1, 0}};
        case CategoryTag::ILREL: return {{tag, 1, 1}, {tag, 1, 0}};
        case CategoryTag::CLREL: return {{tag, 0, 1}, {tag, 1, 1}};
        case CategoryTag::SLREL: return {{tag, 1, 1}};
    }
    return {};
}

std::vector<std::pair<UnitEndo, std::size_t>> decompose_unit(const UnitEndo& e) {
    require_tag_constraint(e.tag, e.defect, e.excess);
    std::vector<UnitEndo> gens = unit_generators(e.tag);
    switch (e.tag) {
        case CategoryTag::LREL:
            return {{gens[0], e.excess}, {gens[1], e.defect}};
        case CategoryTag::ILREL:
            return {{gens[0], e.excess}, {gens[1], e.defect - e.excess}};
        case CategoryTag::CLREL:
            return {{gens[0], e.excess - e.defect}, {gens[1], e.defect}};
        case CategoryTag::SLREL:
            return {{gens[0], e.defect}};
    }
    return {};
}

UnitEndo compose_unit(const UnitEndo& a, const UnitEndo& b) {
    if (a.tag != b.tag) throw ValidationError("compose_unit: category tag mismatch");
    return UnitEndo{a.tag, a.defect + b.defect, a.excess + b.excess};
}

AnyRelation unit_endo_shadow(CategoryTag tag, const FieldSpec& field) {
    if (tag == CategoryTag::LREL) {
        VectorSpaceObj unit{0, field, {}};
        return LinearRelation::zero(unit, unit);
    }
    SymplecticSpace unit = SymplecticSpace::standard(0, field);
    return SympRelation::zero(unit, unit);
}

}  // namespace linrel
