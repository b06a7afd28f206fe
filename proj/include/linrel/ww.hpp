#pragma once

#include <utility>
#include <variant>

#include "linrel/symplectic.hpp"

namespace linrel {

/// A morphism of one of the four categories of relations; plain relations
/// carry no forms, symplectic ones do.
using AnyRelation = std::variant<LinearRelation, SympRelation>;

LinearRelation any_as_linear(const AnyRelation& r);
AnyRelation any_compose(const AnyRelation& f, const AnyRelation& g);
AnyRelation any_transpose(const AnyRelation& f);
AnyRelation any_tensor(const AnyRelation& f, const AnyRelation& g);
bool any_equal(const AnyRelation& a, const AnyRelation& b);

/// A Wehrheim-Woodward morphism in normal form: category tag, shadow, and the
/// defect/excess pair that indexes the fiber of the shadow functor. Subject
/// to the per-tag constraints: ILREL E <= D, CLREL D <= E, SLREL D = E.
class WWMorphism {
public:
    WWMorphism(CategoryTag tag, AnyRelation shadow, std::size_t defect, std::size_t excess);

    CategoryTag tag() const { return tag_; }
    const AnyRelation& shadow() const { return shadow_; }
    LinearRelation shadow_linear() const { return any_as_linear(shadow_); }
    std::size_t defect() const { return defect_; }
    std::size_t excess() const { return excess_; }

    bool operator==(const WWMorphism& rhs) const {
        return tag_ == rhs.tag_ && defect_ == rhs.defect_ && excess_ == rhs.excess_ &&
               any_equal(shadow_, rhs.shadow_);
    }
    bool operator!=(const WWMorphism& rhs) const { return !(*this == rhs); }

private:
    CategoryTag tag_;
    AnyRelation shadow_;
    std::size_t defect_, excess_;
};

/// iota: embeds a category morphism with zero indices. Injective.
WWMorphism ww_embed(const LinearRelation& f);                    // LREL
WWMorphism ww_embed(const SympRelation& f, CategoryTag tag);     // SLREL/ILREL/CLREL

/// Cocycle composition: shadows compose, indices add the pair defect/excess.
WWMorphism ww_compose(const WWMorphism& m, const WWMorphism& n);

WWMorphism ww_from_chain(const RelationChain& chain, CategoryTag tag = CategoryTag::LREL);
WWMorphism ww_from_chain(const SympChain& chain, CategoryTag tag);

/// Transposes the shadow; indices are preserved.
WWMorphism ww_transpose(const WWMorphism& m);

/// Tensor of shadows; indices add componentwise.
WWMorphism ww_tensor(const WWMorphism& m, const WWMorphism& n);

/// Two-term representation: A a reduction, B a coreduction, A B = shadow,
/// defect_pair(A, B) = defect, excess_pair(A, B) = excess. Built from the
/// strongly transversal factorization of the shadow tensored with generator
/// blocks over the unit object.
struct TwoTermRep {
    AnyRelation a;  // reduction X <- Q
    AnyRelation b;  // coreduction Q <- Y
};
TwoTermRep ww_two_term(const WWMorphism& m);

/// An endomorphism of the unit object, identified by its (defect, excess).
struct UnitEndo {
    CategoryTag tag;
    std::size_t defect, excess;
    bool operator==(const UnitEndo&) const = default;
};

/// The free generators of the unit-endomorphism monoid, as (defect, excess):
/// LREL {(0,1),(1,0)}, ILREL {(1,1),(1,0)}, CLREL {(0,1),(1,1)}, SLREL {(1,1)}.
std::vector<UnitEndo> unit_generators(CategoryTag tag);

/// Unique expression of e over the tag's generators; multiplicities are
/// listed in unit_generators order. Throws if e violates the tag inequality.
std::vector<std::pair<UnitEndo, std::size_t>> decompose_unit(const UnitEndo& e);

UnitEndo compose_unit(const UnitEndo& a, const UnitEndo& b);  // componentwise addition

/// The unique shadow of a unit endomorphism in the tag's category.
AnyRelation unit_endo_shadow(CategoryTag tag, const FieldSpec& field);

}  // namespace linrel
