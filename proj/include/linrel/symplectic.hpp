#pragma once

#include "linrel/relation.hpp"

namespace linrel {

/// An even-dimensional space with a nondegenerate alternating form. The form
/// may be any alternating invertible matrix (products force non-standard
/// blocks); zero diagonal is required so characteristic 2 is sound.
class SymplecticSpace {
public:
    /// Standard Darboux space of dimension 2n, form [[0, I], [-I, 0]].
    static SymplecticSpace standard(std::size_t n, const FieldSpec& field);
    /// Validates the form (alternating, invertible) and wraps it.
    static SymplecticSpace with_form(Matrix form);

    std::size_t dim() const { return form_.rows(); }
    const FieldSpec& field() const { return form_.field(); }
    const Matrix& form() const { return form_; }

    /// Same space with the form negated.
    SymplecticSpace opposite() const;

    bool operator==(const SymplecticSpace& rhs) const { return form_ == rhs.form_; }
    bool operator!=(const SymplecticSpace& rhs) const { return !(*this == rhs); }

private:
    explicit SymplecticSpace(Matrix form) : form_(std::move(form)) {}
    Matrix form_;
};

/// Block-diagonal product X x Y.
SymplecticSpace product(const SymplecticSpace& a, const SymplecticSpace& b);

/// a^w = {v : form(v, a) = 0}; dim a + dim a^w = dim x.
Subspace symp_orthogonal(const SymplecticSpace& x, const Subspace& a);

bool is_isotropic(const SymplecticSpace& x, const Subspace& a);    // a inside a^w
bool is_coisotropic(const SymplecticSpace& x, const Subspace& a);  // a^w inside a
bool is_lagrangian(const SymplecticSpace& x, const Subspace& a);

enum class SubspaceClass { Isotropic, Coisotropic, Lagrangian, Unclassified };

/// A relation between symplectic spaces: a subspace of X + Y regarded in
/// X x Ybar (source form negated). The class tag is an advisory cache;
/// anything that depends on it revalidates.
class SympRelation {
public:
    SympRelation(SymplecticSpace target, SymplecticSpace source, Subspace space,
                 SubspaceClass tag = SubspaceClass::Unclassified);

    static SympRelation identity(const SymplecticSpace& x);
    static SympRelation zero(const SymplecticSpace& target, const SymplecticSpace& source);

    const SymplecticSpace& target() const { return target_; }
    const SymplecticSpace& source() const { return source_; }
    const Subspace& space() const { return space_; }
    const FieldSpec& field() const { return space_.field(); }
    SubspaceClass tag() const { return tag_; }

    /// The product space X x Ybar the morphism lives in.
    SymplecticSpace graph_space() const;

    /// Underlying plain linear relation (forms forgotten).
    LinearRelation as_linear() const;

    /// Recomputes the class from scratch (Lagrangian when both hold).
    SubspaceClass classify() const;

    bool operator==(const SympRelation& rhs) const {
        return target_ == rhs.target_ && source_ == rhs.source_ && space_ == rhs.space_;
    }
    bool operator!=(const SympRelation& rhs) const { return !(*this == rhs); }

private:
    SymplecticSpace target_, source_;
    Subspace space_;
    SubspaceClass tag_;
};

/// Is f a valid morphism of the given category? (SLREL: lagrangian,
/// ILREL: isotropic, CLREL: coisotropic, LREL: always.)
bool check_morphism(const SympRelation& f, CategoryTag category);

SympRelation compose(const SympRelation& f, const SympRelation& g);
SympRelation transpose(const SympRelation& f);
SympRelation tensor(const SympRelation& f, const SympRelation& g);

std::size_t excess_pair(const SympRelation& f, const SympRelation& g);
std::size_t defect_pair(const SympRelation& f, const SympRelation& g);

/// Composable sequence of symplectic relations.
class SympChain {
public:
    explicit SympChain(std::vector<SympRelation> links);
    const std::vector<SympRelation>& links() const { return links_; }
    std::size_t size() const { return links_.size(); }
    RelationChain as_linear_chain() const;

private:
    std::vector<SympRelation> links_;
};

SympRelation compose_chain(const SympChain& chain);
std::size_t excess_seq(const SympChain& chain);
std::size_t defect_seq(const SympChain& chain);

/// The contravariant ILREL -> CLREL functor: transpose of the symplectic
/// orthogonal taken in X x Ybar, re-typed as a morphism Y <- X. Requires an
/// isotropic input; coiso_iso_dual is the same construction the other way.
SympRelation iso_coiso_dual(const SympRelation& f);
SympRelation coiso_iso_dual(const SympRelation& f);

/// T*: LREL -> SLREL. T*V = V + V* with the standard form; T*f pairs f with
/// its conormal directions, W* components negated. Output is lagrangian.
SympRelation cotangent(const LinearRelation& f);

}  // namespace linrel
