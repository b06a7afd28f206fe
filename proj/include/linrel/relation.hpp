#pragma once

#include <string>
#include <vector>

#include "linrel/subspace.hpp"

namespace linrel {

enum class CategoryTag { LREL, SLREL, ILREL, CLREL };

std::string tag_name(CategoryTag tag);
CategoryTag parse_tag(const std::string& text);

/// An object of LREL: a coordinate space. Objects with equal dimension and
/// field are the same space; the name is presentation metadata only.
struct VectorSpaceObj {
    std::size_t dim;
    FieldSpec field;
    std::string name{};
};

inline bool same_space(const VectorSpaceObj& a, const VectorSpaceObj& b) {
    return a.dim == b.dim && a.field == b.field;
}

/// A linear relation X <- Y: a subspace of X + Y with the target block first,
/// so a basis row reads (x | y) and transpose is a pure block swap.
class LinearRelation {
public:
    LinearRelation(VectorSpaceObj target, VectorSpaceObj source, Subspace space);

    static LinearRelation identity(const VectorSpaceObj& x);
    /// The zero subspace of X + Y.
    static LinearRelation zero(const VectorSpaceObj& target, const VectorSpaceObj& source);
    /// All of X + Y.
    static LinearRelation full(const VectorSpaceObj& target, const VectorSpaceObj& source);
    /// Graph {(m y | y)} of the linear map given by the dim(X) x dim(Y) matrix m.
    static LinearRelation graph_of_map(const VectorSpaceObj& target, const VectorSpaceObj& source,
                                       const Matrix& m);

    const VectorSpaceObj& target() const { return target_; }
    const VectorSpaceObj& source() const { return source_; }
    const Subspace& space() const { return space_; }
    const FieldSpec& field() const { return space_.field(); }
    std::size_t dim() const { return space_.dim(); }

    bool operator==(const LinearRelation& rhs) const {
        return same_space(target_, rhs.target_) && same_space(source_, rhs.source_) &&
               space_ == rhs.space_;
    }
    bool operator!=(const LinearRelation& rhs) const { return !(*this == rhs); }

private:
    VectorSpaceObj target_, source_;
    Subspace space_;
};

/// A composable sequence (f_1, ..., f_r) with source(f_j) = target(f_{j+1}).
class RelationChain {
public:
    explicit RelationChain(std::vector<LinearRelation> links);
    const std::vector<LinearRelation>& links() const { return links_; }
    std::size_t size() const { return links_.size(); }

private:
    std::vector<LinearRelation> links_;
};

/// Production composition (block elimination); cross-checked in tests against
/// the intersect-and-project construction exposed below.
LinearRelation compose(const LinearRelation& f, const LinearRelation& g);

/// Reference composition: intersect f x g with X x Diag(Y) x Z and project.
LinearRelation compose_via_intersection(const LinearRelation& f, const LinearRelation& g);

LinearRelation compose_chain(const RelationChain& chain);

LinearRelation transpose(const LinearRelation& f);

Subspace kernel(const LinearRelation& f);         // {y : (0|y) in f}
Subspace indeterminacy(const LinearRelation& f);  // {x : (x|0) in f}
Subspace domain(const LinearRelation& f);         // projection to the Y block
Subspace image(const LinearRelation& f);          // projection to the X block

/// Dual relation Y* <- X*: the annihilator of f under <(x,y),(eta,xi)> = xi(x) - eta(y),
/// with dual spaces identified with coordinate spaces via the dual basis.
LinearRelation dual(const LinearRelation& f);

std::size_t excess_pair(const LinearRelation& f, const LinearRelation& g);
std::size_t defect_pair(const LinearRelation& f, const LinearRelation& g);

/// dim of (f_1 x ... x f_r) intersected with (0 x Diag x ... x Diag x 0).
std::size_t excess_seq(const RelationChain& chain);
/// codim of (f_1 x ... x f_r) + (X_0 x Diag x ... x Diag x X_r).
std::size_t defect_seq(const RelationChain& chain);

bool is_injective(const LinearRelation& f);
bool is_coinjective(const LinearRelation& f);   // single-valued
bool is_surjective(const LinearRelation& f);
bool is_cosurjective(const LinearRelation& f);  // everywhere-defined
bool is_reduction(const LinearRelation& f);
bool is_coreduction(const LinearRelation& f);

bool is_monic(const LinearRelation& f, const LinearRelation& g);
bool is_transversal(const LinearRelation& f, const LinearRelation& g);
bool is_strongly_transversal(const LinearRelation& f, const LinearRelation& g);

/// f = coreduction * iso * reduction through pivot-complement cross-sections
/// of Im f / Indet f and Dom f / ker f.
struct NaturalFactorization {
    LinearRelation coreduction;  // X <- M
    LinearRelation iso;          // M <- N
    LinearRelation reduction;    // N <- Y
};
NaturalFactorization natural_factorization(const LinearRelation& f);

/// Strongly transversal two-term factorization through Q = X + Y + Y:
/// A = {(x,(x,y,y))} a reduction, B = {((x,y,y''),y'') : (x|y) in f} a coreduction,
/// with A B = f and zero excess and defect.
struct StFactorization {
    LinearRelation a;  // X <- Q
    LinearRelation b;  // Q <- Y
};
StFactorization st_factorization(const LinearRelation& f);

struct IsoInvariants {
    std::size_t dim_target, dim_source, dim_dom, dim_ker, dim_im, dim_indet;
    bool operator==(const IsoInvariants&) const = default;
};
IsoInvariants iso_invariants(const LinearRelation& f);

/// Monoidal product: block direct sum reordered to (X,X' | Y,Y').
LinearRelation tensor(const LinearRelation& f, const LinearRelation& g);

/// The same subspace re-typed as a morphism (X+Y) <- unit.
LinearRelation graph_of(const LinearRelation& f);
LinearRelation ungraph(const LinearRelation& g, const VectorSpaceObj& target,
                       const VectorSpaceObj& source);

}  // namespace linrel
