#include "linrel/symplectic.hpp"

namespace linrel {

SymplecticSpace SymplecticSpace::standard(std::size_t n, const FieldSpec& field) {
    Matrix form(2 * n, 2 * n, field);
    for (std::size_t i = 0; i < n; ++i) {
        form.at(i, n + i) = Scalar::one(field);
        form.at(n + i, i) = -Scalar::one(field);
    }
    return SymplecticSpace(std::move(form));
}

SymplecticSpace SymplecticSpace::with_form(Matrix form) {
    if (form.rows() != form.cols()) throw ValidationError("symplectic form must be square");
    for (std::size_t i = 0; i < form.rows(); ++i) {
        if (!form.at(i, i).is_zero()) throw ValidationError("symplectic form must have zero diagonal");
        for (std::size_t j = i + 1; j < form.cols(); ++j) {
            if (form.at(i, j) != -form.at(j, i)) {
                throw ValidationError("symplectic form must be alternating");
            }
        }
    }
    if (rank(form) != form.rows()) throw ValidationError("symplectic form must be nondegenerate");
    return SymplecticSpace(std::move(form));
}

SymplecticSpace SymplecticSpace::opposite() const { return SymplecticSpace(form_.negated()); }

SymplecticSpace product(const SymplecticSpace& a, const SymplecticSpace& b) {
    if (a.field() != b.field()) throw ValidationError("product: field mismatch");
    const std::size_t da = a.dim(), db = b.dim();
    Matrix form(da + db, da + db, a.field());
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) form.at(i, j) = a.form().at(i, j);
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < db; ++j) form.at(da + i, da + j) = b.form().at(i, j);
    return SymplecticSpace::with_form(std::move(form));
}

Subspace symp_orthogonal(const SymplecticSpace& x, const Subspace& a) {
    if (a.ambient_dim() != x.dim() || a.field() != x.field()) {
        throw ValidationError("symp_orthogonal: ambient mismatch");
    }
    // v in a^w  <=>  v . (form . w^T) = 0 for each basis row w, i.e.
    // (basis . form^T) annihilates v.
    return right_nullspace(a.basis() * x.form().transposed());
}

bool is_isotropic(const SymplecticSpace& x, const Subspace& a) {
    return subspace_contains(symp_orthogonal(x, a), a);
}

bool is_coisotropic(const SymplecticSpace& x, const Subspace& a) {
    return subspace_contains(a, symp_orthogonal(x, a));
}

bool is_lagrangian(const SymplecticSpace& x, const Subspace& a) {
    return symp_orthogonal(x, a) == a;
}

SympRelation::SympRelation(SymplecticSpace target, SymplecticSpace source, Subspace space,
                           SubspaceClass tag)
    : target_(std::move(target)), source_(std::move(source)), space_(std::move(space)), tag_(tag) {
    if (target_.field() != source_.field() || target_.field() != space_.field()) {
        throw ValidationError("symplectic relation: field mismatch");
    }
    if (space_.ambient_dim() != target_.dim() + source_.dim()) {
        throw ValidationError("symplectic relation: ambient must be dim(target) + dim(source)");
    }
}

SympRelation SympRelation::identity(const SymplecticSpace& x) {
    LinearRelation diag = LinearRelation::identity(VectorSpaceObj{x.dim(), x.field(), {}});
    return SympRelation(x, x, diag.space(), SubspaceClass::Lagrangian);
}

SympRelation SympRelation::zero(const SymplecticSpace& target, const SymplecticSpace& source) {
    return SympRelation(target, source,
                        Subspace::zero(target.dim() + source.dim(), target.field()),
                        SubspaceClass::Isotropic);
}

SymplecticSpace SympRelation::graph_space() const {
    return product(target_, source_.opposite());
}

LinearRelation SympRelation::as_linear() const {
    return LinearRelation(VectorSpaceObj{target_.dim(), field(), {}},
                          VectorSpaceObj{source_.dim(), field(), {}}, space_);
}

SubspaceClass SympRelation::classify() const {
    SymplecticSpace g = graph_space();
    Subspace orth = symp_orthogonal(g, space_);
    bool iso = subspace_contains(orth, space_);
    bool coiso = subspace_contains(space_, orth);
    if (iso && coiso) return SubspaceClass::Lagrangian;
    if (iso) return SubspaceClass::Isotropic;
    if (coiso) return SubspaceClass::Coisotropic;
    return SubspaceClass::Unclassified;
}

bool check_morphism(const SympRelation& f, CategoryTag category) {
    if (category == CategoryTag::LREL) return true;
    SymplecticSpace g = f.graph_space();
    switch (category) {
        case CategoryTag::SLREL: return is_lagrangian(g, f.space());
        case CategoryTag::ILREL: return is_isotropic(g, f.space());
        case CategoryTag::CLREL: return is_coisotropic(g, f.space());
        default: return true;
    }
}

SympRelation compose(const SympRelation& f, const SympRelation& g) {
    if (f.source() != g.target()) throw ValidationError("compose: symplectic object mismatch");
    LinearRelation composite = compose(f.as_linear(), g.as_linear());
    return SympRelation(f.target(), g.source(), composite.space());
}

SympRelation transpose(const SympRelation& f) {
    LinearRelation t = transpose(f.as_linear());
    return SympRelation(f.source(), f.target(), t.space());
}

SympRelation tensor(const SympRelation& f, const SympRelation& g) {
    LinearRelation t = tensor(f.as_linear(), g.as_linear());
    return SympRelation(product(f.target(), g.target()), product(f.source(), g.source()), t.space());
}

std::size_t excess_pair(const SympRelation& f, const SympRelation& g) {
    if (f.source() != g.target()) throw ValidationError("excess_pair: symplectic object mismatch");
    return excess_pair(f.as_linear(), g.as_linear());
}

std::size_t defect_pair(const SympRelation& f, const SympRelation& g) {
    if (f.source() != g.target()) throw ValidationError("defect_pair: symplectic object mismatch");
    return defect_pair(f.as_linear(), g.as_linear());
}

SympChain::SympChain(std::vector<SympRelation> links) : links_(std::move(links)) {
    if (links_.empty()) throw ValidationError("chain must have at least one link");
    for (std::size_t i = 0; i + 1 < links_.size(); ++i) {
        if (links_[i].source() != links_[i + 1].target()) {
            throw ValidationError("symplectic chain: adjacent objects do not match");
        }
    }
}

RelationChain SympChain::as_linear_chain() const {
    std::vector<LinearRelation> links;
    links.reserve(links_.size());
    for (const SympRelation& f : links_) links.push_back(f.as_linear());
    return RelationChain(std::move(links));
}

SympRelation compose_chain(const SympChain& chain) {
    SympRelation acc = chain.links().front();
    for (std::size_t i = 1; i < chain.size(); ++i) acc = compose(acc, chain.links()[i]);
    return acc;
}

std::size_t excess_seq(const SympChain& chain) { return excess_seq(chain.as_linear_chain()); }
std::size_t defect_seq(const SympChain& chain) { return defect_seq(chain.as_linear_chain()); }

namespace {

SympRelation orthogonal_transpose(const SympRelation& f) {
    Subspace orth = symp_orthogonal(f.graph_space(), f.space());
    const std::size_t dx = f.target().dim(), dy = f.source().dim();
    std::vector<std::size_t> src_of_dst(dx + dy);
    for (std::size_t i = 0; i < dy; ++i) src_of_dst[i] = dx + i;
    for (std::size_t i = 0; i < dx; ++i) src_of_dst[dy + i] = i;
    return SympRelation(f.source(), f.target(), permute_coords(orth, src_of_dst));
}

}  // namespace

SympRelation iso_coiso_dual(const SympRelation& f) {
    if (!check_morphism(f, CategoryTag::ILREL)) {
        throw ValidationError("iso_coiso_dual: input is not isotropic");
    }
    return orthogonal_transpose(f);
}

SympRelation coiso_iso_dual(const SympRelation& f) {
    if (!check_morphism(f, CategoryTag::CLREL)) {
        throw ValidationError("coiso_iso_dual: input is not coisotropic");
    }
    return orthogonal_transpose(f);
}

SympRelation cotangent(const LinearRelation& f) {
    const FieldSpec& k = f.field();
    const std::size_t dv = f.target().dim, dw = f.source().dim;
    SymplecticSpace tv = SymplecticSpace::standard(dv, k);
    SymplecticSpace tw = SymplecticSpace::standard(dw, k);
    Subspace ann = annihilator(f.space());  // rows (alpha | beta), alpha(v) + beta(w) = 0 on f
    const std::size_t total = 2 * dv + 2 * dw;  // coordinates (v, xi, w, eta)
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t i = 0; i < f.dim(); ++i) {
        std::vector<Scalar> row(total, Scalar::zero(k));
        for (std::size_t j = 0; j < dv; ++j) row[j] = f.space().basis().at(i, j);
        for (std::size_t j = 0; j < dw; ++j) row[2 * dv + j] = f.space().basis().at(i, dv + j);
        rows.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < ann.dim(); ++i) {
        std::vector<Scalar> row(total, Scalar::zero(k));
        for (std::size_t j = 0; j < dv; ++j) row[dv + j] = ann.basis().at(i, j);
        for (std::size_t j = 0; j < dw; ++j) row[2 * dv + dw + j] = -ann.basis().at(i, dv + j);
        rows.push_back(std::move(row));
    }
    return SympRelation(tv, tw, Subspace::span(Matrix::from_rows(k, total, rows)),
                        SubspaceClass::Lagrangian);
}

}  // namespace linrel
