#include "linrel/relation.hpp"

#include <algorithm>
#include <cctype>

namespace linrel {

std::string tag_name(CategoryTag tag) {
    switch (tag) {
        case CategoryTag::LREL: return "lrel";
        case CategoryTag::SLREL: return "slrel";
        case CategoryTag::ILREL: return "ilrel";
        case CategoryTag::CLREL: return "clrel";
    }
    return "?";
}

CategoryTag parse_tag(const std::string& text) {
    std::string t;
    for (char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (t == "lrel") return CategoryTag::LREL;
    if (t == "slrel") return CategoryTag::SLREL;
    if (t == "ilrel") return CategoryTag::ILREL;
    if (t == "clrel") return CategoryTag::CLREL;
    throw ParseError("unknown category tag '" + text + "'");
}

LinearRelation::LinearRelation(VectorSpaceObj target, VectorSpaceObj source, Subspace space)
    : target_(std::move(target)), source_(std::move(source)), space_(std::move(space)) {
    if (target_.field != source_.field || target_.field != space_.field()) {
        throw ValidationError("relation: field mismatch between objects and subspace");
    }
    if (space_.ambient_dim() != target_.dim + source_.dim) {
        throw ValidationError("relation: subspace ambient must be dim(target) + dim(source)");
    }
}

LinearRelation LinearRelation::identity(const VectorSpaceObj& x) {
    Matrix rows(x.dim, 2 * x.dim, x.field);
    for (std::size_t i = 0; i < x.dim; ++i) {
        rows.at(i, i) = Scalar::one(x.field);
        rows.at(i, x.dim + i) = Scalar::one(x.field);
    }
    return LinearRelation(x, x, Subspace::span(rows));
}

LinearRelation LinearRelation::zero(const VectorSpaceObj& target, const VectorSpaceObj& source) {
    return LinearRelation(target, source, Subspace::zero(target.dim + source.dim, target.field));
}

LinearRelation LinearRelation::full(const VectorSpaceObj& target, const VectorSpaceObj& source) {
    return LinearRelation(target, source, Subspace::full(target.dim + source.dim, target.field));
}

LinearRelation LinearRelation::graph_of_map(const VectorSpaceObj& target,
                                            const VectorSpaceObj& source, const Matrix& m) {
    if (m.rows() != target.dim || m.cols() != source.dim) {
        throw ValidationError("graph_of_map: matrix shape does not match objects");
    }
    Matrix rows(source.dim, target.dim + source.dim, target.field);
    for (std::size_t j = 0; j < source.dim; ++j) {
        for (std::size_t i = 0; i < target.dim; ++i) rows.at(j, i) = m.at(i, j);
        rows.at(j, target.dim + j) = Scalar::one(target.field);
    }
    return LinearRelation(target, source, Subspace::span(rows));
}

RelationChain::RelationChain(std::vector<LinearRelation> links) : links_(std::move(links)) {
    if (links_.empty()) throw ValidationError("chain must have at least one link");
    for (std::size_t i = 0; i + 1 < links_.size(); ++i) {
        if (!same_space(links_[i].source(), links_[i + 1].target())) {
            throw ValidationError("chain: link " + std::to_string(i) + " source does not match link " +
                                  std::to_string(i + 1) + " target");
        }
    }
}

LinearRelation compose(const LinearRelation& f, const LinearRelation& g) {
    if (!same_space(f.source(), g.target())) throw ValidationError("compose: object mismatch");
    const std::size_t dx = f.target().dim, dy = f.source().dim, dz = g.source().dim;
    const FieldSpec& k = f.field();
    // Eliminate the middle space: rows (y, x, 0) from f and (-y, 0, z) from g;
    // echelon rows with zero Y part read off exactly the composite pairs (x, z).
    Matrix stacked(f.dim() + g.dim(), dy + dx + dz, k);
    for (std::size_t i = 0; i < f.dim(); ++i) {
        for (std::size_t j = 0; j < dy; ++j) stacked.at(i, j) = f.space().basis().at(i, dx + j);
        for (std::size_t j = 0; j < dx; ++j) stacked.at(i, dy + j) = f.space().basis().at(i, j);
    }
    for (std::size_t i = 0; i < g.dim(); ++i) {
        for (std::size_t j = 0; j < dy; ++j) stacked.at(f.dim() + i, j) = -g.space().basis().at(i, j);
        for (std::size_t j = 0; j < dz; ++j) {
            stacked.at(f.dim() + i, dy + dx + j) = g.space().basis().at(i, dy + j);
        }
    }
    Matrix reduced = rref(stacked);
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t i = 0; i < reduced.rows(); ++i) {
        bool y_zero = true;
        for (std::size_t j = 0; j < dy && y_zero; ++j) y_zero = reduced.at(i, j).is_zero();
        if (!y_zero) continue;
        std::vector<Scalar> row;
        row.reserve(dx + dz);
        for (std::size_t j = 0; j < dx + dz; ++j) row.push_back(reduced.at(i, dy + j));
        rows.push_back(std::move(row));
    }
    return LinearRelation(f.target(), g.source(),
                          Subspace::span(Matrix::from_rows(k, dx + dz, rows)));
}

LinearRelation compose_via_intersection(const LinearRelation& f, const LinearRelation& g) {
    if (!same_space(f.source(), g.target())) throw ValidationError("compose: object mismatch");
    const std::size_t dx = f.target().dim, dy = f.source().dim, dz = g.source().dim;
    const FieldSpec& k = f.field();
    Subspace product = direct_sum(f.space(), g.space());  // coordinates (x, y, y', z)
    std::vector<std::vector<Scalar>> witness_rows;
    const std::size_t total = dx + 2 * dy + dz;
    for (std::size_t i = 0; i < dx; ++i) {
        std::vector<Scalar> v(total, Scalar::zero(k));
        v[i] = Scalar::one(k);
        witness_rows.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < dy; ++i) {
        std::vector<Scalar> v(total, Scalar::zero(k));
        v[dx + i] = Scalar::one(k);
        v[dx + dy + i] = Scalar::one(k);
        witness_rows.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < dz; ++i) {
        std::vector<Scalar> v(total, Scalar::zero(k));
        v[dx + 2 * dy + i] = Scalar::one(k);
        witness_rows.push_back(std::move(v));
    }
    Subspace window = Subspace::span(Matrix::from_rows(k, total, witness_rows));
    Subspace meet = intersect(product, window);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < dx; ++i) keep.push_back(i);
    for (std::size_t i = 0; i < dz; ++i) keep.push_back(dx + 2 * dy + i);
    return LinearRelation(f.target(), g.source(), select_coords(meet, keep));
}

LinearRelation compose_chain(const RelationChain& chain) {
    LinearRelation acc = chain.links().front();
    for (std::size_t i = 1; i < chain.size(); ++i) acc = compose(acc, chain.links()[i]);
    return acc;
}

LinearRelation transpose(const LinearRelation& f) {
    const std::size_t dx = f.target().dim, dy = f.source().dim;
    std::vector<std::size_t> src_of_dst(dx + dy);
    for (std::size_t i = 0; i < dy; ++i) src_of_dst[i] = dx + i;
    for (std::size_t i = 0; i < dx; ++i) src_of_dst[dy + i] = i;
    return LinearRelation(f.source(), f.target(), permute_coords(f.space(), src_of_dst));
}

namespace {

// RREF rows of f whose first `block` coordinates vanish span f meet (0 + W);
// dropping the zero block leaves an RREF basis of the W part.
Subspace zero_block_slice(const Subspace& s, std::size_t block) {
    const std::size_t rest = s.ambient_dim() - block;
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        bool head_zero = true;
        for (std::size_t j = 0; j < block && head_zero; ++j) head_zero = s.basis().at(i, j).is_zero();
        if (!head_zero) continue;
        std::vector<Scalar> row;
        row.reserve(rest);
        for (std::size_t j = 0; j < rest; ++j) row.push_back(s.basis().at(i, block + j));
        rows.push_back(std::move(row));
    }
    return Subspace::span(Matrix::from_rows(s.field(), rest, rows));
}

}  // namespace

Subspace kernel(const LinearRelation& f) { return zero_block_slice(f.space(), f.target().dim); }

Subspace indeterminacy(const LinearRelation& f) { return kernel(transpose(f)); }

Subspace domain(const LinearRelation& f) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < f.source().dim; ++i) keep.push_back(f.target().dim + i);
    return select_coords(f.space(), keep);
}

Subspace image(const LinearRelation& f) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < f.target().dim; ++i) keep.push_back(i);
    return select_coords(f.space(), keep);
}

LinearRelation dual(const LinearRelation& f) {
    const std::size_t dx = f.target().dim, dy = f.source().dim;
    const FieldSpec& k = f.field();
    // (eta|xi) dual to f iff xi(x) - eta(y) = 0 for every basis row (x|y).
    Matrix cond(f.dim(), dy + dx, k);
    for (std::size_t i = 0; i < f.dim(); ++i) {
        for (std::size_t j = 0; j < dy; ++j) cond.at(i, j) = -f.space().basis().at(i, dx + j);
        for (std::size_t j = 0; j < dx; ++j) cond.at(i, dy + j) = f.space().basis().at(i, j);
    }
    VectorSpaceObj dual_target{dy, k, {}};
    VectorSpaceObj dual_source{dx, k, {}};
    return LinearRelation(dual_target, dual_source, right_nullspace(cond));
}

std::size_t excess_pair(const LinearRelation& f, const LinearRelation& g) {
    if (!same_space(f.source(), g.target())) throw ValidationError("excess_pair: object mismatch");
    return intersect(kernel(f), indeterminacy(g)).dim();
}

std::size_t defect_pair(const LinearRelation& f, const LinearRelation& g) {
    if (!same_space(f.source(), g.target())) throw ValidationError("defect_pair: object mismatch");
    return f.source().dim - sum(domain(f), image(g)).dim();
}

namespace {

struct ChainLayout {
    std::size_t total = 0;
    std::vector<std::size_t> link_start;    // start of f_i's block pair
    std::vector<std::size_t> first_copy;    // source block of f_j = first copy of X_j
    std::vector<std::size_t> second_copy;   // target block of f_{j+1} = second copy of X_j
};

ChainLayout chain_layout(const RelationChain& chain) {
    ChainLayout layout;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const LinearRelation& f = chain.links()[i];
        layout.link_start.push_back(pos);
        if (i > 0) layout.second_copy.push_back(pos);
        pos += f.target().dim;
        if (i + 1 < chain.size()) layout.first_copy.push_back(pos);
        pos += f.source().dim;
    }
    layout.total = pos;
    return layout;
}

Subspace chain_product(const RelationChain& chain) {
    Subspace acc = chain.links().front().space();
    for (std::size_t i = 1; i < chain.size(); ++i) acc = direct_sum(acc, chain.links()[i].space());
    return acc;
}

Subspace inner_diagonals(const RelationChain& chain, const ChainLayout& layout) {
    const FieldSpec& k = chain.links().front().field();
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
        const std::size_t d = chain.links()[j].source().dim;
        for (std::size_t t = 0; t < d; ++t) {
            std::vector<Scalar> v(layout.total, Scalar::zero(k));
            v[layout.first_copy[j] + t] = Scalar::one(k);
            v[layout.second_copy[j] + t] = Scalar::one(k);
            rows.push_back(std::move(v));
        }
    }
    return Subspace::span(Matrix::from_rows(k, layout.total, rows));
}

}  // namespace

std::size_t excess_seq(const RelationChain& chain) {
    ChainLayout layout = chain_layout(chain);
    return intersect(chain_product(chain), inner_diagonals(chain, layout)).dim();
}

std::size_t defect_seq(const RelationChain& chain) {
    ChainLayout layout = chain_layout(chain);
    const FieldSpec& k = chain.links().front().field();
    std::vector<std::vector<Scalar>> rows;
    const std::size_t d0 = chain.links().front().target().dim;
    for (std::size_t t = 0; t < d0; ++t) {
        std::vector<Scalar> v(layout.total, Scalar::zero(k));
        v[t] = Scalar::one(k);
        rows.push_back(std::move(v));
    }
    const std::size_t dr = chain.links().back().source().dim;
    const std::size_t last = layout.total - dr;
    for (std::size_t t = 0; t < dr; ++t) {
        std::vector<Scalar> v(layout.total, Scalar::zero(k));
        v[last + t] = Scalar::one(k);
        rows.push_back(std::move(v));
    }
    Subspace ends = Subspace::span(Matrix::from_rows(k, layout.total, rows));
    Subspace window = sum(ends, inner_diagonals(chain, layout));
    return layout.total - sum(chain_product(chain), window).dim();
}

bool is_injective(const LinearRelation& f) { return kernel(f).is_zero(); }
bool is_coinjective(const LinearRelation& f) { return indeterminacy(f).is_zero(); }
bool is_surjective(const LinearRelation& f) { return image(f).dim() == f.target().dim; }
bool is_cosurjective(const LinearRelation& f) { return domain(f).dim() == f.source().dim; }
bool is_reduction(const LinearRelation& f) { return is_surjective(f) && is_coinjective(f); }
bool is_coreduction(const LinearRelation& f) { return is_cosurjective(f) && is_injective(f); }

bool is_monic(const LinearRelation& f, const LinearRelation& g) { return excess_pair(f, g) == 0; }
bool is_transversal(const LinearRelation& f, const LinearRelation& g) {
    return defect_pair(f, g) == 0;
}
bool is_strongly_transversal(const LinearRelation& f, const LinearRelation& g) {
    return is_monic(f, g) && is_transversal(f, g);
}

NaturalFactorization natural_factorization(const LinearRelation& f) {
    const FieldSpec& k = f.field();
    Subspace im = image(f), indet = indeterminacy(f);
    Subspace dom = domain(f), ker = kernel(f);
    Subspace m_section = complement_in(im, indet);   // cross-section of Im f / Indet f
    Subspace n_section = complement_in(dom, ker);    // cross-section of Dom f / ker f
    VectorSpaceObj m_obj{m_section.dim(), k, {}};
    VectorSpaceObj n_obj{n_section.dim(), k, {}};
    const std::size_t dx = f.target().dim, dy = f.source().dim;

    // c: X <- M, (phi_M(u) + w | u) for w in Indet f.
    std::vector<std::vector<Scalar>> c_rows;
    for (std::size_t i = 0; i < m_section.dim(); ++i) {
        std::vector<Scalar> v(dx + m_obj.dim, Scalar::zero(k));
        for (std::size_t j = 0; j < dx; ++j) v[j] = m_section.basis().at(i, j);
        v[dx + i] = Scalar::one(k);
        c_rows.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < indet.dim(); ++i) {
        std::vector<Scalar> v(dx + m_obj.dim, Scalar::zero(k));
        for (std::size_t j = 0; j < dx; ++j) v[j] = indet.basis().at(i, j);
        c_rows.push_back(std::move(v));
    }
    LinearRelation c(f.target(), m_obj,
                     Subspace::span(Matrix::from_rows(k, dx + m_obj.dim, c_rows)));

    // r: N <- Y, (u | phi_N(u) + ker).
    std::vector<std::vector<Scalar>> r_rows;
    for (std::size_t i = 0; i < n_section.dim(); ++i) {
        std::vector<Scalar> v(n_obj.dim + dy, Scalar::zero(k));
        v[i] = Scalar::one(k);
        for (std::size_t j = 0; j < dy; ++j) v[n_obj.dim + j] = n_section.basis().at(i, j);
        r_rows.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < ker.dim(); ++i) {
        std::vector<Scalar> v(n_obj.dim + dy, Scalar::zero(k));
        for (std::size_t j = 0; j < dy; ++j) v[n_obj.dim + j] = ker.basis().at(i, j);
        r_rows.push_back(std::move(v));
    }
    LinearRelation r(n_obj, f.source(),
                     Subspace::span(Matrix::from_rows(k, n_obj.dim + dy, r_rows)));

    // i: M <- N, {(u|v) : (phi_M(u) | phi_N(v)) in f}.
    Matrix embed(m_obj.dim + n_obj.dim, dx + dy, k);
    for (std::size_t i = 0; i < m_obj.dim; ++i)
        for (std::size_t j = 0; j < dx; ++j) embed.at(i, j) = m_section.basis().at(i, j);
    for (std::size_t i = 0; i < n_obj.dim; ++i)
        for (std::size_t j = 0; j < dy; ++j) embed.at(m_obj.dim + i, dx + j) = n_section.basis().at(i, j);
    LinearRelation iso(m_obj, n_obj, preimage(embed, f.space()));

    return NaturalFactorization{std::move(c), std::move(iso), std::move(r)};
}

StFactorization st_factorization(const LinearRelation& f) {
    const FieldSpec& k = f.field();
    const std::size_t dx = f.target().dim, dy = f.source().dim;
    VectorSpaceObj q{dx + 2 * dy, k, {}};

    std::vector<std::vector<Scalar>> a_rows;  // subspace of X + Q
    for (std::size_t i = 0; i < dx; ++i) {
        std::vector<Scalar> v(dx + q.dim, Scalar::zero(k));
        v[i] = Scalar::one(k);
        v[dx + i] = Scalar::one(k);
        a_rows.push_back(std::move(v));
    }
    for (std::size_t j = 0; j < dy; ++j) {
        std::vector<Scalar> v(dx + q.dim, Scalar::zero(k));
        v[dx + dx + j] = Scalar::one(k);
        v[dx + dx + dy + j] = Scalar::one(k);
        a_rows.push_back(std::move(v));
    }
    LinearRelation a(f.target(), q, Subspace::span(Matrix::from_rows(k, dx + q.dim, a_rows)));

    std::vector<std::vector<Scalar>> b_rows;  // subspace of Q + Y
    for (std::size_t i = 0; i < f.dim(); ++i) {
        std::vector<Scalar> v(q.dim + dy, Scalar::zero(k));
        for (std::size_t j = 0; j < dx + dy; ++j) v[j] = f.space().basis().at(i, j);
        b_rows.push_back(std::move(v));
    }
    for (std::size_t j = 0; j < dy; ++j) {
        std::vector<Scalar> v(q.dim + dy, Scalar::zero(k));
        v[dx + dy + j] = Scalar::one(k);
        v[q.dim + j] = Scalar::one(k);
        b_rows.push_back(std::move(v));
    }
    LinearRelation b(q, f.source(), Subspace::span(Matrix::from_rows(k, q.dim + dy, b_rows)));

    return StFactorization{std::move(a), std::move(b)};
}

IsoInvariants iso_invariants(const LinearRelation& f) {
    IsoInvariants inv{f.target().dim, f.source().dim, domain(f).dim(),
                      kernel(f).dim(), image(f).dim(), indeterminacy(f).dim()};
    if (inv.dim_dom - inv.dim_ker != inv.dim_im - inv.dim_indet) {
        throw ValidationError("iso_invariants: rank identity violated (internal error)");
    }
    return inv;
}

LinearRelation tensor(const LinearRelation& f, const LinearRelation& g) {
    if (f.field() != g.field()) throw ValidationError("tensor: field mismatch");
    const std::size_t dx = f.target().dim, dy = f.source().dim;
    const std::size_t dxp = g.target().dim, dyp = g.source().dim;
    Subspace block = direct_sum(f.space(), g.space());  // (x, y, x', y')
    std::vector<std::size_t> src_of_dst;
    src_of_dst.reserve(dx + dxp + dy + dyp);
    for (std::size_t i = 0; i < dx; ++i) src_of_dst.push_back(i);
    for (std::size_t i = 0; i < dxp; ++i) src_of_dst.push_back(dx + dy + i);
    for (std::size_t i = 0; i < dy; ++i) src_of_dst.push_back(dx + i);
    for (std::size_t i = 0; i < dyp; ++i) src_of_dst.push_back(dx + dy + dxp + i);
    VectorSpaceObj target{dx + dxp, f.field(), {}};
    VectorSpaceObj source{dy + dyp, f.field(), {}};
    return LinearRelation(target, source, permute_coords(block, src_of_dst));
}

LinearRelation graph_of(const LinearRelation& f) {
    VectorSpaceObj product{f.target().dim + f.source().dim, f.field(), {}};
    VectorSpaceObj unit{0, f.field(), {}};
    return LinearRelation(product, unit, f.space());
}

LinearRelation ungraph(const LinearRelation& g, const VectorSpaceObj& target,
                       const VectorSpaceObj& source) {
    if (g.source().dim != 0) throw ValidationError("ungraph: morphism source is not the unit object");
    if (g.target().dim != target.dim + source.dim || g.field() != target.field) {
        throw ValidationError("ungraph: objects do not match the graph's ambient space");
    }
    return LinearRelation(target, source, g.space());
}

}  // namespace linrel
