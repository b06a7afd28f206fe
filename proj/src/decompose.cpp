#include "linrel/decompose.hpp"

namespace linrel {

namespace {

std::size_t checked_sub(std::size_t lhs, std::size_t rhs, const char* what) {
    if (rhs > lhs) {
        throw ValidationError(std::string("multiplicity extraction: negative ") + what +
                              " (inconsistent input)");
    }
    return lhs - rhs;
}

}  // namespace

TripleMultiplicities triple_multiplicities(std::size_t v_dim, const Subspace& a,
                                           const Subspace& b, const Subspace& c) {
    if (a.ambient_dim() != v_dim || b.ambient_dim() != v_dim || c.ambient_dim() != v_dim) {
        throw ValidationError("triple_multiplicities: ambient mismatch");
    }
    if (!subspace_contains(a, b)) {
        throw ValidationError("triple_multiplicities: B must be contained in A");
    }
    const std::size_t ac = intersect(a, c).dim();
    const std::size_t bc = intersect(b, c).dim();
    TripleMultiplicities m{};
    m.n8 = bc;
    m.n7 = checked_sub(b.dim(), bc, "n7");
    m.n6 = checked_sub(ac, bc, "n6");
    m.n4 = checked_sub(checked_sub(a.dim(), b.dim(), "n4"), m.n6, "n4");
    m.n2 = checked_sub(c.dim(), ac, "n2");
    m.n1 = checked_sub(v_dim, sum(a, c).dim(), "n1");
    return m;
}

IsoPairMultiplicities isotropic_pair_multiplicities(const SymplecticSpace& x, const Subspace& a,
                                                    const Subspace& b) {
    if (!is_isotropic(x, a) || !is_isotropic(x, b)) {
        throw ValidationError("isotropic_pair_multiplicities: inputs must be isotropic");
    }
    Subspace a_orth = symp_orthogonal(x, a);
    Subspace b_orth = symp_orthogonal(x, b);
    IsoPairMultiplicities m{};
    m.n1 = intersect(a, b).dim();
    m.n2 = checked_sub(intersect(a, b_orth).dim(), m.n1, "n2");
    m.n3 = checked_sub(intersect(b, a_orth).dim(), m.n1, "n3");
    m.n4 = checked_sub(checked_sub(a.dim(), m.n1, "n4"), m.n2, "n4");
    m.n5 = checked_sub(x.dim() / 2, m.n1 + m.n2 + m.n3 + m.n4, "n5");
    if (checked_sub(b.dim(), m.n1 + m.n3, "consistency") != m.n4) {
        throw ValidationError("isotropic_pair_multiplicities: consistency check failed");
    }
    return m;
}

WWIndices ww_indices_from_multiplicities(const TripleMultiplicities& m) {
    return WWIndices{m.n1, m.n8, m.n6};
}

WWIndices ww_indices_from_multiplicities(const IsoPairMultiplicities& m) {
    return WWIndices{m.n1 + m.n2, m.n1, m.n3};
}

}  // namespace linrel
