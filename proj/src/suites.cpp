#include "linrel/suites.hpp"

#include <functional>

#include "linrel/decompose.hpp"
#include "linrel/gf2_oracle.hpp"

namespace linrel {

namespace {

struct CaseContext {
    std::vector<std::string> errors;

    void check(bool cond, const std::string& message) {
        if (!cond) errors.push_back(message);
    }
};

CategoryTag rotate_tag(std::size_t index) {
    switch (index % 4) {
        case 0: return CategoryTag::LREL;
        case 1: return CategoryTag::SLREL;
        case 2: return CategoryTag::ILREL;
        default: return CategoryTag::CLREL;
    }
}

// (composite, excess, defect) accumulated over one binary tree shape.
struct TreeEval {
    LinearRelation composite;
    std::size_t excess, defect;
};

std::vector<TreeEval> eval_trees(const std::vector<LinearRelation>& links, std::size_t lo,
                                 std::size_t hi) {
    std::vector<TreeEval> out;
    if (hi - lo == 1) {
        out.push_back(TreeEval{links[lo], 0, 0});
        return out;
    }
    for (std::size_t mid = lo + 1; mid < hi; ++mid) {
        for (const TreeEval& left : eval_trees(links, lo, mid)) {
            for (const TreeEval& right : eval_trees(links, mid, hi)) {
                out.push_back(TreeEval{compose(left.composite, right.composite),
                                       left.excess + right.excess +
                                           excess_pair(left.composite, right.composite),
                                       left.defect + right.defect +
                                           defect_pair(left.composite, right.composite)});
            }
        }
    }
    return out;
}

void suite_duality(SplitMix64& rng, const SuiteParams& params, CaseContext& ctx) {
    const std::size_t dx = rng.below(params.max_dim + 1), dy = rng.below(params.max_dim + 1),
                      dz = rng.below(params.max_dim + 1);
    VectorSpaceObj x{dx, params.field, {}}, y{dy, params.field, {}}, z{dz, params.field, {}};
    LinearRelation f = random_relation(rng, x, y);
    LinearRelation g = random_relation(rng, y, z);

    ctx.check(dual(compose(f, g)) == compose(dual(g), dual(f)), "dual(fg) != dual(g)dual(f)");
    ctx.check(dual(dual(f)) == f, "dual is not an involution");
    ctx.check(dual(transpose(f)) == transpose(dual(f)), "dual/transpose do not commute");
    ctx.check(compose(f, g) == compose_via_intersection(f, g),
              "elimination and intersect-project composition disagree");

    LinearRelation fd = dual(f), gd = dual(g);
    ctx.check(kernel(fd) == annihilator(image(f)), "ker f* != (Im f)^o");
    ctx.check(image(fd) == annihilator(kernel(f)), "Im f* != (ker f)^o");
    ctx.check(indeterminacy(fd) == annihilator(domain(f)), "Indet f* != (Dom f)^o");
    ctx.check(domain(fd) == annihilator(indeterminacy(f)), "Dom f* != (Indet f)^o");
    ctx.check(is_reduction(f) == is_coreduction(fd), "duality should swap reductions");

    ctx.check(annihilator(intersect(kernel(f), indeterminacy(g))) == sum(domain(gd), image(fd)),
              "(ker f meet Indet g)^o != Dom g* + Im f*");
    ctx.check(annihilator(sum(domain(f), image(g))) == intersect(kernel(gd), indeterminacy(fd)),
              "(Dom f + Im g)^o != ker g* meet Indet f*");

    ctx.check(excess_pair(transpose(g), transpose(f)) == excess_pair(f, g),
              "transpose should preserve pair excess");
    ctx.check(defect_pair(transpose(g), transpose(f)) == defect_pair(f, g),
              "transpose should preserve pair defect");
}

void suite_additivity(SplitMix64& rng, const SuiteParams& params, CaseContext& ctx) {
    const std::size_t length = 3 + rng.below(3);
    RelationChain chain = random_chain(rng, length, params.max_dim, params.field);
    const std::size_t e = excess_seq(chain), d = defect_seq(chain);

    for (const ParenthesizedIndices& p : all_parenthesizations(chain)) {
        ctx.check(p.excess == e, "a parenthesization accumulates a different excess");
        ctx.check(p.defect == d, "a parenthesization accumulates a different defect");
    }

    for (std::size_t j = 1; j < length; ++j) {
        std::vector<LinearRelation> left(chain.links().begin(), chain.links().begin() + j);
        std::vector<LinearRelation> right(chain.links().begin() + j, chain.links().end());
        RelationChain lc{left}, rc{right};
        LinearRelation lcomp = compose_chain(lc), rcomp = compose_chain(rc);
        ctx.check(e == excess_seq(lc) + excess_pair(lcomp, rcomp) + excess_seq(rc),
                  "excess split identity fails at j=" + std::to_string(j));
        ctx.check(d == defect_seq(lc) + defect_pair(lcomp, rcomp) + defect_seq(rc),
                  "defect split identity fails at j=" + std::to_string(j));
    }

    // Two-sided criterion: (f,g) and (fg,h) are both index-free exactly when
    // (g,h) and (f,gh) are.
    if (length >= 3) {
        const LinearRelation& f = chain.links()[0];
        const LinearRelation& g = chain.links()[1];
        const LinearRelation& h = chain.links()[2];
        auto congenial = [](const LinearRelation& p, const LinearRelation& q) {
            return excess_pair(p, q) == 0 && defect_pair(p, q) == 0;
        };
        bool lhs = congenial(f, g) && congenial(compose(f, g), h);
        bool rhs = congenial(g, h) && congenial(f, compose(g, h));
        ctx.check(lhs == rhs, "congenial-triple criterion is not symmetric");
    }
}

void suite_duality_exchange(SplitMix64& rng, const SuiteParams& params, CaseContext& ctx) {
    const std::size_t length = 1 + rng.below(4);
    RelationChain chain = random_chain(rng, length, params.max_dim, params.field);
    std::vector<LinearRelation> reversed;
    for (std::size_t i = chain.size(); i > 0; --i) reversed.push_back(dual(chain.links()[i - 1]));
    RelationChain dual_chain{reversed};
    ctx.check(excess_seq(chain) == defect_seq(dual_chain), "E(chain) != D(reversed duals)");
    ctx.check(defect_seq(chain) == excess_seq(dual_chain), "D(chain) != E(reversed duals)");
}

void suite_inequality(SplitMix64& rng, const SuiteParams& params, CaseContext& ctx) {
    const std::size_t max_n = std::max<std::size_t>(1, params.max_dim / 2);
    const std::size_t length = 1 + rng.below(3);
    SympChain ichain = random_symp_chain(rng, CategoryTag::ILREL, length, max_n, params.field);
    ctx.check(excess_seq(ichain) <= defect_seq(ichain), "ILREL chain with excess > defect");
    SympChain cchain = random_symp_chain(rng, CategoryTag::CLREL, length, max_n, params.field);
    ctx.check(defect_seq(cchain) <= excess_seq(cchain), "CLREL chain with defect > excess");
    SympChain schain = random_symp_chain(rng, CategoryTag::SLREL, length, max_n, params.field);
    ctx.check(excess_seq(schain) == defect_seq(schain), "SLREL chain with excess != defect");
}

WWMorphism random_tagged_morphism(SplitMix64& rng, CategoryTag tag, const SuiteParams& params) {
    return random_ww_morphism(rng, tag, params.max_dim, 2, params.field);
}

void suite_ww_assoc(SplitMix64& rng, const SuiteParams& params, CaseContext& ctx,
                    std::size_t case_index) {
    CategoryTag tag = rotate_tag(case_index);
    if (tag == CategoryTag::LREL) {
        RelationChain chain = random_chain(rng, 3, params.max_dim, params.field);
        WWMorphism m = ww_from_chain(chain, tag);
        ctx.check(m.shadow_linear() == compose_chain(chain), "shadow != plain composite");
        std::vector<WWMorphism> lifted;
        for (const LinearRelation& link : chain.links()) lifted.push_back(ww_embed(link));
        WWMorphism left = ww_compose(ww_compose(lifted[0], lifted[1]), lifted[2]);
        WWMorphism right = ww_compose(lifted[0], ww_compose(lifted[1], lifted[2]));
        ctx.check(left == right, "ww_compose is not associative");
        ctx.check(left == m, "fold of ww_compose != ww_from_chain");
        const LinearRelation& f = chain.links()[0];
        const LinearRelation& g = chain.links()[1];
        if (is_strongly_transversal(f, g)) {
            ctx.check(ww_compose(ww_embed(f), ww_embed(g)) == ww_embed(compose(f, g)),
                      "strongly transversal pair does not compose on the nose");
        }
    } else {
        const std::size_t max_n = std::max<std::size_t>(1, params.max_dim / 2);
        SympChain chain = random_symp_chain(rng, tag, 3, max_n, params.field);
        WWMorphism m = ww_from_chain(chain, tag);
        ctx.check(any_equal(m.shadow(), AnyRelation(compose_chain(chain))),
                  "shadow != plain composite");
        std::vector<WWMorphism> lifted;
        for (const SympRelation& link : chain.links()) lifted.push_back(ww_embed(link, tag));
        WWMorphism left = ww_compose(ww_compose(lifted[0], lifted[1]), lifted[2]);
        WWMorphism right = ww_compose(lifted[0], ww_compose(lifted[1], lifted[2]));
        ctx.check(left == right, "ww_compose is not associative");
        ctx.check(left == m, "fold of ww_compose != ww_from_chain");
        const SympRelation& f = chain.links()[0];
        const SympRelation& g = chain.links()[1];
        if (is_strongly_transversal(f.as_linear(), g.as_linear())) {
            ctx.check(ww_compose(ww_embed(f, tag), ww_embed(g, tag)) ==
                          ww_embed(compose(f, g), tag),
                      "strongly transversal pair does not compose on the nose");
        }
    }
}

void suite_two_term(SplitMix64& rng, const SuiteParams& params, CaseContext& ctx,
                    std::size_t case_index) {
    CategoryTag tag = rotate_tag(case_index);
    WWMorphism m = random_tagged_morphism(rng, tag, params);
    TwoTermRep rep = ww_two_term(m);
    LinearRelation a = any_as_linear(rep.a), b = any_as_linear(rep.b);
    ctx.check(is_reduction(a), "two-term A is not a reduction");
    ctx.check(is_coreduction(b), "two-term B is not a coreduction");
    ctx.check(any_equal(any_compose(rep.a, rep.b), m.shadow()), "two-term composite != shadow");
    ctx.check(defect_pair(a, b) == m.defect(), "two-term pair defect mismatch");
    ctx.check(excess_pair(a, b) == m.excess(), "two-term pair excess mismatch");
    if (tag == CategoryTag::LREL) {
        RelationChain chain{{std::get<LinearRelation>(rep.a), std::get<LinearRelation>(rep.b)}};
        ctx.check(ww_from_chain(chain, tag) == m, "two-term round trip fails");
    } else {
        ctx.check(check_morphism(std::get<SympRelation>(rep.a), tag), "two-term A leaves category");
        ctx.check(check_morphism(std::get<SympRelation>(rep.b), tag), "two-term B leaves category");
        SympChain chain{{std::get<SympRelation>(rep.a), std::get<SympRelation>(rep.b)}};
        ctx.check(ww_from_chain(chain, tag) == m, "two-term round trip fails");
    }
}

void suite_tables(SplitMix64& rng, const SuiteParams& params, CaseContext& ctx,
                  std::size_t case_index) {
    if (case_index % 2 == 0) {
        // LREL: triple (A, B, C) in X + Y + Y + Z.
        const std::size_t dx = rng.below(params.max_dim + 1), dy = rng.below(params.max_dim + 1),
                          dz = rng.below(params.max_dim + 1);
        VectorSpaceObj x{dx, params.field, {}}, y{dy, params.field, {}}, z{dz, params.field, {}};
        LinearRelation f = random_relation(rng, x, y);
        LinearRelation g = random_relation(rng, y, z);
        const std::size_t total = dx + 2 * dy + dz;
        const FieldSpec& k = params.field;

        std::vector<std::vector<Scalar>> a_rows;
        auto axis = [&](std::size_t idx) {
            std::vector<Scalar> v(total, Scalar::zero(k));
            v[idx] = Scalar::one(k);
            return v;
        };
        for (std::size_t i = 0; i < dx; ++i) a_rows.push_back(axis(i));
        std::vector<std::vector<Scalar>> b_rows;
        for (std::size_t i = 0; i < dy; ++i) {
            std::vector<Scalar> v(total, Scalar::zero(k));
            v[dx + i] = Scalar::one(k);
            v[dx + dy + i] = Scalar::one(k);
            a_rows.push_back(v);
            b_rows.push_back(std::move(v));
        }
        for (std::size_t i = 0; i < dz; ++i) a_rows.push_back(axis(dx + 2 * dy + i));
        Subspace a = Subspace::span(Matrix::from_rows(k, total, a_rows));
        Subspace b = Subspace::span(Matrix::from_rows(k, total, b_rows));
        Subspace c = direct_sum(f.space(), g.space());

        WWIndices predicted = ww_indices_from_multiplicities(triple_multiplicities(total, a, b, c));
        WWIndices actual{defect_pair(f, g), excess_pair(f, g), compose(f, g).dim()};
        ctx.check(predicted == actual, "LREL table prediction mismatch");
    } else {
        // ILREL: isotropic pair (0 x Diag x 0, f x g) in X x Ybar x Y x Zbar.
        const std::size_t max_n = std::max<std::size_t>(1, params.max_dim / 2);
        SymplecticSpace x = SymplecticSpace::standard(rng.below(max_n + 1), params.field);
        SymplecticSpace y = SymplecticSpace::standard(rng.below(max_n + 1), params.field);
        SymplecticSpace z = SymplecticSpace::standard(rng.below(max_n + 1), params.field);
        SympRelation f = random_symp_relation(rng, CategoryTag::ILREL, x, y);
        SympRelation g = random_symp_relation(rng, CategoryTag::ILREL, y, z);
        SymplecticSpace big = product(product(x, y.opposite()), product(y, z.opposite()));
        const std::size_t total = big.dim();
        const FieldSpec& k = params.field;
        std::vector<std::vector<Scalar>> a_rows;
        for (std::size_t i = 0; i < y.dim(); ++i) {
            std::vector<Scalar> v(total, Scalar::zero(k));
            v[x.dim() + i] = Scalar::one(k);
            v[x.dim() + y.dim() + i] = Scalar::one(k);
            a_rows.push_back(std::move(v));
        }
        Subspace a = Subspace::span(Matrix::from_rows(k, total, a_rows));
        Subspace b = direct_sum(f.space(), g.space());
        WWIndices predicted =
            ww_indices_from_multiplicities(isotropic_pair_multiplicities(big, a, b));
        WWIndices actual{defect_pair(f, g), excess_pair(f, g), compose(f, g).space().dim()};
        ctx.check(predicted == actual, "isotropic table prediction mismatch");
    }
}

void suite_oracle_gf2(SplitMix64& rng, const SuiteParams& params, CaseContext& ctx) {
    FieldSpec gf2 = FieldSpec::prime_field(2);
    const std::size_t max_dim = std::min<std::size_t>(params.max_dim, 3);
    const std::size_t length = 1 + rng.below(3);
    RelationChain chain = random_chain(rng, length, max_dim, gf2);
    const std::size_t e = excess_seq(chain), d = defect_seq(chain);
    ctx.check(gf2::count_zero_trajectories(chain) == (std::uint64_t(1) << e),
              "trajectory count != 2^excess");

    // The trajectory space between any related pair of endpoints has the same
    // size; unrelated endpoints admit none.
    LinearRelation composite = compose_chain(chain);
    const std::size_t dx = composite.target().dim, dy = composite.source().dim;
    for (int probe = 0; probe < 2; ++probe) {
        Matrix coeffs = random_matrix(rng, 1, composite.dim(), gf2);
        Matrix endpoint = coeffs * composite.space().basis();
        gf2::Mask t = 0, s = 0;
        for (std::size_t j = 0; j < dx; ++j) {
            if (endpoint.at(0, j).residue() != 0) t |= gf2::Mask(1) << j;
        }
        for (std::size_t j = 0; j < dy; ++j) {
            if (endpoint.at(0, dx + j).residue() != 0) s |= gf2::Mask(1) << j;
        }
        ctx.check(gf2::count_trajectories(chain, t, s) == (std::uint64_t(1) << e),
                  "related endpoints have a trajectory count != 2^excess");
    }
    if (!composite.space().is_full() && dx + dy > 0) {
        // First vector outside the composite, scanning the ambient cube.
        for (std::uint64_t v = 0; v < (std::uint64_t(1) << (dx + dy)); ++v) {
            std::vector<Scalar> vec;
            for (std::size_t j = 0; j < dx + dy; ++j) {
                vec.push_back(Scalar::from_residue(gf2, (v >> j) & 1));
            }
            if (contains(composite.space(), vec)) continue;
            gf2::Mask t = static_cast<gf2::Mask>(v & ((1u << dx) - 1));
            gf2::Mask s = static_cast<gf2::Mask>(v >> dx);
            ctx.check(gf2::count_trajectories(chain, t, s) == 0,
                      "unrelated endpoints admit a trajectory");
            break;
        }
    }

    const std::size_t ambient = gf2::chain_ambient(chain);
    ctx.check(gf2::count_sum_subspace_members(chain) == (std::uint64_t(1) << (ambient - d)),
              "sum-subspace enumeration contradicts the defect");
}

void suite_cotangent(SplitMix64& rng, const SuiteParams& params, CaseContext& ctx) {
    const std::size_t dx = rng.below(params.max_dim + 1), dy = rng.below(params.max_dim + 1),
                      dz = rng.below(params.max_dim + 1);
    VectorSpaceObj x{dx, params.field, {}}, y{dy, params.field, {}}, z{dz, params.field, {}};
    LinearRelation f = random_relation(rng, x, y);
    LinearRelation g = random_relation(rng, y, z);
    SympRelation tf = cotangent(f), tg = cotangent(g);
    ctx.check(check_morphism(tf, CategoryTag::SLREL), "T*f is not lagrangian");
    ctx.check(check_morphism(tg, CategoryTag::SLREL), "T*g is not lagrangian");
    ctx.check(cotangent(compose(f, g)) == compose(tf, tg), "T* does not preserve composition");
    ctx.check(cotangent(LinearRelation::identity(x)) == SympRelation::identity(tf.target()),
              "T* does not preserve identities");
    const std::size_t law = defect_pair(f, g) + excess_pair(f, g);
    ctx.check(defect_pair(tf, tg) == law, "D(T*f, T*g) != D(f,g) + E(f,g)");
    ctx.check(excess_pair(tf, tg) == law, "E(T*f, T*g) != D(f,g) + E(f,g)");
}

void suite_iso_coiso(SplitMix64& rng, const SuiteParams& params, CaseContext& ctx) {
    const std::size_t max_n = std::max<std::size_t>(1, params.max_dim / 2);
    SymplecticSpace x = SymplecticSpace::standard(rng.below(max_n + 1), params.field);
    SymplecticSpace y = SymplecticSpace::standard(rng.below(max_n + 1), params.field);
    SymplecticSpace z = SymplecticSpace::standard(rng.below(max_n + 1), params.field);
    SympRelation f = random_symp_relation(rng, CategoryTag::ILREL, x, y);
    SympRelation g = random_symp_relation(rng, CategoryTag::ILREL, y, z);

    SympRelation df = iso_coiso_dual(f), dg = iso_coiso_dual(g);
    ctx.check(check_morphism(df, CategoryTag::CLREL), "dual of isotropic is not coisotropic");
    ctx.check(coiso_iso_dual(df) == f, "iso/coiso duality does not round trip");
    ctx.check(iso_coiso_dual(compose(f, g)) == compose(dg, df),
              "iso/coiso duality is not contravariant");
    ctx.check(excess_pair(f, g) == defect_pair(dg, df), "duality does not swap E to D");
    ctx.check(defect_pair(f, g) == excess_pair(dg, df), "duality does not swap D to E");

    ctx.check(check_morphism(compose(f, g), CategoryTag::ILREL),
              "isotropic relations are not closed under composition");
    SympRelation cf = random_symp_relation(rng, CategoryTag::CLREL, x, y);
    SympRelation cg = random_symp_relation(rng, CategoryTag::CLREL, y, z);
    ctx.check(check_morphism(compose(cf, cg), CategoryTag::CLREL),
              "coisotropic relations are not closed under composition");
    ctx.check(check_morphism(SympRelation::identity(x), CategoryTag::SLREL),
              "diagonal is not lagrangian");

    SympRelation lag = random_symp_relation(rng, CategoryTag::SLREL, x, y);
    ctx.check(check_morphism(lag, CategoryTag::ILREL) && check_morphism(lag, CategoryTag::CLREL),
              "SLREL morphism missing from ILREL meet CLREL");
    ctx.check(lag.classify() == SubspaceClass::Lagrangian, "classify() disagrees on a lagrangian");
}

}  // namespace

std::vector<ParenthesizedIndices> all_parenthesizations(const RelationChain& chain) {
    std::vector<ParenthesizedIndices> out;
    for (const TreeEval& t : eval_trees(chain.links(), 0, chain.size())) {
        out.push_back(ParenthesizedIndices{t.excess, t.defect});
    }
    return out;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "duality",  "additivity", "duality-exchange", "inequality", "ww-assoc",
        "two-term", "tables",     "oracle-gf2",       "cotangent",  "iso-coiso"};
    return names;
}

SuiteResult run_suite(const std::string& name, const SuiteParams& params) {
    bool known = false;
    for (const std::string& n : suite_names()) known = known || n == name;
    if (!known) throw ValidationError("unknown suite '" + name + "'");

    SuiteResult result;
    result.name = name;
    result.seed = params.seed;
    result.cases = params.cases;
    SplitMix64 master(params.seed);
    for (std::size_t i = 0; i < params.cases; ++i) {
        const std::uint64_t case_seed = master.next();
        SplitMix64 rng(case_seed);
        CaseContext ctx;
        try {
            if (name == "duality") suite_duality(rng, params, ctx);
            else if (name == "additivity") suite_additivity(rng, params, ctx);
            else if (name == "duality-exchange") suite_duality_exchange(rng, params, ctx);
            else if (name == "inequality") suite_inequality(rng, params, ctx);
            else if (name == "ww-assoc") suite_ww_assoc(rng, params, ctx, i);
            else if (name == "two-term") suite_two_term(rng, params, ctx, i);
            else if (name == "tables") suite_tables(rng, params, ctx, i);
            else if (name == "oracle-gf2") suite_oracle_gf2(rng, params, ctx);
            else if (name == "cotangent") suite_cotangent(rng, params, ctx);
            else if (name == "iso-coiso") suite_iso_coiso(rng, params, ctx);
        } catch (const std::exception& e) {
            ctx.errors.push_back(std::string("exception: ") + e.what());
        }
        if (ctx.errors.empty()) {
            ++result.passes;
        } else {
            std::string joined;
            for (const std::string& e : ctx.errors) {
                if (!joined.empty()) joined += "; ";
                joined += e;
            }
            result.failures.push_back(CaseFailure{i, case_seed, joined});
        }
    }
    return result;
}

}  // namespace linrel
