#include <doctest.h>

#include "helpers.hpp"
#include "linrel/gf2_oracle.hpp"
#include "linrel/randomgen.hpp"

using namespace linrel;
using testutil::mat;
using testutil::rel;
using testutil::sp;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime_field(2);

VectorSpaceObj obj(std::size_t dim, const FieldSpec& k = F2) { return VectorSpaceObj{dim, k, {}}; }

}  // namespace

TEST_SUITE_BEGIN("relcore");

TEST_CASE("identity diagonals") {
    CHECK(LinearRelation::identity(obj(0)).space() == Subspace::zero(0, F2));
    CHECK(LinearRelation::identity(obj(1, Q)).space() == sp(Q, 2, {{1, 1}}));
    CHECK(LinearRelation::identity(obj(2, Q)).space() == sp(Q, 4, {{1, 0, 1, 0}, {0, 1, 0, 1}}));
}

TEST_CASE("compose basics") {
    LinearRelation f = rel(obj(2, Q), obj(2, Q), {{1, 0, 1, 2}, {0, 1, 3, 4}});
    CHECK(compose(f, LinearRelation::identity(obj(2, Q))) == f);
    CHECK(compose(LinearRelation::identity(obj(2, Q)), f) == f);

    LinearRelation zf = LinearRelation::zero(obj(1), obj(1));
    LinearRelation fg = LinearRelation::full(obj(1), obj(1));
    CHECK(compose(zf, fg).space() == sp(F2, 2, {{0, 1}}));

    // graph of the zero map composed with an everywhere-defined relation.
    LinearRelation zero_graph = rel(obj(1), obj(1), {{0, 1}});
    LinearRelation g = rel(obj(1), obj(1), {{1, 1}});
    CHECK(compose(zero_graph, g) == rel(obj(1), obj(1), {{0, 1}}));

    CHECK_THROWS_AS(compose(zf, rel(obj(2), obj(1), {{0, 0, 1}})), ValidationError);
}

TEST_CASE("compose agrees with the intersect-project construction") {
    SplitMix64 rng(11);
    for (const FieldSpec& k : {Q, F2}) {
        for (int t = 0; t < 30; ++t) {
            VectorSpaceObj x = obj(rng.below(4), k), y = obj(rng.below(4), k), z = obj(rng.below(4), k);
            LinearRelation f = random_relation(rng, x, y);
            LinearRelation g = random_relation(rng, y, z);
            CHECK(compose(f, g) == compose_via_intersection(f, g));
        }
    }
}

TEST_CASE("transpose") {
    LinearRelation d = LinearRelation::identity(obj(2, Q));
    CHECK(transpose(d) == d);
    LinearRelation z = LinearRelation::zero(obj(2, Q), obj(1, Q));
    CHECK(transpose(z) == LinearRelation::zero(obj(1, Q), obj(2, Q)));
    LinearRelation f = rel(obj(2, Q), obj(2, Q), {{1, 0, 1, 1}});
    CHECK(transpose(f) == rel(obj(2, Q), obj(2, Q), {{1, 1, 1, 0}}));
    CHECK(transpose(transpose(f)) == f);
}

TEST_CASE("kernel, indeterminacy, domain, image") {
    LinearRelation d = LinearRelation::identity(obj(2, Q));
    CHECK(kernel(d).is_zero());
    CHECK(indeterminacy(d).is_zero());
    CHECK(domain(d).is_full());
    CHECK(image(d).is_full());

    LinearRelation full = LinearRelation::full(obj(1), obj(1));
    CHECK(kernel(full).is_full());
    CHECK(indeterminacy(full).is_full());
    CHECK(domain(full).is_full());
    CHECK(image(full).is_full());

    LinearRelation f = rel(obj(1), obj(1), {{1, 1}, {1, 0}});
    CHECK(kernel(f).is_full());
    CHECK(indeterminacy(f).is_full());
}

TEST_CASE("dual") {
    LinearRelation d = LinearRelation::identity(obj(3, Q));
    CHECK(dual(d) == d);
    CHECK(dual(LinearRelation::full(obj(1), obj(1))) == LinearRelation::zero(obj(1), obj(1)));
    CHECK(dual(LinearRelation::zero(obj(1), obj(1))) == LinearRelation::full(obj(1), obj(1)));
    LinearRelation f = rel(obj(2, Q), obj(1, Q), {{1, 2, 3}});
    CHECK(dual(dual(f)) == f);
}

TEST_CASE("pair excess and defect") {
    LinearRelation d = LinearRelation::identity(obj(2, Q));
    CHECK(excess_pair(d, d) == 0);
    CHECK(defect_pair(d, d) == 0);

    LinearRelation full = LinearRelation::full(obj(1), obj(1));
    CHECK(excess_pair(full, full) == 1);
    CHECK(defect_pair(full, full) == 0);

    LinearRelation zf = LinearRelation::zero(obj(1), obj(2));
    LinearRelation zg = LinearRelation::zero(obj(2), obj(1));
    CHECK(excess_pair(zf, zg) == 0);
    CHECK(defect_pair(zf, zg) == 2);
}

TEST_CASE("sequence excess and defect") {
    LinearRelation full = LinearRelation::full(obj(1), obj(1));
    CHECK(excess_seq(RelationChain{{full}}) == 0);
    CHECK(defect_seq(RelationChain{{full}}) == 0);

    RelationChain triple{{full, full, full}};
    CHECK(excess_seq(triple) == 2);
    CHECK(defect_seq(triple) == 0);

    LinearRelation z = LinearRelation::zero(obj(1), obj(1));
    RelationChain zz{{z, z}};
    CHECK(excess_seq(zz) == 0);
    CHECK(defect_seq(zz) == 1);
    CHECK(defect_seq(zz) == defect_pair(z, z));
    CHECK(excess_seq(zz) == excess_pair(z, z));
}

TEST_CASE("predicates") {
    LinearRelation d = LinearRelation::identity(obj(2, Q));
    CHECK(is_reduction(d));
    CHECK(is_coreduction(d));

    LinearRelation full = LinearRelation::full(obj(1), obj(1));
    CHECK(is_surjective(full));
    CHECK(is_cosurjective(full));
    CHECK_FALSE(is_injective(full));
    CHECK_FALSE(is_coinjective(full));

    // Cosurjective f or surjective g forces transversality.
    SplitMix64 rng(5);
    for (int t = 0; t < 20; ++t) {
        VectorSpaceObj x = obj(rng.below(3), Q), y = obj(1 + rng.below(3), Q), z = obj(rng.below(3), Q);
        LinearRelation f = random_relation(rng, x, y);
        LinearRelation g = random_relation(rng, y, z);
        if (is_cosurjective(f) || is_surjective(g)) CHECK(is_transversal(f, g));
        if (is_injective(f) || is_coinjective(g)) CHECK(is_monic(f, g));
        if (is_coreduction(f) || is_reduction(g)) CHECK(is_strongly_transversal(f, g));
    }
}

TEST_CASE("natural factorization") {
    SUBCASE("identity") {
        NaturalFactorization nf = natural_factorization(LinearRelation::identity(obj(2, Q)));
        CHECK(nf.coreduction == LinearRelation::identity(obj(2, Q)));
        CHECK(nf.iso == LinearRelation::identity(obj(2, Q)));
        CHECK(nf.reduction == LinearRelation::identity(obj(2, Q)));
    }
    SUBCASE("full relation collapses to dim-0 middle") {
        LinearRelation full = LinearRelation::full(obj(1), obj(1));
        NaturalFactorization nf = natural_factorization(full);
        CHECK(nf.iso.target().dim == 0);
        CHECK(nf.iso.source().dim == 0);
        CHECK(compose(nf.coreduction, compose(nf.iso, nf.reduction)) == full);
        CHECK(nf.reduction == rel(obj(0), obj(1), {{1}}));  // graph of the zero map
        CHECK(nf.coreduction == transpose(rel(obj(0), obj(1), {{1}})));
        CHECK(nf.iso == LinearRelation::identity(obj(0)));
    }
    SUBCASE("rank-1 map") {
        Matrix m = mat(Q, 2, {{1, 2}, {2, 4}});
        LinearRelation f = LinearRelation::graph_of_map(obj(2, Q), obj(2, Q), m);
        NaturalFactorization nf = natural_factorization(f);
        CHECK(nf.iso.target().dim == 1);
        CHECK(nf.iso.source().dim == 1);
        CHECK(compose(nf.coreduction, compose(nf.iso, nf.reduction)) == f);
    }
    SUBCASE("random relations recompose and are strongly transversal") {
        SplitMix64 rng(31);
        for (const FieldSpec& k : {Q, F2}) {
            for (int t = 0; t < 25; ++t) {
                LinearRelation f =
                    random_relation(rng, obj(rng.below(4), k), obj(rng.below(4), k));
                NaturalFactorization nf = natural_factorization(f);
                CHECK(is_coreduction(nf.coreduction));
                CHECK(is_reduction(nf.reduction));
                CHECK(is_injective(nf.iso));
                CHECK(is_coinjective(nf.iso));
                CHECK(is_surjective(nf.iso));
                CHECK(is_cosurjective(nf.iso));
                CHECK(nf.iso.target().dim == image(f).dim() - indeterminacy(f).dim());
                CHECK(nf.iso.source().dim == domain(f).dim() - kernel(f).dim());
                LinearRelation inner = compose(nf.iso, nf.reduction);
                CHECK(compose(nf.coreduction, inner) == f);
                CHECK(is_strongly_transversal(nf.coreduction, nf.iso));
                CHECK(is_strongly_transversal(nf.iso, nf.reduction));
                CHECK(is_strongly_transversal(nf.coreduction, inner));
                CHECK(is_strongly_transversal(compose(nf.coreduction, nf.iso), nf.reduction));
                RelationChain whole{{nf.coreduction, nf.iso, nf.reduction}};
                CHECK(excess_seq(whole) == 0);
                CHECK(defect_seq(whole) == 0);
            }
        }
    }
}

TEST_CASE("strongly transversal two-term factorization") {
    auto verify = [](const LinearRelation& f) {
        StFactorization st = st_factorization(f);
        CHECK(st.a.source().dim == f.target().dim + 2 * f.source().dim);
        CHECK(is_reduction(st.a));
        CHECK(is_coreduction(st.b));
        CHECK(compose(st.a, st.b) == f);
        CHECK(excess_pair(st.a, st.b) == 0);
        CHECK(defect_pair(st.a, st.b) == 0);
    };
    verify(LinearRelation::identity(obj(1, Q)));
    verify(LinearRelation::zero(obj(1), obj(1)));
    verify(LinearRelation::full(obj(1), obj(1)));
    SplitMix64 rng(17);
    for (int t = 0; t < 25; ++t) {
        verify(random_relation(rng, obj(rng.below(4), Q), obj(rng.below(4), Q)));
    }

    // Over GF(2) the postconditions are also confirmed by brute force over
    // every vector of the middle space Q.
    for (const LinearRelation& f :
         {LinearRelation::zero(obj(1), obj(1)), LinearRelation::full(obj(1), obj(1))}) {
        StFactorization st = st_factorization(f);
        RelationChain chain{{st.a, st.b}};
        CHECK(gf2::count_zero_trajectories(chain) == 1);  // excess 0
        const std::size_t ambient = gf2::chain_ambient(chain);
        CHECK(gf2::count_sum_subspace_members(chain) == (std::uint64_t(1) << ambient));  // defect 0
    }
}

TEST_CASE("iso invariants") {
    CHECK(iso_invariants(LinearRelation::identity(obj(1, Q))) ==
          IsoInvariants{1, 1, 1, 0, 1, 0});
    CHECK(iso_invariants(LinearRelation::zero(obj(1), obj(1))) == IsoInvariants{1, 1, 0, 0, 0, 0});
    CHECK(iso_invariants(LinearRelation::full(obj(1), obj(1))) == IsoInvariants{1, 1, 1, 1, 1, 1});
}

TEST_CASE("tensor") {
    LinearRelation f = rel(obj(1, Q), obj(2, Q), {{1, 0, 2}});
    LinearRelation unit_id = LinearRelation::identity(obj(0, Q));
    CHECK(tensor(f, unit_id) == f);
    CHECK(tensor(unit_id, f) == f);

    LinearRelation d1 = LinearRelation::identity(obj(1, Q));
    CHECK(tensor(d1, d1) == LinearRelation::identity(obj(2, Q)));

    LinearRelation z = LinearRelation::zero(obj(1), obj(1));
    LinearRelation full = LinearRelation::full(obj(1), obj(1));
    LinearRelation t = tensor(z, full);
    CHECK(t.dim() == z.dim() + full.dim());
    IsoInvariants iz = iso_invariants(z), ifu = iso_invariants(full), it = iso_invariants(t);
    CHECK(it.dim_dom == iz.dim_dom + ifu.dim_dom);
    CHECK(it.dim_ker == iz.dim_ker + ifu.dim_ker);
    CHECK(it.dim_im == iz.dim_im + ifu.dim_im);
    CHECK(it.dim_indet == iz.dim_indet + ifu.dim_indet);
}

TEST_CASE("graph and ungraph") {
    LinearRelation d1 = LinearRelation::identity(obj(1, Q));
    LinearRelation g = graph_of(d1);
    CHECK(g.target().dim == 2);
    CHECK(g.source().dim == 0);
    CHECK(g.space() == sp(Q, 2, {{1, 1}}));
    CHECK(ungraph(g, d1.target(), d1.source()) == d1);
    LinearRelation z = LinearRelation::zero(obj(1), obj(2));
    CHECK(graph_of(z).space() == z.space());
    CHECK(ungraph(graph_of(z), z.target(), z.source()) == z);
}

TEST_SUITE_END();
