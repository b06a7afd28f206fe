#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "linrel/gf2_oracle.hpp"
#include "linrel/randomgen.hpp"

using namespace linrel;
using testutil::mat;
using testutil::sp;
using testutil::vec;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime_field(2);
const FieldSpec F7 = FieldSpec::prime_field(7);

// All vectors of a GF(2) subspace, as bit masks, by brute-force span.
std::set<std::uint32_t> gf2_elements(const Subspace& s) {
    std::set<std::uint32_t> out;
    const std::size_t k = s.dim();
    for (std::uint32_t combo = 0; combo < (1u << k); ++combo) {
        std::uint32_t v = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (!(combo & (1u << i))) continue;
            for (std::size_t j = 0; j < s.ambient_dim(); ++j) {
                if (s.basis().at(i, j).residue() != 0) v ^= 1u << j;
            }
        }
        out.insert(v);
    }
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("exactalg");

TEST_CASE("scalar arithmetic and parsing") {
    CHECK(Scalar::parse(Q, "2/4") == Scalar::parse(Q, "1/2"));
    CHECK(Scalar::parse(Q, "-3").str() == "-3");
    CHECK((Scalar::parse(Q, "1/3") + Scalar::parse(Q, "1/6")).str() == "1/2");
    CHECK(Scalar::from_int(F7, 10) == Scalar::from_int(F7, 3));
    CHECK((Scalar::from_int(F7, 3).inverse() * Scalar::from_int(F7, 3)).is_one());
    CHECK_THROWS_AS(Scalar::from_int(Q, 1) + Scalar::from_int(F7, 1), ValidationError);
    CHECK_THROWS_AS(FieldSpec::prime_field(6), ValidationError);
    CHECK(FieldSpec::parse("gf:11").characteristic() == 11);
    CHECK_THROWS_AS(Scalar::parse(Q, "1/0"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(F7, "2/3"), ParseError);

    // A Mersenne prime near the characteristic bound.
    FieldSpec big = FieldSpec::prime_field(2305843009213693951ull);
    Scalar a = Scalar::parse(big, "2305843009213693950");
    CHECK((a + Scalar::one(big)).is_zero());
    CHECK((a * a).is_one());  // (-1)^2
    Scalar b = Scalar::from_residue(big, 1234567890123456789ull);
    CHECK((b * b.inverse()).is_one());
    CHECK_THROWS_AS(FieldSpec::prime_field(4611686018427388039ull), ValidationError);  // >= 2^62
}

TEST_CASE("rref canonical forms") {
    CHECK(rref(Matrix::identity(2, Q)) == Matrix::identity(2, Q));
    CHECK(rref(mat(Q, 2, {{2, 4}, {1, 2}})) == mat(Q, 2, {{1, 2}}));
    CHECK(rref(mat(F2, 2, {{1, 1}, {0, 1}})) == Matrix::identity(2, F2));
}

TEST_CASE("span") {
    CHECK(Subspace::span(Matrix(0, 3, Q)).dim() == 0);
    CHECK(sp(Q, 2, {{1, 0}, {0, 1}}).is_full());
    Subspace s = sp(F2, 2, {{1, 1}, {1, 0}, {0, 1}});
    CHECK(s.is_full());
    CHECK(s.dim() == 2);
    CHECK_THROWS_AS(Subspace::span(mat(Q, 2, {{1, 0}}), 3), ValidationError);
}

TEST_CASE("sum") {
    Subspace a = sp(Q, 3, {{1, 2, 3}});
    CHECK(sum(a, Subspace::zero(3, Q)) == a);
    CHECK(sum(sp(Q, 2, {{1, 0}}), sp(Q, 2, {{0, 1}})).is_full());
    CHECK(sum(sp(F2, 2, {{1, 0}}), sp(F2, 2, {{1, 1}})).is_full());
    CHECK_THROWS_AS(sum(a, Subspace::zero(2, Q)), ValidationError);
}

TEST_CASE("intersect") {
    Subspace a = sp(Q, 3, {{1, 1, 0}});
    CHECK(intersect(a, Subspace::full(3, Q)) == a);
    CHECK(intersect(sp(Q, 2, {{1, 0}}), sp(Q, 2, {{0, 1}})).is_zero());
    CHECK(intersect(sp(Q, 3, {{1, 0, 0}, {0, 1, 0}}), sp(Q, 3, {{0, 1, 0}, {0, 0, 1}})) ==
          sp(Q, 3, {{0, 1, 0}}));
}

TEST_CASE("annihilator") {
    CHECK(annihilator(Subspace::zero(4, Q)).is_full());
    CHECK(annihilator(Subspace::full(4, Q)).is_zero());
    CHECK(annihilator(sp(F2, 2, {{1, 1}})) == sp(F2, 2, {{1, 1}}));
}

TEST_CASE("contains") {
    CHECK(contains(Subspace::zero(2, Q), vec(Q, {0, 0})));
    CHECK_FALSE(contains(sp(Q, 2, {{0, 1}}), vec(Q, {1, 0})));
    CHECK(contains(sp(F2, 2, {{1, 0}, {0, 1}}), vec(F2, {1, 1})));
    CHECK(subspace_contains(sp(Q, 2, {{1, 0}, {0, 1}}), sp(Q, 2, {{1, 1}})));
    CHECK_FALSE(subspace_contains(sp(Q, 2, {{1, 1}}), sp(Q, 2, {{1, 0}})));
}

TEST_CASE("direct_sum") {
    CHECK(direct_sum(Subspace::zero(2, Q), Subspace::zero(3, Q)) == Subspace::zero(5, Q));
    CHECK(direct_sum(Subspace::full(2, Q), Subspace::full(3, Q)).is_full());
    CHECK(direct_sum(sp(Q, 2, {{1, 0}}), sp(Q, 1, {{1}})) == sp(Q, 3, {{1, 0, 0}, {0, 0, 1}}));
}

TEST_CASE("pivot_complement") {
    CHECK(pivot_complement(Subspace::zero(3, Q)).is_full());
    CHECK(pivot_complement(Subspace::full(3, Q)).is_zero());
    CHECK(pivot_complement(sp(Q, 2, {{1, 1}})) == sp(Q, 2, {{0, 1}}));
    Subspace a = sp(Q, 4, {{1, 2, 0, 1}, {0, 0, 1, 3}});
    Subspace c = pivot_complement(a);
    CHECK(sum(a, c).is_full());
    CHECK(intersect(a, c).is_zero());
}

TEST_CASE("complement_in") {
    Subspace a = sp(Q, 4, {{1, 0, 2, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}});
    Subspace b = sp(Q, 4, {{1, 1, 3, 0}});
    Subspace c = complement_in(a, b);
    CHECK(sum(b, c) == a);
    CHECK(intersect(b, c).is_zero());
    CHECK_THROWS_AS(complement_in(b, a), ValidationError);
}

TEST_CASE("dimension modular law, annihilator involution") {
    for (const FieldSpec& k : {Q, F2, F7}) {
        SplitMix64 rng(2024);
        for (int t = 0; t < 60; ++t) {
            std::size_t n = rng.below(6);
            Subspace a = random_subspace(rng, n, k);
            Subspace b = random_subspace(rng, n, k);
            CHECK(sum(a, b).dim() + intersect(a, b).dim() == a.dim() + b.dim());
            CHECK(annihilator(annihilator(a)) == a);
            CHECK(annihilator(a).dim() == n - a.dim());
            if (subspace_contains(a, b)) {
                CHECK(subspace_contains(annihilator(b), annihilator(a)));
            }
        }
    }
}

TEST_CASE("rref canonicity under invertible row mixing") {
    for (const FieldSpec& k : {Q, F2, F7}) {
        SplitMix64 rng(99);
        for (int t = 0; t < 40; ++t) {
            std::size_t n = 1 + rng.below(5);
            Subspace a = random_subspace(rng, n, k);
            if (a.dim() == 0) continue;
            Matrix p = random_invertible(rng, a.dim(), k);
            CHECK(Subspace::span(p * a.basis()) == a);
        }
    }
}

TEST_CASE("gf2 exhaustive semantics") {
    SplitMix64 rng(7);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 1 + rng.below(8);
        Subspace a = random_subspace(rng, n, F2);
        Subspace b = random_subspace(rng, n, F2);

        std::set<std::uint32_t> ea = gf2_elements(a), eb = gf2_elements(b);
        CHECK(ea.size() == (std::size_t{1} << a.dim()));

        std::set<std::uint32_t> expect_meet;
        for (std::uint32_t v : ea) {
            if (eb.count(v)) expect_meet.insert(v);
        }
        CHECK(gf2_elements(intersect(a, b)) == expect_meet);

        std::set<std::uint32_t> expect_sum;
        for (std::uint32_t u : ea)
            for (std::uint32_t w : eb) expect_sum.insert(u ^ w);
        CHECK(gf2_elements(sum(a, b)) == expect_sum);

        // The packed oracle agrees with the scalar path.
        CHECK(gf2::count_members(gf2::from_subspace(a)) == (std::uint64_t{1} << a.dim()));
    }

    // Larger ambients, up to the stated bound of 12.
    for (int t = 0; t < 8; ++t) {
        std::size_t n = 9 + rng.below(4);
        Subspace a = random_subspace(rng, n, F2);
        Subspace b = random_subspace(rng, n, F2);
        gf2::BitSpace ba = gf2::from_subspace(a), bb = gf2::from_subspace(b);
        gf2::BitSpace bmeet = gf2::from_subspace(intersect(a, b));
        gf2::BitSpace bsum = gf2::from_subspace(sum(a, b));
        CHECK(gf2::count_members(ba) == (std::uint64_t{1} << a.dim()));
        CHECK(gf2::count_members(bsum) == (std::uint64_t{1} << sum(a, b).dim()));
        bool meet_ok = true, sum_ok = true;
        const bool check_sum_pointwise = a.dim() <= 7;
        std::vector<std::uint32_t> a_elems;
        if (check_sum_pointwise) {
            for (std::uint32_t v = 0; v < (1u << n); ++v) {
                if (ba.contains(v)) a_elems.push_back(v);
            }
        }
        for (std::uint32_t v = 0; v < (1u << n); ++v) {
            meet_ok = meet_ok && (bmeet.contains(v) == (ba.contains(v) && bb.contains(v)));
            if (check_sum_pointwise) {
                bool reachable = false;
                for (std::uint32_t u : a_elems) reachable = reachable || bb.contains(v ^ u);
                sum_ok = sum_ok && (bsum.contains(v) == reachable);
            }
        }
        CHECK(meet_ok);
        CHECK(sum_ok);
    }
}

TEST_SUITE_END();
