// Acceptance harness: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "linrel/decompose.hpp"
#include "linrel/gf2_oracle.hpp"
#include "linrel/suites.hpp"

using namespace linrel;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF2 = FieldSpec::prime_field(2);
const FieldSpec kF7 = FieldSpec::prime_field(7);
const FieldSpec kFields[] = {kQ, kF2, kF7};

struct Criterion {
    int number;
    std::string name;
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

VectorSpaceObj obj(std::size_t dim, const FieldSpec& k) { return VectorSpaceObj{dim, k, {}}; }

CategoryTag kTags[] = {CategoryTag::LREL, CategoryTag::SLREL, CategoryTag::ILREL,
                       CategoryTag::CLREL};

bool allowed(CategoryTag tag, std::size_t d, std::size_t e) {
    switch (tag) {
        case CategoryTag::LREL: return true;
        case CategoryTag::ILREL: return e <= d;
        case CategoryTag::CLREL: return d <= e;
        case CategoryTag::SLREL: return d == e;
    }
    return false;
}

Criterion criterion_duality_functoriality() {
    Criterion c{1, "duality functoriality"};
    auto start = std::chrono::steady_clock::now();
    for (const FieldSpec& k : kFields) {
        SplitMix64 rng(1001);
        for (int t = 0; t < 500; ++t) {
            LinearRelation f = random_relation(rng, obj(rng.below(6), k), obj(rng.below(6), k));
            LinearRelation g = random_relation(rng, obj(f.source().dim, k), obj(rng.below(6), k));
            c.require(dual(compose(f, g)) == compose(dual(g), dual(f)),
                      "dual(fg) != dual(g)dual(f) over " + k.str());
        }
    }
    double elapsed = seconds_since(start);
    c.require(elapsed < 30.0, "runtime budget exceeded");
    char buf[128];
    std::snprintf(buf, sizeof(buf), "1500 pairs across Q, GF(2), GF(7); %.2fs < 30s", elapsed);
    if (c.ok) c.detail = buf;
    return c;
}

Criterion criterion_additivity() {
    Criterion c{2, "excess/defect additivity under parenthesization"};
    SplitMix64 rng(1002);
    for (int t = 0; t < 300; ++t) {
        const FieldSpec& k = kFields[t % 3];
        RelationChain chain = random_chain(rng, 3 + rng.below(3), 4, k);
        const std::size_t e = excess_seq(chain), d = defect_seq(chain);
        for (const ParenthesizedIndices& p : all_parenthesizations(chain)) {
            c.require(p.excess == e, "parenthesization changed the excess");
            c.require(p.defect == d, "parenthesization changed the defect");
        }
    }
    c.detail = "300 chains of length 3-5, every parenthesization";
    return c;
}

Criterion criterion_duality_exchange() {
    Criterion c{3, "duality exchanges excess and defect"};
    SplitMix64 rng(1003);
    for (int t = 0; t < 300; ++t) {
        const FieldSpec& k = kFields[t % 3];
        RelationChain chain = random_chain(rng, 1 + rng.below(4), 4, k);
        std::vector<LinearRelation> reversed;
        for (std::size_t i = chain.size(); i > 0; --i) reversed.push_back(dual(chain.links()[i - 1]));
        RelationChain dual_chain{reversed};
        c.require(excess_seq(chain) == defect_seq(dual_chain), "E(chain) != D(reversed duals)");
        c.require(defect_seq(chain) == excess_seq(dual_chain), "D(chain) != E(reversed duals)");
    }
    c.detail = "300 chains, both directions";
    return c;
}

Criterion criterion_inequality() {
    Criterion c{4, "index inequalities and their sharpness"};
    SplitMix64 rng(1004);
    for (int t = 0; t < 300; ++t) {
        const FieldSpec& k = kFields[t % 3];
        const std::size_t len = 1 + rng.below(3);
        SympChain ic = random_symp_chain(rng, CategoryTag::ILREL, len, 2, k);
        c.require(excess_seq(ic) <= defect_seq(ic), "ILREL chain with E > D");
        SympChain cc = random_symp_chain(rng, CategoryTag::CLREL, len, 2, k);
        c.require(defect_seq(cc) <= excess_seq(cc), "CLREL chain with D > E");
        SympChain sc = random_symp_chain(rng, CategoryTag::SLREL, len, 2, k);
        c.require(excess_seq(sc) == defect_seq(sc), "SLREL chain with E != D");
    }
    // Sharpness: every allowed (d, e) with d + e <= 4 has an explicit
    // generator-block witness pair.
    std::size_t witnesses = 0;
    for (CategoryTag tag : kTags) {
        for (std::size_t d = 0; d <= 4; ++d) {
            for (std::size_t e = 0; d + e <= 4; ++e) {
                if (!allowed(tag, d, e)) continue;
                WWMorphism m(tag, unit_endo_shadow(tag, kQ), d, e);
                TwoTermRep rep = ww_two_term(m);
                LinearRelation a = any_as_linear(rep.a), b = any_as_linear(rep.b);
                c.require(defect_pair(a, b) == d && excess_pair(a, b) == e,
                          "witness pair indices wrong");
                if (tag != CategoryTag::LREL) {
                    c.require(check_morphism(std::get<SympRelation>(rep.a), tag) &&
                                  check_morphism(std::get<SympRelation>(rep.b), tag),
                              "witness pair leaves the category");
                }
                ++witnesses;
            }
        }
    }
    c.detail = "900 chains across the three symplectic tags; " + std::to_string(witnesses) +
               " witness pairs";
    return c;
}

Criterion criterion_central_extension() {
    Criterion c{5, "WW central extension composition"};
    SplitMix64 rng(1005);
    for (CategoryTag tag : kTags) {
        for (int t = 0; t < 300; ++t) {
            const FieldSpec& k = kFields[t % 3];
            std::vector<WWMorphism> lifted;
            if (tag == CategoryTag::LREL) {
                RelationChain chain = random_chain(rng, 3, 3, k);
                for (const LinearRelation& f : chain.links()) {
                    WWMorphism e = ww_embed(f);
                    c.require(e.shadow_linear() == f, "iota is not a section of the shadow");
                    lifted.push_back(WWMorphism(tag, f, rng.below(3), rng.below(3)));
                }
                const LinearRelation& f = chain.links()[0];
                const LinearRelation& g = chain.links()[1];
                if (is_strongly_transversal(f, g)) {
                    c.require(ww_compose(ww_embed(f), ww_embed(g)) == ww_embed(compose(f, g)),
                              "congenial pair does not compose on the nose");
                }
            } else {
                SympChain chain = random_symp_chain(rng, tag, 3, 1, k);
                for (const SympRelation& f : chain.links()) {
                    std::size_t d = rng.below(3), e = rng.below(3);
                    if (tag == CategoryTag::ILREL) e = e % (d + 1);
                    if (tag == CategoryTag::CLREL) d = d % (e + 1);
                    if (tag == CategoryTag::SLREL) e = d;
                    lifted.push_back(WWMorphism(tag, f, d, e));
                }
                const SympRelation& f = chain.links()[0];
                const SympRelation& g = chain.links()[1];
                if (is_strongly_transversal(f.as_linear(), g.as_linear())) {
                    c.require(ww_compose(ww_embed(f, tag), ww_embed(g, tag)) ==
                                  ww_embed(compose(f, g), tag),
                              "congenial pair does not compose on the nose");
                }
            }
            WWMorphism left = ww_compose(ww_compose(lifted[0], lifted[1]), lifted[2]);
            WWMorphism right = ww_compose(lifted[0], ww_compose(lifted[1], lifted[2]));
            c.require(left == right, "ww_compose is not associative");
        }
    }
    c.detail = "300 triples per tag, with sections and congenial pairs";
    return c;
}

Criterion criterion_two_term() {
    Criterion c{6, "reduction-coreduction two-term representation"};
    SplitMix64 rng(1006);
    for (CategoryTag tag : kTags) {
        for (int t = 0; t < 200; ++t) {
            const FieldSpec& k = kFields[t % 3];
            WWMorphism m = random_ww_morphism(rng, tag, 3, 2, k);
            TwoTermRep rep = ww_two_term(m);
            LinearRelation a = any_as_linear(rep.a), b = any_as_linear(rep.b);
            c.require(is_reduction(a), "A is not a reduction");
            c.require(is_coreduction(b), "B is not a coreduction");
            c.require(any_equal(any_compose(rep.a, rep.b), m.shadow()), "AB != shadow");
            c.require(defect_pair(a, b) == m.defect(), "pair defect != morphism defect");
            c.require(excess_pair(a, b) == m.excess(), "pair excess != morphism excess");
            if (tag == CategoryTag::LREL) {
                RelationChain chain{{std::get<LinearRelation>(rep.a),
                                     std::get<LinearRelation>(rep.b)}};
                c.require(ww_from_chain(chain, tag) == m, "round trip failed");
            } else {
                SympChain chain{{std::get<SympRelation>(rep.a), std::get<SympRelation>(rep.b)}};
                c.require(ww_from_chain(chain, tag) == m, "round trip failed");
            }
        }
        // Nonzero index pairs are guaranteed, not just sampled: sweep the
        // allowed grid up to (3, 3) over one random shadow.
        WWMorphism base = random_ww_morphism(rng, tag, 3, 0, kF7);
        for (std::size_t d = 0; d <= 3; ++d) {
            for (std::size_t e = 0; e <= 3; ++e) {
                if (!allowed(tag, d, e)) continue;
                WWMorphism m(tag, base.shadow(), d, e);
                TwoTermRep rep = ww_two_term(m);
                LinearRelation a = any_as_linear(rep.a), b = any_as_linear(rep.b);
                c.require(is_reduction(a) && is_coreduction(b) &&
                              any_equal(any_compose(rep.a, rep.b), m.shadow()) &&
                              defect_pair(a, b) == d && excess_pair(a, b) == e,
                          "grid morphism failed a postcondition");
            }
        }
    }
    c.detail = "200 morphisms per tag plus the full index grid to (3,3)";
    return c;
}

Criterion criterion_gf2_oracle() {
    Criterion c{7, "GF(2) brute-force oracle"};
    auto start = std::chrono::steady_clock::now();
    SplitMix64 master(1007);
    for (int t = 0; t < 200; ++t) {
        SplitMix64 rng(master.next());
        RelationChain chain = random_chain(rng, 1 + rng.below(3), 3, kF2);
        const std::size_t e = excess_seq(chain), d = defect_seq(chain);
        c.require(gf2::count_zero_trajectories(chain) == (std::uint64_t(1) << e),
                  "trajectory count != 2^excess");
        const std::size_t ambient = gf2::chain_ambient(chain);
        c.require(gf2::count_sum_subspace_members(chain) ==
                      (std::uint64_t(1) << (ambient - d)),
                  "sum-subspace enumeration contradicts the defect");
    }
    double elapsed = seconds_since(start);
    c.require(elapsed < 60.0, "runtime budget exceeded");
    char buf[128];
    std::snprintf(buf, sizeof(buf), "200 seeded chains, dims <= 3, length <= 3; %.2fs < 60s",
                  elapsed);
    if (c.ok) c.detail = buf;
    return c;
}

Criterion criterion_tables() {
    Criterion c{8, "classification tables reproduce the indices"};
    // The tables suite alternates LREL triples and isotropic pairs per case.
    SuiteParams params{1008, 400, kF7, 3};
    SuiteResult r = run_suite("tables", params);
    c.require(r.ok(), r.failures.empty() ? "" : r.failures.front().message);
    SuiteParams rational{10082, 80, kQ, 3};
    SuiteResult r2 = run_suite("tables", rational);
    c.require(r2.ok(), r2.failures.empty() ? "" : r2.failures.front().message);
    c.detail = "200 LREL pairs and 200 isotropic pairs, plus 80 rational cases";
    return c;
}

Criterion criterion_cotangent() {
    Criterion c{9, "cotangent functor doubles the indices"};
    SplitMix64 rng(1009);
    for (int t = 0; t < 200; ++t) {
        const FieldSpec& k = kFields[t % 3];
        VectorSpaceObj x = obj(rng.below(4), k), y = obj(rng.below(4), k), z = obj(rng.below(4), k);
        LinearRelation f = random_relation(rng, x, y);
        LinearRelation g = random_relation(rng, y, z);
        SympRelation tf = cotangent(f), tg = cotangent(g);
        c.require(check_morphism(tf, CategoryTag::SLREL), "T*f is not lagrangian");
        c.require(cotangent(compose(f, g)) == compose(tf, tg), "T* is not functorial");
        const std::size_t law = defect_pair(f, g) + excess_pair(f, g);
        c.require(defect_pair(tf, tg) == law && excess_pair(tf, tg) == law,
                  "index law D = E = D + E fails");
    }
    c.detail = "200 composable pairs";
    return c;
}

Criterion criterion_free_monoid() {
    Criterion c{10, "unit endomorphisms form the free two-generator monoid"};
    for (CategoryTag tag : kTags) {
        std::set<std::vector<std::size_t>> seen;
        std::size_t region = 0;
        for (std::size_t d = 0; d <= 10; ++d) {
            for (std::size_t e = 0; e <= 10; ++e) {
                if (!allowed(tag, d, e)) {
                    bool threw = false;
                    try {
                        decompose_unit(UnitEndo{tag, d, e});
                    } catch (const ValidationError&) {
                        threw = true;
                    }
                    c.require(threw, "disallowed index pair decomposed");
                    continue;
                }
                ++region;
                auto dec = decompose_unit(UnitEndo{tag, d, e});
                std::size_t dd = 0, ee = 0;
                std::vector<std::size_t> counts;
                for (const auto& [gen, count] : dec) {
                    dd += gen.defect * count;
                    ee += gen.excess * count;
                    counts.push_back(count);
                }
                c.require(dd == d && ee == e, "decomposition does not reconstruct the pair");
                c.require(seen.insert(counts).second, "two pairs share a decomposition");
            }
        }
        c.require(seen.size() == region, "decomposition is not a bijection on the region");
    }
    // Composition adds componentwise.
    SplitMix64 rng(1010);
    for (int t = 0; t < 100; ++t) {
        CategoryTag tag = kTags[t % 4];
        std::size_t d1 = rng.below(8), e1 = rng.below(8);
        std::size_t d2 = rng.below(8), e2 = rng.below(8);
        if (!allowed(tag, d1, e1) || !allowed(tag, d2, e2)) continue;
        UnitEndo u = compose_unit(UnitEndo{tag, d1, e1}, UnitEndo{tag, d2, e2});
        c.require(u.defect == d1 + d2 && u.excess == e1 + e2, "unit composition is not additive");
    }
    c.detail = "all (d,e) with d,e <= 10 per tag, bijection and additivity";
    return c;
}

}  // namespace

int main() {
    std::vector<Criterion> results;
    results.push_back(criterion_duality_functoriality());
    results.push_back(criterion_additivity());
    results.push_back(criterion_duality_exchange());
    results.push_back(criterion_inequality());
    results.push_back(criterion_central_extension());
    results.push_back(criterion_two_term());
    results.push_back(criterion_gf2_oracle());
    results.push_back(criterion_tables());
    results.push_back(criterion_cotangent());
    results.push_back(criterion_free_monoid());

    int failures = 0;
    for (const Criterion& c : results) {
        std::printf("%s  criterion %2d: %s — %s\n", c.ok ? "PASS" : "FAIL", c.number,
                    c.name.c_str(), c.detail.c_str());
        if (!c.ok) ++failures;
    }
    if (failures != 0) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
