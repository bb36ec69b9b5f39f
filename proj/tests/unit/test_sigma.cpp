#include <doctest.h>

#include "orbitspan/errors.hpp"
#include "orbitspan/sigma.hpp"

#include "oracles.hpp"

using namespace orbitspan;
namespace oracle = orbitspan::testing;

namespace {

Subset mask(std::initializer_list<std::size_t> elems) {
    Subset m = 0;
    for (std::size_t e : elems) m |= Subset(1) << e;
    return m;
}

} // namespace

TEST_CASE("structure validation") {
    Signature sig;
    sig.symbols = {{"f", 1}};
    CHECK_THROWS_AS(SigmaStructure::make(2, sig, {{0}}), InputError);     // short table
    CHECK_THROWS_AS(SigmaStructure::make(2, sig, {{0, 5}}), InputError);  // leaves carrier
    Signature dup;
    dup.symbols = {{"f", 1}, {"f", 0}};
    CHECK_THROWS_AS(SigmaStructure::make(2, dup, {{0, 0}, {0}}), InputError);
}

TEST_CASE("term closure: no symbols means identity") {
    SigmaStructure bare = oracle::bare_set(4);
    for (Subset x = 0; x < 16; ++x) CHECK(term_closure(bare, x) == x);
    CHECK_THROWS_AS(term_closure(bare, mask({5})), InputError);
}

TEST_CASE("term closure: min structure") {
    SigmaStructure min3 = oracle::min_chain(3);
    CHECK(term_closure(min3, mask({1, 2})) == mask({1, 2}));
    CHECK(term_closure(min3, mask({0, 2})) == mask({0, 2}));
    CHECK(term_closure(min3, 0) == 0);
}

TEST_CASE("term closure: F2^2 from a single vector") {
    // carrier encodes (a, b) as a + 2b: 1 = (1,0)
    SigmaStructure v = oracle::f2_square();
    CHECK(term_closure(v, mask({1})) == mask({0, 1}));
    CHECK(term_closure(v, 0) == mask({0}));          // constants always enter
    CHECK(term_closure(v, mask({1, 2})) == mask({0, 1, 2, 3}));
}

TEST_CASE("endomorphism verification") {
    SigmaStructure v = oracle::f2_square();
    CHECK(verify_endomorphism(v, {0, 1, 2, 3}).ok);
    // linear shift (a, b) -> (b, 0): 0->0, 1=(1,0)->0, 2=(0,1)->(1,0)=1, 3=(1,1)->(1,0)=1
    CHECK(verify_endomorphism(v, {0, 0, 1, 1}).ok);
    // swapping 1 and 2 on the min-chain breaks at min(1, 2)
    EndoCheck bad = verify_endomorphism(oracle::min_chain(3), {0, 2, 1});
    CHECK_FALSE(bad.ok);
    CHECK(bad.symbol == "min");
    CHECK(bad.tuple == std::vector<std::size_t>{1, 2});
}

TEST_CASE("check_model_prop validates its inputs") {
    SigmaStructure v = oracle::f2_square();
    // moving zero is never additive
    CHECK_THROWS_AS(check_model_prop(v, {1, 0, 2, 3}, {1, 0}), InputError);
    // valid endomorphism but not shift-compatible with the sequence
    CHECK_THROWS_AS(check_model_prop(v, {0, 0, 1, 1}, {1, 2}), InputError);
}

TEST_CASE("model prop: shift on F2^2 collapses at m = 2") {
    SigmaStructure v = oracle::f2_square();
    // f = shift (a,b) -> (b,0); e0 = (1,1) = 3, e1 = f(3) = 1, e2 = f(1) = 0
    std::vector<std::size_t> f{0, 0, 1, 1};
    ModelPropReport r = check_model_prop(v, f, {3, 1, 0, 0, 0});
    REQUIRE(r.first_collapse.has_value());
    CHECK(*r.first_collapse == 2);  // 0 lies in closure({3, 1})
    CHECK(r.tail_verified);
    CHECK_FALSE(r.escape_all);
}

TEST_CASE("model prop: constant sequence collapses at m = 1") {
    SigmaStructure z4 = oracle::z_mod(4);
    std::vector<std::size_t> id{0, 1, 2, 3};
    ModelPropReport r = check_model_prop(z4, id, {1, 1, 1, 1});
    REQUIRE(r.first_collapse.has_value());
    CHECK(*r.first_collapse == 1);
    CHECK(r.tail_verified);
}

TEST_CASE("model prop: free generators never collapse") {
    SigmaStructure bare = oracle::bare_set(5);
    // any injective sequence under a permutation endomorphism
    ModelPropReport r = check_model_prop(bare, {1, 2, 3, 4, 0}, {0, 1, 2, 3, 4});
    CHECK_FALSE(r.first_collapse.has_value());
    CHECK(r.escape_all);
    CHECK(r.tail_verified);  // vacuous
}

TEST_CASE("escape_all is the contrapositive certificate") {
    // whenever every prefix has a later escapee, no index collapses
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        SigmaStructure a = oracle::random_structure(seed, 5);
        auto endos = enumerate_endomorphisms(a);
        for (const auto& f : endos) {
            std::vector<std::size_t> e{seed % 5};
            for (int n = 0; n < 5; ++n) e.push_back(f[e.back()]);
            ModelPropReport r = check_model_prop(a, f, e);
            if (r.escape_all) CHECK_FALSE(r.first_collapse.has_value());
            if (r.first_collapse) CHECK(r.tail_verified);  // the theorem
        }
    }
}

TEST_CASE("closure equals the closed-superset intersection oracle") {
    for (const SigmaStructure& a : oracle::structure_corpus()) {
        REQUIRE(a.size() <= 6);
        for (Subset x = 0; x <= a.full_mask(); ++x)
            CHECK(term_closure(a, x) == oracle::brute_closure(a, x));
    }
}

TEST_CASE("projection laws hold exhaustively on the corpus") {
    for (const SigmaStructure& a : oracle::structure_corpus()) {
        ProjectionLawReport laws = powerset_projection_laws(a);
        CHECK(laws.monotone);
        CHECK(laws.idempotent);
        CHECK(laws.extensive);
        CHECK(laws.endo_commutes);
    }
}

TEST_CASE("closure commutes with endomorphism images exactly") {
    SigmaStructure v = oracle::f2_square();
    auto endos = enumerate_endomorphisms(v);
    CHECK(endos.size() >= 2);
    for (const auto& f : endos) {
        for (Subset x = 0; x <= v.full_mask(); ++x) {
            auto image = [&f](Subset s) {
                Subset y = 0;
                for (std::size_t e = 0; e < f.size(); ++e)
                    if (s >> e & 1) y |= Subset(1) << f[e];
                return y;
            };
            CHECK(image(term_closure(v, x)) == term_closure(v, image(x)));
        }
    }
}
