// Group-algebra layer: regular shift actions, the ideal criterion and
// closure, the separability split, and the permutation-equivalence search
// for complementary pairs of group codes.

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include <chainlcp/group.hpp>

using namespace chainlcp;

namespace {

const ChainRingSpec kZ4Z2(2, 2, 1);
const GroupSpec kC2({2});
const GroupSpec kC4({4});
const GroupSpec kTrivial{};

} // namespace

TEST_CASE("group spec indexing and multiplication") {
    GroupSpec c2c3({2, 3});
    CHECK(c2c3.order() == 6);
    CHECK(kTrivial.order() == 1);

    // first factor fastest: index = e0 + 2*e1
    CHECK(c2c3.tuple_of(0) == std::vector<uint64_t>{0, 0});
    CHECK(c2c3.tuple_of(1) == std::vector<uint64_t>{1, 0});
    CHECK(c2c3.tuple_of(2) == std::vector<uint64_t>{0, 1});
    CHECK(c2c3.index_of({1, 2}) == 5);
    for (uint64_t i = 0; i < 6; ++i) CHECK(c2c3.index_of(c2c3.tuple_of(i)) == i);

    CHECK(c2c3.mul(0, 4) == 4);            // identity
    CHECK(c2c3.mul(1, 1) == 0);            // order-2 factor
    CHECK(c2c3.mul(2, 2) == 4);            // order-3 factor
    CHECK(c2c3.mul(5, 5) == c2c3.index_of({0, 1}));
    CHECK(c2c3.factor_generators() == std::vector<uint64_t>{1, 2});

    CHECK_THROWS_MATCHES(GroupSpec({2, 1}), std::invalid_argument,
                         Catch::Matchers::Message(
                             "invariant factors must be at least 2"));
    CHECK_THROWS_MATCHES(c2c3.tuple_of(6), std::invalid_argument,
                         Catch::Matchers::Message(
                             "group element index out of range"));
    CHECK_THROWS_MATCHES(c2c3.index_of({0}), std::invalid_argument,
                         Catch::Matchers::Message(
                             "exponent tuple has the wrong length"));
    CHECK_THROWS_MATCHES(c2c3.index_of({0, 3}), std::invalid_argument,
                         Catch::Matchers::Message("exponent exceeds its factor"));
}

TEST_CASE("regular shift action") {
    MixedVector v = MixedVector::from_ints(kZ4Z2, {1, 2}, {1, 0});
    CHECK(shift_action(v, 0, 0, kC2, kC2) == v);
    CHECK(shift_action(v, 1, 0, kC2, kC2) ==
          MixedVector::from_ints(kZ4Z2, {2, 1}, {1, 0}));
    CHECK(shift_action(v, 0, 1, kC2, kC2) ==
          MixedVector::from_ints(kZ4Z2, {1, 2}, {0, 1}));

    // the trivial group has order 1, so its block has a single coordinate
    MixedVector w = MixedVector::from_ints(kZ4Z2, {1, 2, 3, 4}, {1});
    CHECK(shift_action(w, 1, 0, kC4, kTrivial) ==
          MixedVector::from_ints(kZ4Z2, {4, 1, 2, 3}, {1}));
    CHECK(shift_action(w, 3, 0, kC4, kTrivial) ==
          MixedVector::from_ints(kZ4Z2, {2, 3, 4, 1}, {1}));

    // component multiplications: one block moves, the other is annihilated
    CHECK(left_component_shift(v, 1, kC2, kC2) ==
          MixedVector::from_ints(kZ4Z2, {2, 1}, {0, 0}));
    CHECK(left_component_shift(v, 0, kC2, kC2) ==
          MixedVector::from_ints(kZ4Z2, {1, 2}, {0, 0}));
    CHECK(right_component_shift(v, 1, kC2, kC2) ==
          MixedVector::from_ints(kZ4Z2, {0, 0}, {0, 1}));

    CHECK_THROWS_MATCHES(shift_action(v, 2, 0, kC2, kC2), std::invalid_argument,
                         Catch::Matchers::Message(
                             "group element index out of range"));
    CHECK_THROWS_MATCHES(shift_action(w, 0, 0, kC2, kC2), std::invalid_argument,
                         Catch::Matchers::Message(
                             "code shape does not match the group orders"));
}

TEST_CASE("ideal membership criterion") {
    CHECK(is_group_code(MixedCode::ambient_code(kZ4Z2, 2, 2), kC2, kC2));
    CHECK(is_group_code(MixedCode::zero_code(kZ4Z2, 2, 2), kC2, kC2));
    CHECK(is_group_code(MixedCode::from_rows(kZ4Z2, 2, 2, {{1, 1, 0, 0}}), kC2, kC2));
    CHECK_FALSE(
        is_group_code(MixedCode::from_rows(kZ4Z2, 2, 2, {{1, 0, 0, 0}}), kC2, kC2));

    // closed under both shifts yet not under the idempotent (1, 0):
    // (1,1|0,0) = (1,0)*(1,1|1,0) is outside the span, so this submodule is
    // not an ideal even though every shift image stays inside it
    MixedCode shifty =
        MixedCode::from_rows(kZ4Z2, 2, 2, {{1, 1, 1, 0}, {1, 1, 0, 1}});
    for (uint64_t h : kC2.factor_generators())
        for (const MixedVector& g : shifty.standard_generators()) {
            CHECK(shifty.contains(shift_action(g, h, 0, kC2, kC2)));
            CHECK(shifty.contains(shift_action(g, 0, h, kC2, kC2)));
        }
    CHECK_FALSE(
        shifty.contains(MixedVector::from_ints(kZ4Z2, {1, 1}, {0, 0})));
    CHECK_FALSE(is_group_code(shifty, kC2, kC2));
    CHECK_THROWS_MATCHES(
        is_group_code(MixedCode::zero_code(kZ4Z2, 1, 2), kC2, kC2),
        std::invalid_argument,
        Catch::Matchers::Message("code shape does not match the group orders"));
}

TEST_CASE("ideal closure") {
    MixedCode diag = ideal_generated(
        kZ4Z2, {MixedVector::from_ints(kZ4Z2, {1, 1}, {0, 0})}, kC2, kC2);
    CHECK(diag.dimension() == 2);
    CHECK(diag.codeword_count() == 4);
    CHECK(is_group_code(diag, kC2, kC2));
    CHECK(diag.contains(MixedVector::from_ints(kZ4Z2, {3, 3}, {0, 0})));

    CHECK(ideal_generated(kZ4Z2, {}, kC2, kC2) ==
          MixedCode::zero_code(kZ4Z2, 2, 2));

    MixedCode left = ideal_generated(
        kZ4Z2, {MixedVector::from_ints(kZ4Z2, {1, 0}, {0, 0})}, kC2, kC2);
    CHECK(left == MixedCode::from_rows(kZ4Z2, 2, 2, {{1, 0, 0, 0}, {0, 1, 0, 0}}));

    MixedCode whole_line = ideal_generated(
        kZ4Z2, {MixedVector::from_ints(kZ4Z2, {1, 0, 0, 0}, {0})}, kC4, kTrivial);
    CHECK(whole_line == product_code(MixedCode::ambient_code(kZ4Z2, 4, 0),
                                     MixedCode::zero_code(kZ4Z2, 0, 1)));

    // closing the shift-only counterexample seed absorbs the idempotent
    // images and lands on the separable span it was missing
    MixedCode closed = ideal_generated(
        kZ4Z2, {MixedVector::from_ints(kZ4Z2, {1, 1}, {1, 0})}, kC2, kC2);
    CHECK(closed == MixedCode::from_rows(
                        kZ4Z2, 2, 2, {{1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
    CHECK(closed.dimension() == 4);

    SECTION("closure output always satisfies the ideal criterion") {
        std::mt19937_64 rng(0x5eed3001);
        for (int t = 0; t < 40; ++t) {
            MixedVector g(kZ4Z2, 2, 2);
            for (uint64_t& x : g.r_part) x = rng() % 4;
            for (uint64_t& x : g.rbar_part) x = rng() % 2;
            MixedCode ideal = ideal_generated(kZ4Z2, {g}, kC2, kC2);
            CHECK(is_group_code(ideal, kC2, kC2));
            CHECK(ideal.contains(g));
            // when the closure strictly grew the span, the raw span fails
            MixedCode raw(kZ4Z2, 2, 2, {g});
            if (ideal.dimension() > raw.dimension())
                CHECK_FALSE(is_group_code(raw, kC2, kC2));
        }
    }
}

TEST_CASE("separability split of group codes") {
    auto [a1, a2] = split_separable(MixedCode::ambient_code(kZ4Z2, 2, 2), kC2, kC2);
    CHECK(a1 == MixedCode::ambient_code(kZ4Z2, 2, 0));
    CHECK(a2 == MixedCode::ambient_code(kZ4Z2, 0, 2));

    MixedCode diag = ideal_generated(
        kZ4Z2, {MixedVector::from_ints(kZ4Z2, {1, 1}, {0, 0})}, kC2, kC2);
    auto [d1, d2] = split_separable(diag, kC2, kC2);
    CHECK(d1 == MixedCode::from_rows(kZ4Z2, 2, 0, {{1, 1}}));
    CHECK(d2 == MixedCode::zero_code(kZ4Z2, 0, 2));

    auto [z1, z2] = split_separable(MixedCode::zero_code(kZ4Z2, 2, 2), kC2, kC2);
    CHECK(z1.dimension() == 0);
    CHECK(z2.dimension() == 0);

    CHECK_THROWS_MATCHES(
        split_separable(MixedCode::from_rows(kZ4Z2, 2, 2, {{1, 0, 0, 0}}), kC2, kC2),
        std::domain_error, Catch::Matchers::Message("not a group code"));

    SECTION("product equality and componentwise duality on random ideals") {
        std::mt19937_64 rng(0x5eed3002);
        for (int t = 0; t < 40; ++t) {
            MixedVector g(kZ4Z2, 2, 2);
            for (uint64_t& x : g.r_part) x = rng() % 4;
            for (uint64_t& x : g.rbar_part) x = rng() % 2;
            MixedCode ideal = ideal_generated(kZ4Z2, {g}, kC2, kC2);
            auto [c1, c2] = split_separable(ideal, kC2, kC2);  // throws on failure
            CHECK(product_code(c1, c2) == ideal);
            CHECK(dual(ideal) == product_code(dual(c1), dual(c2)));
        }
    }
}

TEST_CASE("weight distribution is a permutation invariant") {
    MixedCode diag = MixedCode::from_rows(kZ4Z2, 2, 2, {{1, 1, 0, 0}});
    std::vector<uint64_t> dist = weight_distribution(diag);
    CHECK(dist == std::vector<uint64_t>{1, 0, 3, 0, 0});

    std::vector<std::size_t> swap_r = {1, 0}, id_rbar = {0, 1};
    std::vector<MixedVector> permuted;
    for (const MixedVector& g : diag.standard_generators())
        permuted.push_back(apply_block_permutation(g, swap_r, id_rbar));
    CHECK(weight_distribution(MixedCode(kZ4Z2, 2, 2, permuted)) == dist);

    CHECK_THROWS_MATCHES(
        apply_block_permutation(MixedVector(kZ4Z2, 2, 2), {0}, {0, 1}),
        std::invalid_argument,
        Catch::Matchers::Message("permutation length mismatch"));
}

TEST_CASE("equivalence search for complementary group-code pairs") {
    MixedCode left = MixedCode::from_rows(kZ4Z2, 2, 2, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    MixedCode right = MixedCode::from_rows(kZ4Z2, 2, 2, {{0, 0, 1, 0}, {0, 0, 0, 1}});
    REQUIRE(is_lcp(left, right).is_lcp);

    auto witness = verify_equivalence_theorem(left, right, kC2, kC2);
    REQUIRE(witness.has_value());
    CHECK(witness->first == std::vector<std::size_t>{0, 1});
    CHECK(witness->second == std::vector<std::size_t>{0, 1});

    // the witness really does carry dual(D) onto C
    MixedCode dd = dual(right);
    for (const MixedVector& g : dd.standard_generators())
        CHECK(left.contains(apply_block_permutation(g, witness->first, witness->second)));

    SECTION("precondition failures") {
        CHECK_THROWS_MATCHES(
            verify_equivalence_theorem(left, left, kC2, kC2), std::domain_error,
            Catch::Matchers::Message("equivalence check requires an LCP pair"));
        MixedCode not_group = MixedCode::from_rows(kZ4Z2, 2, 2, {{1, 0, 0, 0}});
        CHECK_THROWS_MATCHES(
            verify_equivalence_theorem(not_group, right, kC2, kC2),
            std::domain_error, Catch::Matchers::Message("not a group code"));
        CHECK_THROWS_MATCHES(
            verify_equivalence_theorem(left, right, kC2, kC2, 2),
            std::runtime_error, Catch::Matchers::Message("enumeration budget"));
    }

    SECTION("self-dual-complement (LCD) case returns the identity witness") {
        MixedCode c = ideal_generated(
            kZ4Z2, {MixedVector::from_ints(kZ4Z2, {1, 1}, {0, 0})}, kC2, kC2);
        MixedCode cd = dual(c);
        if (is_lcp(c, cd).is_lcp) {
            auto w = verify_equivalence_theorem(c, cd, kC2, kC2);
            REQUIRE(w.has_value());
            CHECK(w->first == std::vector<std::size_t>{0, 1});
            CHECK(w->second == std::vector<std::size_t>{0, 1});
        } else {
            INFO("pair (C, dual(C)) is not complementary for this seed code");
            SUCCEED();
        }
    }
}
