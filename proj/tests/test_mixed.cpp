// Mixed-alphabet vectors and codes: the vector-level maps, standard forms
// and types, duality (kernel route and the weakly-free closed form), sums,
// intersections, and distances.  Values for the seven-column worked example
// are frozen from an independent hand/brute-force derivation.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include <chainlcp/lcp.hpp>
#include <chainlcp/mixed.hpp>

using namespace chainlcp;

namespace {

const ChainRingSpec kZ8Z4(2, 3, 2);
const ChainRingSpec kZ4Z2(2, 2, 1);
const ChainRingSpec kZ9Z3(3, 2, 1);

// The seven-column worked example: four generators in Z8^4 x Z4^3.
MixedCode example_code() {
    return MixedCode::from_rows(kZ8Z4, 4, 3,
                                {{7, 6, 5, 4, 1, 2, 3},
                                 {6, 4, 0, 2, 2, 0, 1},
                                 {4, 4, 2, 4, 0, 1, 2},
                                 {2, 6, 6, 2, 1, 0, 1}});
}

// Its published standard-form companion (NOT span-equal to example_code();
// rows 1 and 4 differ at the fourth column -- see the tests that pin this
// down).
MixedCode companion_code() {
    return MixedCode::from_rows(kZ8Z4, 4, 3,
                                {{1, 0, 3, 2, 0, 0, 0},
                                 {0, 6, 6, 0, 1, 0, 0},
                                 {0, 4, 2, 0, 0, 1, 0},
                                 {0, 0, 2, 0, 0, 0, 1}});
}

std::set<MixedVector> word_set(const MixedCode& c) {
    std::vector<MixedVector> words = enumerate_codewords(c);
    return {words.begin(), words.end()};
}

MixedVector rand_vec(const ChainRingSpec& sp, std::size_t alpha, std::size_t beta,
                     std::mt19937_64& rng) {
    MixedVector v(sp, alpha, beta);
    for (uint64_t& x : v.r_part) x = rng() % sp.R().modulus;
    for (uint64_t& x : v.rbar_part) x = rng() % sp.Rbar().modulus;
    return v;
}

MixedCode rand_code(const ChainRingSpec& sp, std::size_t alpha, std::size_t beta,
                    std::mt19937_64& rng, std::size_t max_gens = 3) {
    std::vector<MixedVector> gens;
    std::size_t count = 1 + rng() % max_gens;
    for (std::size_t i = 0; i < count; ++i)
        gens.push_back(rand_vec(sp, alpha, beta, rng));
    return MixedCode(sp, alpha, beta, std::move(gens));
}

} // namespace

TEST_CASE("scalar action scales the R block and its reduction scales the quotient block") {
    MixedVector v = MixedVector::from_ints(kZ8Z4, {1, 0, 3, 2}, {1, 2, 3});
    CHECK(scalar_action(kZ8Z4.make(Level::R, 1), v) == v);
    CHECK(scalar_action(kZ8Z4.make(Level::R, 2), v) ==
          MixedVector::from_ints(kZ8Z4, {2, 0, 6, 4}, {2, 0, 2}));
    MixedVector ones = MixedVector::from_ints(kZ8Z4, {0, 0, 0, 0}, {1, 1, 1});
    CHECK(scalar_action(kZ8Z4.make(Level::R, 4), ones) ==
          MixedVector(kZ8Z4, 4, 3));
    CHECK_THROWS_MATCHES(scalar_action(kZ8Z4.make(Level::Rbar, 1), v),
                         std::invalid_argument,
                         Catch::Matchers::Message("expected a scalar at level R"));
}

TEST_CASE("chi, psi, iota, varphi on vectors") {
    MixedVector g1 = MixedVector::from_ints(kZ8Z4, {7, 6, 5, 4}, {1, 2, 3});
    CHECK(chi_vec(g1) == std::vector<uint64_t>{7, 6, 5, 4, 2, 4, 6});
    CHECK(chi_vec(MixedVector(kZ8Z4, 4, 3)) == std::vector<uint64_t>(7, 0));
    CHECK(chi_vec(MixedVector::from_ints(kZ8Z4, {0, 0, 0, 0}, {3, 0, 0})) ==
          std::vector<uint64_t>{0, 0, 0, 0, 6, 0, 0});

    CHECK(psi_vec(kZ8Z4, {7, 6, 5, 4, 2, 4, 6}, 4, 3) == g1);
    CHECK(psi_vec(kZ8Z4, std::vector<uint64_t>(7, 0), 4, 3) ==
          MixedVector(kZ8Z4, 4, 3));
    CHECK_THROWS_MATCHES(psi_vec(kZ4Z2, {0, 3}, 1, 1), std::domain_error,
                         Catch::Matchers::Message("not in the image of chi"));
    CHECK_THROWS_MATCHES(psi_vec(kZ8Z4, {1, 2, 3}, 2, 2), std::invalid_argument,
                         Catch::Matchers::Message("length mismatch"));

    CHECK(iota_vec(MixedVector::from_ints(kZ8Z4, {0, 0, 0, 0}, {3, 0, 0})) ==
          std::vector<uint64_t>{0, 0, 0, 0, 3, 0, 0});
    CHECK(iota_vec(MixedVector(kZ8Z4, 4, 3)) == std::vector<uint64_t>(7, 0));
    CHECK(varphi_vec(kZ8Z4, {1, 2, 3, 4, 5, 6, 7}, 4, 3) ==
          MixedVector::from_ints(kZ8Z4, {1, 2, 3, 4}, {1, 2, 3}));

    SECTION("psi inverts chi and varphi inverts iota, exhaustively over Z4Z2") {
        for (std::size_t alpha : {1u, 2u}) {
            std::size_t beta = alpha;
            MixedVector v(kZ4Z2, alpha, beta);
            // odometer over the whole ambient
            for (;;) {
                CHECK(psi_vec(kZ4Z2, chi_vec(v), alpha, beta) == v);
                CHECK(varphi_vec(kZ4Z2, iota_vec(v), alpha, beta) == v);
                std::size_t i = 0;
                while (i < alpha && v.r_part[i] + 1 == kZ4Z2.R().modulus)
                    v.r_part[i++] = 0;
                if (i < alpha) {
                    ++v.r_part[i];
                    continue;
                }
                std::size_t j = 0;
                while (j < beta && v.rbar_part[j] + 1 == kZ4Z2.Rbar().modulus)
                    v.rbar_part[j++] = 0;
                if (j == beta) break;
                ++v.rbar_part[j];
            }
        }
    }
}

TEST_CASE("standard generator matrix of the worked example") {
    MixedCode c = example_code();
    auto [sf, tp] = standard_generator_matrix(c);

    CHECK(tp.to_string() == "(4,3; 1 | 3, 0)");
    CHECK(tp.mu == 1);
    CHECK(tp.rho == 3);
    CHECK(c.dimension() == 9);
    CHECK(c.is_weakly_free());
    CHECK_FALSE(c.is_free());

    // Frozen from an independent reduction of the four generators.
    std::vector<MixedVector> expected = {
        MixedVector::from_ints(kZ8Z4, {1, 0, 3, 6}, {0, 0, 0}),
        MixedVector::from_ints(kZ8Z4, {0, 6, 6, 0}, {1, 0, 0}),
        MixedVector::from_ints(kZ8Z4, {0, 4, 2, 0}, {0, 1, 0}),
        MixedVector::from_ints(kZ8Z4, {0, 0, 2, 6}, {0, 0, 1}),
    };
    CHECK(c.standard_generators() == expected);
    for (const MixedVector& g : expected) CHECK(c.contains(g));
    CHECK(MixedCode(kZ8Z4, 4, 3, expected) == c);

    SECTION("the published companion matrix generates a different code") {
        // Same type, but two corner entries differ (column 4 of rows 1 and
        // 4: 2,0 in the companion vs 6,6 in the true reduction), and the
        // companion's first row is not even in the original span.
        MixedCode printed = companion_code();
        CHECK(printed.type().to_string() == "(4,3; 1 | 3, 0)");
        CHECK(printed.standard_generators() == printed.generators());
        CHECK_FALSE(c.contains(
            MixedVector::from_ints(kZ8Z4, {1, 0, 3, 2}, {0, 0, 0})));
        CHECK_FALSE(printed == c);
    }
}

TEST_CASE("types of ambient and zero codes") {
    MixedCode ambient = MixedCode::ambient_code(kZ8Z4, 4, 3);
    CHECK(ambient.type().to_string() == "(4,3; 4 | 3, 0)");
    CHECK(ambient.dimension() == 18);
    CHECK(ambient.is_weakly_free());
    CHECK_FALSE(ambient.is_free());  // quotient block present
    CHECK(is_separable(ambient));

    MixedCode ambient_r_only = MixedCode::ambient_code(kZ8Z4, 2, 0);
    CHECK(ambient_r_only.is_free());

    MixedCode zero = MixedCode::zero_code(kZ8Z4, 4, 3);
    CHECK(zero.type().ks == std::vector<unsigned>{0, 0, 0});
    CHECK(zero.dimension() == 0);
    CHECK(zero.codeword_count() == 1);

    SECTION("type tuple renders with an empty left block when s = r") {
        ChainRingSpec flat(2, 2, 2);
        MixedCode a = MixedCode::ambient_code(flat, 1, 1);
        CHECK(a.type().to_string() == "(1,1; | 2, 0)");
    }
}

TEST_CASE("separability detects product structure") {
    // Diagonal embedding: |C| = 8 but the block projections have sizes 8
    // and 4, so C is a proper submodule of the projection product.
    MixedCode diag = MixedCode::from_rows(kZ8Z4, 1, 1, {{1, 1}});
    CHECK(diag.dimension() == 3);
    CHECK(projection_r(diag).dimension() == 3);
    CHECK(projection_rbar(diag).dimension() == 2);
    CHECK_FALSE(is_separable(diag));

    MixedCode prod = product_code(MixedCode::from_rows(kZ8Z4, 2, 0, {{1, 0}}),
                                  MixedCode::from_rows(kZ8Z4, 0, 1, {{2}}));
    CHECK(is_separable(prod));
    CHECK_THROWS_MATCHES(product_code(prod, prod), std::invalid_argument,
                         Catch::Matchers::Message(
                             "product expects an R-only and an Rbar-only code"));
}

TEST_CASE("inner product agrees with both lifted formulations") {
    MixedVector u = MixedVector::from_ints(kZ8Z4, {1, 0, 3, 2}, {0, 0, 0});
    MixedVector v = MixedVector::from_ints(kZ8Z4, {6, 0, 0, 1}, {0, 0, 0});
    CHECK(inner_product(u, v).value == 0);

    MixedVector u2 = MixedVector::from_ints(kZ8Z4, {0, 6, 6, 0}, {1, 0, 0});
    MixedVector v2 = MixedVector::from_ints(kZ8Z4, {0, 1, 0, 0}, {1, 2, 0});
    CHECK(inner_product(u2, v2).value == 0);

    MixedVector e1 = MixedVector::from_ints(kZ8Z4, {1, 0, 0, 0}, {0, 0, 0});
    CHECK(inner_product(e1, e1) == kZ8Z4.make(Level::R, 1));

    CHECK_THROWS_MATCHES(
        inner_product(e1, MixedVector(kZ8Z4, 2, 2)), std::invalid_argument,
        Catch::Matchers::Message("ambient mismatch"));

    SECTION("equality with <iota(u), chi(v)> and <chi(u), iota(v)>, sampled") {
        std::mt19937_64 rng(0x5eed1001);
        for (const ChainRingSpec& sp : {kZ4Z2, kZ8Z4, kZ9Z3}) {
            const ChainRing& R = sp.R();
            for (int t = 0; t < 400; ++t) {
                MixedVector a = rand_vec(sp, 3, 2, rng);
                MixedVector b = rand_vec(sp, 3, 2, rng);
                std::vector<uint64_t> ia = iota_vec(a), ca = chi_vec(a);
                std::vector<uint64_t> ib = iota_vec(b), cb = chi_vec(b);
                uint64_t w1 = 0, w2 = 0;
                for (std::size_t j = 0; j < ia.size(); ++j) {
                    w1 = R.add(w1, R.mul(ia[j], cb[j]));
                    w2 = R.add(w2, R.mul(ca[j], ib[j]));
                }
                uint64_t ip = inner_product(a, b).value;
                CHECK(ip == w1);
                CHECK(ip == w2);
            }
        }
    }
}

TEST_CASE("enumeration is exact and budget-guarded") {
    CHECK(enumerate_codewords(example_code()).size() == 512);
    CHECK(word_set(MixedCode::zero_code(kZ4Z2, 1, 1)) ==
          std::set<MixedVector>{MixedVector(kZ4Z2, 1, 1)});
    CHECK(enumerate_codewords(MixedCode::ambient_code(kZ4Z2, 1, 1)).size() == 8);

    CHECK_THROWS_MATCHES(enumerate_codewords(example_code(), 256),
                         std::runtime_error,
                         Catch::Matchers::Message("enumeration budget"));
    CHECK_THROWS_MATCHES(min_distance(example_code(), 4), std::runtime_error,
                         Catch::Matchers::Message("enumeration budget"));
}

TEST_CASE("standard form generates the same code, randomly sampled") {
    std::mt19937_64 rng(0x5eed1002);
    for (int t = 0; t < 30; ++t) {
        MixedCode c = rand_code(kZ8Z4, 2, 2, rng, 4);
        REQUIRE(c.dimension() <= 12);
        MixedCode from_std(kZ8Z4, 2, 2, c.standard_generators());
        CHECK(from_std == c);
        CHECK(c == from_std);
    }
}

TEST_CASE("duality: frozen examples") {
    MixedCode ambient = MixedCode::ambient_code(kZ4Z2, 2, 1);
    MixedCode zero = MixedCode::zero_code(kZ4Z2, 2, 1);
    CHECK(dual(ambient) == zero);
    CHECK(dual(zero) == ambient);

    MixedCode c = example_code();
    MixedCode cd = dual(c);
    CHECK(cd.type().to_string() == "(4,3; 3 | 0, 0)");
    CHECK(cd.dimension() == 9);
    for (const MixedVector& u : c.standard_generators())
        for (const MixedVector& v : cd.standard_generators())
            CHECK(inner_product(u, v).value == 0);

    SECTION("the companion code's dual is the span of the published check rows") {
        MixedCode printed_dual = dual(companion_code());
        MixedCode h = MixedCode::from_rows(kZ8Z4, 4, 3,
                                           {{0, 1, 0, 0, 1, 2, 0},
                                            {5, 0, 1, 0, 1, 3, 3},
                                            {6, 0, 0, 1, 0, 0, 0}});
        CHECK(h == printed_dual);
        CHECK(printed_dual.type().to_string() == "(4,3; 3 | 0, 0)");
    }
}

TEST_CASE("duality: dimension identity, double dual, De Morgan, sampled") {
    std::mt19937_64 rng(0x5eed1003);
    for (const ChainRingSpec& sp : {kZ4Z2, kZ8Z4, kZ9Z3}) {
        const unsigned ambient_dim =
            static_cast<unsigned>(2 * sp.s() + 2 * sp.r());
        for (int t = 0; t < 40; ++t) {
            MixedCode c = rand_code(sp, 2, 2, rng);
            MixedCode cd = dual(c);
            CHECK(c.dimension() + cd.dimension() == ambient_dim);
            CHECK(dual(cd) == c);

            MixedCode d = rand_code(sp, 2, 2, rng);
            CHECK(dual(sum_codes(c, d)) == intersection(cd, dual(d)));
        }
        for (int t = 0; t < 20; ++t) {  // weakly-free instances specifically
            MixedCode c = random_weakly_free(sp, 2, 2, rng);
            REQUIRE(c.is_weakly_free());
            MixedCode cd = dual(c);
            CHECK(cd.is_weakly_free());
            CHECK(c.dimension() + cd.dimension() == ambient_dim);
            CHECK(dual(cd) == c);
        }
    }
}

TEST_CASE("duality respects product structure") {
    std::mt19937_64 rng(0x5eed1004);
    for (int t = 0; t < 15; ++t) {
        MixedCode c1 = rand_code(kZ8Z4, 2, 0, rng);
        MixedCode c2 = rand_code(kZ8Z4, 0, 2, rng);
        MixedCode prod = product_code(c1, c2);
        REQUIRE(is_separable(prod));
        MixedCode pd = dual(prod);
        CHECK(is_separable(pd));
        CHECK(pd == product_code(dual(c1), dual(c2)));
    }
}

TEST_CASE("parity-check closed form") {
    SECTION("worked example companion reproduces the published rows exactly") {
        std::vector<MixedVector> h = parity_check_weakly_free(companion_code());
        std::vector<MixedVector> expected = {
            MixedVector::from_ints(kZ8Z4, {0, 1, 0, 0}, {1, 2, 0}),
            MixedVector::from_ints(kZ8Z4, {5, 0, 1, 0}, {1, 3, 3}),
            MixedVector::from_ints(kZ8Z4, {6, 0, 0, 1}, {0, 0, 0}),
        };
        CHECK(h == expected);
    }
    SECTION("rows of the closed form always span the kernel dual") {
        std::mt19937_64 rng(0x5eed1005);
        for (const ChainRingSpec& sp : {kZ4Z2, kZ8Z4, kZ9Z3})
            for (int t = 0; t < 25; ++t) {
                MixedCode c = random_weakly_free(sp, 2, 2, rng);
                std::vector<MixedVector> rows;
                try {
                    rows = parity_check_weakly_free(c);
                } catch (const std::domain_error&) {
                    continue;  // degenerate staircase shape; formula not defined
                }
                MixedCode h(sp, 2, 2, rows);
                CHECK(h == dual(c));
                CHECK(h.type().mu == 2 - c.type().mu);
                CHECK(h.type().rho == 2 - c.type().rho);
            }
    }
    SECTION("free code and ambient degenerate cases") {
        MixedCode free_code = MixedCode::from_rows(kZ8Z4, 2, 1, {{1, 0, 0}, {0, 1, 0}});
        std::vector<MixedVector> h = parity_check_weakly_free(free_code);
        REQUIRE(h.size() == 1);
        CHECK(h[0] == MixedVector::from_ints(kZ8Z4, {0, 0}, {1}));

        CHECK(parity_check_weakly_free(MixedCode::ambient_code(kZ8Z4, 2, 2)).empty());
    }
    SECTION("rejects non-weakly-free and shape-degenerate codes") {
        MixedCode bad = MixedCode::from_rows(kZ8Z4, 1, 1, {{2, 0}});  // k_1 in R block
        CHECK(bad.is_weakly_free());
        CHECK_THROWS_MATCHES(parity_check_weakly_free(bad), std::domain_error,
                             Catch::Matchers::Message(
                                 "parity-check formula requires weakly-free"));

        MixedCode notwf = MixedCode::from_rows(kZ8Z4, 2, 0, {{1, 0}, {0, 4}});
        CHECK_FALSE(notwf.is_weakly_free());
        CHECK_THROWS_MATCHES(parity_check_weakly_free(notwf), std::domain_error,
                             Catch::Matchers::Message(
                                 "parity-check formula requires weakly-free"));
    }
}

TEST_CASE("sum, intersection, membership, distance") {
    ChainRingSpec z4(2, 2, 1);
    MixedCode c = MixedCode::from_rows(z4, 2, 0, {{1, 1}});
    MixedCode d = MixedCode::from_rows(z4, 2, 0, {{1, 3}});

    CHECK(sum_codes(c, c) == c);
    CHECK(intersection(c, c) == c);

    MixedCode meet = intersection(c, d);
    CHECK(meet == MixedCode::from_rows(z4, 2, 0, {{2, 2}}));
    CHECK(meet.dimension() == 1);
    CHECK(sum_codes(c, d).dimension() == 3);
    CHECK(c.dimension() + d.dimension() ==
          sum_codes(c, d).dimension() + meet.dimension());

    CHECK(c.contains(MixedVector::from_ints(z4, {2, 2}, {})));
    CHECK_FALSE(c.contains(MixedVector::from_ints(z4, {1, 2}, {})));
    CHECK_THROWS_MATCHES(c.contains(MixedVector(z4, 1, 1)), std::invalid_argument,
                         Catch::Matchers::Message("ambient mismatch"));
    CHECK_THROWS_MATCHES(sum_codes(c, MixedCode::zero_code(z4, 1, 1)),
                         std::invalid_argument,
                         Catch::Matchers::Message("ambient mismatch"));

    CHECK(min_distance(MixedCode::ambient_code(kZ4Z2, 2, 1)) == 1);
    CHECK(min_distance(c) == 2);
    CHECK(min_distance(example_code()) == 2);
    CHECK(min_distance(MixedCode::zero_code(z4, 2, 0)) == 0);

    SECTION("intersection agrees with brute-force span intersection") {
        std::mt19937_64 rng(0x5eed1006);
        for (int t = 0; t < 20; ++t) {
            MixedCode a = rand_code(kZ4Z2, 2, 2, rng);
            MixedCode b = rand_code(kZ4Z2, 2, 2, rng);
            std::set<MixedVector> wa = word_set(a), wb = word_set(b);
            std::set<MixedVector> both;
            std::set_intersection(wa.begin(), wa.end(), wb.begin(), wb.end(),
                                  std::inserter(both, both.begin()));
            CHECK(word_set(intersection(a, b)) == both);
        }
    }
}
