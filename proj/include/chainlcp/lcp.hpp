#pragma once

// Linear complementary pairs of mixed codes.  The decision criterion: stack
// the standard generator rows of C and D, lift through iota, and test
//
//   {C, D} is LCP  <=>  the stack is square (alpha+beta rows),
//                       iota(G) is nonsingular over R,
//                       dim C + dim D = s*alpha + r*beta.
//
// On top of it: the security parameter min{d(C), d(D-perp)}, a definitional
// oracle, and a seeded randomized search over weakly-free pairs.

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "mixed.hpp"
#include "oracle.hpp"

namespace chainlcp {

enum class LcpReason { nonsquare_stack, singular_iota_G, dimension_mismatch, ok };

inline const char* lcp_reason_name(LcpReason r) {
    switch (r) {
        case LcpReason::nonsquare_stack: return "nonsquare_stack";
        case LcpReason::singular_iota_G: return "singular_iota_G";
        case LcpReason::dimension_mismatch: return "dimension_mismatch";
        case LcpReason::ok: return "ok";
    }
    return "?";
}

struct LcpVerdict {
    bool is_lcp = false;
    LcpReason reason = LcpReason::nonsquare_stack;
    unsigned stacked_dim = 0;  // dim C + dim D
    unsigned ambient_dim = 0;  // s*alpha + r*beta
};

inline LcpVerdict is_lcp(const MixedCode& c, const MixedCode& d) {
    if (!c.same_ambient(d)) throw std::invalid_argument("ambient mismatch");
    const ChainRingSpec& sp = c.spec();
    const std::size_t n = c.alpha() + c.beta();

    LcpVerdict v;
    v.stacked_dim = c.dimension() + d.dimension();
    v.ambient_dim = static_cast<unsigned>(sp.s() * c.alpha() + sp.r() * c.beta());

    const auto& gc = c.standard_generators();
    const auto& gd = d.standard_generators();
    if (gc.size() + gd.size() != n) {
        v.reason = LcpReason::nonsquare_stack;
        return v;
    }

    RingMatrix iota_g(sp, Level::R, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<uint64_t> row = iota_vec(i < gc.size() ? gc[i] : gd[i - gc.size()]);
        for (std::size_t j = 0; j < n; ++j) iota_g.at(i, j) = row[j];
    }
    if (!is_nonsingular(iota_g)) {
        v.reason = LcpReason::singular_iota_G;
        return v;
    }
    if (v.stacked_dim != v.ambient_dim) {
        v.reason = LcpReason::dimension_mismatch;
        return v;
    }
    v.reason = LcpReason::ok;
    v.is_lcp = true;
    return v;
}

// Definitional check (direct-sum bijection onto the ambient).
inline bool is_lcp_oracle(const MixedCode& c, const MixedCode& d,
                          uint64_t max_ambient = uint64_t{1} << 22) {
    return oracle_direct_sum(c, d, max_ambient);
}

// min{d(C), d(D-perp)}.  A zero code contributes no nonzero codewords and is
// skipped; for the fully degenerate pair (zero, ambient) the result is 0 by
// convention.
inline std::size_t security_parameter(const MixedCode& c, const MixedCode& d,
                                      uint64_t max_words = kDefaultEnumerationBudget) {
    if (!is_lcp(c, d).is_lcp)
        throw std::domain_error("security parameter defined for LCP pairs");
    const MixedCode dperp = dual(d);
    std::size_t best = 0;
    bool seen = false;
    for (const MixedCode* code : {&c, &dperp}) {
        if (code->dimension() == 0) continue;
        std::size_t dist = min_distance(*code, max_words);
        if (!seen || dist < best) {
            best = dist;
            seen = true;
        }
    }
    return seen ? best : 0;
}

// A uniformly filled weakly-free standard form: mu unit pivots in the R
// block, rho pivots of valuation s-r in the quotient block, free blocks
// uniform.  Weak freeness holds by construction.
inline MixedCode random_weakly_free(const ChainRingSpec& sp, std::size_t alpha,
                                    std::size_t beta, std::mt19937_64& rng) {
    std::size_t mu = rng() % (alpha + 1);
    std::size_t rho = rng() % (beta + 1);

    auto pick_pivots = [&](std::size_t count, std::size_t n) {
        std::vector<std::size_t> cols(n);
        for (std::size_t i = 0; i < n; ++i) cols[i] = i;
        for (std::size_t i = 0; i + 1 < n; ++i)
            std::swap(cols[i], cols[i + rng() % (n - i)]);
        cols.resize(count);
        std::sort(cols.begin(), cols.end());
        return cols;
    };
    std::vector<std::size_t> rpiv = pick_pivots(mu, alpha);
    std::vector<std::size_t> bpiv = pick_pivots(rho, beta);
    std::vector<bool> is_rpiv(alpha, false), is_bpiv(beta, false);
    for (std::size_t cpos : rpiv) is_rpiv[cpos] = true;
    for (std::size_t cpos : bpiv) is_bpiv[cpos] = true;

    const uint64_t theta = sp.theta_power_sr();
    std::vector<MixedVector> gens;
    for (std::size_t i = 0; i < mu; ++i) {
        MixedVector g(sp, alpha, beta);
        g.r_part[rpiv[i]] = 1;
        for (std::size_t j = 0; j < alpha; ++j)
            if (!is_rpiv[j]) g.r_part[j] = rng() % sp.R().modulus;
        for (std::size_t j = 0; j < beta; ++j)
            if (!is_bpiv[j]) g.rbar_part[j] = rng() % sp.Rbar().modulus;
        gens.push_back(std::move(g));
    }
    for (std::size_t t = 0; t < rho; ++t) {
        // Mixed-side pivot 1: its image under chi is exactly theta, so the
        // row sits at valuation s-r in the staircase.
        MixedVector g(sp, alpha, beta);
        g.rbar_part[bpiv[t]] = 1;
        for (std::size_t j = 0; j < alpha; ++j)
            if (!is_rpiv[j])
                g.r_part[j] = sp.R().mul(theta, rng() % sp.Rbar().modulus);
        for (std::size_t j = 0; j < beta; ++j)
            if (!is_bpiv[j]) g.rbar_part[j] = rng() % sp.Rbar().modulus;
        gens.push_back(std::move(g));
    }
    return MixedCode(sp, alpha, beta, std::move(gens));
}

struct LcpSearchHit {
    MixedCode c;
    MixedCode d;
    std::size_t security = 0;
};

// Seeded randomized search for LCP pairs among weakly-free codes.  Results
// are sorted by security descending, then dim(C) ascending, then by the
// generator matrices lexicographically; exact duplicates are dropped.
inline std::vector<LcpSearchHit> lcp_search(const ChainRingSpec& sp, std::size_t alpha,
                                            std::size_t beta, uint64_t budget,
                                            uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<LcpSearchHit> hits;
    for (uint64_t trial = 0; trial < budget; ++trial) {
        MixedCode c = random_weakly_free(sp, alpha, beta, rng);
        MixedCode d = random_weakly_free(sp, alpha, beta, rng);
        if (!is_lcp(c, d).is_lcp) continue;
        hits.push_back({c, d, security_parameter(c, d)});
    }
    auto key_less = [](const LcpSearchHit& a, const LcpSearchHit& b) {
        if (a.security != b.security) return a.security > b.security;
        unsigned da = a.c.dimension(), db = b.c.dimension();
        if (da != db) return da < db;
        if (!(a.c.standard_generators() == b.c.standard_generators()))
            return a.c.standard_generators() < b.c.standard_generators();
        return a.d.standard_generators() < b.d.standard_generators();
    };
    std::sort(hits.begin(), hits.end(), key_less);
    hits.erase(std::unique(hits.begin(), hits.end(),
                           [](const LcpSearchHit& a, const LcpSearchHit& b) {
                               return a.security == b.security &&
                                      a.c.standard_generators() ==
                                          b.c.standard_generators() &&
                                      a.d.standard_generators() ==
                                          b.d.standard_generators();
                           }),
               hits.end());
    return hits;
}

} // namespace chainlcp
