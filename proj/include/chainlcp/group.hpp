#pragma once

// Group algebras over the chain ring and its quotient.  A mixed vector of
// shape (|H|, |K|) is read as an element of R[H] x Rbar[K] under a fixed
// mixed-radix ordering of group elements; a mixed code is a group code when
// it is an ideal of that product ring — closed under the regular shift
// action of both groups and under the two central idempotents.  Includes the
// ideal-closure constructor, the separability split C = C1 x C2bar, and a
// brute-force search for the coordinate permutations that match C with the
// dual of its complementary pair member.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lcp.hpp"
#include "mixed.hpp"

namespace chainlcp {

// A finite abelian group presented by invariant factors; the group is the
// direct product of cyclic groups of those orders.  Elements are exponent
// tuples, indexed mixed-radix with the first factor fastest; index 0 is the
// identity.  An empty factor list is the trivial group.
struct GroupSpec {
    std::vector<uint64_t> invariant_factors;

    GroupSpec() = default;
    explicit GroupSpec(std::vector<uint64_t> factors)
        : invariant_factors(std::move(factors)) {
        uint64_t n = 1;
        for (uint64_t d : invariant_factors) {
            if (d < 2)
                throw std::invalid_argument("invariant factors must be at least 2");
            if (n > (uint64_t{1} << 32) / d)
                throw std::invalid_argument("group order exceeds the supported range");
            n *= d;
        }
    }

    uint64_t order() const {
        uint64_t n = 1;
        for (uint64_t d : invariant_factors) n *= d;
        return n;
    }

    std::vector<uint64_t> tuple_of(uint64_t index) const {
        if (index >= order())
            throw std::invalid_argument("group element index out of range");
        std::vector<uint64_t> t(invariant_factors.size());
        for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
            t[i] = index % invariant_factors[i];
            index /= invariant_factors[i];
        }
        return t;
    }

    uint64_t index_of(const std::vector<uint64_t>& tuple) const {
        if (tuple.size() != invariant_factors.size())
            throw std::invalid_argument("exponent tuple has the wrong length");
        uint64_t idx = 0, stride = 1;
        for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
            if (tuple[i] >= invariant_factors[i])
                throw std::invalid_argument("exponent exceeds its factor");
            idx += tuple[i] * stride;
            stride *= invariant_factors[i];
        }
        return idx;
    }

    // Product of two elements given by index (exponents add mod each factor).
    uint64_t mul(uint64_t a, uint64_t b) const {
        std::vector<uint64_t> ta = tuple_of(a), tb = tuple_of(b);
        for (std::size_t i = 0; i < ta.size(); ++i)
            ta[i] = (ta[i] + tb[i]) % invariant_factors[i];
        return index_of(ta);
    }

    // Indices of the per-factor generators (exponent 1 in one slot).
    std::vector<uint64_t> factor_generators() const {
        std::vector<uint64_t> gens;
        uint64_t stride = 1;
        for (uint64_t d : invariant_factors) {
            gens.push_back(stride);
            stride *= d;
        }
        return gens;
    }

    bool operator==(const GroupSpec&) const = default;
};

// Regular action on group-ring coefficients: multiplication by the unit
// (h, k) of the product ring.  The coefficient at position g moves to
// position h*g (R block) and k*g (Rbar block).
inline MixedVector shift_action(const MixedVector& v, uint64_t h_index,
                                uint64_t k_index, const GroupSpec& h_group,
                                const GroupSpec& k_group) {
    if (v.alpha() != h_group.order() || v.beta() != k_group.order())
        throw std::invalid_argument("code shape does not match the group orders");
    if (h_index >= h_group.order() || k_index >= k_group.order())
        throw std::invalid_argument("group element index out of range");
    MixedVector out(v.spec, v.alpha(), v.beta());
    for (uint64_t g = 0; g < v.alpha(); ++g)
        out.r_part[h_group.mul(h_index, g)] = v.r_part[g];
    for (uint64_t g = 0; g < v.beta(); ++g)
        out.rbar_part[k_group.mul(k_index, g)] = v.rbar_part[g];
    return out;
}

// Multiplication by the ring element (h, 0): the R block is shifted by h and
// the quotient block is annihilated.  Together with its mirror image this
// generates every one-sided multiplier of the product ring.
inline MixedVector left_component_shift(const MixedVector& v, uint64_t h_index,
                                        const GroupSpec& h_group,
                                        const GroupSpec& k_group) {
    MixedVector out = shift_action(v, h_index, 0, h_group, k_group);
    std::fill(out.rbar_part.begin(), out.rbar_part.end(), uint64_t{0});
    return out;
}

// Multiplication by (0, k): the quotient block is shifted, the R block dies.
inline MixedVector right_component_shift(const MixedVector& v, uint64_t k_index,
                                         const GroupSpec& h_group,
                                         const GroupSpec& k_group) {
    MixedVector out = shift_action(v, 0, k_index, h_group, k_group);
    std::fill(out.r_part.begin(), out.r_part.end(), uint64_t{0});
    return out;
}

namespace detail {

// The multipliers whose closure makes an R-submodule an ideal of the product
// ring: (e,0) and (0,e) — the central idempotents — plus (h,0) and (0,k) for
// the factor generators.  Powers of (h,0) reach (e,0), and sums of the
// component families recover every (x, y), so closure under this finite set
// together with the module operations is closure under the whole ring.
inline std::vector<MixedVector> ideal_multiplier_images(const MixedVector& v,
                                                        const GroupSpec& h_group,
                                                        const GroupSpec& k_group) {
    std::vector<MixedVector> out;
    out.push_back(left_component_shift(v, 0, h_group, k_group));
    for (uint64_t h : h_group.factor_generators())
        out.push_back(left_component_shift(v, h, h_group, k_group));
    out.push_back(right_component_shift(v, 0, h_group, k_group));
    for (uint64_t k : k_group.factor_generators())
        out.push_back(right_component_shift(v, k, h_group, k_group));
    return out;
}

} // namespace detail

// True when the code is an ideal of the product ring.  Checking the standard
// generators against the finite multiplier family suffices: membership of
// their images extends to the whole code by linearity, and products of the
// family reach every ring element.  Note this is strictly stronger than
// closure under the pair shifts alone: span{(1,1|1,0),(1,1|0,1)} over
// Z4[C2] x Z2[C2] is shift-closed but not idempotent-closed.
inline bool is_group_code(const MixedCode& c, const GroupSpec& h_group,
                          const GroupSpec& k_group) {
    if (c.alpha() != h_group.order() || c.beta() != k_group.order())
        throw std::invalid_argument("code shape does not match the group orders");
    for (const MixedVector& g : c.standard_generators())
        for (const MixedVector& w : detail::ideal_multiplier_images(g, h_group, k_group))
            if (!c.contains(w)) return false;
    return true;
}

// Smallest ideal containing the generators: FIFO closure under the multiplier
// family until the span stabilizes.  Iteration order is fixed (input order,
// then multipliers in family order), so the result is deterministic.
inline MixedCode ideal_generated(const ChainRingSpec& sp,
                                 std::vector<MixedVector> gens,
                                 const GroupSpec& h_group, const GroupSpec& k_group) {
    const std::size_t alpha = h_group.order(), beta = k_group.order();
    for (const MixedVector& g : gens)
        if (g.alpha() != alpha || g.beta() != beta)
            throw std::invalid_argument("code shape does not match the group orders");
    MixedCode code(sp, alpha, beta, gens);
    std::vector<MixedVector> queue = std::move(gens);
    std::vector<MixedVector> basis = queue;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (MixedVector& w :
             detail::ideal_multiplier_images(queue[head], h_group, k_group)) {
            if (code.contains(w)) continue;
            basis.push_back(w);
            queue.push_back(std::move(w));
            code = MixedCode(sp, alpha, beta, basis);
        }
    }
    return code;
}

// A group code is the product of its block projections.  The projections
// are returned as an R-only and an Rbar-only code; the product equality is
// re-checked and an internal failure is raised if it does not hold.
inline std::pair<MixedCode, MixedCode> split_separable(const MixedCode& c,
                                                       const GroupSpec& h_group,
                                                       const GroupSpec& k_group) {
    if (!is_group_code(c, h_group, k_group))
        throw std::domain_error("not a group code");
    MixedCode c1 = projection_r(c);
    MixedCode c2 = projection_rbar(c);
    if (!(product_code(c1, c2) == c))
        throw std::logic_error(
            "separability postcondition failed: projections do not recover the code");
    return {std::move(c1), std::move(c2)};
}

// result[i] = v[perm[i]] within each block.
inline MixedVector apply_block_permutation(const MixedVector& v,
                                           const std::vector<std::size_t>& perm_r,
                                           const std::vector<std::size_t>& perm_rbar) {
    if (perm_r.size() != v.alpha() || perm_rbar.size() != v.beta())
        throw std::invalid_argument("permutation length mismatch");
    MixedVector out(v.spec, v.alpha(), v.beta());
    for (std::size_t i = 0; i < v.alpha(); ++i) out.r_part[i] = v.r_part[perm_r[i]];
    for (std::size_t j = 0; j < v.beta(); ++j)
        out.rbar_part[j] = v.rbar_part[perm_rbar[j]];
    return out;
}

// Codeword counts by Hamming weight, indexed 0..alpha+beta.  Invariant under
// within-block coordinate permutations, hence usable for pruning.
inline std::vector<uint64_t> weight_distribution(
    const MixedCode& c, uint64_t max_words = kDefaultEnumerationBudget) {
    check_enumeration_budget(c, max_words);
    std::vector<uint64_t> dist(c.alpha() + c.beta() + 1, 0);
    for_each_codeword_chi(c, [&](const std::vector<uint64_t>& w) {
        std::size_t weight = 0;
        for (uint64_t x : w) weight += x != 0;
        ++dist[weight];
    });
    return dist;
}

// For an LCP pair of group codes, search the within-block coordinate
// permutations for one mapping dual(D) onto C; the pair (perm_R, perm_Rbar)
// with result[i] = v[perm[i]] is returned, or absent when no permutation
// works.  The search is lexicographic, so the witness is canonical.
inline std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
verify_equivalence_theorem(const MixedCode& c, const MixedCode& d,
                           const GroupSpec& h_group, const GroupSpec& k_group,
                           uint64_t budget = 1000000) {
    if (!is_group_code(c, h_group, k_group) || !is_group_code(d, h_group, k_group))
        throw std::domain_error("not a group code");
    if (!is_lcp(c, d).is_lcp)
        throw std::domain_error("equivalence check requires an LCP pair");

    uint64_t candidates = 1;
    for (std::size_t i = 2; i <= c.alpha(); ++i) {
        if (candidates > budget / i) throw std::runtime_error("enumeration budget");
        candidates *= i;
    }
    for (std::size_t i = 2; i <= c.beta(); ++i) {
        if (candidates > budget / i) throw std::runtime_error("enumeration budget");
        candidates *= i;
    }

    MixedCode target = dual(d);
    if (target.dimension() != c.dimension()) return std::nullopt;
    if (weight_distribution(target) != weight_distribution(c)) return std::nullopt;

    std::vector<std::size_t> perm_r(c.alpha());
    std::iota(perm_r.begin(), perm_r.end(), std::size_t{0});
    do {
        std::vector<std::size_t> perm_rbar(c.beta());
        std::iota(perm_rbar.begin(), perm_rbar.end(), std::size_t{0});
        do {
            bool inside = true;
            for (const MixedVector& g : target.standard_generators()) {
                if (!c.contains(apply_block_permutation(g, perm_r, perm_rbar))) {
                    inside = false;
                    break;
                }
            }
            // Equal dimensions, so containment of the permuted span is
            // equality of the codeword sets.
            if (inside) return std::make_pair(perm_r, perm_rbar);
        } while (std::next_permutation(perm_rbar.begin(), perm_rbar.end()));
    } while (std::next_permutation(perm_r.begin(), perm_r.end()));
    return std::nullopt;
}

} // namespace chainlcp
