#pragma once

// Brute-force reference implementations, written against raw definitions so
// they can validate the optimized paths without sharing them.  Codes are
// enumerated by closing the generator set under + and the scalar action;
// duals by scanning the whole ambient; direct sums by checking that
// (c, d) -> c + d is a bijection onto the ambient.  Everything here is
// deliberately definitional and desk-scale.

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mixed.hpp"
#include "ring.hpp"

namespace chainlcp {

struct OracleReport {
    std::string checked;
    uint64_t instances = 0;
    uint64_t failures = 0;
    std::optional<std::string> first_failure;

    OracleReport() = default;
    explicit OracleReport(std::string name) : checked(std::move(name)) {}

    void note(bool ok, const std::string& description) {
        ++instances;
        if (!ok && failures++ == 0) first_failure = description;
    }
};

// |R^alpha x Rbar^beta|, guarded by the oracle budget.
inline uint64_t ambient_size(const ChainRingSpec& sp, std::size_t alpha,
                             std::size_t beta, uint64_t cap) {
    uint64_t n = 1;
    for (std::size_t i = 0; i < alpha; ++i) {
        if (n > cap / sp.R().modulus) throw std::runtime_error("enumeration budget");
        n *= sp.R().modulus;
    }
    for (std::size_t j = 0; j < beta; ++j) {
        if (n > cap / sp.Rbar().modulus) throw std::runtime_error("enumeration budget");
        n *= sp.Rbar().modulus;
    }
    return n;
}

// Definitional span: close {0} under x -> x + a*g, one generator at a time.
inline std::set<MixedVector> span_closure(const ChainRingSpec& sp, std::size_t alpha,
                                          std::size_t beta,
                                          const std::vector<MixedVector>& gens,
                                          uint64_t max_size = uint64_t{1} << 22) {
    std::set<MixedVector> words{MixedVector(sp, alpha, beta)};
    for (const MixedVector& g : gens) {
        std::set<MixedVector> next;
        for (uint64_t a = 0; a < sp.R().modulus; ++a) {
            MixedVector ag = scalar_action({a, Level::R}, g);
            for (const MixedVector& w : words) {
                next.insert(add_vec(w, ag));
                if (next.size() > max_size)
                    throw std::runtime_error("enumeration budget");
            }
        }
        words = std::move(next);
    }
    return words;
}

inline std::set<MixedVector> span_closure(const MixedCode& c,
                                          uint64_t max_size = uint64_t{1} << 22) {
    return span_closure(c.spec(), c.alpha(), c.beta(), c.generators(), max_size);
}

namespace detail {

// The mixed inner product straight from its definition:
// [u, v] = <u_R, v_R>_R + chi(<ubar, vbar>_Rbar).
inline uint64_t oracle_inner(const MixedVector& u, const MixedVector& v) {
    const ChainRingSpec& sp = u.spec;
    uint64_t acc = 0;
    for (std::size_t i = 0; i < u.alpha(); ++i)
        acc = sp.R().add(acc, sp.R().mul(u.r_part[i], v.r_part[i]));
    uint64_t bar = 0;
    for (std::size_t j = 0; j < u.beta(); ++j)
        bar = sp.Rbar().add(bar, sp.Rbar().mul(u.rbar_part[j], v.rbar_part[j]));
    return sp.R().add(acc, sp.chi_scalar(bar));
}

// Mixed-radix position of a vector in the ambient scan order.
inline uint64_t ambient_index(const MixedVector& v) {
    uint64_t idx = 0;
    for (uint64_t x : v.r_part) idx = idx * v.spec.R().modulus + x;
    for (uint64_t x : v.rbar_part) idx = idx * v.spec.Rbar().modulus + x;
    return idx;
}

// Visit the whole ambient in the ambient_index order.
template <typename Fn>
void for_each_ambient(const ChainRingSpec& sp, std::size_t alpha, std::size_t beta,
                      uint64_t cap, Fn&& fn) {
    uint64_t total = ambient_size(sp, alpha, beta, cap);
    MixedVector v(sp, alpha, beta);
    for (uint64_t idx = 0; idx < total; ++idx) {
        uint64_t rest = idx;
        for (std::size_t j = beta; j-- > 0;) {
            v.rbar_part[j] = rest % sp.Rbar().modulus;
            rest /= sp.Rbar().modulus;
        }
        for (std::size_t i = alpha; i-- > 0;) {
            v.r_part[i] = rest % sp.R().modulus;
            rest /= sp.R().modulus;
        }
        fn(v);
    }
}

} // namespace detail

// Every ambient vector orthogonal to every codeword of C.
inline std::set<MixedVector> oracle_dual(const MixedCode& c,
                                         uint64_t max_ambient = uint64_t{1} << 22) {
    std::set<MixedVector> words = span_closure(c, max_ambient);
    std::set<MixedVector> out;
    detail::for_each_ambient(c.spec(), c.alpha(), c.beta(), max_ambient,
                             [&](const MixedVector& v) {
                                 for (const MixedVector& w : words)
                                     if (detail::oracle_inner(v, w) != 0) return;
                                 out.insert(v);
                             });
    return out;
}

// True exactly when (c, d) -> c + d is a bijection C x D -> ambient.
inline bool oracle_direct_sum(const MixedCode& c, const MixedCode& d,
                              uint64_t max_ambient = uint64_t{1} << 22) {
    if (!c.same_ambient(d)) throw std::invalid_argument("ambient mismatch");
    uint64_t total = ambient_size(c.spec(), c.alpha(), c.beta(), max_ambient);
    std::set<MixedVector> wc = span_closure(c, max_ambient);
    std::set<MixedVector> wd = span_closure(d, max_ambient);
    if (wc.size() > total / wd.size() ||
        (wc.size() * wd.size() != total))
        return false;
    std::vector<bool> seen(total, false);
    for (const MixedVector& a : wc)
        for (const MixedVector& b : wd) {
            uint64_t idx = detail::ambient_index(add_vec(a, b));
            if (seen[idx]) return false;
            seen[idx] = true;
        }
    return true;
}

} // namespace chainlcp
