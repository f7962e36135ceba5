#pragma once

// Exact arithmetic in the finite chain ring Z_{p^s}, its quotient alphabet
// Z_{p^r} (1 <= r <= s), and the four scalar maps that connect them:
//
//   pi   : Z_{p^s} -> Z_{p^r}    reduction mod p^r
//   iota : Z_{p^r} -> Z_{p^s}    Teichmuller digit lift (multiplicative-ish
//                                section of pi, pi(iota(x)) = x)
//   chi  : Z_{p^r} -> p^{s-r} Z_{p^s}   chi(x) = p^{s-r} iota(x), an additive
//                                isomorphism onto the ideal p^{s-r} Z_{p^s}
//   psi  : p^{s-r} Z_{p^s} -> Z_{p^r}   the inverse of chi
//
// Elements are stored as canonical residues in [0, p^m).  All products are
// taken through unsigned 128-bit intermediates, so any prime power below
// 2^63 is safe.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace chainlcp {

using std::uint64_t;

// Which of the two alphabets a scalar lives in.
enum class Level { R, Rbar };

inline const char* level_name(Level l) { return l == Level::R ? "R" : "Rbar"; }

namespace detail {

inline uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m) {
    if (m == 1) return 0;
    uint64_t acc = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1) acc = mul_mod(acc, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return acc;
}

inline bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace detail

// Z_{p^m} with its p-adic valuation.  theta = p generates the maximal ideal
// and theta^m = 0; every element factors as (unit) * p^{valuation}.
struct ChainRing {
    uint64_t p = 2;
    unsigned m = 1;        // nilpotency index of theta = p
    uint64_t modulus = 2;  // p^m

    ChainRing() = default;
    ChainRing(uint64_t p_, unsigned m_) : p(p_), m(m_), modulus(1) {
        if (!detail::is_prime(p)) throw std::invalid_argument("p must be prime");
        if (p > (uint64_t{1} << 16)) throw std::invalid_argument("p exceeds 2^16");
        if (m == 0) throw std::invalid_argument("nilpotency index must be positive");
        for (unsigned i = 0; i < m; ++i) {
            if (modulus > (uint64_t{1} << 62) / p)
                throw std::invalid_argument("p^s exceeds the 64-bit magnitude bound");
            modulus *= p;
        }
    }

    bool operator==(const ChainRing& o) const { return p == o.p && m == o.m; }

    // Canonical residue of a possibly negative integer.
    uint64_t reduce(long long v) const {
        long long r = v % static_cast<long long>(modulus);
        if (r < 0) r += static_cast<long long>(modulus);
        return static_cast<uint64_t>(r);
    }

    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t s = a + b;
        return s >= modulus ? s - modulus : s;
    }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + (modulus - b); }
    uint64_t neg(uint64_t a) const { return a == 0 ? 0 : modulus - a; }
    uint64_t mul(uint64_t a, uint64_t b) const { return detail::mul_mod(a, b, modulus); }
    uint64_t pow(uint64_t a, uint64_t e) const { return detail::pow_mod(a, e, modulus); }

    // Largest t with p^t dividing x; by convention valuation(0) = m.
    unsigned valuation(uint64_t x) const {
        if (x == 0) return m;
        unsigned t = 0;
        while (x % p == 0) {
            x /= p;
            ++t;
        }
        return t;
    }

    bool is_unit(uint64_t x) const { return x % p != 0; }

    // Inverse of a unit, by the extended Euclidean algorithm on (x, p^m).
    uint64_t unit_inverse(uint64_t x) const {
        if (!is_unit(x)) throw std::domain_error("not a unit");
        long long r0 = static_cast<long long>(modulus), r1 = static_cast<long long>(x);
        long long t0 = 0, t1 = 1;
        while (r1 != 0) {
            long long q = r0 / r1;
            long long r2 = r0 - q * r1;
            long long t2 = t0 - q * t1;
            r0 = r1; r1 = r2;
            t0 = t1; t1 = t2;
        }
        return reduce(t0);
    }

    // Teichmuller representative of x's residue class mod p: the unique
    // y with y^p = y and y = x (mod p), computed as x^(p^(m-1)) mod p^m.
    uint64_t teich_lift(uint64_t x) const {
        uint64_t e = 1;
        for (unsigned i = 0; i + 1 < m; ++i) e *= p;
        return detail::pow_mod(x, e, modulus);
    }

    // The p digit residue classes a_0..a_{m-1} in [0, p) of the expansion
    // x = sum_t omega(a_t) p^t, computed by lift-subtract-divide at
    // successively smaller levels.
    std::vector<uint64_t> digit_classes(uint64_t x) const {
        std::vector<uint64_t> out;
        out.reserve(m);
        uint64_t cur = x;
        uint64_t mod = modulus;
        for (unsigned level = m; level >= 1; --level) {
            uint64_t e = 1;
            for (unsigned i = 0; i + 1 < level; ++i) e *= p;
            uint64_t d = detail::pow_mod(cur, e, mod);
            out.push_back(d % p);
            cur = (cur + (mod - d)) % mod;   // cur - d, divisible by p
            cur /= p;
            mod /= p;
        }
        return out;
    }
};

// A scalar together with the alphabet it belongs to.  Mixed-level arithmetic
// is a contract violation and throws.
struct RingElement {
    uint64_t value = 0;
    Level level = Level::R;

    RingElement() = default;
    RingElement(uint64_t v, Level l) : value(v), level(l) {}

    bool operator==(const RingElement&) const = default;
};

// The pair (Z_{p^s}, Z_{p^r}) and the maps between the two levels.
class ChainRingSpec {
  public:
    ChainRingSpec(uint64_t p, unsigned s, unsigned r)
        : p_(p), s_(s), r_(checked_r(s, r)), R_(p, s), Rbar_(p, r) {
        theta_sr_ = 1;
        for (unsigned i = 0; i < s - r; ++i) theta_sr_ *= p;
    }

    uint64_t p() const { return p_; }
    unsigned s() const { return s_; }
    unsigned r() const { return r_; }
    uint64_t theta_power_sr() const { return theta_sr_; }  // p^{s-r}

    const ChainRing& R() const { return R_; }
    const ChainRing& Rbar() const { return Rbar_; }
    const ChainRing& ring(Level l) const { return l == Level::R ? R_ : Rbar_; }

    bool operator==(const ChainRingSpec& o) const {
        return p_ == o.p_ && s_ == o.s_ && r_ == o.r_;
    }

    RingElement make(Level l, long long v) const { return {ring(l).reduce(v), l}; }

    RingElement add(RingElement a, RingElement b) const {
        check_levels(a, b);
        return {ring(a.level).add(a.value, b.value), a.level};
    }
    RingElement sub(RingElement a, RingElement b) const {
        check_levels(a, b);
        return {ring(a.level).sub(a.value, b.value), a.level};
    }
    RingElement mul(RingElement a, RingElement b) const {
        check_levels(a, b);
        return {ring(a.level).mul(a.value, b.value), a.level};
    }
    RingElement neg(RingElement a) const { return {ring(a.level).neg(a.value), a.level}; }

    unsigned valuation(RingElement a) const { return ring(a.level).valuation(a.value); }

    RingElement unit_inverse(RingElement a) const {
        return {ring(a.level).unit_inverse(a.value), a.level};
    }

    // Gamma digits of x, returned as Teichmuller representatives at x's own
    // level; x = sum_t digits[t] * p^t holds there.
    std::vector<RingElement> gamma_digits(RingElement x) const {
        const ChainRing& rg = ring(x.level);
        std::vector<RingElement> out;
        for (uint64_t cls : rg.digit_classes(x.value))
            out.emplace_back(rg.teich_lift(cls), x.level);
        return out;
    }

    // The Teichmuller set Gamma = {x : x^p = x}; exactly p elements, one per
    // residue class mod p.
    std::vector<RingElement> teichmuller_set(Level l) const {
        const ChainRing& rg = ring(l);
        std::vector<RingElement> out;
        out.reserve(rg.p);
        for (uint64_t a = 0; a < rg.p; ++a) out.emplace_back(rg.teich_lift(a), l);
        return out;
    }

    // --- scalar maps between the levels (raw-residue versions) ---

    uint64_t pi_scalar(uint64_t x) const { return x % Rbar_.modulus; }

    // Digitwise Teichmuller lift: digits a_0..a_{r-1} of x in Z_{p^r} are
    // re-lifted into Z_{p^s}, so pi(iota(x)) = x and iota(Gamma) = Gamma.
    uint64_t iota_scalar(uint64_t xbar) const {
        std::vector<uint64_t> cls = Rbar_.digit_classes(xbar);
        uint64_t acc = 0, pw = 1;
        for (uint64_t a : cls) {
            acc = R_.add(acc, R_.mul(R_.teich_lift(a), pw));
            pw *= p_;
        }
        return acc;
    }

    uint64_t chi_scalar(uint64_t xbar) const { return R_.mul(theta_sr_, iota_scalar(xbar)); }

    // psi(p^{s-r} u) = u mod p^r; defined only on the ideal p^{s-r} Z_{p^s}.
    uint64_t psi_scalar(uint64_t y) const {
        if (y % theta_sr_ != 0) throw std::domain_error("not in the image of chi");
        return pi_scalar(y / theta_sr_);
    }

    // --- RingElement wrappers with level checking ---

    RingElement pi(RingElement x) const {
        require_level(x, Level::R);
        return {pi_scalar(x.value), Level::Rbar};
    }
    RingElement iota(RingElement x) const {
        require_level(x, Level::Rbar);
        return {iota_scalar(x.value), Level::R};
    }
    RingElement chi(RingElement x) const {
        require_level(x, Level::Rbar);
        return {chi_scalar(x.value), Level::R};
    }
    RingElement psi(RingElement x) const {
        require_level(x, Level::R);
        return {psi_scalar(x.value), Level::Rbar};
    }

  private:
    static unsigned checked_r(unsigned s, unsigned r) {
        if (r < 1 || r > s) throw std::invalid_argument("requires 1 <= r <= s");
        return r;
    }
    static void check_levels(RingElement a, RingElement b) {
        if (a.level != b.level) throw std::invalid_argument("mixed-level arithmetic");
    }
    static void require_level(RingElement a, Level want) {
        if (a.level != want)
            throw std::invalid_argument(std::string("expected a scalar at level ") +
                                        level_name(want));
    }

    uint64_t p_;
    unsigned s_, r_;
    ChainRing R_, Rbar_;
    uint64_t theta_sr_;
};

} // namespace chainlcp
