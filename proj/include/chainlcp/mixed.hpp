#pragma once

// Mixed-alphabet vectors and codes in R^alpha x Rbar^beta, where R = Z_{p^s}
// and Rbar = Z_{p^r}.  A code is an R-submodule under the action
//
//     a * (u | ubar) = (a u | pi(a) ubar),
//
// studied through its chi-image: chi maps the mixed ambient isomorphically
// onto R^alpha x theta^{s-r} R^beta (theta = p), is R-linear for the action
// above, and turns mixed codes into ordinary matrix row spans over R.  The
// standard generator matrix, type, dimension, duality, and membership all
// route through that image.

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "ring.hpp"

namespace chainlcp {

struct MixedVector {
    ChainRingSpec spec;
    std::vector<uint64_t> r_part;     // canonical residues mod p^s
    std::vector<uint64_t> rbar_part;  // canonical residues mod p^r

    MixedVector(ChainRingSpec sp, std::size_t alpha, std::size_t beta)
        : spec(std::move(sp)), r_part(alpha, 0), rbar_part(beta, 0) {}
    MixedVector(ChainRingSpec sp, std::vector<uint64_t> r, std::vector<uint64_t> rbar)
        : spec(std::move(sp)), r_part(std::move(r)), rbar_part(std::move(rbar)) {}

    static MixedVector from_ints(const ChainRingSpec& sp,
                                 const std::vector<long long>& r,
                                 const std::vector<long long>& rbar) {
        MixedVector v(sp, r.size(), rbar.size());
        for (std::size_t i = 0; i < r.size(); ++i) v.r_part[i] = sp.R().reduce(r[i]);
        for (std::size_t j = 0; j < rbar.size(); ++j)
            v.rbar_part[j] = sp.Rbar().reduce(rbar[j]);
        return v;
    }

    std::size_t alpha() const { return r_part.size(); }
    std::size_t beta() const { return rbar_part.size(); }

    bool is_zero() const {
        for (uint64_t x : r_part)
            if (x != 0) return false;
        for (uint64_t x : rbar_part)
            if (x != 0) return false;
        return true;
    }

    // Hamming weight, counting R and Rbar coordinates alike.
    std::size_t weight() const {
        std::size_t w = 0;
        for (uint64_t x : r_part) w += x != 0;
        for (uint64_t x : rbar_part) w += x != 0;
        return w;
    }

    bool operator==(const MixedVector& o) const {
        return spec == o.spec && r_part == o.r_part && rbar_part == o.rbar_part;
    }
    bool operator<(const MixedVector& o) const {
        if (r_part != o.r_part) return r_part < o.r_part;
        return rbar_part < o.rbar_part;
    }
};

namespace detail {

inline void require_same_ambient(const MixedVector& u, const MixedVector& v) {
    if (!(u.spec == v.spec) || u.alpha() != v.alpha() || u.beta() != v.beta())
        throw std::invalid_argument("ambient mismatch");
}

} // namespace detail

// a * (u | ubar) = (a u | pi(a) ubar); the scalar lives in R.
inline MixedVector scalar_action(RingElement a, const MixedVector& v) {
    if (a.level != Level::R)
        throw std::invalid_argument("expected a scalar at level R");
    MixedVector out = v;
    uint64_t abar = v.spec.pi_scalar(a.value);
    for (uint64_t& x : out.r_part) x = v.spec.R().mul(a.value, x);
    for (uint64_t& x : out.rbar_part) x = v.spec.Rbar().mul(abar, x);
    return out;
}

inline MixedVector add_vec(const MixedVector& u, const MixedVector& v) {
    detail::require_same_ambient(u, v);
    MixedVector out = u;
    for (std::size_t i = 0; i < v.alpha(); ++i)
        out.r_part[i] = u.spec.R().add(out.r_part[i], v.r_part[i]);
    for (std::size_t j = 0; j < v.beta(); ++j)
        out.rbar_part[j] = u.spec.Rbar().add(out.rbar_part[j], v.rbar_part[j]);
    return out;
}

// chi on vectors: R-part copied, Rbar entries pushed through chi_scalar.
inline std::vector<uint64_t> chi_vec(const MixedVector& v) {
    std::vector<uint64_t> w = v.r_part;
    w.reserve(v.alpha() + v.beta());
    for (uint64_t x : v.rbar_part) w.push_back(v.spec.chi_scalar(x));
    return w;
}

// Inverse of chi_vec on its image; the last beta entries must be multiples
// of theta^(s-r).
inline MixedVector psi_vec(const ChainRingSpec& sp, const std::vector<uint64_t>& w,
                           std::size_t alpha, std::size_t beta) {
    if (w.size() != alpha + beta) throw std::invalid_argument("length mismatch");
    MixedVector v(sp, alpha, beta);
    for (std::size_t i = 0; i < alpha; ++i) v.r_part[i] = w[i];
    for (std::size_t j = 0; j < beta; ++j)
        v.rbar_part[j] = sp.psi_scalar(w[alpha + j]);
    return v;
}

// iota on vectors: R-part copied, Rbar entries digit-lifted into R.
inline std::vector<uint64_t> iota_vec(const MixedVector& v) {
    std::vector<uint64_t> w = v.r_part;
    w.reserve(v.alpha() + v.beta());
    for (uint64_t x : v.rbar_part) w.push_back(v.spec.iota_scalar(x));
    return w;
}

// varphi on vectors: the last beta entries reduced mod p^r; left inverse of
// iota_vec and defined on all of R^(alpha+beta).
inline MixedVector varphi_vec(const ChainRingSpec& sp, const std::vector<uint64_t>& w,
                              std::size_t alpha, std::size_t beta) {
    if (w.size() != alpha + beta) throw std::invalid_argument("length mismatch");
    MixedVector v(sp, alpha, beta);
    for (std::size_t i = 0; i < alpha; ++i) v.r_part[i] = w[i] % sp.R().modulus;
    for (std::size_t j = 0; j < beta; ++j) v.rbar_part[j] = sp.pi_scalar(w[alpha + j]);
    return v;
}

// [u, v] = <u_R, v_R>_R + chi(<ubar, vbar>_Rbar), computed through the
// equivalent form <iota(u), chi(v)>_R.
inline RingElement inner_product(const MixedVector& u, const MixedVector& v) {
    detail::require_same_ambient(u, v);
    const ChainRing& R = u.spec.R();
    std::vector<uint64_t> a = iota_vec(u), b = chi_vec(v);
    uint64_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = R.add(acc, R.mul(a[i], b[i]));
    return {acc, Level::R};
}

// The type tuple (alpha, beta; k_0,...,k_{s-r-1} | k_{s-r},...,k_{s-1}):
// pivot counts of the chi-image staircase by valuation, split at s-r.
struct CodeType {
    std::size_t alpha = 0, beta = 0;
    std::vector<unsigned> ks;  // size s
    unsigned split = 0;        // s - r
    unsigned mu = 0;           // k_0 + ... + k_{s-r-1}
    unsigned rho = 0;          // k_{s-r} + ... + k_{s-1}

    std::string to_string() const {
        auto join = [this](unsigned lo, unsigned hi) {
            std::string s;
            for (unsigned t = lo; t < hi; ++t) {
                if (!s.empty()) s += ", ";
                s += std::to_string(ks[t]);
            }
            return s;
        };
        std::string left = join(0, split);
        std::string right = join(split, static_cast<unsigned>(ks.size()));
        return "(" + std::to_string(alpha) + "," + std::to_string(beta) + "; " +
               left + (left.empty() ? "| " : " | ") + right + ")";
    }

    bool operator==(const CodeType&) const = default;
};

class MixedCode {
  public:
    MixedCode(ChainRingSpec sp, std::size_t alpha, std::size_t beta,
              std::vector<MixedVector> generators)
        : spec_(std::move(sp)),
          alpha_(alpha),
          beta_(beta),
          generators_(std::move(generators)),
          form_(compute_form()) {
        type_.alpha = alpha_;
        type_.beta = beta_;
        type_.ks = form_.type_ks;
        type_.split = spec_.s() - spec_.r();
        for (unsigned t = 0; t < type_.ks.size(); ++t)
            (t < type_.split ? type_.mu : type_.rho) += type_.ks[t];
        for (std::size_t i = 0; i < form_.matrix.rows; ++i) {
            std::vector<uint64_t> row(form_.matrix.cols);
            for (std::size_t j = 0; j < row.size(); ++j) row[j] = form_.matrix.at(i, j);
            standard_generators_.push_back(psi_vec(spec_, row, alpha_, beta_));
        }
    }

    static MixedCode zero_code(const ChainRingSpec& sp, std::size_t alpha,
                               std::size_t beta) {
        return MixedCode(sp, alpha, beta, {});
    }

    static MixedCode ambient_code(const ChainRingSpec& sp, std::size_t alpha,
                                  std::size_t beta) {
        std::vector<MixedVector> gens;
        for (std::size_t i = 0; i < alpha + beta; ++i) {
            MixedVector e(sp, alpha, beta);
            if (i < alpha) e.r_part[i] = 1;
            else e.rbar_part[i - alpha] = 1;
            gens.push_back(std::move(e));
        }
        return MixedCode(sp, alpha, beta, std::move(gens));
    }

    static MixedCode from_rows(const ChainRingSpec& sp, std::size_t alpha,
                               std::size_t beta,
                               const std::vector<std::vector<long long>>& rows) {
        std::vector<MixedVector> gens;
        for (const auto& row : rows) {
            if (row.size() != alpha + beta)
                throw std::invalid_argument("generator does not match the ambient");
            gens.push_back(MixedVector::from_ints(
                sp, {row.begin(), row.begin() + static_cast<long>(alpha)},
                {row.begin() + static_cast<long>(alpha), row.end()}));
        }
        return MixedCode(sp, alpha, beta, std::move(gens));
    }

    const ChainRingSpec& spec() const { return spec_; }
    std::size_t alpha() const { return alpha_; }
    std::size_t beta() const { return beta_; }
    const std::vector<MixedVector>& generators() const { return generators_; }
    const StandardForm& standard_form() const { return form_; }
    const std::vector<MixedVector>& standard_generators() const {
        return standard_generators_;
    }
    const CodeType& type() const { return type_; }

    unsigned dimension() const {  // log_p of the codeword count
        return dimension_from_type(form_.type_ks, spec_.s());
    }

    uint64_t codeword_count() const {
        uint64_t n = 1;
        for (unsigned i = 0; i < dimension(); ++i) {
            if (n > (uint64_t{1} << 62) / spec_.p())
                throw std::runtime_error("enumeration budget");
            n *= spec_.p();
        }
        return n;
    }

    bool is_weakly_free() const {
        for (unsigned t = 0; t < type_.ks.size(); ++t)
            if (t != 0 && t != type_.split && type_.ks[t] != 0) return false;
        return true;
    }

    bool is_free() const { return is_weakly_free() && type_.rho == 0; }

    bool contains(const MixedVector& v) const {
        if (!(v.spec == spec_) || v.alpha() != alpha_ || v.beta() != beta_)
            throw std::invalid_argument("ambient mismatch");
        return in_row_span(form_, chi_vec(v));
    }

    bool same_ambient(const MixedCode& o) const {
        return spec_ == o.spec_ && alpha_ == o.alpha_ && beta_ == o.beta_;
    }

    // Equality of row spans: equal dimensions plus one-sided containment of
    // the standard generators.
    bool operator==(const MixedCode& o) const {
        if (!same_ambient(o) || dimension() != o.dimension()) return false;
        for (const MixedVector& g : o.standard_generators_)
            if (!contains(g)) return false;
        return true;
    }

  private:
    StandardForm compute_form() const {
        RingMatrix m(spec_, Level::R, generators_.size(), alpha_ + beta_);
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            const MixedVector& g = generators_[i];
            if (!(g.spec == spec_) || g.alpha() != alpha_ || g.beta() != beta_)
                throw std::invalid_argument("generator does not match the ambient");
            std::vector<uint64_t> row = chi_vec(g);
            for (std::size_t j = 0; j < row.size(); ++j) m.at(i, j) = row[j];
        }
        return row_reduce_standard(m, std::make_pair(alpha_, beta_));
    }

    ChainRingSpec spec_;
    std::size_t alpha_, beta_;
    std::vector<MixedVector> generators_;
    StandardForm form_;
    CodeType type_;
    std::vector<MixedVector> standard_generators_;
};

// Visit every codeword exactly once, as chi-image vectors over R.  Row i of
// the staircase contributes coefficients 0 <= c < p^(s - v_i); distinct
// tuples give distinct words, p^dim in total.
inline void for_each_codeword_chi(
    const MixedCode& code, const std::function<void(const std::vector<uint64_t>&)>& fn) {
    const StandardForm& sf = code.standard_form();
    const ChainRing& R = code.spec().R();
    std::size_t k = sf.pivots.size(), n = sf.matrix.cols;
    std::vector<uint64_t> radix(k), coef(k, 0);
    for (std::size_t i = 0; i < k; ++i)
        radix[i] = detail::theta_pow(R, R.m - sf.pivots[i].val);

    std::vector<uint64_t> cur(n, 0);
    for (;;) {
        fn(cur);
        std::size_t i = 0;
        while (i < k && coef[i] + 1 == radix[i]) ++i;
        if (i == k) break;
        ++coef[i];
        if (i == 0) {  // common case: bump by row 0
            for (std::size_t j = 0; j < n; ++j)
                cur[j] = R.add(cur[j], sf.matrix.at(0, j));
        } else {
            for (std::size_t l = 0; l < i; ++l) coef[l] = 0;
            for (std::size_t j = 0; j < n; ++j) {
                uint64_t acc = 0;
                for (std::size_t l = 0; l < k; ++l)
                    acc = R.add(acc, R.mul(coef[l], sf.matrix.at(l, j)));
                cur[j] = acc;
            }
        }
    }
}

inline void check_enumeration_budget(const MixedCode& code, uint64_t max_words) {
    uint64_t words = 1;
    for (unsigned i = 0; i < code.dimension(); ++i) {
        if (words > max_words / code.spec().p())
            throw std::runtime_error("enumeration budget");
        words *= code.spec().p();
    }
}

constexpr uint64_t kDefaultEnumerationBudget = uint64_t{1} << 20;

// The exact codeword set, cardinality p^dim.
inline std::vector<MixedVector> enumerate_codewords(
    const MixedCode& code, uint64_t max_words = kDefaultEnumerationBudget) {
    check_enumeration_budget(code, max_words);
    std::vector<MixedVector> out;
    for_each_codeword_chi(code, [&](const std::vector<uint64_t>& w) {
        out.push_back(psi_vec(code.spec(), w, code.alpha(), code.beta()));
    });
    return out;
}

// Minimum Hamming weight over nonzero codewords.  chi preserves which
// coordinates vanish, so weights are read off the chi-image directly.
// By convention the zero code has minimum distance 0.
inline std::size_t min_distance(const MixedCode& code,
                                uint64_t max_words = kDefaultEnumerationBudget) {
    check_enumeration_budget(code, max_words);
    std::size_t best = 0;
    bool seen = false;
    for_each_codeword_chi(code, [&](const std::vector<uint64_t>& w) {
        std::size_t wt = 0;
        for (uint64_t x : w) wt += x != 0;
        if (wt != 0 && (!seen || wt < best)) {
            best = wt;
            seen = true;
        }
    });
    return seen ? best : 0;
}

// C + D: the span of both generator sets.
inline MixedCode sum_codes(const MixedCode& c, const MixedCode& d) {
    if (!c.same_ambient(d)) throw std::invalid_argument("ambient mismatch");
    std::vector<MixedVector> gens = c.standard_generators();
    for (const MixedVector& g : d.standard_generators()) gens.push_back(g);
    return MixedCode(c.spec(), c.alpha(), c.beta(), std::move(gens));
}

// C-perp = varphi(right kernel of the chi-image), which both annihilates C
// under the mixed inner product and is exactly the annihilator.
inline MixedCode dual(const MixedCode& c) {
    RingMatrix kernel = right_kernel(c.standard_form().matrix);
    std::vector<MixedVector> gens;
    for (std::size_t i = 0; i < kernel.rows; ++i) {
        std::vector<uint64_t> row(kernel.cols);
        for (std::size_t j = 0; j < kernel.cols; ++j) row[j] = kernel.at(i, j);
        gens.push_back(varphi_vec(c.spec(), row, c.alpha(), c.beta()));
    }
    return MixedCode(c.spec(), c.alpha(), c.beta(), std::move(gens));
}

// C intersect D, through the duality (C+D)-perp = C-perp ∩ D-perp applied to
// the duals.
inline MixedCode intersection(const MixedCode& c, const MixedCode& d) {
    if (!c.same_ambient(d)) throw std::invalid_argument("ambient mismatch");
    return dual(sum_codes(dual(c), dual(d)));
}

// Projections onto the two blocks, and products of single-block codes; a
// code is separable when it equals the product of its projections, which
// happens exactly when the dimensions add up.
inline MixedCode projection_r(const MixedCode& c) {
    std::vector<MixedVector> gens;
    for (const MixedVector& g : c.standard_generators())
        gens.emplace_back(c.spec(), g.r_part, std::vector<uint64_t>{});
    return MixedCode(c.spec(), c.alpha(), 0, std::move(gens));
}

inline MixedCode projection_rbar(const MixedCode& c) {
    std::vector<MixedVector> gens;
    for (const MixedVector& g : c.standard_generators())
        gens.emplace_back(c.spec(), std::vector<uint64_t>{}, g.rbar_part);
    return MixedCode(c.spec(), 0, c.beta(), std::move(gens));
}

inline MixedCode product_code(const MixedCode& left, const MixedCode& right) {
    if (!(left.spec() == right.spec()) || left.beta() != 0 || right.alpha() != 0)
        throw std::invalid_argument("product expects an R-only and an Rbar-only code");
    std::vector<MixedVector> gens;
    for (const MixedVector& g : left.standard_generators())
        gens.emplace_back(left.spec(), g.r_part,
                          std::vector<uint64_t>(right.beta(), 0));
    for (const MixedVector& g : right.standard_generators())
        gens.emplace_back(left.spec(), std::vector<uint64_t>(left.alpha(), 0),
                          g.rbar_part);
    return MixedCode(left.spec(), left.alpha(), right.beta(), std::move(gens));
}

inline bool is_separable(const MixedCode& c) {
    return c.dimension() ==
           projection_r(c).dimension() + projection_rbar(c).dimension();
}

// Standard generator matrix of C as a mixed matrix, together with the type.
// The rows are the psi-images of the chi-staircase; the permutation in the
// StandardForm groups pivot columns block-respectingly.
inline std::pair<StandardForm, CodeType> standard_generator_matrix(const MixedCode& c) {
    return {c.standard_form(), c.type()};
}

// Closed-form parity-check matrix for a weakly-free code: with the grouped
// standard form written in the four blocks
//
//     ( I_mu   G11  |  O     G12bar )
//     ( O    t*G21  |  I_rho G22bar )      (t = theta^(s-r))
//
// the dual is generated by
//
//     ( -G11^T       I_(alpha-mu)  | -G21bar^T  O            )
//     ( -t*G12^T     O             | -G22bar^T  I_(beta-rho) )
//
// carried back to the original column order.
inline std::vector<MixedVector> parity_check_weakly_free(const MixedCode& c) {
    if (!c.is_weakly_free())
        throw std::domain_error("parity-check formula requires weakly-free");
    // The block layout additionally needs every positive-valuation pivot to
    // sit in the quotient block (I_rho exists); degenerate codes whose
    // staircase pivots fall back into the R block have no such presentation.
    for (const Pivot& p : c.standard_form().pivots)
        if (p.val != 0 && p.col < c.alpha())
            throw std::domain_error("parity-check formula requires weakly-free");
    if (c.spec().s() == c.spec().r())
        for (const Pivot& p : c.standard_form().pivots)
            if (p.col < c.alpha())
                throw std::domain_error("parity-check formula requires weakly-free");
    const ChainRingSpec& sp = c.spec();
    const ChainRing& R = sp.R();
    const ChainRing& Rbar = sp.Rbar();
    const StandardForm& sf = c.standard_form();
    const std::size_t alpha = c.alpha(), beta = c.beta();
    const unsigned mu = c.type().mu, rho = c.type().rho;

    // Grouped view: grouped(i, j) = staircase entry at original column
    // permutation[j]; rows 0..mu-1 are the valuation-0 block.
    auto grouped = [&](std::size_t i, std::size_t j) {
        return sf.matrix.at(i, sf.permutation[j]);
    };

    const std::size_t h_rows = (alpha - mu) + (beta - rho);
    std::vector<std::vector<uint64_t>> hg(h_rows,
                                          std::vector<uint64_t>(alpha + beta, 0));
    for (std::size_t i = 0; i < alpha - mu; ++i) {
        for (std::size_t t = 0; t < mu; ++t)  // -G11^T
            hg[i][t] = R.neg(grouped(t, mu + i));
        hg[i][mu + i] = 1;  // I_(alpha-mu)
        for (std::size_t t = 0; t < rho; ++t)  // -G21bar^T (psi of the t*G21 entry)
            hg[i][alpha + t] = Rbar.neg(sp.psi_scalar(grouped(mu + t, mu + i)));
    }
    for (std::size_t j = 0; j < beta - rho; ++j) {
        std::size_t i = (alpha - mu) + j;
        for (std::size_t t = 0; t < mu; ++t)  // -t*G12^T = -(chi-image entry)
            hg[i][t] = R.neg(grouped(t, alpha + rho + j));
        for (std::size_t t = 0; t < rho; ++t)  // -G22bar^T
            hg[i][alpha + t] = Rbar.neg(sp.psi_scalar(grouped(mu + t, alpha + rho + j)));
        hg[i][alpha + rho + j] = 1;  // I_(beta-rho)
    }

    // Scatter grouped columns back to original positions and split levels.
    std::vector<MixedVector> rows;
    for (std::size_t i = 0; i < h_rows; ++i) {
        MixedVector v(sp, alpha, beta);
        for (std::size_t j = 0; j < alpha + beta; ++j) {
            std::size_t orig = sf.permutation[j];
            if (orig < alpha) v.r_part[orig] = hg[i][j];
            else v.rbar_part[orig - alpha] = hg[i][j];
        }
        rows.push_back(std::move(v));
    }
    return rows;
}

// One row of a mixed matrix in display form: R entries, a bar separator when
// both blocks are nonempty, then Rbar entries.
inline std::string format_mixed_row(const MixedVector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.alpha(); ++i) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v.r_part[i]);
    }
    if (v.alpha() > 0 && v.beta() > 0) out += " |";
    for (std::size_t j = 0; j < v.beta(); ++j) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v.rbar_part[j]);
    }
    return out;
}

} // namespace chainlcp
