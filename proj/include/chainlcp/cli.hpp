#pragma once

// Command-line driver.  Every library capability is exposed as a batch
// subcommand over .code files; all output goes through the supplied streams
// so the whole surface is testable in-process.
//
// Exit codes: 0 success; 1 mathematical negative (not LCP, no witness, a
// failed verification battery) when --strict is set; 2 malformed input or
// violated precondition.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "codefile.hpp"
#include "group.hpp"
#include "lcp.hpp"
#include "mixed.hpp"
#include "oracle.hpp"

namespace chainlcp {

namespace detail {

inline void print_code_text(std::ostream& out, const MixedCode& c) {
    for (const MixedVector& g : c.standard_generators())
        out << format_mixed_row(g) << "\n";
    out << "type: " << c.type().to_string() << "\n";
}

inline void print_code(std::ostream& out, const MixedCode& c, const std::string& format,
                       std::optional<std::vector<uint64_t>> h = {},
                       std::optional<std::vector<uint64_t>> k = {}) {
    if (format == "structured")
        out << serialize_code_file(make_code_file(c, std::move(h), std::move(k)));
    else
        print_code_text(out, c);
}

inline GroupSpec group_from(const std::optional<std::vector<uint64_t>>& factors,
                            const char* which) {
    if (!factors)
        throw std::invalid_argument(std::string("file does not declare groups ") +
                                    which);
    return GroupSpec(*factors);
}

inline MixedVector random_vector(const ChainRingSpec& sp, std::size_t alpha,
                                 std::size_t beta, std::mt19937_64& rng) {
    MixedVector v(sp, alpha, beta);
    for (uint64_t& x : v.r_part) x = rng() % sp.R().modulus;
    for (uint64_t& x : v.rbar_part) x = rng() % sp.Rbar().modulus;
    return v;
}

inline MixedCode random_code(const ChainRingSpec& sp, std::size_t alpha,
                             std::size_t beta, std::mt19937_64& rng) {
    std::vector<MixedVector> gens;
    std::size_t count = 1 + rng() % 3;
    for (std::size_t i = 0; i < count; ++i)
        gens.push_back(random_vector(sp, alpha, beta, rng));
    return MixedCode(sp, alpha, beta, std::move(gens));
}

} // namespace detail

// Brute-force validation battery behind the `verify` subcommand: definitional
// oracles against the optimized paths, plus the exhaustive scalar-map
// identities.  Deterministic for a fixed seed.
inline std::vector<OracleReport> run_verification_suite(std::ostream& out, uint64_t seed,
                                                        uint64_t trials = 40) {
    std::vector<OracleReport> reports;
    const std::vector<ChainRingSpec> specs = {
        ChainRingSpec(2, 2, 1), ChainRingSpec(2, 3, 2), ChainRingSpec(3, 2, 1)};

    {
        OracleReport rep{"scalar maps: pi/iota/chi/psi identities and digits"};
        for (const ChainRingSpec& sp : specs) {
            const uint64_t qs = sp.R().modulus, qr = sp.Rbar().modulus;
            const uint64_t theta = sp.theta_power_sr();
            for (uint64_t x = 0; x < qr; ++x) {
                rep.note(sp.pi_scalar(sp.iota_scalar(x)) == x,
                         "pi(iota(x)) != x at x=" + std::to_string(x));
                rep.note(sp.psi_scalar(sp.chi_scalar(x)) == x,
                         "psi(chi(x)) != x at x=" + std::to_string(x));
            }
            for (uint64_t u = 0; u < qs; ++u) {
                rep.note(sp.R().mul(theta, sp.iota_scalar(sp.pi_scalar(u))) ==
                             sp.R().mul(theta, u),
                         "theta*iota(pi(u)) != theta*u at u=" + std::to_string(u));
                std::vector<uint64_t> digits = sp.R().digit_classes(u);
                uint64_t rebuilt = 0, pw = 1;
                for (uint64_t d : digits) {
                    rebuilt = sp.R().add(rebuilt, sp.R().mul(sp.R().teich_lift(d), pw));
                    pw = sp.R().mul(pw, sp.p());
                }
                rep.note(rebuilt == u, "digit reconstruction at u=" + std::to_string(u));
            }
            for (uint64_t u = 0; u < qs; ++u)
                for (uint64_t v = 0; v < qs; ++v)
                    rep.note(sp.chi_scalar(sp.pi_scalar(sp.R().mul(u, v))) ==
                                 sp.R().mul(sp.chi_scalar(sp.pi_scalar(u)),
                                            sp.iota_scalar(sp.pi_scalar(v))),
                             "product rule at u=" + std::to_string(u) +
                                 ", v=" + std::to_string(v));
        }
        reports.push_back(std::move(rep));
    }

    {
        OracleReport rep{"span: staircase enumeration equals definitional closure"};
        std::mt19937_64 rng(seed);
        for (const ChainRingSpec& sp : specs)
            for (uint64_t t = 0; t < trials; ++t) {
                MixedCode c = detail::random_code(sp, 2, 2, rng);
                std::vector<MixedVector> words = enumerate_codewords(c);
                std::set<MixedVector> fast(words.begin(), words.end());
                rep.note(fast == span_closure(c),
                         "span mismatch, ring (" + std::to_string(sp.p()) + "," +
                             std::to_string(sp.s()) + "," + std::to_string(sp.r()) +
                             ") trial " + std::to_string(t));
            }
        reports.push_back(std::move(rep));
    }

    {
        OracleReport rep{"dual: kernel construction equals ambient scan"};
        std::mt19937_64 rng(seed + 1);
        for (const ChainRingSpec& sp : specs)
            for (uint64_t t = 0; t < trials; ++t) {
                MixedCode c = detail::random_code(sp, 2, 2, rng);
                std::vector<MixedVector> words = enumerate_codewords(dual(c));
                std::set<MixedVector> fast(words.begin(), words.end());
                rep.note(fast == oracle_dual(c),
                         "dual mismatch, ring (" + std::to_string(sp.p()) + "," +
                             std::to_string(sp.s()) + "," + std::to_string(sp.r()) +
                             ") trial " + std::to_string(t));
            }
        reports.push_back(std::move(rep));
    }

    {
        OracleReport rep{"lcp: stacked-matrix criterion equals direct-sum bijection"};
        std::mt19937_64 rng(seed + 2);
        for (const ChainRingSpec& sp : specs)
            for (uint64_t t = 0; t < trials; ++t) {
                MixedCode c = random_weakly_free(sp, 2, 2, rng);
                MixedCode d = random_weakly_free(sp, 2, 2, rng);
                rep.note(is_lcp(c, d).is_lcp == oracle_direct_sum(c, d),
                         "lcp mismatch, ring (" + std::to_string(sp.p()) + "," +
                             std::to_string(sp.s()) + "," + std::to_string(sp.r()) +
                             ") trial " + std::to_string(t));
            }
        reports.push_back(std::move(rep));
    }

    for (const OracleReport& rep : reports) {
        out << (rep.failures == 0 ? "[ok]  " : "[FAIL] ") << rep.checked << ": "
            << rep.instances << " instances, " << rep.failures << " failures\n";
        if (rep.first_failure) out << "       first failure: " << *rep.first_failure << "\n";
    }
    return reports;
}

// args = argv[1..]; returns the process exit code.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"mixed-alphabet linear codes over chain rings: standard forms, "
                 "duality, complementary pairs, group codes"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may appear after the subcommand

    std::string format = "text";
    uint64_t budget = 0;  // 0 = per-command default
    uint64_t seed = 0;
    bool strict = false;
    bool math_negative = false;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
    app.add_option("--budget", budget, "enumeration / search budget (0 = default)");
    app.add_option("--seed", seed, "random seed");
    app.add_flag("--strict", strict, "exit 1 on a mathematical negative");

    auto budget_or = [&budget](uint64_t fallback) { return budget ? budget : fallback; };
    auto add_inputs = [](CLI::App* sub, std::vector<std::string>& positional,
                         std::vector<std::string>& named, std::size_t count) {
        sub->add_option("files", positional, "input .code files")
            ->expected(0, static_cast<int>(count));
        sub->add_option("--input", named, "input .code file (repeatable)");
    };
    auto resolve_inputs = [](const std::vector<std::string>& positional,
                             const std::vector<std::string>& named, std::size_t count) {
        std::vector<std::string> paths = positional;
        paths.insert(paths.end(), named.begin(), named.end());
        if (paths.size() != count)
            throw std::invalid_argument("expected " + std::to_string(count) +
                                        " input file(s), got " +
                                        std::to_string(paths.size()));
        return paths;
    };

    // ---- single-file commands ------------------------------------------
    struct FileCmd {
        const char* name;
        const char* help;
        std::function<void(const CodeFile&, const MixedCode&)> run;
    };
    std::vector<FileCmd> file_cmds = {
        {"standard-form",
         "row-reduce the generators to the standard staircase form",
         [&](const CodeFile&, const MixedCode& c) {
             if (format == "structured") {
                 detail::print_code(out, c, format);
                 return;
             }
             for (const MixedVector& g : c.standard_generators())
                 out << format_mixed_row(g) << "\n";
             out << "permutation:";
             for (std::size_t j : c.standard_form().permutation) out << ' ' << j;
             out << "\n"
                 << "type: " << c.type().to_string() << "\n";
         }},
        {"type", "print the type tuple of the code",
         [&](const CodeFile&, const MixedCode& c) {
             out << c.type().to_string() << "\n";
         }},
        {"dual", "print generators of the dual code",
         [&](const CodeFile&, const MixedCode& c) {
             detail::print_code(out, dual(c), format);
         }},
        {"parity-check", "closed-form parity-check matrix (weakly-free codes)",
         [&](const CodeFile& cf, const MixedCode& c) {
             std::vector<MixedVector> rows = parity_check_weakly_free(c);
             if (format == "structured") {
                 CodeFile pf;
                 pf.p = cf.p;
                 pf.s = cf.s;
                 pf.r = cf.r;
                 pf.alpha = cf.alpha;
                 pf.beta = cf.beta;
                 for (const MixedVector& h : rows) {
                     std::vector<long long> row(h.r_part.begin(), h.r_part.end());
                     row.insert(row.end(), h.rbar_part.begin(), h.rbar_part.end());
                     pf.rows.push_back(std::move(row));
                 }
                 out << serialize_code_file(pf);
             } else {
                 for (const MixedVector& h : rows) out << format_mixed_row(h) << "\n";
             }
         }},
        {"enumerate", "list every codeword",
         [&](const CodeFile&, const MixedCode& c) {
             std::vector<MixedVector> words =
                 enumerate_codewords(c, budget_or(kDefaultEnumerationBudget));
             std::sort(words.begin(), words.end());
             out << "codewords " << words.size() << "\n";
             for (const MixedVector& w : words) out << format_mixed_row(w) << "\n";
         }},
        {"min-distance", "minimum Hamming weight of a nonzero codeword",
         [&](const CodeFile&, const MixedCode& c) {
             out << min_distance(c, budget_or(kDefaultEnumerationBudget)) << "\n";
         }},
    };
    for (FileCmd& cmd : file_cmds) {
        CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
        auto positional = std::make_shared<std::vector<std::string>>();
        auto named = std::make_shared<std::vector<std::string>>();
        add_inputs(sub, *positional, *named, 1);
        sub->callback([&, positional, named, run = cmd.run]() {
            std::string path = resolve_inputs(*positional, *named, 1)[0];
            CodeFile cf = load_code_file(path);
            run(cf, cf.to_code());
        });
    }

    // ---- lcp ------------------------------------------------------------
    CLI::App* lcp_cmd = app.add_subcommand("lcp", "complementary-pair commands");
    lcp_cmd->require_subcommand(1);
    {
        CLI::App* sub = lcp_cmd->add_subcommand(
            "check", "decide whether two codes form a complementary pair");
        auto positional = std::make_shared<std::vector<std::string>>();
        auto named = std::make_shared<std::vector<std::string>>();
        add_inputs(sub, *positional, *named, 2);
        sub->callback([&, positional, named]() {
            auto paths = resolve_inputs(*positional, *named, 2);
            LcpVerdict v = is_lcp(load_code_file(paths[0]).to_code(),
                                  load_code_file(paths[1]).to_code());
            out << "verdict: " << lcp_reason_name(v.reason) << "\n"
                << "stacked dimension: " << v.stacked_dim << "\n"
                << "ambient dimension: " << v.ambient_dim << "\n";
            if (!v.is_lcp) math_negative = true;
        });
    }
    {
        CLI::App* sub = lcp_cmd->add_subcommand(
            "security", "min distance of C and of the dual of D");
        auto positional = std::make_shared<std::vector<std::string>>();
        auto named = std::make_shared<std::vector<std::string>>();
        add_inputs(sub, *positional, *named, 2);
        sub->callback([&, positional, named]() {
            auto paths = resolve_inputs(*positional, *named, 2);
            out << security_parameter(load_code_file(paths[0]).to_code(),
                                      load_code_file(paths[1]).to_code(),
                                      budget_or(kDefaultEnumerationBudget))
                << "\n";
        });
    }
    {
        CLI::App* sub = lcp_cmd->add_subcommand(
            "search", "randomized search for complementary pairs");
        auto p = std::make_shared<uint64_t>(0);
        auto s = std::make_shared<unsigned>(0);
        auto r = std::make_shared<unsigned>(0);
        auto alpha = std::make_shared<std::size_t>(0);
        auto beta = std::make_shared<std::size_t>(0);
        sub->add_option("--p", *p, "prime")->required();
        sub->add_option("--s", *s, "nilpotency index")->required();
        sub->add_option("--r", *r, "quotient exponent")->required();
        sub->add_option("--alpha", *alpha, "R-block length")->required();
        sub->add_option("--beta", *beta, "quotient-block length")->required();
        sub->callback([&, p, s, r, alpha, beta]() {
            ChainRingSpec sp(*p, *s, *r);
            std::vector<LcpSearchHit> hits =
                lcp_search(sp, *alpha, *beta, budget_or(100), seed);
            out << "hits " << hits.size() << "\n";
            for (std::size_t i = 0; i < hits.size(); ++i) {
                out << "hit " << i + 1 << " security " << hits[i].security << "\n";
                for (const MixedVector& g : hits[i].c.standard_generators())
                    out << "C " << format_mixed_row(g) << "\n";
                for (const MixedVector& g : hits[i].d.standard_generators())
                    out << "D " << format_mixed_row(g) << "\n";
            }
            if (hits.empty()) math_negative = true;
        });
    }

    // ---- group ----------------------------------------------------------
    CLI::App* group_cmd = app.add_subcommand("group", "group-code commands");
    group_cmd->require_subcommand(1);
    {
        CLI::App* sub = group_cmd->add_subcommand(
            "ideal", "close the generators under the declared group shifts");
        auto positional = std::make_shared<std::vector<std::string>>();
        auto named = std::make_shared<std::vector<std::string>>();
        add_inputs(sub, *positional, *named, 1);
        sub->callback([&, positional, named]() {
            std::string path = resolve_inputs(*positional, *named, 1)[0];
            CodeFile cf = load_code_file(path);
            GroupSpec h = detail::group_from(cf.h_factors, "H");
            GroupSpec k = detail::group_from(cf.k_factors, "K");
            MixedCode seeded = cf.to_code();
            MixedCode ideal =
                ideal_generated(seeded.spec(), seeded.generators(), h, k);
            detail::print_code(out, ideal, format, cf.h_factors, cf.k_factors);
        });
    }
    {
        CLI::App* sub = group_cmd->add_subcommand(
            "check-equivalence",
            "find block permutations matching the dual of the second code to the first");
        auto positional = std::make_shared<std::vector<std::string>>();
        auto named = std::make_shared<std::vector<std::string>>();
        add_inputs(sub, *positional, *named, 2);
        sub->callback([&, positional, named]() {
            auto paths = resolve_inputs(*positional, *named, 2);
            CodeFile fa = load_code_file(paths[0]);
            CodeFile fb = load_code_file(paths[1]);
            if (fa.h_factors != fb.h_factors || fa.k_factors != fb.k_factors)
                throw std::invalid_argument(
                    "group specifications differ between the two files");
            GroupSpec h = detail::group_from(fa.h_factors, "H");
            GroupSpec k = detail::group_from(fa.k_factors, "K");
            auto witness = verify_equivalence_theorem(fa.to_code(), fb.to_code(), h, k,
                                                      budget_or(1000000));
            if (!witness) {
                out << "no witness\n";
                math_negative = true;
                return;
            }
            out << "witness found\npermutation R:";
            for (std::size_t j : witness->first) out << ' ' << j;
            out << "\npermutation Rbar:";
            for (std::size_t j : witness->second) out << ' ' << j;
            out << "\n";
        });
    }

    // ---- verify -----------------------------------------------------------
    {
        CLI::App* sub = app.add_subcommand(
            "verify", "run the brute-force validation batteries");
        sub->callback([&]() {
            auto reports = run_verification_suite(out, seed, budget_or(40));
            for (const OracleReport& rep : reports)
                if (rep.failures) math_negative = true;
            out << (math_negative ? "verification FAILED\n" : "all checks passed\n");
        });
    }

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return strict && math_negative ? 1 : 0;
}

} // namespace chainlcp
