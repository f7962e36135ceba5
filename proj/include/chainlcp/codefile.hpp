#pragma once

// The .code file format: a diff-able structured text description of a mixed
// code.  Named integer fields, then the generator rows (one per line, with
// an optional `|` between the R block and the quotient block), optionally
// followed by group invariant factors for group-code commands.
//
//   # a comment
//   p 2
//   s 3
//   r 2
//   alpha 4
//   beta 3
//   rows 2
//   7 6 5 4 | 1 2 3
//   6 4 0 2 | 2 0 1
//   groups H 2
//   groups K 2
//
// `groups H` / `groups K` list invariant factors (empty list = trivial
// group); when present, the group orders must match alpha and beta.

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mixed.hpp"

namespace chainlcp {

// Parse failure with the 1-based source line (0 = whole-file problem).
struct CodeFileError : std::invalid_argument {
    CodeFileError(std::size_t line, const std::string& message)
        : std::invalid_argument(line == 0 ? message
                                          : "line " + std::to_string(line) + ": " +
                                                message),
          line_number(line) {}
    std::size_t line_number;
};

struct CodeFile {
    uint64_t p = 0;
    unsigned s = 0;
    unsigned r = 0;
    std::size_t alpha = 0;
    std::size_t beta = 0;
    std::vector<std::vector<long long>> rows;
    std::optional<std::vector<uint64_t>> h_factors;  // R-block group
    std::optional<std::vector<uint64_t>> k_factors;  // quotient-block group

    ChainRingSpec ring_spec() const { return ChainRingSpec(p, s, r); }

    MixedCode to_code() const {
        return MixedCode::from_rows(ring_spec(), alpha, beta, rows);
    }
};

namespace detail {

inline std::vector<std::string> code_file_tokens(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream in(body);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

inline uint64_t parse_unsigned_field(const std::string& tok, std::size_t line,
                                     const std::string& field) {
    try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(tok, &used);
        if (used != tok.size() || tok[0] == '-') throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw CodeFileError(line, "field '" + field + "' expects a nonnegative integer, got '" + tok + "'");
    }
}

inline long long parse_entry(const std::string& tok, std::size_t line) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw CodeFileError(line, "matrix entry expects an integer, got '" + tok + "'");
    }
}

} // namespace detail

inline CodeFile parse_code_file(const std::string& text) {
    CodeFile f;
    bool seen_p = false, seen_s = false, seen_r = false;
    bool seen_alpha = false, seen_beta = false, seen_rows = false;
    std::size_t rows_expected = 0, rows_line = 0;
    std::size_t p_line = 1, s_line = 1, r_line = 1, shape_line = 1;

    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    auto take_scalar = [&](const std::vector<std::string>& toks, bool& seen,
                           const std::string& name) {
        if (seen) throw CodeFileError(lineno, "duplicate field '" + name + "'");
        if (toks.size() != 2)
            throw CodeFileError(lineno, "field '" + name + "' expects one value");
        seen = true;
        return detail::parse_unsigned_field(toks[1], lineno, name);
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> toks = detail::code_file_tokens(line);
        if (toks.empty()) continue;

        if (seen_rows && f.rows.size() < rows_expected) {
            std::vector<long long> row;
            for (const std::string& t : toks) {
                if (t == "|") continue;
                row.push_back(detail::parse_entry(t, lineno));
            }
            if (seen_alpha && seen_beta && row.size() != f.alpha + f.beta)
                throw CodeFileError(lineno, "row has " + std::to_string(row.size()) +
                                                " entries, expected " +
                                                std::to_string(f.alpha + f.beta));
            f.rows.push_back(std::move(row));
            continue;
        }

        const std::string& key = toks[0];
        if (key == "p") {
            f.p = take_scalar(toks, seen_p, "p");
            p_line = lineno;
        } else if (key == "s") {
            f.s = static_cast<unsigned>(take_scalar(toks, seen_s, "s"));
            s_line = lineno;
        } else if (key == "r") {
            f.r = static_cast<unsigned>(take_scalar(toks, seen_r, "r"));
            r_line = lineno;
        } else if (key == "alpha") {
            f.alpha = take_scalar(toks, seen_alpha, "alpha");
            shape_line = lineno;
        } else if (key == "beta") {
            f.beta = take_scalar(toks, seen_beta, "beta");
            shape_line = lineno;
        } else if (key == "rows") {
            rows_expected = take_scalar(toks, seen_rows, "rows");
            rows_line = lineno;
        } else if (key == "groups") {
            if (toks.size() < 2 || (toks[1] != "H" && toks[1] != "K"))
                throw CodeFileError(lineno, "groups line expects 'H' or 'K'");
            std::vector<uint64_t> factors;
            for (std::size_t i = 2; i < toks.size(); ++i) {
                uint64_t d = detail::parse_unsigned_field(toks[i], lineno, "groups");
                if (d < 2)
                    throw CodeFileError(lineno, "invariant factors must be at least 2");
                factors.push_back(d);
            }
            auto& slot = toks[1] == "H" ? f.h_factors : f.k_factors;
            if (slot)
                throw CodeFileError(lineno, std::string("duplicate groups ") + toks[1]);
            slot = std::move(factors);
        } else {
            throw CodeFileError(lineno, "unknown field '" + key + "'");
        }
    }

    for (auto [seen, name] : {std::pair{seen_p, "p"}, {seen_s, "s"}, {seen_r, "r"},
                              {seen_alpha, "alpha"}, {seen_beta, "beta"},
                              {seen_rows, "rows"}})
        if (!seen) throw CodeFileError(0, std::string("missing field '") + name + "'");
    if (f.rows.size() != rows_expected)
        throw CodeFileError(rows_line, "expected " + std::to_string(rows_expected) +
                                           " rows, found " +
                                           std::to_string(f.rows.size()));
    // Validate the ring parameters in stages so the diagnostic lands on the
    // field that introduced the problem.
    try {
        (void)ChainRing(f.p, 1);
    } catch (const std::invalid_argument& e) {
        throw CodeFileError(p_line, e.what());
    }
    try {
        (void)ChainRing(f.p, f.s);
    } catch (const std::invalid_argument& e) {
        throw CodeFileError(s_line, e.what());
    }
    try {
        (void)f.ring_spec();
    } catch (const std::invalid_argument& e) {
        throw CodeFileError(r_line, e.what());
    }
    for (std::size_t i = 0; i < f.rows.size(); ++i)
        if (f.rows[i].size() != f.alpha + f.beta)
            throw CodeFileError(shape_line,
                                "row " + std::to_string(i + 1) + " has " +
                                    std::to_string(f.rows[i].size()) +
                                    " entries, expected " +
                                    std::to_string(f.alpha + f.beta));

    auto group_order = [](const std::vector<uint64_t>& factors) {
        uint64_t n = 1;
        for (uint64_t d : factors) n *= d;
        return n;
    };
    if (f.h_factors && group_order(*f.h_factors) != f.alpha)
        throw CodeFileError(0, "group H order does not match alpha");
    if (f.k_factors && group_order(*f.k_factors) != f.beta)
        throw CodeFileError(0, "group K order does not match beta");
    return f;
}

inline CodeFile load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CodeFileError(0, "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_code_file(buf.str());
}

inline CodeFile make_code_file(const MixedCode& c,
                               std::optional<std::vector<uint64_t>> h_factors = {},
                               std::optional<std::vector<uint64_t>> k_factors = {}) {
    CodeFile f;
    f.p = c.spec().p();
    f.s = c.spec().s();
    f.r = c.spec().r();
    f.alpha = c.alpha();
    f.beta = c.beta();
    for (const MixedVector& g : c.standard_generators()) {
        std::vector<long long> row;
        for (uint64_t x : g.r_part) row.push_back(static_cast<long long>(x));
        for (uint64_t x : g.rbar_part) row.push_back(static_cast<long long>(x));
        f.rows.push_back(std::move(row));
    }
    f.h_factors = std::move(h_factors);
    f.k_factors = std::move(k_factors);
    return f;
}

inline std::string serialize_code_file(const CodeFile& f) {
    std::ostringstream out;
    out << "p " << f.p << "\n"
        << "s " << f.s << "\n"
        << "r " << f.r << "\n"
        << "alpha " << f.alpha << "\n"
        << "beta " << f.beta << "\n"
        << "rows " << f.rows.size() << "\n";
    for (const auto& row : f.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out << ' ';
            if (j == f.alpha && f.alpha > 0 && f.beta > 0) out << "| ";
            out << row[j];
        }
        out << "\n";
    }
    for (auto [factors, name] :
         {std::pair{&f.h_factors, 'H'}, {&f.k_factors, 'K'}}) {
        if (!*factors) continue;
        out << "groups " << name;
        for (uint64_t d : **factors) out << ' ' << d;
        out << "\n";
    }
    return out.str();
}

} // namespace chainlcp
