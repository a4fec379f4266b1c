#pragma once

#include <xh/forbid.hpp>
#include <xh/hypergraph.hpp>
#include <xh/lagopt.hpp>
#include <xh/symlab.hpp>
#include <xh/xsearch.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace xh
{
    /// ".hg" text: the first non-comment line is "r n", then one edge per line
    /// as r 0-based vertex ids. Lines starting with '#' and blank lines are skipped.
    auto parse_hg(std::string_view text, const std::string & source = "<string>") -> Hypergraph;
    auto format_hg(const Hypergraph & h) -> std::string;

    /// {"r": int, "n": int, "edges": [[int, ...], ...]}
    auto parse_hypergraph_json(std::string_view text, const std::string & source = "<string>") -> Hypergraph;
    auto format_hypergraph_json(const Hypergraph & h) -> std::string;

    /// Picks the format from the extension: ".json" is JSON, anything else ".hg".
    auto read_hypergraph(const std::filesystem::path & path) -> Hypergraph;
    void write_hypergraph(const std::filesystem::path & path, const Hypergraph & h);

    /// {"degree": d, "num_vars": m, "terms": [{"exp": [...], "coef": c}, ...]}
    auto format_polynomial_json(const LagrangePolynomial & p) -> std::string;
    auto parse_polynomial_json(std::string_view text, const std::string & source = "<string>") -> LagrangePolynomial;

    /// One object per step: {"pair": [u, v], "dir": "u→v" | "v→u", "gamma_before", ...}.
    auto format_trace_json(const SymmetrizationResult & result) -> std::string;

    /// "list:a.hg,b.hg", "expansion:F.hg:r" or "weakexp:L:r". Relative paths
    /// resolve against base_dir.
    auto parse_family(std::string_view spec, const std::filesystem::path & base_dir = {}) -> ForbiddenFamily;

    /// RFC 4180: fields holding a comma, quote or line break are quoted.
    auto csv_field(std::string_view field) -> std::string;
    auto csv_row(const std::vector<std::string> & fields) -> std::string;
    auto format_pentagon_csv(const std::vector<PentagonRow> & rows) -> std::string;

    /// Writes witness_<i>.hg files into dir (created if needed); returns the paths.
    auto write_witnesses(const std::filesystem::path & dir, const std::vector<Hypergraph> & hosts)
        -> std::vector<std::filesystem::path>;
}
