#include <xh/io.hpp>

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

namespace xh
{
    using nlohmann::json;

    namespace
    {
        auto to_json_count(Count value) -> json
        {
            if (value <= std::numeric_limits<std::uint64_t>::max())
                return json(static_cast<std::uint64_t>(value));
            return json(to_string(value));
        }

        auto parse_count(const std::string & text) -> std::optional<Count>
        {
            if (text.empty())
                return std::nullopt;
            Count value = 0;
            for (char c : text) {
                if (c < '0' || c > '9')
                    return std::nullopt;
                value = value * 10 + Count(c - '0');
            }
            return value;
        }

        auto from_json_count(const json & j) -> std::optional<Count>
        {
            if (j.is_number_unsigned())
                return Count(j.get<std::uint64_t>());
            if (j.is_number_integer() && j.get<std::int64_t>() >= 0)
                return Count(j.get<std::int64_t>());
            if (j.is_string())
                return parse_count(j.get<std::string>());
            return std::nullopt;
        }

        auto parse_uint(std::string_view token) -> std::optional<std::uint64_t>
        {
            std::uint64_t value = 0;
            auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || end != token.data() + token.size())
                return std::nullopt;
            return value;
        }

        auto split_tokens(std::string_view line) -> std::vector<std::string_view>
        {
            std::vector<std::string_view> out;
            std::size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                    ++i;
                std::size_t j = i;
                while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
                    ++j;
                if (j > i)
                    out.push_back(line.substr(i, j - i));
                i = j;
            }
            return out;
        }

        auto read_file(const std::filesystem::path & path) -> std::string
        {
            std::ifstream in(path, std::ios::binary);
            if (! in)
                throw ParseError(path.string(), 0, "cannot open file");
            std::ostringstream buffer;
            buffer << in.rdbuf();
            return buffer.str();
        }

        void write_file(const std::filesystem::path & path, const std::string & text)
        {
            std::ofstream out(path, std::ios::binary);
            if (! out)
                throw Error("cannot write " + path.string());
            out << text;
        }

        auto build_checked(unsigned r, std::size_t n, const EdgeList & edges, const std::vector<std::size_t> & lines,
                const std::string & source) -> Hypergraph
        {
            if (r < 2)
                throw ParseError(source, lines.empty() ? 0 : lines.front(), "uniformity must be at least 2");
            try {
                return Hypergraph(r, n, edges);
            } catch (const ConstructionError & e) {
                std::size_t line = e.edge_index() < lines.size() ? lines[e.edge_index()] : 0;
                throw ParseError(source, line, e.what());
            }
        }
    }

    auto parse_hg(std::string_view text, const std::string & source) -> Hypergraph
    {
        std::optional<std::pair<unsigned, std::size_t>> header;
        EdgeList edges;
        std::vector<std::size_t> lines;
        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto end = text.find('\n', pos);
            if (end == std::string_view::npos)
                end = text.size();
            auto line = text.substr(pos, end - pos);
            pos = end + 1;
            ++line_no;
            auto tokens = split_tokens(line);
            if (tokens.empty() || tokens.front().front() == '#')
                continue;
            if (! header) {
                if (tokens.size() != 2)
                    throw ParseError(source, line_no, "expected header \"r n\"");
                auto r = parse_uint(tokens[0]);
                auto n = parse_uint(tokens[1]);
                if (! r || ! n)
                    throw ParseError(source, line_no, "header values must be non-negative integers");
                if (*r < 2)
                    throw ParseError(source, line_no, "uniformity must be at least 2");
                header = std::pair{unsigned(*r), std::size_t(*n)};
                continue;
            }
            if (tokens.size() != header->first)
                throw ParseError(source, line_no, "expected " + std::to_string(header->first) + " vertex ids, got " +
                        std::to_string(tokens.size()));
            VertexSet e;
            for (auto t : tokens) {
                auto v = parse_uint(t);
                if (! v)
                    throw ParseError(source, line_no, "bad vertex id '" + std::string(t) + "'");
                if (*v >= header->second)
                    throw ParseError(source, line_no, "vertex " + std::string(t) + " out of range for n = " +
                            std::to_string(header->second));
                e.push_back(Vertex(*v));
            }
            edges.push_back(std::move(e));
            lines.push_back(line_no);
        }
        if (! header)
            throw ParseError(source, line_no, "missing header \"r n\"");
        return build_checked(header->first, header->second, edges, lines, source);
    }

    auto format_hg(const Hypergraph & h) -> std::string
    {
        std::string out = std::to_string(h.uniformity()) + " " + std::to_string(h.order()) + "\n";
        for (auto e : h.edges()) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (i)
                    out += ' ';
                out += std::to_string(e[i]);
            }
            out += '\n';
        }
        return out;
    }

    auto parse_hypergraph_json(std::string_view text, const std::string & source) -> Hypergraph
    {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error & e) {
            throw ParseError(source, 0, e.what());
        }
        if (! j.is_object() || ! j.contains("r") || ! j.contains("n") || ! j.contains("edges"))
            throw ParseError(source, 0, "expected an object with keys r, n, edges");
        if (! j["r"].is_number_unsigned() || ! j["n"].is_number_unsigned() || ! j["edges"].is_array())
            throw ParseError(source, 0, "r and n must be non-negative integers and edges an array");
        auto r = j["r"].get<unsigned>();
        auto n = j["n"].get<std::size_t>();
        EdgeList edges;
        std::vector<std::size_t> lines;
        for (const auto & e : j["edges"]) {
            if (! e.is_array() || e.size() != r)
                throw ParseError(source, 0, "edge " + std::to_string(edges.size()) + " does not have " + std::to_string(r) + " ids");
            VertexSet vs;
            for (const auto & v : e) {
                if (! v.is_number_unsigned() || v.get<std::uint64_t>() >= n)
                    throw ParseError(source, 0, "edge " + std::to_string(edges.size()) + " has a bad vertex id");
                vs.push_back(v.get<Vertex>());
            }
            edges.push_back(std::move(vs));
            lines.push_back(0);
        }
        return build_checked(r, n, edges, lines, source);
    }

    auto format_hypergraph_json(const Hypergraph & h) -> std::string
    {
        json edges = json::array();
        for (auto e : h.edges())
            edges.push_back(std::vector<Vertex>(e.begin(), e.end()));
        return json{{"r", h.uniformity()}, {"n", h.order()}, {"edges", edges}}.dump();
    }

    auto read_hypergraph(const std::filesystem::path & path) -> Hypergraph
    {
        auto text = read_file(path);
        if (path.extension() == ".json")
            return parse_hypergraph_json(text, path.string());
        return parse_hg(text, path.string());
    }

    void write_hypergraph(const std::filesystem::path & path, const Hypergraph & h)
    {
        write_file(path, path.extension() == ".json" ? format_hypergraph_json(h) + "\n" : format_hg(h));
    }

    auto format_polynomial_json(const LagrangePolynomial & p) -> std::string
    {
        json terms = json::array();
        for (const auto & t : p.terms())
            terms.push_back({{"exp", t.exponents}, {"coef", to_json_count(t.coefficient)}});
        return json{{"degree", p.degree()}, {"num_vars", p.num_vars()}, {"terms", terms}}.dump();
    }

    auto parse_polynomial_json(std::string_view text, const std::string & source) -> LagrangePolynomial
    {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error & e) {
            throw ParseError(source, 0, e.what());
        }
        if (! j.is_object() || ! j.contains("degree") || ! j.contains("num_vars") || ! j.contains("terms"))
            throw ParseError(source, 0, "expected an object with keys degree, num_vars, terms");
        std::vector<LagrangePolynomial::Term> terms;
        try {
            for (const auto & t : j["terms"]) {
                auto coef = from_json_count(t.at("coef"));
                if (! coef)
                    throw ParseError(source, 0, "bad coefficient");
                terms.push_back({t.at("exp").get<std::vector<std::uint32_t>>(), *coef});
            }
            return LagrangePolynomial(j["num_vars"].get<std::size_t>(), j["degree"].get<std::size_t>(), std::move(terms));
        } catch (const json::exception & e) {
            throw ParseError(source, 0, e.what());
        }
    }

    auto format_trace_json(const SymmetrizationResult & result) -> std::string
    {
        json steps = json::array();
        for (const auto & s : result.steps)
            steps.push_back({
                    {"pair", {s.u, s.v}},
                    {"dir", s.forward ? "u→v" : "v→u"},
                    {"gamma_before", to_json_count(s.gamma_before)},
                    {"gamma_after", to_json_count(s.gamma_after)},
                    {"psi_before", s.psi_before},
                    {"psi_after", s.psi_after},
            });
        json out{{"status", to_string(result.status)}, {"steps", steps}};
        if (result.stuck_pair)
            out["stuck_pair"] = {result.stuck_pair->first, result.stuck_pair->second};
        return out.dump(2);
    }

    auto parse_family(std::string_view spec, const std::filesystem::path & base_dir) -> ForbiddenFamily
    {
        auto resolve = [&](std::string_view p) {
            std::filesystem::path path{std::string(p)};
            return path.is_relative() && ! base_dir.empty() ? base_dir / path : path;
        };
        auto colon = spec.find(':');
        if (colon == std::string_view::npos)
            throw ParseError(std::string(spec), 0, "family spec needs a kind prefix (list:, expansion:, weakexp:)");
        auto kind = spec.substr(0, colon);
        auto rest = spec.substr(colon + 1);

        if (kind == "list") {
            std::vector<Pattern> patterns;
            while (! rest.empty()) {
                auto comma = rest.find(',');
                auto item = rest.substr(0, comma);
                if (! item.empty())
                    patterns.emplace_back(read_hypergraph(resolve(item)));
                rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
            }
            return ForbiddenFamily::list(std::move(patterns));
        }

        auto last = rest.rfind(':');
        if (last == std::string_view::npos)
            throw ParseError(std::string(spec), 0, "expected " + std::string(kind) + ":<arg>:<r>");
        auto r = parse_uint(rest.substr(last + 1));
        if (! r || *r < 2)
            throw ParseError(std::string(spec), 0, "bad uniformity '" + std::string(rest.substr(last + 1)) + "'");
        auto arg = rest.substr(0, last);
        if (kind == "expansion")
            return ForbiddenFamily::expansion(read_hypergraph(resolve(arg)), unsigned(*r));
        if (kind == "weakexp") {
            auto core = parse_uint(arg);
            if (! core)
                throw ParseError(std::string(spec), 0, "bad core order '" + std::string(arg) + "'");
            return ForbiddenFamily::weak_expansion(std::size_t(*core), unsigned(*r));
        }
        throw ParseError(std::string(spec), 0, "unknown family kind '" + std::string(kind) + "'");
    }

    auto csv_field(std::string_view field) -> std::string
    {
        if (field.find_first_of(",\"\r\n") == std::string_view::npos)
            return std::string(field);
        std::string out = "\"";
        for (char c : field) {
            if (c == '"')
                out += '"';
            out += c;
        }
        out += '"';
        return out;
    }

    auto csv_row(const std::vector<std::string> & fields) -> std::string
    {
        std::string out;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i)
                out += ',';
            out += csv_field(fields[i]);
        }
        return out + "\r\n";
    }

    auto format_pentagon_csv(const std::vector<PentagonRow> & rows) -> std::string
    {
        std::string out = csv_row({"n", "formula_value", "brute_value", "construction_value", "match"});
        for (const auto & row : rows)
            out += csv_row({std::to_string(row.n), to_string(row.formula_value),
                    row.brute_value ? to_string(*row.brute_value) : "", to_string(row.construction_value),
                    row.match ? "true" : "false"});
        return out;
    }

    auto write_witnesses(const std::filesystem::path & dir, const std::vector<Hypergraph> & hosts)
        -> std::vector<std::filesystem::path>
    {
        std::filesystem::create_directories(dir);
        std::vector<std::filesystem::path> out;
        for (std::size_t i = 0; i < hosts.size(); ++i) {
            auto path = dir / ("witness_" + std::to_string(i) + ".hg");
            write_hypergraph(path, hosts[i]);
            out.push_back(path);
        }
        return out;
    }
}
