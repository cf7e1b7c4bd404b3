#include "contractk/io.hpp"

#include "contractk/errors.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace contractk {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

/// Non-blank, non-comment lines split on whitespace.
auto content_lines(std::istream & in) -> std::vector<Line>
{
    std::vector<Line> out;
    std::string text;
    std::size_t number = 0;
    while (std::getline(in, text)) {
        ++number;
        if (!text.empty() && text.back() == '\r')
            text.pop_back();
        std::istringstream ss(text);
        Line line{number, {}};
        for (std::string tok; ss >> tok;)
            line.tokens.push_back(tok);
        if (line.tokens.empty() || line.tokens[0] == "c")
            continue;
        out.push_back(std::move(line));
    }
    return out;
}

auto number(const Line & line, std::size_t i) -> std::uint64_t
{
    const auto & tok = line.tokens[i];
    std::uint64_t value = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || end != tok.data() + tok.size())
        throw ParseError(line.number, "expected a non-negative integer, got '" + tok + "'");
    return value;
}

void expect_arity(const Line & line, std::size_t count, const char * shape)
{
    if (line.tokens.size() != count)
        throw ParseError(line.number, std::string("expected '") + shape + "'");
}

/// Header check shared by both formats; returns the parsed numeric fields.
auto header(const std::vector<Line> & lines, const std::string & kind, std::size_t fields, const char * shape)
    -> std::vector<std::uint64_t>
{
    if (lines.empty())
        throw ParseError(1, std::string("missing header '") + shape + "'");
    const auto & h = lines.front();
    if (h.tokens[0] != "p" || h.tokens.size() < 2 || h.tokens[1] != kind)
        throw ParseError(h.number, std::string("expected header '") + shape + "'");
    expect_arity(h, 2 + fields, shape);
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < fields; ++i)
        out.push_back(number(h, 2 + i));
    return out;
}

auto edge_line(const Line & line) -> std::pair<std::uint64_t, std::uint64_t>
{
    if (line.tokens[0] != "e")
        throw ParseError(line.number, "unexpected line type '" + line.tokens[0] + "'");
    expect_arity(line, 3, "e <u> <v>");
    return {number(line, 1), number(line, 2)};
}

void check_count(const std::vector<Line> & lines, std::uint64_t m)
{
    auto seen = lines.size() - 1;
    if (seen != m) {
        auto at = seen > m ? lines[m + 1].number : lines.back().number;
        throw ParseError(at, "header declares " + std::to_string(m) + " edges, found " + std::to_string(seen));
    }
}

} // namespace

auto parse_graph(std::istream & in) -> Graph
{
    auto lines = content_lines(in);
    auto h = header(lines, "contract", 2, "p contract <n> <m>");
    auto n = h[0], m = h[1];
    if (n > (std::uint64_t{1} << 20))
        throw ParseError(lines.front().number, "vertex count too large");
    Graph g(n);
    std::set<Edge> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto [u, v] = edge_line(lines[i]);
        if (u >= n || v >= n)
            throw ParseError(lines[i].number, "vertex id out of range 0.." + std::to_string(n == 0 ? 0 : n - 1));
        if (u == v)
            throw ParseError(lines[i].number, "self-loop at " + std::to_string(u));
        Edge e(static_cast<VertexId>(u), static_cast<VertexId>(v));
        if (!seen.insert(e).second)
            throw ParseError(lines[i].number, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
        g.add_edge(e.u, e.v);
    }
    check_count(lines, m);
    return g;
}

auto parse_graph_text(const std::string & text) -> Graph
{
    std::istringstream in(text);
    return parse_graph(in);
}

void write_graph(std::ostream & out, const Graph & g)
{
    out << "p contract " << g.order() << ' ' << g.size() << '\n';
    for (auto e : g.edges())
        out << "e " << g.index_of(e.u) << ' ' << g.index_of(e.v) << '\n';
}

auto parse_bipartite(std::istream & in) -> BipartiteInstance
{
    auto lines = content_lines(in);
    auto h = header(lines, "bipartite", 4, "p bipartite <|X|> <|Y|> <m> <t>");
    BipartiteInstance inst;
    inst.x_count = h[0];
    inst.y_count = h[1];
    inst.t = h[3];
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto [x, y] = edge_line(lines[i]);
        if (x >= inst.x_count)
            throw ParseError(lines[i].number, "first endpoint must be an X vertex (< " + std::to_string(inst.x_count) + ")");
        if (y < inst.x_count || y >= inst.x_count + inst.y_count)
            throw ParseError(lines[i].number, "second endpoint must be a Y vertex");
        std::pair<std::size_t, std::size_t> e{x, y - inst.x_count};
        if (!seen.insert(e).second)
            throw ParseError(lines[i].number, "duplicate edge");
        inst.edges.push_back(e);
    }
    check_count(lines, h[2]);
    std::sort(inst.edges.begin(), inst.edges.end());
    return inst;
}

auto parse_bipartite_text(const std::string & text) -> BipartiteInstance
{
    std::istringstream in(text);
    return parse_bipartite(in);
}

void write_bipartite(std::ostream & out, const BipartiteInstance & inst)
{
    out << "p bipartite " << inst.x_count << ' ' << inst.y_count << ' ' << inst.edges.size() << ' ' << inst.t
        << '\n';
    for (auto [x, y] : inst.edges)
        out << "e " << x << ' ' << inst.x_count + y << '\n';
}

auto parse_edge_list(std::istream & in) -> std::vector<Edge>
{
    std::vector<Edge> out;
    for (const auto & line : content_lines(in)) {
        if (line.tokens[0] != "e")
            continue;
        auto [u, v] = edge_line(line);
        if (u > UINT32_MAX || v > UINT32_MAX)
            throw ParseError(line.number, "vertex id too large");
        out.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    return out;
}

void write_roles(std::ostream & out, const std::vector<std::string> & roles)
{
    for (std::size_t v = 0; v < roles.size(); ++v)
        out << "v " << v << ' ' << roles[v] << '\n';
}

auto read_file(const std::string & path) -> std::string
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(0, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void Report::add(std::string key, std::string value)
{
    decision_.emplace_back(std::move(key), std::move(value));
}

void Report::add(std::string key, std::uint64_t value)
{
    add(std::move(key), std::to_string(value));
}

void Report::add_timing(std::string key, double millis)
{
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(3) << millis;
    timing_.emplace_back(std::move(key), ss.str());
}

auto Report::decision_text() const -> std::string
{
    std::string out;
    for (const auto & [k, v] : decision_)
        out += v.empty() ? k + "\n" : k + " " + v + "\n";
    return out;
}

auto Report::text() const -> std::string
{
    auto out = decision_text();
    if (!timing_.empty()) {
        out += "section timing\n";
        for (const auto & [k, v] : timing_)
            out += k + " " + v + "\n";
    }
    return out;
}

auto format_edges(const std::vector<Edge> & edges) -> std::string
{
    std::string out;
    for (auto e : edges) {
        if (!out.empty())
            out += ' ';
        out += std::to_string(e.u) + "-" + std::to_string(e.v);
    }
    return out;
}

auto format_ids(const std::vector<VertexId> & ids) -> std::string
{
    std::string out;
    for (auto v : ids) {
        if (!out.empty())
            out += ' ';
        out += std::to_string(v);
    }
    return out;
}

} // namespace contractk
