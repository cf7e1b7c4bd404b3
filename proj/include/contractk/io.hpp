#pragma once

#include "contractk/graph.hpp"
#include "contractk/oracles.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace contractk {

/**
 * Graph text format:
 *
 *     c optional comment
 *     p contract <n> <m>
 *     e <u> <v>          (m lines, 0-based ids)
 *
 * Throws ParseError with a 1-based line number on malformed input,
 * self-loops, duplicate edges or an edge count that differs from m.
 */
auto parse_graph(std::istream & in) -> Graph;
auto parse_graph_text(const std::string & text) -> Graph;

/// Writes g with vertices renumbered by index, so ids 0..n-1 round-trip.
void write_graph(std::ostream & out, const Graph & g);

/**
 * Bipartite format: `p bipartite <|X|> <|Y|> <m> <t>` followed by
 * `e <x> <y>` lines where x < |X| and |X| <= y < |X|+|Y|.
 */
auto parse_bipartite(std::istream & in) -> BipartiteInstance;
auto parse_bipartite_text(const std::string & text) -> BipartiteInstance;
void write_bipartite(std::ostream & out, const BipartiteInstance & inst);

/// Reads the `e <u> <v>` lines of a certificate. Other lines are skipped, so
/// a saved solve report can serve as a certificate.
auto parse_edge_list(std::istream & in) -> std::vector<Edge>;

/// Sidecar role map, one `v <id> <role>` line per vertex.
void write_roles(std::ostream & out, const std::vector<std::string> & roles);

/// Reads a whole file, throwing ParseError (line 0) when it cannot be opened.
auto read_file(const std::string & path) -> std::string;

/**
 * Line-oriented `key value` report. Decision lines come first; timing lines
 * follow a `section timing` marker so the decision part is byte-stable.
 */
class Report {
public:
    void add(std::string key, std::string value);
    void add(std::string key, std::uint64_t value);
    void add_timing(std::string key, double millis);

    auto decision_text() const -> std::string;
    auto text() const -> std::string;

private:
    std::vector<std::pair<std::string, std::string>> decision_;
    std::vector<std::pair<std::string, std::string>> timing_;
};

auto format_edges(const std::vector<Edge> & edges) -> std::string;
auto format_ids(const std::vector<VertexId> & ids) -> std::string;

} // namespace contractk
