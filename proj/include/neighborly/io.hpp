#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "neighborly/betti.hpp"
#include "neighborly/graph.hpp"
#include "neighborly/ideal.hpp"
#include "neighborly/simplicial.hpp"

namespace neighborly {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph file: `n <N>` then one `u v` line per edge; `#` starts a comment.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

// Ideal file: `n <N>` then one generator per line as vertex indices;
// `unit` / `zero` keywords on line 2 name the degenerate ideals.
SquarefreeIdeal read_ideal(std::istream& in);
void write_ideal(std::ostream& out, const SquarefreeIdeal& i);

// Complex file mirrors the ideal format, one facet per line.
SimplicialComplex read_complex(std::istream& in);
void write_complex(std::ostream& out, const SimplicialComplex& c);

Graph read_graph_file(const std::string& path);
SquarefreeIdeal read_ideal_file(const std::string& path);
SimplicialComplex read_complex_file(const std::string& path);

// { "char": c, "entries": [[i, j, beta], ...] } sorted by (i, j);
// multigraded entries optional under "multigraded"
nlohmann::json betti_to_json(const BettiTable& b, bool include_multigraded = false);
BettiTable betti_from_json(const nlohmann::json& j);

nlohmann::json subset_to_json(Subset s);

}  // namespace neighborly
