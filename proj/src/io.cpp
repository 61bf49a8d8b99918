#include "neighborly/io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace neighborly {

namespace {

// strips comments, returns one whitespace-tokenized line at a time
struct LineReader {
    std::istream& in;
    int line_no = 0;

    std::optional<std::vector<std::string>> next() {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            std::istringstream ss(line);
            std::vector<std::string> tokens;
            std::string tok;
            while (ss >> tok) tokens.push_back(tok);
            if (!tokens.empty()) return tokens;
        }
        return std::nullopt;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("line " + std::to_string(line_no) + ": " + what);
    }
};

int parse_int(LineReader& r, const std::string& tok) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        r.fail("expected an integer, got '" + tok + "'");
    }
}

int read_header(LineReader& r) {
    auto tokens = r.next();
    if (!tokens || tokens->size() != 2 || (*tokens)[0] != "n")
        r.fail("expected header line 'n <N>'");
    return parse_int(r, (*tokens)[1]);
}

std::vector<Subset> read_subset_lines(LineReader& r, int n) {
    std::vector<Subset> sets;
    while (auto tokens = r.next()) {
        Subset s = 0;
        for (const std::string& tok : *tokens) {
            int v = parse_int(r, tok);
            if (v < 1 || v > n) r.fail("vertex " + tok + " out of range 1.." + std::to_string(n));
            s |= single(v);
        }
        sets.push_back(s);
    }
    return sets;
}

}  // namespace

Graph read_graph(std::istream& in) {
    LineReader r{in};
    Graph g(read_header(r));
    while (auto tokens = r.next()) {
        if (tokens->size() != 2) r.fail("expected an edge line 'u v'");
        int u = parse_int(r, (*tokens)[0]), v = parse_int(r, (*tokens)[1]);
        try {
            g.add_edge(u, v);
        } catch (const std::invalid_argument& e) {
            r.fail(e.what());
        }
    }
    return g;
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "n " << g.n << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

SquarefreeIdeal read_ideal(std::istream& in) {
    LineReader r{in};
    int n = read_header(r);
    auto first = r.next();
    if (first && first->size() == 1 && (*first)[0] == "unit") return SquarefreeIdeal::unit_ideal(n);
    if (!first || (first->size() == 1 && (*first)[0] == "zero")) return SquarefreeIdeal::zero(n);
    std::vector<Subset> gens;
    auto parse_line = [&](const std::vector<std::string>& tokens) {
        Subset s = 0;
        for (const std::string& tok : tokens) {
            int v = parse_int(r, tok);
            if (v < 1 || v > n) r.fail("vertex " + tok + " out of range 1.." + std::to_string(n));
            s |= single(v);
        }
        if (s == 0) r.fail("empty generator");
        gens.push_back(s);
    };
    parse_line(*first);
    while (auto tokens = r.next()) parse_line(*tokens);
    return SquarefreeIdeal::make(n, std::move(gens));
}

void write_ideal(std::ostream& out, const SquarefreeIdeal& i) {
    out << "n " << i.ambient_n << "\n";
    if (i.is_unit()) {
        out << "unit\n";
        return;
    }
    if (i.is_zero()) {
        out << "zero\n";
        return;
    }
    for (Subset g : i.gens) {
        bool first = true;
        for (int v : to_vertices(g)) {
            if (!first) out << " ";
            out << v;
            first = false;
        }
        out << "\n";
    }
}

SimplicialComplex read_complex(std::istream& in) {
    LineReader r{in};
    int n = read_header(r);
    std::vector<Subset> facets = read_subset_lines(r, n);
    if (facets.empty()) return SimplicialComplex::void_complex(n);
    return SimplicialComplex::make(n, std::move(facets));
}

void write_complex(std::ostream& out, const SimplicialComplex& c) {
    out << "n " << c.n << "\n";
    for (Subset f : c.facets) {
        bool first = true;
        for (int v : to_vertices(f)) {
            if (!first) out << " ";
            out << v;
            first = false;
        }
        out << "\n";
    }
}

namespace {

template <class T, class Fn>
T read_file(const std::string& path, Fn fn) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return fn(in);
}

}  // namespace

Graph read_graph_file(const std::string& path) {
    return read_file<Graph>(path, [](std::istream& in) { return read_graph(in); });
}

SquarefreeIdeal read_ideal_file(const std::string& path) {
    return read_file<SquarefreeIdeal>(path, [](std::istream& in) { return read_ideal(in); });
}

SimplicialComplex read_complex_file(const std::string& path) {
    return read_file<SimplicialComplex>(path, [](std::istream& in) { return read_complex(in); });
}

nlohmann::json subset_to_json(Subset s) { return nlohmann::json(to_vertices(s)); }

nlohmann::json betti_to_json(const BettiTable& b, bool include_multigraded) {
    nlohmann::json j;
    j["char"] = b.field_char;
    j["n"] = b.ambient_n;
    auto entries = nlohmann::json::array();
    for (const auto& [ij, beta] : b.entries)
        if (beta != 0) entries.push_back({ij.first, ij.second, beta});
    j["entries"] = std::move(entries);
    if (include_multigraded) {
        auto mg = nlohmann::json::array();
        for (const auto& [key, beta] : b.multigraded)
            if (beta != 0) mg.push_back({key.first, subset_to_json(key.second), beta});
        j["multigraded"] = std::move(mg);
    }
    return j;
}

BettiTable betti_from_json(const nlohmann::json& j) {
    BettiTable b;
    b.field_char = j.at("char").get<long long>();
    b.ambient_n = j.value("n", 0);
    for (const auto& e : j.at("entries"))
        b.entries[{e.at(0).get<int>(), e.at(1).get<int>()}] = e.at(2).get<long long>();
    if (j.contains("multigraded"))
        for (const auto& e : j.at("multigraded")) {
            Subset s = from_vertices(e.at(1).get<std::vector<int>>());
            b.multigraded[{e.at(0).get<int>(), s}] = e.at(2).get<long long>();
        }
    return b;
}

}  // namespace neighborly
