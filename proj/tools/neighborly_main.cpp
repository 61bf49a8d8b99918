// Command-line front end: theorem verification over ranges of n plus ad-hoc
// queries on graphs, ideals, and complexes.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "neighborly/formulas.hpp"
#include "neighborly/io.hpp"
#include "neighborly/verify.hpp"

namespace {

using namespace neighborly;
using nlohmann::json;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path);
    out << text;
}

json fh_to_json(const FHVectors& fh) {
    return json{{"dim", fh.dim},
                {"f", fh.f},
                {"h", fh.h},
                {"chi", fh.euler},
                {"chi_reduced", fh.reduced_euler}};
}

json sets_to_json(const std::vector<Subset>& sets) {
    auto arr = json::array();
    for (Subset s : sets) arr.push_back(subset_to_json(s));
    return arr;
}

SquarefreeIdeal resolve_ideal(std::optional<int> n, const std::string& ideal_path,
                              const std::string& graph_path, bool square) {
    if (n) return ni_pn2(*n);
    if (!ideal_path.empty()) return read_ideal_file(ideal_path);
    if (!graph_path.empty()) {
        Graph g = read_graph_file(graph_path);
        return neighborhood_ideal(square ? graph_square(g) : g);
    }
    throw CLI::ValidationError("one of --n, --ideal, --graph is required");
}

json inspect_ideal(const SquarefreeIdeal& I, long long field_char, const EngineCaps& caps) {
    json j;
    j["ambient_n"] = I.ambient_n;
    j["generators"] = sets_to_json(I.gens);
    PrimeList primes = minimal_primes(I, caps.transversal_cap);
    j["minimal_primes"] = sets_to_json(primes.primes);
    j["height"] = primes.height;
    j["bight"] = primes.bight;
    BettiTable b = betti_hochster(I, field_char, caps);
    j["betti"] = betti_to_json(b);
    HomologicalInvariants inv = pd_reg_depth(b, I);
    j["pd"] = inv.pd;
    j["reg"] = inv.reg;
    j["depth"] = inv.depth;
    j["dim"] = inv.dim;
    j["facet_complex"] = fh_to_json(fh_vectors(facet_complex(I)));
    j["stanley_reisner_complex"] =
        fh_to_json(fh_vectors(stanley_reisner_complex(I, caps.transversal_cap)));
    return j;
}

std::string render_inspect_table(const json& j) {
    std::ostringstream out;
    out << "ambient variables: " << j["ambient_n"] << "\n";
    out << "generators:        " << j["generators"].dump() << "\n";
    out << "minimal primes:    " << j["minimal_primes"].dump() << "\n";
    out << "height / bight:    " << j["height"] << " / " << j["bight"] << "\n";
    out << "pd / reg:          " << j["pd"] << " / " << j["reg"] << "\n";
    out << "depth / dim:       " << j["depth"] << " / " << j["dim"] << "\n";
    out << "betti entries:     " << j["betti"]["entries"].dump() << "\n";
    out << "facet complex f:   " << j["facet_complex"]["f"].dump() << "\n";
    out << "facet complex h:   " << j["facet_complex"]["h"].dump() << "\n";
    out << "SR complex f:      " << j["stanley_reisner_complex"]["f"].dump() << "\n";
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants of closed neighborhood ideals of squares of paths"};
    app.require_subcommand(1);

    long long field_char = 0;
    int max_ambient = 16;
    bool strict = false;
    unsigned long long seed = 0;
    std::string out_path;
    std::string format = "json";
    app.add_option("--field-char", field_char, "field characteristic (0 = rationals)");
    app.add_option("--max-ambient", max_ambient, "engine cap on ambient variables");
    app.add_flag("--strict", strict, "indeterminate results also fail the process");
    app.add_option("--seed", seed, "seed for randomized oracle suites");
    app.add_option("--out", out_path, "write output to this path instead of stdout");
    app.add_option("--format", format, "json | csv | markdown")
        ->check(CLI::IsMember({"json", "csv", "markdown", "table"}));

    auto caps_of = [&] {
        EngineCaps caps;
        caps.max_ambient_hochster = max_ambient;
        return caps;
    };

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "compare formulas, recursion, and engine");
    std::optional<int> from_n, to_n;
    std::string checks_arg;
    bool timing = false;
    verify_cmd->add_option("--from", from_n, "first n (per-check default when omitted)");
    verify_cmd->add_option("--to", to_n, "last n (per-check default when omitted)");
    verify_cmd->add_option("--checks", checks_arg, "comma-separated check names (default: all)");
    verify_cmd->add_flag("--timing", timing, "record wall-clock time per run");

    // inspect
    auto* inspect_cmd = app.add_subcommand("inspect", "full invariant dump for one input");
    std::optional<int> builtin_n;
    std::string graph_path, ideal_path;
    bool square = false;
    inspect_cmd->add_option("--n", builtin_n, "built-in NI(P_n^2)");
    inspect_cmd->add_option("--graph", graph_path, "graph file");
    inspect_cmd->add_option("--ideal", ideal_path, "ideal file");
    inspect_cmd->add_flag("--square", square, "square the graph before taking neighborhoods");

    // betti
    auto* betti_cmd = app.add_subcommand("betti", "graded Betti table of S/I");
    std::optional<int> betti_n;
    std::string betti_ideal_path;
    bool multigraded = false, use_oracle = false;
    betti_cmd->add_option("--n", betti_n, "built-in NI(P_n^2)");
    betti_cmd->add_option("--ideal", betti_ideal_path, "ideal file");
    betti_cmd->add_flag("--multigraded", multigraded, "include multigraded entries");
    betti_cmd->add_flag("--oracle", use_oracle, "use the Koszul oracle engine instead");

    // shelling
    auto* shelling_cmd = app.add_subcommand("shelling", "shellability of a facet complex");
    std::optional<int> shelling_n;
    std::string complex_path;
    bool paper_order = false;
    shelling_cmd->add_option("--n", shelling_n, "built-in facet complex of NI(P_n^2)");
    shelling_cmd->add_option("--complex", complex_path, "complex file");
    shelling_cmd->add_flag("--paper-order", paper_order,
                           "check the fixed order F_2,...,F_{n-5},F_1,F_{n-4}");

    // dominate
    auto* dominate_cmd = app.add_subcommand("dominate", "minimal dominating sets of a graph");
    std::optional<int> dominate_n;
    std::string dominate_graph_path;
    bool dominate_square = false;
    dominate_cmd->add_option("--n", dominate_n, "built-in P_n^2");
    dominate_cmd->add_option("--graph", dominate_graph_path, "graph file");
    dominate_cmd->add_flag("--square", dominate_square, "square the graph first");

    // global options may also appear after the subcommand name
    for (CLI::App* sub : {verify_cmd, inspect_cmd, betti_cmd, shelling_cmd, dominate_cmd})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify_cmd) {
            VerifyConfig config;
            config.field_char = field_char;
            config.caps = caps_of();
            config.strict = strict;
            config.seed = seed;
            config.timing = timing;
            std::vector<std::string> checks;
            std::stringstream ss(checks_arg);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) checks.push_back(item);
            VerificationReport report = verify(from_n, to_n, checks, config);
            if (format == "csv")
                emit(report_to_csv(report), out_path);
            else if (format == "markdown")
                emit(report_to_markdown(report), out_path);
            else
                emit(report_to_json(report).dump(2) + "\n", out_path);
            return report.ok(strict) ? 0 : 1;
        }
        if (*inspect_cmd) {
            SquarefreeIdeal I = resolve_ideal(builtin_n, ideal_path, graph_path, square);
            json j = inspect_ideal(I, field_char, caps_of());
            emit(format == "table" ? render_inspect_table(j) : j.dump(2) + "\n", out_path);
            return 0;
        }
        if (*betti_cmd) {
            SquarefreeIdeal I = resolve_ideal(betti_n, betti_ideal_path, "", false);
            BettiTable b = use_oracle ? betti_koszul_oracle(I, field_char, caps_of())
                                      : betti_hochster(I, field_char, caps_of());
            emit(betti_to_json(b, multigraded).dump(2) + "\n", out_path);
            return 0;
        }
        if (*shelling_cmd) {
            SimplicialComplex c = shelling_n ? facet_complex(ni_pn2(*shelling_n))
                                             : read_complex_file(complex_path);
            json j;
            if (paper_order) {
                if (!shelling_n) throw CLI::ValidationError("--paper-order needs --n");
                auto order = paper_shelling_order(*shelling_n);
                j["order"] = sets_to_json(order);
                j["is_shelling"] = is_shelling_order(c, order);
            } else {
                auto order = find_shelling(c);
                j["shellable"] = order.has_value();
                if (order) j["order"] = sets_to_json(*order);
            }
            emit(j.dump(2) + "\n", out_path);
            return 0;
        }
        if (*dominate_cmd) {
            Graph g = dominate_n ? graph_square(path_graph(*dominate_n))
                                 : read_graph_file(dominate_graph_path);
            if (dominate_square && !dominate_n) g = graph_square(g);
            DominationSummary summary = minimal_dominating_sets(g);
            json j{{"gamma", summary.gamma},
                   {"gamma_prime", summary.gamma_prime},
                   {"minimal_sets", sets_to_json(summary.minimal_sets)}};
            emit(j.dump(2) + "\n", out_path);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
