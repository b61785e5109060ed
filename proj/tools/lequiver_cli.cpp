// Command-line front end. Exit codes: 0 success or verified, 1 verification
// failed or nothing found, 2 invalid input or usage.
#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lequiver/construct.h"
#include "lequiver/gseed.h"
#include "lequiver/le.h"
#include "lequiver/plabic.h"
#include "lequiver/quiver.h"
#include "lequiver/search.h"

namespace {

using namespace lequiver;

std::string read_all(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    ss << in.rdbuf();
    return ss.str();
}

Quiver load_quiver(const std::string& path) {
    return Quiver::from_json(nlohmann::json::parse(read_all(path)));
}

// Vertex ids may themselves contain commas ("v1,2"), so a comma-separated
// list is matched against the quiver's actual ids, longest candidates first,
// backtracking over ambiguous splits.
std::vector<std::string> parse_vertex_list(const Quiver& q, const std::string& text) {
    if (text.empty()) return {};
    std::vector<std::string> ids = q.ids();
    std::sort(ids.begin(), ids.end(), [](const std::string& a, const std::string& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    std::vector<std::string> out;
    std::function<bool(std::size_t)> match = [&](std::size_t pos) {
        if (pos == text.size()) return true;
        for (const std::string& id : ids) {
            if (text.compare(pos, id.size(), id) != 0) continue;
            std::size_t end = pos + id.size();
            if (end != text.size() && text[end] != ',') continue;
            out.push_back(id);
            if (end == text.size() || match(end + 1)) return true;
            out.pop_back();
        }
        return false;
    };
    if (!match(0))
        throw std::invalid_argument("cannot parse \"" + text +
                                    "\" as a comma-separated list of this quiver's vertex ids");
    return out;
}

void emit_quiver(const Quiver& q, const std::string& format) {
    if (format == "dot")
        std::cout << q.to_dot();
    else
        std::cout << q.to_json().dump(2) << "\n";
}

Quiver build_via(const LeDiagram& d, const std::string& via) {
    if (via == "construction") return quiver_from_le(d);
    if (via == "plabic") return plabic_graph(gamma_graph(d)).dual_quiver();
    MutationScript s = grid_to_le_script(d);
    return apply_script(Quiver::grid(s.rect_rows, s.rect_cols), s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Le-diagram quiver toolkit"};
    app.require_subcommand(1);

    auto* c_validate = app.add_subcommand("validate", "Check a diagram for the Le-property");
    std::string v_diagram;
    c_validate->add_option("diagram", v_diagram, "Rows of 0/1 joined with '/'")->required();

    auto* c_build = app.add_subcommand("build", "Build the quiver of a Le-diagram");
    std::string b_via, b_diagram, b_format = "json";
    c_build->add_option("--via", b_via, "Pipeline: construction, plabic, or script")
        ->required()
        ->check(CLI::IsMember({"construction", "plabic", "script"}));
    c_build->add_option("diagram", b_diagram, "Rows of 0/1 joined with '/'")->required();
    c_build->add_option("--format", b_format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));

    auto* c_grid = app.add_subcommand("grid", "Emit the grid quiver of an r x c rectangle");
    int g_rows = 0, g_cols = 0;
    std::string g_format = "json";
    c_grid->add_option("rows", g_rows)->required()->check(CLI::NonNegativeNumber);
    c_grid->add_option("cols", g_cols)->required()->check(CLI::NonNegativeNumber);
    c_grid->add_option("--format", g_format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));

    auto* c_mutate = app.add_subcommand("mutate", "Mutate a quiver at a list of vertices");
    std::string m_file, m_list;
    c_mutate->add_option("quiver", m_file, "Quiver JSON file, or - for stdin")->required();
    c_mutate->add_option("vertices", m_list, "Comma-separated vertex ids")->required();

    auto* c_check = app.add_subcommand("check-seq", "Verify a green-to-red mutation sequence");
    std::string k_file, k_list;
    bool k_maximal = false;
    c_check->add_flag("--maximal-green", k_maximal, "Require every mutation to be green");
    c_check->add_option("quiver", k_file, "Quiver JSON file, or - for stdin")->required();
    c_check->add_option("--seq", k_list, "Comma-separated vertex ids")->required();

    auto* c_search = app.add_subcommand("search-gtr", "Search for a green-to-red sequence");
    std::string s_file;
    int s_depth = 12;
    long long s_nodes = 1000000;
    bool s_maximal = false;
    c_search->add_option("quiver", s_file, "Quiver JSON file, or - for stdin")->required();
    c_search->add_option("--max-depth", s_depth, "Longest sequence to try")
        ->check(CLI::PositiveNumber);
    c_search->add_option("--max-nodes", s_nodes, "Seed states to visit before giving up")
        ->check(CLI::PositiveNumber);
    c_search->add_flag("--maximal-green", s_maximal, "Search maximal green sequences only");

    auto* c_script = app.add_subcommand("script", "Emit the mutation-and-deletion script of a diagram");
    std::string p_diagram;
    c_script->add_option("diagram", p_diagram, "Rows of 0/1 joined with '/'")->required();

    auto* c_enum = app.add_subcommand("enumerate", "List every Le-diagram fitting in r x c");
    int e_rows = 0, e_cols = 0;
    long long e_limit = -1;
    c_enum->add_option("rows", e_rows)->required()->check(CLI::NonNegativeNumber);
    c_enum->add_option("cols", e_cols)->required()->check(CLI::NonNegativeNumber);
    c_enum->add_option("--limit", e_limit, "Stop after this many diagrams")
        ->check(CLI::PositiveNumber);

    auto* c_cross = app.add_subcommand("crosscheck", "Compare all three pipelines over a corpus");
    int x_rows = 0, x_cols = 0;
    long long x_samples = 0;
    c_cross->add_option("rows", x_rows)->required()->check(CLI::NonNegativeNumber);
    c_cross->add_option("cols", x_cols)->required()->check(CLI::NonNegativeNumber);
    c_cross->add_option("--samples", x_samples, "Check a fixed-seed sample instead of the full corpus")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_validate) {
            try {
                parse_diagram(v_diagram);
            } catch (const LeViolation& e) {
                std::cout << "invalid: " << e.what() << "\n";
                return 1;
            }
            std::cout << "valid\n";
            return 0;
        }

        if (*c_build) {
            emit_quiver(build_via(parse_diagram(b_diagram), b_via), b_format);
            return 0;
        }

        if (*c_grid) {
            emit_quiver(Quiver::grid(g_rows, g_cols), g_format);
            return 0;
        }

        if (*c_mutate) {
            Quiver q = load_quiver(m_file);
            for (const std::string& id : parse_vertex_list(q, m_list)) q = q.mutated(id);
            emit_quiver(q, "json");
            return 0;
        }

        if (*c_check) {
            Quiver q = load_quiver(k_file);
            std::vector<std::string> seq = parse_vertex_list(q, k_list);
            Verdict v = verify_sequence(
                q, seq, k_maximal ? SequenceMode::MaximalGreen : SequenceMode::GreenToRed);
            std::cout << v.to_json().dump(2) << "\n";
            std::cerr << (v.accepted ? "accepted" : "rejected: " + v.reason) << "\n";
            return v.accepted ? 0 : 1;
        }

        if (*c_search) {
            Quiver q = load_quiver(s_file);
            SearchResult r = find_sequence(
                q, s_maximal ? SequenceMode::MaximalGreen : SequenceMode::GreenToRed,
                s_depth, s_nodes);
            std::cout << r.to_json().dump(2) << "\n";
            std::cerr << outcome_name(r.outcome) << " after " << r.stats.nodes << " states\n";
            return r.outcome == SearchOutcome::Found ? 0 : 1;
        }

        if (*c_script) {
            std::cout << grid_to_le_script(parse_diagram(p_diagram)).to_json().dump(2) << "\n";
            return 0;
        }

        if (*c_enum) {
            std::optional<long long> lim;
            if (e_limit > 0) lim = e_limit;
            std::vector<LeDiagram> all = enumerate_le_diagrams(e_rows, e_cols, lim);
            for (const LeDiagram& d : all) std::cout << d.to_text('/') << "\n";
            std::cerr << all.size() << " diagrams\n";
            return 0;
        }

        if (*c_cross) {
            std::vector<LeDiagram> corpus = enumerate_le_diagrams(x_rows, x_cols);
            if (x_samples > 0 && static_cast<std::size_t>(x_samples) < corpus.size()) {
                std::mt19937 rng(20240817u);
                std::vector<LeDiagram> picked;
                std::sample(corpus.begin(), corpus.end(), std::back_inserter(picked),
                            x_samples, rng);
                corpus = std::move(picked);
            }
            long long mismatches = 0;
            for (const LeDiagram& d : corpus) {
                Quiver qc = quiver_from_le(d);
                Quiver qp = plabic_graph(gamma_graph(d)).dual_quiver();
                MutationScript s = grid_to_le_script(d);
                Quiver qs = apply_script(Quiver::grid(s.rect_rows, s.rect_cols), s);
                bool plabic_ok = qp.sorted_by_id().same_as(qc.sorted_by_id());
                bool script_ok =
                    find_isomorphism(qs.mutable_part(), qc.mutable_part()).has_value();
                if (!plabic_ok || !script_ok) {
                    ++mismatches;
                    std::cerr << "mismatch: \"" << d.to_text('/') << "\""
                              << (plabic_ok ? "" : " [plabic]")
                              << (script_ok ? "" : " [script]") << "\n";
                }
            }
            std::cout << corpus.size() << " diagrams, " << mismatches << " mismatches\n";
            return mismatches == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
