// Acceptance gate: each numbered check prints one PASS/FAIL line and the
// process exits nonzero if any of them fail. The tool binary under test is
// argv[1].
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lequiver/construct.h"
#include "lequiver/gseed.h"
#include "lequiver/le.h"
#include "lequiver/plabic.h"
#include "lequiver/quiver.h"
#include "lequiver/search.h"
#include "naive_oracle.h"

using namespace lequiver;

namespace {

std::string g_cli;
int g_failures = 0;

void report(int number, const std::string& title, double limit_seconds,
            const std::function<std::string()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
        problem = body();
    } catch (const std::exception& e) {
        problem = std::string("exception: ") + e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (problem.empty() && seconds >= limit_seconds)
        problem = "took " + std::to_string(seconds) + "s, budget " +
                  std::to_string(limit_seconds) + "s";
    char stamp[32];
    std::snprintf(stamp, sizeof stamp, "%.2fs", seconds);
    if (problem.empty()) {
        std::cout << "PASS " << number << ": " << title << " (" << stamp << ")\n";
    } else {
        std::cout << "FAIL " << number << ": " << title << " (" << stamp
                  << "): " << problem << "\n";
        ++g_failures;
    }
}

std::string run_cli(const std::string& args, int* status) {
    std::string cmd = "'" + g_cli + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        *status = -1;
        return "";
    }
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int rc = pclose(pipe);
    *status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return out;
}

LeDiagram all_ones(int rows, int cols) {
    return LeDiagram(Shape(std::vector<int>(rows, cols)),
                     std::vector<std::vector<int>>(rows, std::vector<int>(cols, 1)));
}

std::string grid_reproduction() {
    Quiver g = Quiver::grid(4, 5);
    if (g.size() != 21) return "expected 21 vertices, got " + std::to_string(g.size());
    if (g.mutable_count() != 12)
        return "expected 12 mutable, got " + std::to_string(g.mutable_count());
    if (g.frozen_count() != 9)
        return "expected 9 frozen, got " + std::to_string(g.frozen_count());
    if (g.arrow_count() != 37) {
        std::ostringstream os;
        os << "expected 37 arrows, got " << g.arrow_count();
        return os.str();
    }
    Quiver dual = plabic_graph(gamma_graph(all_ones(4, 5))).dual_quiver();
    if (!dual.sorted_by_id().same_as(g.sorted_by_id()))
        return "face dual of the all-ones 4x5 differs from the grid quiver";
    return "";
}

std::string worked_example_via_cli() {
    int status = 0;
    std::string out = run_cli("build --via construction '01010/1101/00/01'", &status);
    if (status != 0) return "tool exited with " + std::to_string(status);
    Quiver q = Quiver::from_json(nlohmann::json::parse(out));
    if (q.size() != 7) return "expected 7 vertices, got " + std::to_string(q.size());
    if (q.mutable_ids() != std::vector<std::string>{"v1,2"})
        return "expected v1,2 as the only mutable vertex";
    std::set<std::string> arrows;
    for (const auto& [from, to, mult] : q.arrows()) {
        if (mult != 1) return "unexpected multiplicity on " + from + "->" + to;
        arrows.insert(from + "->" + to);
    }
    std::set<std::string> want = {"v1,2->v0", "v1,4->v1,2", "v2,2->v1,2",
                                  "v1,2->v2,4"};
    if (arrows != want) return "arrow set differs from the worked example";
    return "";
}

std::string pipeline_equivalence() {
    std::vector<LeDiagram> corpus = enumerate_le_diagrams(3, 3);
    if (static_cast<long long>(corpus.size()) != oracle::count_le(3, 3))
        return "3x3 enumeration disagrees with the brute-force count";

    std::vector<LeDiagram> four = enumerate_le_diagrams(4, 4);
    std::vector<LeDiagram> sample;
    std::mt19937 rng(20240817u);
    std::sample(four.begin(), four.end(), std::back_inserter(sample), 200, rng);
    corpus.insert(corpus.end(), sample.begin(), sample.end());

    for (const LeDiagram& d : corpus) {
        Quiver qc = quiver_from_le(d);
        Quiver qp = plabic_graph(gamma_graph(d)).dual_quiver();
        if (!find_isomorphism(qp, qc))
            return "plabic vs construction mismatch on \"" + d.to_text('/') + "\"";
        MutationScript s = grid_to_le_script(d);
        Quiver qs = apply_script(Quiver::grid(s.rect_rows, s.rect_cols), s);
        if (!find_isomorphism(qs.mutable_part(), qc.mutable_part()))
            return "script vs construction mismatch on \"" + d.to_text('/') + "\"";
        if (!find_isomorphism(qs.mutable_part(), qp.mutable_part()))
            return "script vs plabic mismatch on \"" + d.to_text('/') + "\"";
    }
    return "";
}

std::string desk_scale_searches() {
    int searched = 0;
    std::string problem;
    for_each_le_diagram(3, 4, [&](const LeDiagram& d) {
        Quiver q = quiver_from_le(d);
        int n = q.mutable_count();
        if (n < 1 || n > 6) return true;
        ++searched;
        SearchResult r = find_sequence(q, SequenceMode::GreenToRed, 12, 1000000);
        if (r.outcome != SearchOutcome::Found) {
            problem = std::string("no sequence for \"") + d.to_text('/') +
                      "\" (" + outcome_name(r.outcome) + ")";
            return false;
        }
        if (!verify_sequence(q, r.sequence, SequenceMode::GreenToRed).accepted) {
            problem = "sequence for \"" + d.to_text('/') + "\" failed to re-verify";
            return false;
        }
        return true;
    });
    if (!problem.empty()) return problem;
    if (searched == 0) return "no quivers were searched";
    return "";
}

std::string property_suites() {
    // Quiver mutation involution.
    {
        std::mt19937 rng(101);
        Quiver base = Quiver::grid(3, 4);
        auto mut = base.mutable_ids();
        for (int t = 0; t < 10000; ++t) {
            Quiver q = base;
            for (int s = static_cast<int>(rng() % 5); s-- > 0;)
                q = q.mutated(mut[rng() % mut.size()]);
            const std::string& k = mut[rng() % mut.size()];
            if (!q.mutated(k).mutated(k).same_as(q))
                return "quiver mutation involution failed";
        }
    }
    // Seed mutation involution, sign coherence and the color flip, all along
    // the same random walks.
    {
        std::mt19937 rng(202);
        GSeed base = GSeed::initial(Quiver::grid(3, 4));
        int n = base.size();
        int trials = 0;
        while (trials < 10000) {
            GSeed s = base;
            for (int step = 0; step < 10 && trials < 10000; ++step, ++trials) {
                int k = static_cast<int>(rng() % n);
                Color before = s.color(k);
                GSeed next = s.mutated(k);
                GSeed back = next.mutated(k);
                if (back.g_matrix() != s.g_matrix() ||
                    !back.quiver().same_as(s.quiver()))
                    return "seed mutation involution failed";
                for (int v = 0; v < n; ++v) next.color(v);  // sign coherence
                if (next.color(k) == before) return "mutated vertex kept its color";
                s = next;
            }
        }
    }
    // Merge order-independence: replay each diagram's merges in shuffled
    // order, tracking representatives, and compare against the quotient.
    {
        std::mt19937 rng(303);
        std::vector<LeDiagram> corpus = enumerate_le_diagrams(3, 3);
        Quiver base33 = Quiver::grid(3, 3);
        for (int t = 0; t < 10000; ++t) {
            const LeDiagram& d = corpus[rng() % corpus.size()];
            Quiver want = quiver_from_le(d);

            std::vector<std::string> victims;
            for (int i = 1; i <= d.shape().rows(); ++i)
                for (int j = 1; j <= 3; ++j)
                    if (!d.shape().contains(i, j)) victims.push_back(vertex_id(i, j));
            for (int i = d.shape().rows() + 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j) victims.push_back(vertex_id(i, j));
            Quiver q = base33.without(victims).refrozen(refreeze_map(d));

            std::vector<Box> zeros = d.zero_boxes();
            std::shuffle(zeros.begin(), zeros.end(), rng);
            std::map<std::string, std::string> rep;
            auto canon = [&](std::string id) {
                while (rep.count(id)) id = rep[id];
                return id;
            };
            for (Box z : zeros) {
                std::set<std::string> members;
                for (const std::string& m : merge_set(d, z).members)
                    members.insert(canon(m));
                if (members.size() < 2) continue;
                q = q.merged({members.begin(), members.end()});
                const std::string& keep = *members.begin();
                for (const std::string& m : members)
                    if (m != keep) rep[m] = keep;
            }
            if (!q.sorted_by_id().same_as(want.sorted_by_id()))
                return "merge order changed the quotient on \"" + d.to_text('/') +
                       "\"";
        }
    }
    // Degree-2 simplification leaves the face dual unchanged.
    {
        std::mt19937 rng(404);
        std::vector<LeDiagram> corpus = enumerate_le_diagrams(3, 3);
        for (int t = 0; t < 10000; ++t) {
            const LeDiagram& d = corpus[rng() % corpus.size()];
            PlabicGraph p = plabic_graph(gamma_graph(d));
            if (!p.simplified()
                     .dual_quiver()
                     .sorted_by_id()
                     .same_as(p.dual_quiver().sorted_by_id()))
                return "simplification changed the dual on \"" + d.to_text('/') +
                       "\"";
        }
    }
    // Face count law over the full 3x3 corpus.
    for (const LeDiagram& d : enumerate_le_diagrams(3, 3)) {
        size_t faces = plabic_graph(gamma_graph(d)).faces().faces.size();
        if (faces != d.one_boxes().size() + 1)
            return "face count law failed on \"" + d.to_text('/') + "\"";
    }
    return "";
}

std::string enumeration_oracle() {
    auto two_two = enumerate_le_diagrams(2, 2);
    if (two_two.size() != 33)
        return "enumerate(2,2) gave " + std::to_string(two_two.size());
    if (oracle::count_le(2, 2) != 33) return "oracle disputes 33 at 2x2";
    auto one_two = enumerate_le_diagrams(1, 2);
    if (one_two.size() != 7)
        return "enumerate(1,2) gave " + std::to_string(one_two.size());
    if (oracle::count_le(1, 2) != 7) return "oracle disputes 7 at 1x2";
    std::set<std::string> mine;
    for (const LeDiagram& d : two_two) mine.insert(d.to_text('/'));
    if (mine != oracle::all_le(2, 2)) return "2x2 diagram sets differ";
    return "";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <path-to-cli>\n";
        return 2;
    }
    g_cli = argv[1];

    report(1, "grid quiver counts and the all-ones face dual", 1.0,
           grid_reproduction);
    report(2, "worked example through the command line", 1.0,
           worked_example_via_cli);
    report(3, "three pipelines agree on 3x3 exhaustively and 200 random 4x4", 120.0,
           pipeline_equivalence);
    report(4, "green-to-red searches succeed across 3x4", 600.0,
           desk_scale_searches);
    report(5, "randomized property suites", 120.0, property_suites);
    report(6, "enumeration matches the brute-force oracle", 1.0,
           enumeration_oracle);

    return g_failures == 0 ? 0 : 1;
}
