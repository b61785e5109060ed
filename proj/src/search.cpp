#include "lequiver/search.h"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace lequiver {

const char* outcome_name(SearchOutcome o) {
    switch (o) {
        case SearchOutcome::Found: return "Found";
        case SearchOutcome::ExhaustedWithinCap: return "ExhaustedWithinCap";
        case SearchOutcome::CapHit: return "CapHit";
    }
    throw std::logic_error("unhandled search outcome");
}

nlohmann::json SearchResult::to_json() const {
    return nlohmann::json{{"outcome", outcome_name(outcome)},
                          {"sequence", sequence},
                          {"stats",
                           {{"nodes", stats.nodes},
                            {"dedup_hits", stats.dedup_hits},
                            {"max_depth_reached", stats.max_depth_reached}}}};
}

namespace {

// Bounding the table keeps worst-case memory flat; entries past the cap are
// simply not remembered, which only costs repeated work.
constexpr std::size_t kTableCap = std::size_t(1) << 20;

struct Searcher {
    SequenceMode mode;
    long long max_nodes;
    SearchStats stats;
    std::unordered_map<std::string, int> table;  // state -> best remaining depth
    std::vector<std::string> found;

    enum class Step { FoundIt, Cut, Abort };

    Step dfs(const GSeed& seed, int remaining, int depth,
             std::vector<std::string>& prefix) {
        ++stats.nodes;
        stats.max_depth_reached = std::max(stats.max_depth_reached, depth);
        if (stats.nodes > max_nodes) return Step::Abort;
        if (seed.all_red()) {
            found = prefix;
            return Step::FoundIt;
        }
        if (remaining == 0) return Step::Cut;
        std::string key = seed.state_key();
        auto it = table.find(key);
        if (it != table.end()) {
            if (it->second >= remaining) {
                ++stats.dedup_hits;
                return Step::Cut;
            }
            it->second = remaining;
        } else if (table.size() < kTableCap) {
            table.emplace(std::move(key), remaining);
        }
        const int n = seed.size();
        const int passes = mode == SequenceMode::MaximalGreen ? 1 : 2;
        for (int pass = 0; pass < passes; ++pass) {
            Color want = pass == 0 ? Color::Green : Color::Red;
            for (int k = 0; k < n; ++k) {
                if (seed.color(k) != want) continue;
                prefix.push_back(seed.quiver().id(k));
                Step r = dfs(seed.mutated(k), remaining - 1, depth + 1, prefix);
                if (r != Step::Cut) return r;
                prefix.pop_back();
            }
        }
        return Step::Cut;
    }
};

}  // namespace

SearchResult find_sequence(const Quiver& q, SequenceMode mode, int max_depth,
                           long long max_nodes) {
    if (max_depth < 1) throw std::invalid_argument("max_depth must be at least 1");
    if (max_nodes < 1) throw std::invalid_argument("max_nodes must be at least 1");
    Searcher s{mode, max_nodes, {}, {}, {}};
    GSeed root = GSeed::initial(q);
    SearchResult out;
    for (int limit = 1; limit <= max_depth; ++limit) {
        s.table.clear();
        std::vector<std::string> prefix;
        Searcher::Step r = s.dfs(root, limit, 0, prefix);
        if (r == Searcher::Step::FoundIt) {
            out.outcome = SearchOutcome::Found;
            out.sequence = s.found;
            break;
        }
        if (r == Searcher::Step::Abort) {
            out.outcome = SearchOutcome::CapHit;
            break;
        }
    }
    out.stats = s.stats;
    return out;
}

}  // namespace lequiver
