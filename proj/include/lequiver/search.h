// Iterative-deepening search for mutation sequences that end with every
// vertex red. Shortest sequences are found first and ties break toward lower
// vertex indices, so results are deterministic.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "lequiver/gseed.h"
#include "lequiver/quiver.h"

namespace lequiver {

struct SearchStats {
    long long nodes = 0;       // seed states visited across all depth limits
    long long dedup_hits = 0;  // cutoffs from the transposition table
    int max_depth_reached = 0;
};

enum class SearchOutcome { Found, ExhaustedWithinCap, CapHit };
const char* outcome_name(SearchOutcome o);

struct SearchResult {
    SearchOutcome outcome = SearchOutcome::ExhaustedWithinCap;
    std::vector<std::string> sequence;  // vertex ids, filled when Found
    SearchStats stats;
    nlohmann::json to_json() const;
};

// Explores green-first in index order; MaximalGreen never branches on a red
// vertex. States revisited with no more remaining depth than before are
// pruned. Stops with CapHit once more than max_nodes states are visited.
// Requires max_depth >= 1 and max_nodes >= 1.
SearchResult find_sequence(const Quiver& q, SequenceMode mode, int max_depth,
                           long long max_nodes);

}  // namespace lequiver
