// Two routes from a diagram to its quiver: carve the rectangle grid down and
// merge the zero-box clusters in one shot, or emit an explicit step-by-step
// script of deletions, mutations, and a refreeze that reaches the same
// mutable part.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "lequiver/le.h"
#include "lequiver/quiver.h"

namespace lequiver {

struct ScriptOp {
    enum class Kind { Delete, Mutate, Refreeze };
    Kind kind = Kind::Delete;
    std::string vertex;                  // Delete and Mutate
    std::map<std::string, bool> freeze;  // Refreeze
};

struct MutationScript {
    int rect_rows = 0;  // bounding rectangle the script starts from
    int rect_cols = 0;
    std::string target;  // the diagram, rows joined with '/'
    std::vector<ScriptOp> ops;
    std::vector<std::string> trace;  // one human-readable note per zero box

    nlohmann::json to_json() const;
    static MutationScript from_json(const nlohmann::json& j);
};

// v_{i,j} stays mutable exactly when box (i+1,j+1) is still in the shape.
std::map<std::string, bool> refreeze_map(const LeDiagram& d);

// Grid quiver of the bounding rectangle with out-of-shape vertices deleted,
// flags refrozen, and every zero-box cluster merged. Vertices are named by
// their cluster's least member.
Quiver quiver_from_le(const LeDiagram& d);

// Builds the script: rectangle deletions and the refreeze first, then each
// zero box in reading order either launches a southeast chain of mutations
// ending in a deletion, or, when its occupant is frozen, deletes the
// occupant's merge partner if that partner is mutable.
MutationScript grid_to_le_script(const LeDiagram& d);

// Folds the script over q. UnknownVertex and FrozenVertex are rethrown with
// the one-based step number appended.
Quiver apply_script(const Quiver& q, const MutationScript& script);

}  // namespace lequiver
