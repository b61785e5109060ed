#include "lequiver/construct.h"

#include <set>
#include <stdexcept>
#include <utility>

namespace lequiver {

namespace {

std::string kind_name(ScriptOp::Kind k) {
    switch (k) {
        case ScriptOp::Kind::Delete: return "delete";
        case ScriptOp::Kind::Mutate: return "mutate";
        case ScriptOp::Kind::Refreeze: return "refreeze";
    }
    throw std::logic_error("unhandled script op kind");
}

ScriptOp::Kind kind_from_name(const std::string& name) {
    if (name == "delete") return ScriptOp::Kind::Delete;
    if (name == "mutate") return ScriptOp::Kind::Mutate;
    if (name == "refreeze") return ScriptOp::Kind::Refreeze;
    throw std::invalid_argument("unknown script op \"" + name + "\"");
}

}  // namespace

nlohmann::json MutationScript::to_json() const {
    nlohmann::json ops_json = nlohmann::json::array();
    for (const ScriptOp& op : ops) {
        nlohmann::json o;
        o["op"] = kind_name(op.kind);
        if (op.kind == ScriptOp::Kind::Refreeze) {
            nlohmann::json freeze = nlohmann::json::object();
            for (const auto& [id, frozen] : op.freeze) freeze[id] = frozen;
            o["freeze"] = std::move(freeze);
        } else {
            o["vertex"] = op.vertex;
        }
        ops_json.push_back(std::move(o));
    }
    return nlohmann::json{{"rectangle", {rect_rows, rect_cols}},
                          {"target", target},
                          {"ops", std::move(ops_json)},
                          {"trace", trace}};
}

MutationScript MutationScript::from_json(const nlohmann::json& j) {
    MutationScript s;
    const auto& rect = j.at("rectangle");
    s.rect_rows = rect.at(0).get<int>();
    s.rect_cols = rect.at(1).get<int>();
    s.target = j.at("target").get<std::string>();
    for (const auto& o : j.at("ops")) {
        ScriptOp op;
        op.kind = kind_from_name(o.at("op").get<std::string>());
        if (op.kind == ScriptOp::Kind::Refreeze) {
            for (const auto& [id, frozen] : o.at("freeze").items())
                op.freeze[id] = frozen.get<bool>();
        } else {
            op.vertex = o.at("vertex").get<std::string>();
        }
        s.ops.push_back(std::move(op));
    }
    if (j.contains("trace"))
        for (const auto& line : j.at("trace"))
            s.trace.push_back(line.get<std::string>());
    return s;
}

std::map<std::string, bool> refreeze_map(const LeDiagram& d) {
    std::map<std::string, bool> freeze;
    const Shape& sh = d.shape();
    for (Box b : sh.boxes())
        freeze[vertex_id(b.row, b.col)] = !sh.contains(b.row + 1, b.col + 1);
    return freeze;
}

Quiver quiver_from_le(const LeDiagram& d) {
    const Shape& sh = d.shape();
    Quiver q = Quiver::grid(sh.rows(), sh.cols());
    std::vector<std::string> victims;
    for (int i = 1; i <= sh.rows(); ++i)
        for (int j = 1; j <= sh.cols(); ++j)
            if (!sh.contains(i, j)) victims.push_back(vertex_id(i, j));
    if (!victims.empty()) q = q.without(victims);
    q = q.refrozen(refreeze_map(d));
    return q.quotient(merge_clusters(d));
}

MutationScript grid_to_le_script(const LeDiagram& d) {
    const Shape& sh = d.shape();
    MutationScript script;
    script.rect_rows = sh.rows();
    script.rect_cols = sh.cols();
    script.target = d.to_text('/');

    for (int i = 1; i <= sh.rows(); ++i)
        for (int j = 1; j <= sh.cols(); ++j)
            if (!sh.contains(i, j))
                script.ops.push_back({ScriptOp::Kind::Delete, vertex_id(i, j), {}});
    script.ops.push_back({ScriptOp::Kind::Refreeze, "", refreeze_map(d)});

    // Occupancy of the shape's boxes. Chains slide vertices southeast, so a
    // position may later hold a vertex other than its namesake; deletions
    // vacate positions for good.
    std::map<std::pair<int, int>, std::string> occ;
    std::set<std::string> mutable_ids;
    for (Box b : sh.boxes()) {
        occ[{b.row, b.col}] = vertex_id(b.row, b.col);
        if (sh.contains(b.row + 1, b.col + 1)) mutable_ids.insert(vertex_id(b.row, b.col));
    }
    auto box_tag = [](Box b) {
        return "box (" + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
    };

    // Union-find over box labels, mirroring the clusters the zero boxes glue
    // together. Each live mutable vertex stands for one mutable cluster; when
    // a merge freezes a cluster, that stand-in has to be deleted, and it may
    // sit anywhere on the cluster, not just on the arms of the current box.
    std::map<std::string, std::string> parent;
    std::map<std::string, std::vector<std::string>> group;
    auto find_root = [&](std::string x) {
        while (true) {
            auto it = parent.find(x);
            if (it == parent.end()) {
                parent.emplace(x, x);
                group[x] = {x};
                return x;
            }
            if (it->second == x) return x;
            x = it->second;
        }
    };
    auto unite = [&](const std::string& a, const std::string& b) {
        std::string ra = find_root(a), rb = find_root(b);
        if (ra == rb) return;
        if (group[ra].size() < group[rb].size()) std::swap(ra, rb);
        parent[rb] = ra;
        auto& big = group[ra];
        auto& small = group[rb];
        big.insert(big.end(), small.begin(), small.end());
        group.erase(rb);
    };

    for (Box z : d.zero_boxes()) {
        auto head = occ.find({z.row, z.col});
        if (head == occ.end())
            throw std::logic_error(box_tag(z) + " is vacant before its turn");
        const MergeSet glue = merge_set(d, z);
        auto absorb = [&]() {
            for (const std::string& m : glue.members) unite(vertex_id(z.row, z.col), m);
        };
        if (mutable_ids.count(head->second)) {
            // Maximal southeast run of mutable occupants: mutate all of them
            // head first, delete the last, slide the rest one step southeast.
            std::vector<std::pair<int, int>> run;
            std::vector<std::string> who;
            for (int i = z.row, j = z.col;; ++i, ++j) {
                auto it = occ.find({i, j});
                if (it == occ.end() || !mutable_ids.count(it->second)) break;
                run.emplace_back(i, j);
                who.push_back(it->second);
            }
            std::string note = box_tag(z) + ": mutate";
            for (const std::string& v : who) {
                script.ops.push_back({ScriptOp::Kind::Mutate, v, {}});
                note += " " + v;
            }
            script.ops.push_back({ScriptOp::Kind::Delete, who.back(), {}});
            note += "; delete " + who.back();
            for (size_t t = 0; t + 1 < run.size(); ++t) occ[run[t + 1]] = who[t];
            occ.erase(run.front());
            script.trace.push_back(std::move(note));
            absorb();
            continue;
        }

        // Frozen occupant: the merge freezes everything it glues together,
        // so each absorbed cluster's live mutable stand-in disappears. Find
        // those stand-ins by scanning each cluster's box positions.
        std::string note = box_tag(z) + ": occupant " + head->second + " frozen";
        std::set<std::string> roots;
        for (const std::string& m : glue.members) {
            if (m == v0_id()) continue;
            roots.insert(find_root(m));
        }
        roots.erase(find_root(vertex_id(z.row, z.col)));
        bool deleted = false;
        for (const std::string& r : roots) {
            for (const std::string& m : group[r]) {
                Box b = *parse_vertex_id(m);
                auto it = occ.find({b.row, b.col});
                if (it == occ.end() || !mutable_ids.count(it->second)) continue;
                script.ops.push_back({ScriptOp::Kind::Delete, it->second, {}});
                note += "; delete " + it->second;
                occ.erase(it);
                deleted = true;
            }
        }
        if (!deleted) note += "; nothing mutable to delete";
        script.trace.push_back(std::move(note));
        absorb();
    }
    return script;
}

Quiver apply_script(const Quiver& q, const MutationScript& script) {
    Quiver cur = q;
    for (size_t step = 0; step < script.ops.size(); ++step) {
        const ScriptOp& op = script.ops[step];
        auto at_step = [&](const std::string& id) {
            return id + " (step " + std::to_string(step + 1) + ")";
        };
        try {
            switch (op.kind) {
                case ScriptOp::Kind::Delete: cur = cur.without({op.vertex}); break;
                case ScriptOp::Kind::Mutate: cur = cur.mutated(op.vertex); break;
                case ScriptOp::Kind::Refreeze: cur = cur.refrozen(op.freeze); break;
            }
        } catch (const UnknownVertex& e) {
            throw UnknownVertex(at_step(e.id));
        } catch (const FrozenVertex& e) {
            throw FrozenVertex(at_step(e.id));
        }
    }
    return cur;
}

}  // namespace lequiver
