#include "doctest.h"

#include <string>
#include <utility>
#include <vector>

#include "lequiver/construct.h"
#include "lequiver/le.h"
#include "lequiver/quiver.h"

using namespace lequiver;

namespace {

const char* kWorked = "01010/1101/00/01";

std::vector<std::pair<std::string, std::string>> op_list(const MutationScript& s) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const ScriptOp& op : s.ops) {
        switch (op.kind) {
            case ScriptOp::Kind::Delete: out.emplace_back("delete", op.vertex); break;
            case ScriptOp::Kind::Mutate: out.emplace_back("mutate", op.vertex); break;
            case ScriptOp::Kind::Refreeze: out.emplace_back("refreeze", ""); break;
        }
    }
    return out;
}

bool mutable_parts_match(const LeDiagram& d) {
    MutationScript s = grid_to_le_script(d);
    Quiver scripted =
        apply_script(Quiver::grid(s.rect_rows, s.rect_cols), s).mutable_part();
    Quiver merged = quiver_from_le(d).mutable_part();
    return find_isomorphism(scripted, merged).has_value();
}

}  // namespace

TEST_SUITE("construct") {

TEST_CASE("the merge construction reproduces the worked quiver exactly") {
    Quiver q = quiver_from_le(parse_diagram(kWorked));
    CHECK(q.sorted_by_id().ids() ==
          std::vector<std::string>{"v0", "v1,2", "v1,4", "v2,1", "v2,2", "v2,4",
                                   "v4,2"});
    CHECK(q.mutable_ids() == std::vector<std::string>{"v1,2"});
    CHECK(q.b("v1,2", "v0") == 1);
    CHECK(q.b("v1,4", "v1,2") == 1);
    CHECK(q.b("v2,2", "v1,2") == 1);
    CHECK(q.b("v1,2", "v2,4") == 1);
    CHECK(q.arrow_count() == 4);
}

TEST_CASE("an all-ones rectangle is the grid quiver unchanged") {
    LeDiagram ones(Shape({4, 4, 4}), {{1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}});
    CHECK(quiver_from_le(ones).sorted_by_id().same_as(
        Quiver::grid(3, 4).sorted_by_id()));
}

TEST_CASE("refreezing follows the staircase of the shape") {
    auto freeze = refreeze_map(parse_diagram(kWorked));
    CHECK(!freeze.at("v1,1"));
    CHECK(!freeze.at("v1,3"));
    CHECK(freeze.at("v1,4"));
    CHECK(freeze.at("v1,5"));
    CHECK(!freeze.at("v2,1"));
    CHECK(freeze.at("v2,2"));
    CHECK(!freeze.at("v3,1"));
    CHECK(freeze.at("v3,2"));
    CHECK(freeze.at("v4,1"));
    CHECK(freeze.at("v4,2"));
    CHECK(freeze.size() == 13);
}

TEST_CASE("a single cleared box mutates down the diagonal and drops the end") {
    MutationScript s = grid_to_le_script(parse_diagram("011/111/111"));
    CHECK(s.rect_rows == 3);
    CHECK(s.rect_cols == 3);
    CHECK(s.target == "011/111/111");
    CHECK(op_list(s) == std::vector<std::pair<std::string, std::string>>{
                            {"refreeze", ""},
                            {"mutate", "v1,1"},
                            {"mutate", "v2,2"},
                            {"delete", "v2,2"}});
}

TEST_CASE("the worked diagram's script lists its deletions and mutations in order") {
    MutationScript s = grid_to_le_script(parse_diagram(kWorked));
    CHECK(s.rect_rows == 4);
    CHECK(s.rect_cols == 5);
    CHECK(op_list(s) == std::vector<std::pair<std::string, std::string>>{
                            {"delete", "v2,5"},
                            {"delete", "v3,3"},
                            {"delete", "v3,4"},
                            {"delete", "v3,5"},
                            {"delete", "v4,3"},
                            {"delete", "v4,4"},
                            {"delete", "v4,5"},
                            {"refreeze", ""},
                            {"mutate", "v1,1"},
                            {"delete", "v1,1"},
                            {"mutate", "v1,3"},
                            {"delete", "v1,3"},
                            {"mutate", "v3,1"},
                            {"delete", "v3,1"},
                            {"delete", "v2,1"}});
    CHECK(s.trace.size() == 7);
}

TEST_CASE("a merge that freezes a cluster deletes its mutable stand-in") {
    // After the first two boxes clear, the cluster's only mutable vertex sits
    // at (1,1), away from the arms of the box that freezes it.
    MutationScript s = grid_to_le_script(parse_diagram("101/000/10"));
    bool deletes_corner = false;
    for (const ScriptOp& op : s.ops)
        deletes_corner |= op.kind == ScriptOp::Kind::Delete && op.vertex == "v1,1";
    CHECK(deletes_corner);
    Quiver result = apply_script(Quiver::grid(3, 3), s);
    CHECK(result.mutable_count() == 0);
    CHECK(quiver_from_le(parse_diagram("101/000/10")).mutable_count() == 0);
}

TEST_CASE("applying the script gives the construction's mutable part") {
    for_each_le_diagram(2, 3, [&](const LeDiagram& d) {
        CHECK(mutable_parts_match(d));
        return true;
    });
    CHECK(mutable_parts_match(parse_diagram(kWorked)));
    CHECK(mutable_parts_match(parse_diagram("1111/1111/1111")));
}

TEST_CASE("scripts survive a json round trip") {
    MutationScript s = grid_to_le_script(parse_diagram(kWorked));
    nlohmann::json j = s.to_json();
    CHECK(j["rectangle"] == nlohmann::json::array({4, 5}));
    CHECK(j["target"] == kWorked);
    MutationScript back = MutationScript::from_json(j);
    CHECK(back.rect_rows == s.rect_rows);
    CHECK(back.rect_cols == s.rect_cols);
    CHECK(back.target == s.target);
    CHECK(op_list(back) == op_list(s));
    CHECK(back.trace == s.trace);
    Quiver a = apply_script(Quiver::grid(4, 5), s);
    Quiver b = apply_script(Quiver::grid(4, 5), back);
    CHECK(a.same_as(b));
}

TEST_CASE("script errors carry the failing step") {
    MutationScript s = grid_to_le_script(parse_diagram("011/111/111"));
    s.ops.push_back({ScriptOp::Kind::Delete, "v9,9", {}});
    try {
        apply_script(Quiver::grid(3, 3), s);
        FAIL("expected UnknownVertex");
    } catch (const UnknownVertex& e) {
        CHECK(e.id == "v9,9 (step 5)");
    }

    MutationScript bad = grid_to_le_script(parse_diagram("011/111/111"));
    bad.ops[1].vertex = "v3,3";
    CHECK_THROWS_AS(apply_script(Quiver::grid(3, 3), bad), FrozenVertex);
}

TEST_CASE("the empty diagram collapses to the base vertex alone") {
    LeDiagram none = parse_diagram("");
    Quiver q = quiver_from_le(none);
    CHECK(q.size() == 1);
    CHECK(q.id(0) == "v0");
    CHECK(q.frozen(0));

    MutationScript s = grid_to_le_script(none);
    CHECK(s.rect_rows == 0);
    CHECK(s.rect_cols == 0);
    Quiver applied = apply_script(Quiver::grid(0, 0), s);
    CHECK(applied.same_as(q));
}

}  // TEST_SUITE
