#include "doctest.h"

#include <set>
#include <string>
#include <vector>

#include "lequiver/construct.h"
#include "lequiver/le.h"
#include "lequiver/plabic.h"

using namespace lequiver;

namespace {

Quiver dual_of(const std::string& text) {
    return plabic_graph(gamma_graph(parse_diagram(text))).dual_quiver();
}

}  // namespace

TEST_SUITE("plabic") {

TEST_CASE("the lattice graph lists internal vertices and boundary endpoints") {
    GammaGraph g = gamma_graph(parse_diagram("01010/1101/00/01"));
    CHECK(g.internal.size() == 6);
    CHECK(g.boundary.size() == 9);
    int sources = 0;
    for (const auto& b : g.boundary) sources += b.source ? 1 : 0;
    CHECK(sources == 4);
    CHECK(g.one_left(Box{2, 2}));
    CHECK(!g.one_left(Box{2, 1}));
    CHECK(g.one_above(Box{2, 2}));
    CHECK(!g.one_above(Box{2, 1}));
    CHECK(!g.one_above(Box{1, 4}));
}

TEST_CASE("every edge of the lattice graph points down or left") {
    GammaGraph g = gamma_graph(parse_diagram("0110/0011"));
    CHECK(!g.edges.empty());
    for (const auto& e : g.edges) {
        bool down = e.from.x == e.to.x && e.from.y > e.to.y;
        bool left = e.from.y == e.to.y && e.from.x > e.to.x;
        CHECK((down || left));
    }
}

TEST_CASE("interior faces outnumber the ones by exactly one") {
    for_each_le_diagram(3, 3, [&](const LeDiagram& d) {
        PlabicGraph p = plabic_graph(gamma_graph(d));
        CHECK(p.faces().faces.size() == d.one_boxes().size() + 1);
        return true;
    });
}

TEST_CASE("the empty diagram spans the disk with a single face") {
    PlabicGraph p = plabic_graph(gamma_graph(parse_diagram("")));
    FaceSet fs = p.faces();
    REQUIRE(fs.faces.size() == 1);
    CHECK(fs.faces[0].name == "v0");
    Quiver dual = p.dual_quiver();
    CHECK(dual.size() == 1);
    CHECK(dual.frozen("v0"));
}

TEST_CASE("face names come from the anchors that land inside them") {
    FaceSet fs = plabic_graph(gamma_graph(parse_diagram("01010/1101/00/01"))).faces();
    std::set<std::string> names;
    for (const Face& f : fs.faces) names.insert(f.name);
    CHECK(names == std::set<std::string>{"v0", "v1,2", "v1,4", "v2,1", "v2,2",
                                         "v2,4", "v4,2"});
    const Face* base = fs.find("v0");
    REQUIRE(base != nullptr);
    CHECK(base->boundary);
    CHECK(base->labels == std::vector<std::string>{"v0", "v1,1"});
    const Face* merged = fs.find("v2,2");
    REQUIRE(merged != nullptr);
    CHECK(merged->labels == std::vector<std::string>{"v2,2", "v2,3", "v3,2"});
    CHECK(fs.find("v1,1") == nullptr);
}

TEST_CASE("the face dual matches the merge construction label for label") {
    for_each_le_diagram(2, 3, [&](const LeDiagram& d) {
        Quiver dual = plabic_graph(gamma_graph(d)).dual_quiver();
        CHECK(dual.sorted_by_id().same_as(quiver_from_le(d).sorted_by_id()));
        return true;
    });
    Quiver fig = dual_of("01010/1101/00/01");
    CHECK(fig.sorted_by_id().same_as(
        quiver_from_le(parse_diagram("01010/1101/00/01")).sorted_by_id()));
}

TEST_CASE("the all-ones rectangle reproduces the grid quiver") {
    CHECK(dual_of("111/111").sorted_by_id().same_as(
        Quiver::grid(2, 3).sorted_by_id()));
    CHECK(dual_of("1111/1111/1111").sorted_by_id().same_as(
        Quiver::grid(3, 4).sorted_by_id()));
}

TEST_CASE("erasing degree-2 vertices changes neither faces nor the dual") {
    for_each_le_diagram(2, 2, [&](const LeDiagram& d) {
        PlabicGraph p = plabic_graph(gamma_graph(d));
        PlabicGraph s = p.simplified();
        CHECK(s.vertex_count() <= p.vertex_count());
        CHECK(s.faces().faces.size() == p.faces().faces.size());
        CHECK(s.dual_quiver().sorted_by_id().same_as(p.dual_quiver().sorted_by_id()));
        return true;
    });

    PlabicGraph lone = plabic_graph(gamma_graph(parse_diagram("1")));
    CHECK(lone.simplified().vertex_count() < lone.vertex_count());
}

TEST_CASE("boundary faces freeze their dual vertices") {
    Quiver dual = dual_of("01010/1101/00/01");
    CHECK(dual.size() == 7);
    CHECK(dual.mutable_ids() == std::vector<std::string>{"v1,2"});
}

TEST_CASE("an isolated one yields two boundary faces and no arrows") {
    Quiver dual = dual_of("1");
    CHECK(dual.size() == 2);
    CHECK(dual.mutable_count() == 0);
    CHECK(dual.arrow_count() == 0);
}

TEST_CASE("all-zero diagrams hang lollipops and still collapse to one face") {
    Quiver dual = dual_of("00/00");
    CHECK(dual.size() == 1);
    CHECK(dual.frozen("v0"));
    CHECK(dual_of("000").size() == 1);
}

TEST_CASE("hand-built graphs validate their geometry") {
    using V = PlabicGraph::Vertex;
    std::vector<V> two = {{"p", {0, 0}, NodeColor::Black},
                          {"q", {8, 0}, NodeColor::White}};
    PlabicGraph g(two, {{{0, 0}, {8, 0}}});
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.degree(0) == 1);
    CHECK(g.faces().faces.size() == 1);

    CHECK_THROWS_AS(PlabicGraph({{"p", {0, 0}, NodeColor::Black},
                                 {"q", {0, 0}, NodeColor::White}},
                                {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(PlabicGraph(two, {{{0, 0}, {4, 4}}}), std::invalid_argument);
    CHECK_THROWS_AS(PlabicGraph(two, {{{0, 0}}}), std::invalid_argument);
}

TEST_CASE("dot output and face json stay in sync with the graph") {
    PlabicGraph p = plabic_graph(gamma_graph(parse_diagram("01/01")));
    std::string dot = p.to_dot();
    CHECK(dot.find("graph") != std::string::npos);
    nlohmann::json j = p.faces_json();
    CHECK(j["faces"].size() == p.faces().faces.size());
    CHECK(j.contains("outer"));
}

}  // TEST_SUITE
