// The geometric pipeline: a Le-diagram unfolds into its lattice line graph,
// that graph refines into a planar bicolored graph in a disk, faces are read
// off an integer rotation system, and the face-dual quiver drops out. Box
// (i,j) occupies the square [8(j-1),8j] x [-8i,-8(i-1)], so every comparison
// stays integral.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "lequiver/le.h"
#include "lequiver/quiver.h"

namespace lequiver {

struct InconsistentEmbedding : std::logic_error {
    explicit InconsistentEmbedding(const std::string& what);
};

struct Point {
    long long x = 0;
    long long y = 0;
    bool operator==(const Point&) const = default;
};

enum class NodeColor { Black, White, Boundary };

// The directed lattice graph of a diagram: one internal vertex per 1-box, a
// leftward line per occupied row running from the boundary through its
// 1-boxes, and a downward line per occupied column from its topmost 1-box to
// the boundary. Boundary vertices sit at the midpoints of the lattice-path
// steps (vertical steps are sources, horizontal steps are sinks), listed from
// the northeast end; rows and columns without 1-boxes keep an isolated
// boundary vertex.
struct GammaGraph {
    struct BoundaryVertex {
        bool source = false;  // true at a row end, false at a column end
        int line = 0;         // the row or column, 1-based
        Point pos;
    };
    struct Edge {
        Point from, to;  // oriented downward or leftward
    };

    LeDiagram diagram;
    std::vector<Box> internal;             // 1-boxes, reading order
    std::vector<BoundaryVertex> boundary;  // lattice-path order
    std::vector<Edge> edges;

    bool one_above(Box b) const;  // another 1-box higher in the same column
    bool one_left(Box b) const;   // another 1-box further left in the same row
};

GammaGraph gamma_graph(const LeDiagram& d);

struct Face {
    std::vector<int> half_edges;      // traversal orbit, interior on the left
    bool boundary = false;            // touches a boundary arc
    std::vector<std::string> labels;  // sorted anchor labels landing inside
    std::string name;                 // least label, or synthetic "f<n>"
};

struct FaceSet {
    std::vector<Face> faces;           // the outer face excluded
    std::optional<Face> outer;         // present when boundary arcs exist
    const Face* find(const std::string& name) const;
    nlohmann::json to_json() const;
};

class PlabicGraph {
  public:
    struct Vertex {
        std::string name;
        Point pos;
        NodeColor color = NodeColor::Black;
    };

    // Direct construction from geometry, for tests and experiments: each edge
    // is a polyline whose first and last points must be vertex positions, and
    // all vertex positions must be distinct.
    PlabicGraph(std::vector<Vertex> vertices,
                std::vector<std::vector<Point>> edge_polylines);

    int vertex_count() const { return static_cast<int>(verts_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int boundary_count() const;
    int interior_edge_count() const;  // edges that are not boundary arcs
    const std::vector<Vertex>& vertices() const { return verts_; }
    int degree(int v) const;

    // Removes interior degree-2 vertices, gluing their edge pairs; face
    // structure, labels and the dual quiver survive untouched.
    PlabicGraph simplified() const;

    // Orbit decomposition of the rotation system, Euler-checked; faces carry
    // the anchor labels assigned at construction.
    FaceSet faces() const;

    // One vertex per face, frozen when the face touches the boundary, one
    // arrow across each black-white edge oriented with the black endpoint on
    // the left, 2-cycles cancelling in the signed matrix.
    Quiver dual_quiver() const;

    std::string to_dot() const;
    nlohmann::json faces_json() const { return faces().to_json(); }

  private:
    struct EdgeRec {
        int u = 0, v = 0;
        std::vector<Point> poly;  // from u to v
        bool arc = false;         // boundary arc closing the disk
        bool closing = false;     // the arc from the path's end back to its start
        std::vector<std::string> fwd_labels, bwd_labels;
    };

    PlabicGraph() = default;
    void finalize();  // builds half-edge, rotation and face-successor tables

    // half-edge 2e runs u->v along edge e, 2e+1 runs v->u; twin(h) = h^1
    int half_count() const { return 2 * edge_count(); }
    int origin(int h) const;
    Point direction(int h) const;  // departure direction at the origin
    const std::vector<std::string>& labels(int h) const;

    std::vector<Vertex> verts_;
    std::vector<EdgeRec> edges_;
    std::vector<std::vector<int>> rotation_;  // per vertex, ccw by angle
    std::vector<int> next_;                   // face successor per half-edge
    int outer_half_ = -1;  // a half-edge on the outer face, -1 if no arcs

    friend PlabicGraph plabic_graph(const GammaGraph& g);
};

// Replaces each 1-box by its local gadget (selected by the pair "is there a
// 1 above / to the left"), joins the gadgets along the lattice lines, hangs a
// lollipop into every empty row and column so each boundary vertex has exactly
// one incident edge, closes the disk with boundary arcs, and shoots a ray from
// each box's southeast corner to record which face it belongs to.
PlabicGraph plabic_graph(const GammaGraph& g);

}  // namespace lequiver
