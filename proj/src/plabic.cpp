#include "lequiver/plabic.h"

#include <algorithm>
#include <map>
#include <set>

namespace lequiver {

namespace {

// 0 covers angles in [0, pi) measured from due east, 1 covers the rest, so
// (half, cross) sorts directions counterclockwise without any floating point.
int angle_half(Point d) {
    if (d.y != 0) return d.y > 0 ? 0 : 1;
    return d.x > 0 ? 0 : 1;
}

long long cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }

Point box_center(int i, int j) { return {8LL * j - 4, -8LL * i + 4}; }

}  // namespace

InconsistentEmbedding::InconsistentEmbedding(const std::string& what)
    : std::logic_error(what) {}

bool GammaGraph::one_above(Box b) const {
    for (int i = 1; i < b.row; ++i)
        if (diagram.one_at(i, b.col)) return true;
    return false;
}

bool GammaGraph::one_left(Box b) const {
    for (int j = 1; j < b.col; ++j)
        if (diagram.one_at(b.row, j)) return true;
    return false;
}

GammaGraph gamma_graph(const LeDiagram& d) {
    GammaGraph g{d, {}, {}, {}};
    const Shape& sh = d.shape();
    int r = sh.rows();
    g.internal = d.one_boxes();
    for (int i = 1; i <= r; ++i) {
        g.boundary.push_back(
            {true, i, {8LL * sh.row_length(i), -8LL * i + 4}});
        int lo = (i < r) ? sh.row_length(i + 1) : 0;
        for (int j = sh.row_length(i); j > lo; --j)
            g.boundary.push_back(
                {false, j, {8LL * j - 4, -8LL * sh.col_length(j)}});
    }
    for (int i = 1; i <= r; ++i) {
        std::vector<int> js;
        for (int j = 1; j <= sh.row_length(i); ++j)
            if (d.one_at(i, j)) js.push_back(j);
        if (js.empty()) continue;
        Point prev{8LL * sh.row_length(i), -8LL * i + 4};
        for (int s = static_cast<int>(js.size()) - 1; s >= 0; --s) {
            Point cur = box_center(i, js[s]);
            g.edges.push_back({prev, cur});
            prev = cur;
        }
    }
    for (int j = 1; j <= sh.cols(); ++j) {
        std::vector<int> is;
        for (int i = 1; i <= sh.col_length(j); ++i)
            if (d.one_at(i, j)) is.push_back(i);
        if (is.empty()) continue;
        Point prev = box_center(is[0], j);
        for (size_t s = 1; s < is.size(); ++s) {
            Point cur = box_center(is[s], j);
            g.edges.push_back({prev, cur});
            prev = cur;
        }
        g.edges.push_back({prev, {8LL * j - 4, -8LL * sh.col_length(j)}});
    }
    return g;
}

PlabicGraph::PlabicGraph(std::vector<Vertex> vertices,
                         std::vector<std::vector<Point>> edge_polylines) {
    verts_ = std::move(vertices);
    std::map<std::pair<long long, long long>, int> at;
    for (int i = 0; i < vertex_count(); ++i) {
        auto key = std::pair(verts_[i].pos.x, verts_[i].pos.y);
        if (!at.emplace(key, i).second)
            throw std::invalid_argument("two vertices share a position");
    }
    for (auto& poly : edge_polylines) {
        if (poly.size() < 2)
            throw std::invalid_argument("an edge polyline needs two points");
        auto fu = at.find({poly.front().x, poly.front().y});
        auto fv = at.find({poly.back().x, poly.back().y});
        if (fu == at.end() || fv == at.end())
            throw std::invalid_argument("edge endpoint is not a vertex");
        EdgeRec e;
        e.u = fu->second;
        e.v = fv->second;
        e.poly = std::move(poly);
        edges_.push_back(std::move(e));
    }
    finalize();
}

int PlabicGraph::origin(int h) const {
    const EdgeRec& e = edges_[h / 2];
    return (h & 1) ? e.v : e.u;
}

Point PlabicGraph::direction(int h) const {
    const auto& poly = edges_[h / 2].poly;
    Point a = (h & 1) ? poly[poly.size() - 1] : poly[0];
    Point b = (h & 1) ? poly[poly.size() - 2] : poly[1];
    return {b.x - a.x, b.y - a.y};
}

const std::vector<std::string>& PlabicGraph::labels(int h) const {
    const EdgeRec& e = edges_[h / 2];
    return (h & 1) ? e.bwd_labels : e.fwd_labels;
}

void PlabicGraph::finalize() {
    for (const EdgeRec& e : edges_) {
        if (e.poly.size() < 2 || e.poly.front() != verts_[e.u].pos ||
            e.poly.back() != verts_[e.v].pos)
            throw InconsistentEmbedding(
                "edge polyline disagrees with its endpoints");
        for (size_t t = 0; t + 1 < e.poly.size(); ++t)
            if (e.poly[t] == e.poly[t + 1])
                throw InconsistentEmbedding("degenerate polyline segment");
    }
    int H = half_count();
    rotation_.assign(verts_.size(), {});
    for (int h = 0; h < H; ++h) rotation_[origin(h)].push_back(h);
    for (auto& rot : rotation_) {
        std::sort(rot.begin(), rot.end(), [this](int a, int b) {
            Point da = direction(a), db = direction(b);
            int ha = angle_half(da), hb = angle_half(db);
            if (ha != hb) return ha < hb;
            return cross(da, db) > 0;
        });
        for (size_t t = 0; t + 1 < rot.size(); ++t) {
            Point da = direction(rot[t]), db = direction(rot[t + 1]);
            if (angle_half(da) == angle_half(db) && cross(da, db) == 0)
                throw InconsistentEmbedding(
                    "coincident edge directions at vertex " +
                    verts_[origin(rot[t])].name);
        }
    }
    // Face successor with the interior on the left: step to the twin, then to
    // the counterclockwise predecessor around the twin's origin.
    next_.assign(H, -1);
    for (int h = 0; h < H; ++h) {
        int tw = h ^ 1;
        const auto& rot = rotation_[origin(tw)];
        int pos = static_cast<int>(
            std::find(rot.begin(), rot.end(), tw) - rot.begin());
        int deg = static_cast<int>(rot.size());
        next_[h] = rot[(pos + deg - 1) % deg];
    }
    for (int v = 0; v < vertex_count(); ++v) {
        if (verts_[v].color != NodeColor::Boundary) continue;
        int plain = 0;
        for (int h : rotation_[v])
            if (!edges_[h / 2].arc) ++plain;
        if (plain != 1)
            throw InconsistentEmbedding("boundary vertex " + verts_[v].name +
                                        " must carry exactly one edge");
    }
    outer_half_ = -1;
    for (int e = 0; e < edge_count(); ++e)
        if (edges_[e].closing) outer_half_ = 2 * e;
}

int PlabicGraph::boundary_count() const {
    int n = 0;
    for (const Vertex& v : verts_)
        if (v.color == NodeColor::Boundary) ++n;
    return n;
}

int PlabicGraph::interior_edge_count() const {
    int n = 0;
    for (const EdgeRec& e : edges_)
        if (!e.arc) ++n;
    return n;
}

int PlabicGraph::degree(int v) const {
    return static_cast<int>(rotation_.at(v).size());
}

PlabicGraph PlabicGraph::simplified() const {
    std::vector<Vertex> verts = verts_;
    std::vector<EdgeRec> edges = edges_;
    std::vector<bool> vdead(verts.size(), false), edead(edges.size(), false);

    auto reversed = [](EdgeRec e) {
        std::swap(e.u, e.v);
        std::reverse(e.poly.begin(), e.poly.end());
        std::swap(e.fwd_labels, e.bwd_labels);
        return e;
    };

    bool progress = true;
    while (progress) {
        progress = false;
        for (int x = 0; x < static_cast<int>(verts.size()); ++x) {
            if (vdead[x] || verts[x].color == NodeColor::Boundary) continue;
            std::vector<std::pair<int, bool>> inc;  // edge, x sits at u
            for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
                if (edead[e]) continue;
                if (edges[e].u == x) inc.push_back({e, true});
                if (edges[e].v == x) inc.push_back({e, false});
            }
            if (inc.size() != 2 || inc[0].first == inc[1].first) continue;
            EdgeRec into = inc[0].second ? reversed(edges[inc[0].first])
                                         : edges[inc[0].first];
            EdgeRec out = inc[1].second ? edges[inc[1].first]
                                        : reversed(edges[inc[1].first]);
            EdgeRec merged;
            merged.u = into.u;
            merged.v = out.v;
            merged.poly = into.poly;
            merged.poly.insert(merged.poly.end(), out.poly.begin() + 1,
                               out.poly.end());
            merged.arc = into.arc || out.arc;
            merged.closing = into.closing || out.closing;
            merged.fwd_labels = into.fwd_labels;
            merged.fwd_labels.insert(merged.fwd_labels.end(),
                                     out.fwd_labels.begin(),
                                     out.fwd_labels.end());
            merged.bwd_labels = out.bwd_labels;
            merged.bwd_labels.insert(merged.bwd_labels.end(),
                                     into.bwd_labels.begin(),
                                     into.bwd_labels.end());
            edead[inc[0].first] = edead[inc[1].first] = true;
            edges.push_back(std::move(merged));
            edead.push_back(false);
            vdead[x] = true;
            progress = true;
        }
    }

    std::vector<int> remap(verts.size(), -1);
    PlabicGraph out;
    for (int v = 0; v < static_cast<int>(verts.size()); ++v) {
        if (vdead[v]) continue;
        remap[v] = out.vertex_count();
        out.verts_.push_back(verts[v]);
    }
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        if (edead[e]) continue;
        EdgeRec rec = edges[e];
        rec.u = remap[rec.u];
        rec.v = remap[rec.v];
        out.edges_.push_back(std::move(rec));
    }
    out.finalize();
    return out;
}

FaceSet PlabicGraph::faces() const {
    FaceSet fs;
    if (vertex_count() == 0) {
        // An empty diagram still spans the disk: one all-boundary face.
        Face f;
        f.boundary = true;
        f.name = "v0";
        fs.faces.push_back(std::move(f));
        return fs;
    }
    int H = half_count();
    std::vector<int> face_of(H, -1);
    std::vector<Face> all;
    for (int h0 = 0; h0 < H; ++h0) {
        if (face_of[h0] >= 0) continue;
        Face f;
        int idx = static_cast<int>(all.size());
        for (int h = h0; face_of[h] < 0; h = next_[h]) {
            face_of[h] = idx;
            f.half_edges.push_back(h);
            if (edges_[h / 2].arc) f.boundary = true;
            for (const std::string& s : labels(h)) f.labels.push_back(s);
        }
        std::sort(f.labels.begin(), f.labels.end());
        f.labels.erase(std::unique(f.labels.begin(), f.labels.end()),
                       f.labels.end());
        all.push_back(std::move(f));
    }
    long long euler = static_cast<long long>(vertex_count()) - edge_count() +
                      static_cast<long long>(all.size());
    if (euler != 2)
        throw InconsistentEmbedding("V - E + F = " + std::to_string(euler) +
                                    ", expected 2");
    bool any_labels = false;
    for (const Face& f : all)
        if (!f.labels.empty()) any_labels = true;
    int outer_idx = outer_half_ >= 0 ? face_of[outer_half_] : -1;
    int synthetic = 0;
    for (int i = 0; i < static_cast<int>(all.size()); ++i) {
        Face& f = all[i];
        if (i == outer_idx) {
            if (!f.labels.empty())
                throw InconsistentEmbedding(
                    "anchor label landed on the outer face");
            f.name = "outer";
            fs.outer = std::move(f);
            continue;
        }
        if (!f.labels.empty())
            f.name = f.labels.front();
        else if (any_labels)
            throw InconsistentEmbedding("face carries no anchor label");
        else
            f.name = "f" + std::to_string(synthetic++);
        fs.faces.push_back(std::move(f));
    }
    return fs;
}

const Face* FaceSet::find(const std::string& name) const {
    for (const Face& f : faces)
        if (f.name == name) return &f;
    return nullptr;
}

nlohmann::json FaceSet::to_json() const {
    nlohmann::json out;
    out["faces"] = nlohmann::json::array();
    for (const Face& f : faces)
        out["faces"].push_back({{"name", f.name},
                                {"boundary", f.boundary},
                                {"labels", f.labels},
                                {"sides", f.half_edges.size()}});
    if (outer)
        out["outer"] = {{"sides", outer->half_edges.size()}};
    return out;
}

Quiver PlabicGraph::dual_quiver() const {
    FaceSet fs = faces();
    std::vector<int> face_of(half_count(), -1);
    for (int i = 0; i < static_cast<int>(fs.faces.size()); ++i)
        for (int h : fs.faces[i].half_edges) face_of[h] = i;

    std::vector<std::pair<std::string, bool>> named;
    for (const Face& f : fs.faces) named.push_back({f.name, f.boundary});
    std::sort(named.begin(), named.end());
    Quiver q(named);

    std::map<std::pair<int, int>, long long> net;
    for (int e = 0; e < edge_count(); ++e) {
        const EdgeRec& er = edges_[e];
        if (er.arc) continue;
        NodeColor cu = verts_[er.u].color, cv = verts_[er.v].color;
        if (cu == NodeColor::Boundary || cv == NodeColor::Boundary) continue;
        if (cu == cv) continue;
        int white_to_black = (cu == NodeColor::White) ? 2 * e : 2 * e + 1;
        int from = face_of[white_to_black];
        int to = face_of[white_to_black ^ 1];
        if (from < 0 || to < 0)
            throw InconsistentEmbedding("interior edge borders the outer face");
        if (from == to) continue;
        auto key = std::minmax(from, to);
        net[{key.first, key.second}] += (from < to) ? 1 : -1;
    }
    for (const auto& [pair, mult] : net) {
        if (mult == 0) continue;
        const Face& a = fs.faces[pair.first];
        const Face& b = fs.faces[pair.second];
        if (a.boundary && b.boundary) continue;
        q.set_arrow(a.name, b.name, mpz_class(static_cast<long>(mult)));
    }
    q.check_invariants();
    return q;
}

std::string PlabicGraph::to_dot() const {
    std::string out = "graph plabic {\n";
    for (const Vertex& v : verts_) {
        out += "  \"" + v.name + "\" [pos=\"" + std::to_string(v.pos.x) + "," +
               std::to_string(v.pos.y) + "!\"";
        switch (v.color) {
            case NodeColor::Black:
                out += " shape=circle style=filled fillcolor=black";
                break;
            case NodeColor::White:
                out += " shape=circle style=filled fillcolor=white";
                break;
            case NodeColor::Boundary:
                out += " shape=point";
                break;
        }
        out += "];\n";
    }
    for (const EdgeRec& e : edges_) {
        out += "  \"" + verts_[e.u].name + "\" -- \"" + verts_[e.v].name + "\"";
        if (e.arc) out += " [style=dashed]";
        out += ";\n";
    }
    out += "}\n";
    return out;
}

PlabicGraph plabic_graph(const GammaGraph& g) {
    const LeDiagram& d = g.diagram;
    const Shape& sh = d.shape();
    int r = sh.rows(), c = sh.cols();
    PlabicGraph p;
    if (r == 0) {
        p.finalize();
        return p;
    }

    auto add = [&p](std::string name, Point pos, NodeColor color) {
        p.verts_.push_back({std::move(name), pos, color});
        return p.vertex_count() - 1;
    };
    auto tag = [](int i, int j) {
        return std::to_string(i) + "," + std::to_string(j);
    };

    // Gadgets. The key is (a 1 above?, a 1 to the left?): the main vertex is
    // white exactly for (no, yes); (yes, yes) adds a white satellite just
    // southwest of the center carrying the down and left ports.
    std::map<std::pair<int, int>, int> main_at, sat_at;
    for (Box b : g.internal) {
        bool above = g.one_above(b), left = g.one_left(b);
        NodeColor color =
            (!above && left) ? NodeColor::White : NodeColor::Black;
        std::string name =
            (color == NodeColor::White ? "w" : "b") + tag(b.row, b.col);
        main_at[{b.row, b.col}] =
            add(std::move(name), box_center(b.row, b.col), color);
        if (above && left)
            sat_at[{b.row, b.col}] =
                add("s" + tag(b.row, b.col),
                    {8LL * b.col - 5, -8LL * b.row + 3}, NodeColor::White);
    }
    auto down_port = [&](int i, int j) {
        auto s = sat_at.find({i, j});
        return s != sat_at.end() ? s->second : main_at.at({i, j});
    };
    auto left_port = down_port;  // both live on the satellite when it exists

    std::vector<int> src(r + 1, -1), snk(c + 1, -1), bv_order;
    for (const auto& bv : g.boundary) {
        int vi = add((bv.source ? "src" : "snk") + std::to_string(bv.line),
                     bv.pos, NodeColor::Boundary);
        (bv.source ? src : snk)[bv.line] = vi;
        bv_order.push_back(vi);
    }

    auto add_edge = [&p](int u, int v) {
        PlabicGraph::EdgeRec e;
        e.u = u;
        e.v = v;
        e.poly = {p.verts_[u].pos, p.verts_[v].pos};
        p.edges_.push_back(std::move(e));
    };

    for (int i = 1; i <= r; ++i) {
        std::vector<int> js;
        for (int j = 1; j <= sh.row_length(i); ++j)
            if (d.one_at(i, j)) js.push_back(j);
        if (js.empty()) {
            int lol = add("lr" + std::to_string(i),
                          {8LL * sh.row_length(i) - 2, -8LL * i + 4},
                          NodeColor::Black);
            add_edge(lol, src[i]);
            continue;
        }
        for (size_t s = 0; s + 1 < js.size(); ++s)
            add_edge(main_at.at({i, js[s]}), left_port(i, js[s + 1]));
        add_edge(main_at.at({i, js.back()}), src[i]);
    }
    for (int j = 1; j <= c; ++j) {
        std::vector<int> is;
        for (int i = 1; i <= sh.col_length(j); ++i)
            if (d.one_at(i, j)) is.push_back(i);
        if (is.empty()) {
            int lol = add("lc" + std::to_string(j),
                          {8LL * j - 4, -8LL * sh.col_length(j) + 2},
                          NodeColor::White);
            add_edge(lol, snk[j]);
            continue;
        }
        for (size_t s = 0; s + 1 < is.size(); ++s)
            add_edge(down_port(is[s], j), main_at.at({is[s + 1], j}));
        add_edge(down_port(is.back(), j), snk[j]);
    }
    for (const auto& [box, sat] : sat_at) add_edge(main_at.at(box), sat);

    // Boundary arcs hug the lattice path between consecutive midpoints; the
    // closing arc returns around the northwest of the diagram.
    for (size_t s = 0; s + 1 < g.boundary.size(); ++s) {
        const auto& bv = g.boundary[s];
        Point corner = bv.source
                           ? Point{8LL * sh.row_length(bv.line), -8LL * bv.line}
                           : Point{8LL * (bv.line - 1),
                                   -8LL * sh.col_length(bv.line)};
        PlabicGraph::EdgeRec e;
        e.u = bv_order[s];
        e.v = bv_order[s + 1];
        e.poly = {bv.pos, corner, g.boundary[s + 1].pos};
        e.arc = true;
        p.edges_.push_back(std::move(e));
    }
    {
        PlabicGraph::EdgeRec e;
        e.u = bv_order.back();
        e.v = bv_order.front();
        e.poly = {g.boundary.back().pos,
                  {0, -8LL * r},
                  {0, 0},
                  {8LL * c, 0},
                  g.boundary.front().pos};
        e.arc = true;
        e.closing = true;
        p.edges_.push_back(std::move(e));
    }

    // Anchors: each box belongs to the face just northwest of its southeast
    // corner, and the face of the top-left corner completes the labeling. A
    // ray straight down from the anchor hits some segment strictly below
    // (the bottom arcs at worst); the label rides on the half-edge crossing
    // that segment eastward, whose face has the anchor on its left.
    auto shoot = [&p](Point anchor, const std::string& label) {
        long long bn = 0, bd = 0;  // best crossing height as bn/bd, bd > 0
        PlabicGraph::EdgeRec* best = nullptr;
        bool best_fwd_east = false;
        for (auto& e : p.edges_) {
            for (size_t t = 0; t + 1 < e.poly.size(); ++t) {
                Point a = e.poly[t], b = e.poly[t + 1];
                if (a.x == b.x) continue;
                if (std::min(a.x, b.x) >= anchor.x ||
                    std::max(a.x, b.x) <= anchor.x)
                    continue;
                long long den = b.x - a.x;
                long long num = a.y * den + (b.y - a.y) * (anchor.x - a.x);
                if (den < 0) {
                    den = -den;
                    num = -num;
                }
                if (num >= anchor.y * den) continue;  // not strictly below
                if (best && num * bd <= bn * den) continue;
                bn = num;
                bd = den;
                best = &e;
                best_fwd_east = b.x > a.x;
            }
        }
        if (!best)
            throw InconsistentEmbedding("anchor ray escaped the disk");
        (best_fwd_east ? best->fwd_labels : best->bwd_labels)
            .push_back(label);
    };
    shoot({1, -1}, v0_id());
    for (Box b : sh.boxes())
        shoot({8LL * b.col - 1, -8LL * b.row + 1}, vertex_id(b.row, b.col));

    p.finalize();
    return p;
}

}  // namespace lequiver
