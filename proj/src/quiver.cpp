#include "lequiver/quiver.h"

#include <algorithm>
#include <cstdint>
#include <set>

#include "lequiver/le.h"

namespace lequiver {

UnknownVertex::UnknownVertex(std::string vertex)
    : std::invalid_argument("unknown vertex " + vertex), id(std::move(vertex)) {}

FrozenVertex::FrozenVertex(std::string vertex)
    : std::invalid_argument("vertex " + vertex + " is frozen"),
      id(std::move(vertex)) {}

Quiver::Quiver(std::vector<std::pair<std::string, bool>> vertices) {
    for (auto& [name, frozen] : vertices) {
        if (has_vertex(name))
            throw std::invalid_argument("duplicate vertex " + name);
        ids_.push_back(name);
        frozen_.push_back(frozen);
    }
    b_.assign(ids_.size(), std::vector<mpz_class>(ids_.size(), 0));
}

Quiver Quiver::grid(int r, int c) {
    if (r < 0 || c < 0)
        throw std::invalid_argument("grid sides must be nonnegative");
    std::vector<std::pair<std::string, bool>> verts;
    verts.emplace_back(v0_id(), true);
    if (r == 0 || c == 0) return Quiver(std::move(verts));
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= c; ++j)
            verts.emplace_back(vertex_id(i, j), i == r || j == c);
    Quiver q(std::move(verts));
    q.set_arrow(vertex_id(1, 1), v0_id(), 1);
    for (int i = 1; i <= r - 1; ++i)
        for (int j = 2; j <= c; ++j)
            q.set_arrow(vertex_id(i, j), vertex_id(i, j - 1), 1);
    for (int i = 2; i <= r; ++i)
        for (int j = 1; j <= c - 1; ++j)
            q.set_arrow(vertex_id(i, j), vertex_id(i - 1, j), 1);
    for (int i = 1; i <= r - 1; ++i)
        for (int j = 1; j <= c - 1; ++j)
            q.set_arrow(vertex_id(i, j), vertex_id(i + 1, j + 1), 1);
    q.drop_frozen_frozen();
    q.check_invariants();
    return q;
}

int Quiver::index_of(const std::string& id) const {
    for (int i = 0; i < size(); ++i)
        if (ids_[i] == id) return i;
    throw UnknownVertex(id);
}

bool Quiver::has_vertex(const std::string& id) const {
    return std::find(ids_.begin(), ids_.end(), id) != ids_.end();
}

std::vector<std::string> Quiver::mutable_ids() const {
    std::vector<std::string> out;
    for (int i = 0; i < size(); ++i)
        if (!frozen_[i]) out.push_back(ids_[i]);
    return out;
}

int Quiver::mutable_count() const {
    int n = 0;
    for (bool f : frozen_)
        if (!f) ++n;
    return n;
}

const mpz_class& Quiver::b(const std::string& u, const std::string& w) const {
    return b_[index_of(u)][index_of(w)];
}

std::vector<std::vector<mpz_class>> Quiver::b_submatrix(
    const std::vector<int>& indices) const {
    std::vector<std::vector<mpz_class>> out(indices.size(),
                                            std::vector<mpz_class>(indices.size()));
    for (size_t a = 0; a < indices.size(); ++a)
        for (size_t b2 = 0; b2 < indices.size(); ++b2)
            out[a][b2] = b_[indices[a]][indices[b2]];
    return out;
}

mpz_class Quiver::arrow_count() const {
    mpz_class total = 0;
    for (int u = 0; u < size(); ++u)
        for (int w = u + 1; w < size(); ++w) total += abs(b_[u][w]);
    return total;
}

std::vector<std::tuple<std::string, std::string, mpz_class>> Quiver::arrows() const {
    std::vector<std::tuple<std::string, std::string, mpz_class>> out;
    for (int u = 0; u < size(); ++u)
        for (int w = 0; w < size(); ++w)
            if (b_[u][w] > 0) out.emplace_back(ids_[u], ids_[w], b_[u][w]);
    return out;
}

void Quiver::set_arrow(const std::string& u, const std::string& w,
                       const mpz_class& mult) {
    int iu = index_of(u), iw = index_of(w);
    if (iu == iw) throw std::invalid_argument("loops are not allowed");
    b_[iu][iw] = mult;
    b_[iw][iu] = -mult;
}

Quiver Quiver::mutated(int k) const {
    if (k < 0 || k >= size()) throw UnknownVertex("#" + std::to_string(k));
    if (frozen_[k]) throw FrozenVertex(ids_[k]);
    Quiver out = *this;
    for (int u = 0; u < size(); ++u) {
        for (int w = 0; w < size(); ++w) {
            if (u == k || w == k) {
                out.b_[u][w] = -b_[u][w];
            } else {
                mpz_class prod = b_[u][k] * b_[k][w];
                if (prod > 0)
                    out.b_[u][w] = b_[u][w] + (b_[u][k] > 0 ? prod : -prod);
            }
        }
    }
    out.drop_frozen_frozen();
    return out;
}

Quiver Quiver::mutated(const std::string& k) const { return mutated(index_of(k)); }

Quiver Quiver::without(const std::vector<std::string>& victims) const {
    std::set<int> gone;
    for (const auto& id : victims) gone.insert(index_of(id));
    std::vector<int> keep;
    for (int i = 0; i < size(); ++i)
        if (!gone.count(i)) keep.push_back(i);
    Quiver out;
    for (int i : keep) {
        out.ids_.push_back(ids_[i]);
        out.frozen_.push_back(frozen_[i]);
    }
    out.b_ = b_submatrix(keep);
    return out;
}

Quiver Quiver::merged(const std::vector<std::string>& members) const {
    if (members.empty()) throw std::invalid_argument("cannot merge an empty set");
    return quotient({members});
}

Quiver Quiver::quotient(const std::vector<std::vector<std::string>>& clusters) const {
    // Map every vertex index to the index of its cluster representative.
    std::vector<int> rep(size());
    for (int i = 0; i < size(); ++i) rep[i] = i;
    std::vector<bool> seen(size(), false);
    for (const auto& cluster : clusters) {
        if (cluster.empty()) throw std::invalid_argument("empty cluster");
        int best = index_of(*std::min_element(cluster.begin(), cluster.end()));
        for (const auto& id : cluster) {
            int idx = index_of(id);
            if (seen[idx])
                throw std::invalid_argument("vertex " + id +
                                            " appears in two clusters");
            seen[idx] = true;
            rep[idx] = best;
        }
    }

    std::vector<int> keep;
    for (int i = 0; i < size(); ++i)
        if (rep[i] == i) keep.push_back(i);
    std::vector<int> slot(size(), -1);
    for (size_t s = 0; s < keep.size(); ++s) slot[keep[s]] = static_cast<int>(s);

    Quiver out;
    for (int i : keep) {
        bool f = false;
        for (int v = 0; v < size(); ++v)
            if (rep[v] == i && frozen_[v]) f = true;
        out.ids_.push_back(ids_[i]);
        out.frozen_.push_back(f);
    }
    out.b_.assign(keep.size(), std::vector<mpz_class>(keep.size(), 0));
    for (int u = 0; u < size(); ++u)
        for (int w = 0; w < size(); ++w)
            out.b_[slot[rep[u]]][slot[rep[w]]] += b_[u][w];
    for (size_t s = 0; s < keep.size(); ++s) out.b_[s][s] = 0;
    out.drop_frozen_frozen();
    out.check_invariants();
    return out;
}

Quiver Quiver::mutable_part() const {
    std::vector<std::string> victims;
    for (int i = 0; i < size(); ++i)
        if (frozen_[i]) victims.push_back(ids_[i]);
    return without(victims);
}

Quiver Quiver::refrozen(const std::map<std::string, bool>& freeze) const {
    Quiver out = *this;
    for (const auto& [id, flag] : freeze) out.frozen_[index_of(id)] = flag;
    out.drop_frozen_frozen();
    return out;
}

bool Quiver::same_as(const Quiver& other) const {
    return ids_ == other.ids_ && frozen_ == other.frozen_ && b_ == other.b_;
}

Quiver Quiver::sorted_by_id() const {
    std::vector<int> order(size());
    for (int i = 0; i < size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [this](int a, int b) { return ids_[a] < ids_[b]; });
    Quiver out;
    out.ids_.reserve(size());
    out.frozen_.reserve(size());
    for (int idx : order) {
        out.ids_.push_back(ids_[idx]);
        out.frozen_.push_back(frozen_[idx]);
    }
    out.b_.assign(size(), std::vector<mpz_class>(size(), 0));
    for (int u = 0; u < size(); ++u)
        for (int w = 0; w < size(); ++w) out.b_[u][w] = b_[order[u]][order[w]];
    return out;
}

void Quiver::check_invariants() const {
    for (int u = 0; u < size(); ++u) {
        if (b_[u][u] != 0) throw std::logic_error("loop at " + ids_[u]);
        for (int w = 0; w < size(); ++w) {
            if (b_[u][w] != -b_[w][u])
                throw std::logic_error("matrix is not skew-symmetric at " +
                                       ids_[u] + "," + ids_[w]);
            if (frozen_[u] && frozen_[w] && b_[u][w] != 0)
                throw std::logic_error("arrow between frozen " + ids_[u] +
                                       " and " + ids_[w]);
        }
    }
}

void Quiver::drop_frozen_frozen() {
    for (int u = 0; u < size(); ++u)
        for (int w = 0; w < size(); ++w)
            if (frozen_[u] && frozen_[w]) b_[u][w] = 0;
}

nlohmann::json mpz_to_json(const mpz_class& v) {
    static const mpz_class kSafe = mpz_class(1) << 53;
    if (abs(v) <= kSafe) return static_cast<long long>(v.get_si());
    return v.get_str();
}

mpz_class mpz_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return mpz_class(j.get<std::int64_t>());
    if (j.is_string()) return mpz_class(j.get<std::string>());
    throw std::invalid_argument("matrix entries must be integers or decimal strings");
}

nlohmann::json Quiver::to_json() const {
    nlohmann::json verts = nlohmann::json::array();
    for (int i = 0; i < size(); ++i)
        verts.push_back({{"id", ids_[i]}, {"frozen", static_cast<bool>(frozen_[i])}});
    nlohmann::json mat = nlohmann::json::array();
    for (int u = 0; u < size(); ++u) {
        nlohmann::json row = nlohmann::json::array();
        for (int w = 0; w < size(); ++w) row.push_back(mpz_to_json(b_[u][w]));
        mat.push_back(std::move(row));
    }
    return {{"vertices", std::move(verts)}, {"b", std::move(mat)}};
}

Quiver Quiver::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("b"))
        throw std::invalid_argument("quiver JSON needs \"vertices\" and \"b\"");
    Quiver out;
    for (const auto& v : j.at("vertices")) {
        std::string id = v.at("id").get<std::string>();
        if (out.has_vertex(id))
            throw std::invalid_argument("duplicate vertex " + id);
        out.ids_.push_back(id);
        out.frozen_.push_back(v.at("frozen").get<bool>());
    }
    const auto& mat = j.at("b");
    if (mat.size() != out.ids_.size())
        throw std::invalid_argument("matrix size does not match vertex count");
    for (const auto& row : mat) {
        if (row.size() != out.ids_.size())
            throw std::invalid_argument("matrix row size does not match vertex count");
        std::vector<mpz_class> r;
        for (const auto& cell : row) r.push_back(mpz_from_json(cell));
        out.b_.push_back(std::move(r));
    }
    out.check_invariants();
    return out;
}

std::string Quiver::to_dot() const {
    std::string out = "digraph quiver {\n";
    for (int i = 0; i < size(); ++i) {
        out += "  \"" + ids_[i] + "\"";
        if (frozen_[i]) out += " [shape=box]";
        out += ";\n";
    }
    for (const auto& [u, w, mult] : arrows()) {
        out += "  \"" + u + "\" -> \"" + w + "\"";
        if (mult > 1) out += " [label=\"" + mult.get_str() + "\"]";
        out += ";\n";
    }
    out += "}\n";
    return out;
}

namespace {

// Iterated neighborhood refinement: vertices start out labeled by their
// frozen flag and are repeatedly split by the sorted multiset of (arrow
// value, neighbor class) pairs. Classes are renumbered through a sorted map
// each round, which keeps the labels short and still lines them up between
// two quivers being compared. Isomorphic vertices always share signatures,
// so candidate lists shrink before backtracking starts.
std::vector<std::string> signatures(const Quiver& q) {
    int n = q.size();
    std::vector<int> color(n);
    for (int i = 0; i < n; ++i) color[i] = q.frozen(i) ? 1 : 0;
    std::vector<std::string> key(n);
    size_t classes = 0;
    while (true) {
        for (int u = 0; u < n; ++u) {
            std::vector<std::string> parts;
            for (int w = 0; w < n; ++w) {
                if (w == u || q.b(u, w) == 0) continue;
                parts.push_back(q.b(u, w).get_str() + ":" + std::to_string(color[w]));
            }
            std::sort(parts.begin(), parts.end());
            key[u] = std::to_string(color[u]) + "|";
            for (const auto& p : parts) key[u] += p + ";";
        }
        std::map<std::string, int> renumber;
        for (const std::string& k : key) renumber.emplace(k, 0);
        int fresh = 0;
        for (auto& [unused, id] : renumber) id = fresh++;
        if (renumber.size() == classes) break;
        classes = renumber.size();
        for (int u = 0; u < n; ++u) color[u] = renumber[key[u]];
    }
    return key;
}

bool extend_mapping(const Quiver& qa, const Quiver& qb,
                    const std::vector<std::vector<int>>& candidates,
                    const std::vector<int>& order, size_t pos,
                    std::vector<int>& map_ab, std::vector<bool>& used) {
    if (pos == order.size()) return true;
    int u = order[pos];
    for (int v : candidates[u]) {
        if (used[v]) continue;
        bool ok = true;
        for (size_t prev = 0; prev < pos && ok; ++prev) {
            int u2 = order[prev];
            if (qa.b(u, u2) != qb.b(v, map_ab[u2])) ok = false;
        }
        if (!ok) continue;
        map_ab[u] = v;
        used[v] = true;
        if (extend_mapping(qa, qb, candidates, order, pos + 1, map_ab, used))
            return true;
        used[v] = false;
        map_ab[u] = -1;
    }
    return false;
}

}  // namespace

std::optional<std::map<std::string, std::string>> find_isomorphism(
    const Quiver& a, const Quiver& b) {
    int n = a.size();
    if (n != b.size() || a.mutable_count() != b.mutable_count()) return std::nullopt;
    auto sig_a = signatures(a);
    auto sig_b = signatures(b);
    {
        auto sa = sig_a, sb = sig_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }

    std::vector<std::vector<int>> candidates(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (sig_a[u] == sig_b[v]) candidates[u].push_back(v);

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return candidates[x].size() < candidates[y].size();
    });

    std::vector<int> map_ab(n, -1);
    std::vector<bool> used(n, false);
    if (!extend_mapping(a, b, candidates, order, 0, map_ab, used))
        return std::nullopt;

    std::map<std::string, std::string> out;
    for (int u = 0; u < n; ++u) out[a.id(u)] = b.id(map_ab[u]);
    return out;
}

}  // namespace lequiver
