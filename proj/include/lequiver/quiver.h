// Quivers with frozen vertices, stored as a skew-symmetric signed
// net-multiplicity matrix over an ordered vertex list. All operations return
// new values; arrows between two frozen vertices are always dropped.
#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace lequiver {

struct UnknownVertex : std::invalid_argument {
    std::string id;
    explicit UnknownVertex(std::string vertex);
};

struct FrozenVertex : std::invalid_argument {
    std::string id;
    explicit FrozenVertex(std::string vertex);
};

class Quiver {
  public:
    Quiver() = default;
    explicit Quiver(std::vector<std::pair<std::string, bool>> vertices);

    // The grid quiver on an r x c rectangle: v0 plus one vertex per box, the
    // bottom row, right column and v0 frozen, with leftward, upward and
    // southeast-diagonal arrows plus v1,1 -> v0. Degenerate sides collapse to
    // a single frozen v0.
    static Quiver grid(int r, int c);

    int size() const { return static_cast<int>(ids_.size()); }
    const std::string& id(int idx) const { return ids_.at(idx); }
    const std::vector<std::string>& ids() const { return ids_; }
    int index_of(const std::string& id) const;  // UnknownVertex
    bool has_vertex(const std::string& id) const;
    bool frozen(int idx) const { return frozen_.at(idx); }
    bool frozen(const std::string& id) const { return frozen_[index_of(id)]; }
    std::vector<std::string> mutable_ids() const;
    int mutable_count() const;
    int frozen_count() const { return size() - mutable_count(); }

    const mpz_class& b(int u, int w) const { return b_.at(u).at(w); }
    const mpz_class& b(const std::string& u, const std::string& w) const;
    const std::vector<std::vector<mpz_class>>& b_matrix() const { return b_; }
    // Restriction of b to the given vertex order (used to seed searches).
    std::vector<std::vector<mpz_class>> b_submatrix(
        const std::vector<int>& indices) const;

    // Total arrow multiplicity: sum of |b[u][w]| over unordered pairs.
    mpz_class arrow_count() const;

    // Arrows as (source, target, multiplicity), in vertex order.
    std::vector<std::tuple<std::string, std::string, mpz_class>> arrows() const;

    void set_arrow(const std::string& u, const std::string& w, const mpz_class& mult);

    Quiver mutated(int k) const;  // FrozenVertex
    Quiver mutated(const std::string& k) const;
    Quiver without(const std::vector<std::string>& victims) const;  // UnknownVertex
    // Collapse S to one vertex named after its smallest member; arrow rows and
    // columns add up, which cancels loops and 2-cycles; frozen if any member is.
    Quiver merged(const std::vector<std::string>& members) const;
    // Collapse every listed cluster at once (clusters must partition a subset
    // of the vertices; unlisted vertices stay as singletons).
    Quiver quotient(const std::vector<std::vector<std::string>>& clusters) const;
    Quiver mutable_part() const;
    // Reassign frozen flags (ids absent from the map keep theirs), then drop
    // frozen-frozen arrows.
    Quiver refrozen(const std::map<std::string, bool>& freeze) const;

    bool same_as(const Quiver& other) const;  // ids, flags and matrix all equal
    // Copy with the vertices reordered lexicographically by id; same_as on
    // two sorted quivers is order-insensitive label equality.
    Quiver sorted_by_id() const;

    void check_invariants() const;  // skew symmetry, zero diagonal, no frozen-frozen arrows

    nlohmann::json to_json() const;
    static Quiver from_json(const nlohmann::json& j);
    std::string to_dot() const;

  private:
    void drop_frozen_frozen();

    std::vector<std::string> ids_;
    std::vector<bool> frozen_;
    std::vector<std::vector<mpz_class>> b_;
};

// A frozen-flag-preserving bijection carrying one b-matrix to the other, if
// any. Exact backtracking with iterated degree-signature pruning; meant for
// the small quivers this project works with.
std::optional<std::map<std::string, std::string>> find_isomorphism(
    const Quiver& a, const Quiver& b);

// JSON encoding for matrix entries: plain integer when |x| <= 2^53, decimal
// string beyond that; both forms are accepted on input.
nlohmann::json mpz_to_json(const mpz_class& v);
mpz_class mpz_from_json(const nlohmann::json& j);

}  // namespace lequiver
