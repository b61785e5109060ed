// g-vector bookkeeping: a seed couples the mutable part of a quiver with a
// unimodular integer matrix G whose k-th column is the g-vector of vertex k.
// Vertex colors come from the rows of the exact inverse of G; mutation
// updates G by the green/red recurrence and maintains the inverse by a rank-1
// update.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "lequiver/quiver.h"

namespace lequiver {

using Matrix = std::vector<std::vector<mpz_class>>;

Matrix identity_matrix(int n);
mpz_class determinant(Matrix m);  // fraction-free elimination
// Exact integer inverse; requires det = +/-1 and throws otherwise.
Matrix unimodular_inverse(const Matrix& m);

struct SignCoherenceViolation : std::logic_error {
    explicit SignCoherenceViolation(const std::string& what);
};

enum class Color { Green, Red };
inline const char* color_name(Color c) { return c == Color::Green ? "green" : "red"; }

class GSeed {
  public:
    // Strips frozen vertices and attaches the standard basis: all green.
    static GSeed initial(const Quiver& q);

    const Quiver& quiver() const { return quiver_; }
    int size() const { return quiver_.size(); }
    const Matrix& g_matrix() const { return g_; }
    const Matrix& g_inverse() const { return ginv_; }

    // Green when row k of G^-1 is entrywise >= 0, red when <= 0. A mixed row
    // would contradict sign coherence and trips SignCoherenceViolation.
    Color color(int k) const;
    Color color(const std::string& id) const;
    std::vector<Color> colors() const;
    bool all_red() const;
    bool all_green() const;

    // g_k flips to -g_k plus the g-vectors over the arrows into k (green) or
    // out of k (red), counted with multiplicity; the quiver mutates alongside
    // and k's color must flip.
    GSeed mutated(int k) const;
    GSeed mutated(const std::string& id) const;

    // Exact state key for search deduplication.
    std::string state_key() const;

  private:
    GSeed() = default;
    Quiver quiver_;
    Matrix g_;
    Matrix ginv_;
};

enum class SequenceMode { GreenToRed, MaximalGreen };

struct SequenceStep {
    std::string vertex;
    Color before = Color::Green;
    std::vector<std::pair<std::string, Color>> colors_after;
};

struct Verdict {
    bool accepted = false;
    std::string reason;
    Matrix final_g;
    std::vector<SequenceStep> steps;
    nlohmann::json to_json() const;
};

// Replays seq from the initial seed of q. GreenToRed accepts when the final
// seed is all-red; MaximalGreen additionally demands every mutation happen at
// a green vertex. Sequence entries must name mutable vertices of q.
Verdict verify_sequence(const Quiver& q, const std::vector<std::string>& seq,
                        SequenceMode mode);

}  // namespace lequiver
