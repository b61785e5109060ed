// Le-diagrams: 0/1 fillings of Young diagrams in which every 0 has an all-zero
// row segment to its left or an all-zero column segment above it. Provides
// parsing, validation, enumeration, zero-box classification and the merge
// sets consumed by the quiver constructions.
#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lequiver {

// 1-based box coordinates: row counts from the top, column from the left.
struct Box {
    int row = 0;
    int col = 0;
    friend bool operator==(const Box&, const Box&) = default;
    friend auto operator<=>(const Box&, const Box&) = default;
};

struct NotAPartition : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct LeViolation : std::invalid_argument {
    Box box;
    explicit LeViolation(Box b);
};

struct BoxNotZero : std::invalid_argument {
    Box box;
    explicit BoxNotZero(Box b);
};

class Shape {
  public:
    Shape() = default;
    explicit Shape(std::vector<int> row_lengths);

    int rows() const { return static_cast<int>(lens_.size()); }
    int cols() const { return lens_.empty() ? 0 : lens_[0]; }
    int row_length(int i) const;  // 0 when i is out of range
    int col_length(int j) const;
    bool contains(int i, int j) const;
    int box_count() const;
    std::vector<Box> boxes() const;  // reading order
    const std::vector<int>& row_lengths() const { return lens_; }

    friend bool operator==(const Shape&, const Shape&) = default;

  private:
    std::vector<int> lens_;
};

class LeDiagram {
  public:
    LeDiagram() = default;  // the empty diagram
    LeDiagram(Shape shape, std::vector<std::vector<int>> filling);

    const Shape& shape() const { return shape_; }
    int at(int i, int j) const;  // 0 or 1
    bool one_at(int i, int j) const { return at(i, j) == 1; }
    std::vector<Box> one_boxes() const;
    std::vector<Box> zero_boxes() const;

    std::string to_text(char row_sep = '\n') const;

    friend bool operator==(const LeDiagram&, const LeDiagram&) = default;

  private:
    Shape shape_;
    std::vector<std::vector<int>> fill_;
};

// Accepts rows separated by '\n' or '/'. The empty string is the empty
// diagram. Throws NotAPartition for bad row lengths, LeViolation for an
// invalid filling and std::invalid_argument for stray characters.
LeDiagram parse_diagram(const std::string& text);

// Report-style check: all boxes breaking the property, in reading order.
std::vector<Box> le_violations(const Shape& shape,
                               const std::vector<std::vector<int>>& filling);

enum class ZeroBoxCase { Vertical, Horizontal, Hook };

// For a 0-box of a valid diagram exactly one case applies:
//   Vertical   - everything to the left is 0 and some box above holds a 1,
//   Horizontal - everything above is 0 and some box to the left holds a 1,
//   Hook       - both directions are all-zero (vacuously included).
ZeroBoxCase zero_box_case(const LeDiagram& d, Box box);

struct MergeSet {
    Box zero_box;
    ZeroBoxCase tag = ZeroBoxCase::Hook;
    std::vector<std::string> members;  // vertex ids, sorted
};

MergeSet merge_set(const LeDiagram& d, Box box);

// Union-find closure of all merge sets over {v0} + boxes of the shape.
// Clusters hold sorted ids and are sorted by their first element; singletons
// are included.
std::vector<std::vector<std::string>> merge_clusters(const LeDiagram& d);

// Vertex naming shared by every pipeline.
std::string vertex_id(int i, int j);  // "v{i},{j}"
inline std::string v0_id() { return "v0"; }
std::optional<Box> parse_vertex_id(const std::string& id);  // none for "v0" or foreign ids

// Emits every diagram fitting in rows x cols exactly once: shapes in
// lexicographic order starting with the empty one, fillings in binary order
// with the first box as the most significant bit. Return false to stop.
void for_each_le_diagram(int rows, int cols,
                         const std::function<bool(const LeDiagram&)>& fn);

std::vector<LeDiagram> enumerate_le_diagrams(
    int rows, int cols, std::optional<long long> limit = std::nullopt);

}  // namespace lequiver
