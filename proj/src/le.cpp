#include "lequiver/le.h"

#include <algorithm>

namespace lequiver {

namespace {

std::string box_text(Box b) {
    return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
}

}  // namespace

LeViolation::LeViolation(Box b)
    : std::invalid_argument("Le-property violated at box " + box_text(b) +
                            ": a 1 above and a 1 to the left"),
      box(b) {}

BoxNotZero::BoxNotZero(Box b)
    : std::invalid_argument("box " + box_text(b) + " is not filled with 0"), box(b) {}

Shape::Shape(std::vector<int> row_lengths) : lens_(std::move(row_lengths)) {
    for (size_t i = 0; i < lens_.size(); ++i) {
        if (lens_[i] <= 0)
            throw NotAPartition("row " + std::to_string(i + 1) + " has no boxes");
        if (i > 0 && lens_[i] > lens_[i - 1])
            throw NotAPartition("row " + std::to_string(i + 1) +
                                " is longer than the row above");
    }
}

int Shape::row_length(int i) const {
    if (i < 1 || i > rows()) return 0;
    return lens_[i - 1];
}

int Shape::col_length(int j) const {
    if (j < 1) return 0;
    int count = 0;
    for (int len : lens_)
        if (len >= j) ++count;
    return count;
}

bool Shape::contains(int i, int j) const {
    return i >= 1 && j >= 1 && j <= row_length(i);
}

int Shape::box_count() const {
    int total = 0;
    for (int len : lens_) total += len;
    return total;
}

std::vector<Box> Shape::boxes() const {
    std::vector<Box> out;
    out.reserve(box_count());
    for (int i = 1; i <= rows(); ++i)
        for (int j = 1; j <= row_length(i); ++j) out.push_back({i, j});
    return out;
}

LeDiagram::LeDiagram(Shape shape, std::vector<std::vector<int>> filling)
    : shape_(std::move(shape)), fill_(std::move(filling)) {
    if (static_cast<int>(fill_.size()) != shape_.rows())
        throw std::invalid_argument("filling has the wrong number of rows");
    for (int i = 1; i <= shape_.rows(); ++i) {
        if (static_cast<int>(fill_[i - 1].size()) != shape_.row_length(i))
            throw std::invalid_argument("filling row " + std::to_string(i) +
                                        " has the wrong length");
        for (int v : fill_[i - 1])
            if (v != 0 && v != 1)
                throw std::invalid_argument("filling entries must be 0 or 1");
    }
    auto bad = le_violations(shape_, fill_);
    if (!bad.empty()) throw LeViolation(bad.front());
}

int LeDiagram::at(int i, int j) const {
    if (!shape_.contains(i, j))
        throw std::out_of_range("box " + box_text({i, j}) + " is outside the shape");
    return fill_[i - 1][j - 1];
}

std::vector<Box> LeDiagram::one_boxes() const {
    std::vector<Box> out;
    for (Box b : shape_.boxes())
        if (at(b.row, b.col) == 1) out.push_back(b);
    return out;
}

std::vector<Box> LeDiagram::zero_boxes() const {
    std::vector<Box> out;
    for (Box b : shape_.boxes())
        if (at(b.row, b.col) == 0) out.push_back(b);
    return out;
}

std::string LeDiagram::to_text(char row_sep) const {
    std::string out;
    for (int i = 1; i <= shape_.rows(); ++i) {
        if (i > 1) out += row_sep;
        for (int j = 1; j <= shape_.row_length(i); ++j)
            out += at(i, j) ? '1' : '0';
    }
    return out;
}

LeDiagram parse_diagram(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n' || ch == '/') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    lines.push_back(cur);
    // Tolerate a single trailing separator ("01\n").
    if (lines.size() > 1 && lines.back().empty()) lines.pop_back();
    if (lines.size() == 1 && lines[0].empty()) return LeDiagram{};

    std::vector<int> lens;
    std::vector<std::vector<int>> fill;
    for (const auto& line : lines) {
        std::vector<int> row;
        for (char ch : line) {
            if (ch == '0' || ch == '1')
                row.push_back(ch - '0');
            else
                throw std::invalid_argument(std::string("unexpected character '") +
                                            ch + "' in diagram");
        }
        if (row.empty()) throw NotAPartition("empty row in diagram");
        lens.push_back(static_cast<int>(row.size()));
        fill.push_back(std::move(row));
    }
    return LeDiagram(Shape(std::move(lens)), std::move(fill));
}

std::vector<Box> le_violations(const Shape& shape,
                               const std::vector<std::vector<int>>& filling) {
    std::vector<Box> bad;
    for (int i = 1; i <= shape.rows(); ++i) {
        for (int j = 1; j <= shape.row_length(i); ++j) {
            if (filling[i - 1][j - 1] != 0) continue;
            bool one_left = false;
            for (int j2 = 1; j2 < j; ++j2)
                if (filling[i - 1][j2 - 1] == 1) one_left = true;
            bool one_above = false;
            for (int i2 = 1; i2 < i; ++i2)
                if (shape.contains(i2, j) && filling[i2 - 1][j - 1] == 1)
                    one_above = true;
            if (one_left && one_above) bad.push_back({i, j});
        }
    }
    return bad;
}

namespace {

// Largest i'' < box.row with a 1 at (i'', box.col), or 0.
int nearest_one_above(const LeDiagram& d, Box box) {
    for (int i = box.row - 1; i >= 1; --i)
        if (d.one_at(i, box.col)) return i;
    return 0;
}

int nearest_one_left(const LeDiagram& d, Box box) {
    for (int j = box.col - 1; j >= 1; --j)
        if (d.one_at(box.row, j)) return j;
    return 0;
}

}  // namespace

ZeroBoxCase zero_box_case(const LeDiagram& d, Box box) {
    if (d.at(box.row, box.col) != 0) throw BoxNotZero(box);
    bool one_above = nearest_one_above(d, box) > 0;
    bool one_left = nearest_one_left(d, box) > 0;
    if (one_left && one_above)
        throw std::logic_error("diagram invariant broken at " + box_text(box));
    if (one_above) return ZeroBoxCase::Vertical;
    if (one_left) return ZeroBoxCase::Horizontal;
    return ZeroBoxCase::Hook;
}

std::string vertex_id(int i, int j) {
    return "v" + std::to_string(i) + "," + std::to_string(j);
}

std::optional<Box> parse_vertex_id(const std::string& id) {
    if (id.size() < 4 || id[0] != 'v') return std::nullopt;
    auto comma = id.find(',');
    if (comma == std::string::npos || comma < 2 || comma + 1 >= id.size())
        return std::nullopt;
    Box b;
    try {
        size_t used = 0;
        b.row = std::stoi(id.substr(1, comma - 1), &used);
        if (used != comma - 1) return std::nullopt;
        b.col = std::stoi(id.substr(comma + 1), &used);
        if (used != id.size() - comma - 1) return std::nullopt;
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (b.row < 1 || b.col < 1) return std::nullopt;
    return b;
}

MergeSet merge_set(const LeDiagram& d, Box box) {
    MergeSet out;
    out.zero_box = box;
    out.tag = zero_box_case(d, box);
    switch (out.tag) {
        case ZeroBoxCase::Vertical: {
            int top = nearest_one_above(d, box);
            for (int i = top; i <= box.row; ++i)
                out.members.push_back(vertex_id(i, box.col));
            break;
        }
        case ZeroBoxCase::Horizontal: {
            int left = nearest_one_left(d, box);
            for (int j = left; j <= box.col; ++j)
                out.members.push_back(vertex_id(box.row, j));
            break;
        }
        case ZeroBoxCase::Hook: {
            // A 1 strictly northwest of the box hangs a wall across both
            // arms: its row line cuts the column arm below that row, and its
            // column line cuts the row arm east of that column. The arms
            // reach v0 around the top-left corner only when nothing blocks.
            bool blocked = false;
            int top = 1, west = 1;
            for (int i = 1; i < box.row; ++i)
                for (int j = 1; j < box.col; ++j)
                    if (d.at(i, j)) {
                        blocked = true;
                        top = std::max(top, i);
                        west = std::max(west, j);
                    }
            if (!blocked) out.members.push_back(v0_id());
            for (int i = top; i <= box.row; ++i)
                out.members.push_back(vertex_id(i, box.col));
            for (int j = west; j < box.col; ++j)
                out.members.push_back(vertex_id(box.row, j));
            break;
        }
    }
    std::sort(out.members.begin(), out.members.end());
    return out;
}

std::vector<std::vector<std::string>> merge_clusters(const LeDiagram& d) {
    std::vector<std::string> ids;
    ids.push_back(v0_id());
    for (Box b : d.shape().boxes()) ids.push_back(vertex_id(b.row, b.col));

    std::vector<int> parent(ids.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto index_of = [&](const std::string& id) {
        auto it = std::find(ids.begin(), ids.end(), id);
        return static_cast<int>(it - ids.begin());
    };

    for (Box b : d.zero_boxes()) {
        MergeSet s = merge_set(d, b);
        int root = find(index_of(s.members[0]));
        for (size_t t = 1; t < s.members.size(); ++t) {
            int other = find(index_of(s.members[t]));
            if (other != root) parent[other] = root;
        }
    }

    std::vector<std::vector<std::string>> clusters(ids.size());
    for (size_t i = 0; i < ids.size(); ++i)
        clusters[find(static_cast<int>(i))].push_back(ids[i]);
    std::vector<std::vector<std::string>> out;
    for (auto& c : clusters) {
        if (c.empty()) continue;
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool emit_fillings(const Shape& shape,
                   const std::function<bool(const LeDiagram&)>& fn) {
    int k = shape.box_count();
    if (k >= 63)
        throw std::invalid_argument("shape too large to enumerate fillings");
    auto boxes = shape.boxes();
    for (unsigned long long mask = 0; mask < (1ull << k); ++mask) {
        std::vector<std::vector<int>> fill(shape.rows());
        for (int i = 1; i <= shape.rows(); ++i)
            fill[i - 1].assign(shape.row_length(i), 0);
        for (int pos = 0; pos < k; ++pos)
            if (mask & (1ull << (k - 1 - pos)))
                fill[boxes[pos].row - 1][boxes[pos].col - 1] = 1;
        if (!le_violations(shape, fill).empty()) continue;
        if (!fn(LeDiagram(shape, std::move(fill)))) return false;
    }
    return true;
}

// Shapes in lexicographic order: the DFS preorder with parts appended in
// increasing size visits (), (1), (1,1), ..., (2), (2,1), ...
bool emit_shapes(std::vector<int>& lens, int rows, int cols,
                 const std::function<bool(const LeDiagram&)>& fn) {
    if (!emit_fillings(Shape(lens), fn)) return false;
    if (static_cast<int>(lens.size()) == rows) return true;
    int cap = lens.empty() ? cols : lens.back();
    for (int next = 1; next <= cap; ++next) {
        lens.push_back(next);
        bool keep_going = emit_shapes(lens, rows, cols, fn);
        lens.pop_back();
        if (!keep_going) return false;
    }
    return true;
}

}  // namespace

void for_each_le_diagram(int rows, int cols,
                         const std::function<bool(const LeDiagram&)>& fn) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("bounding box sides must be nonnegative");
    if (!fn(LeDiagram{})) return;
    if (rows == 0 || cols == 0) return;
    std::vector<int> lens;
    for (int first = 1; first <= cols; ++first) {
        lens.assign(1, first);
        if (!emit_shapes(lens, rows, cols, fn)) return;
    }
}

std::vector<LeDiagram> enumerate_le_diagrams(int rows, int cols,
                                             std::optional<long long> limit) {
    std::vector<LeDiagram> out;
    for_each_le_diagram(rows, cols, [&](const LeDiagram& d) {
        if (limit && static_cast<long long>(out.size()) >= *limit) return false;
        out.push_back(d);
        return true;
    });
    return out;
}

}  // namespace lequiver
