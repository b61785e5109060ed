#include "lequiver/gseed.h"

#include <algorithm>

namespace lequiver {

SignCoherenceViolation::SignCoherenceViolation(const std::string& what)
    : std::logic_error(what) {}

Matrix identity_matrix(int n) {
    Matrix m(n, std::vector<mpz_class>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

mpz_class determinant(Matrix m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    // Bareiss: every division below is exact, entries stay integral.
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Matrix unimodular_inverse(const Matrix& m) {
    int n = static_cast<int>(m.size());
    mpz_class det = determinant(m);
    if (det != 1 && det != -1)
        throw std::invalid_argument("matrix is not unimodular (det = " +
                                    det.get_str() + ")");
    // Fraction-free forward elimination on [m | I], then integer back
    // substitution scaled by the pivots; unimodularity makes the final
    // division exact.
    Matrix a(n, std::vector<mpz_class>(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n + i] = 1;
    }
    mpz_class prev = 1;
    for (int k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) {
                    std::swap(a[k], a[r]);
                    break;
                }
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < 2 * n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
        for (int i = k + 1; i < n; ++i) a[i][k] = 0;
        prev = a[k][k];
    }
    // Back substitution over rationals: x_i = (rhs - sum) / pivot, column by
    // column of the right block.
    Matrix inv(n, std::vector<mpz_class>(n, 0));
    std::vector<mpq_class> x(n);
    for (int col = 0; col < n; ++col) {
        for (int i = n - 1; i >= 0; --i) {
            mpq_class acc = mpq_class(a[i][n + col]);
            for (int j = i + 1; j < n; ++j) acc -= mpq_class(a[i][j]) * x[j];
            x[i] = acc / mpq_class(a[i][i]);
            x[i].canonicalize();
        }
        for (int i = 0; i < n; ++i) {
            if (x[i].get_den() != 1)
                throw std::logic_error("inverse is not integral");
            inv[i][col] = x[i].get_num();
        }
    }
    return inv;
}

GSeed GSeed::initial(const Quiver& q) {
    GSeed seed;
    seed.quiver_ = q.mutable_part();
    seed.g_ = identity_matrix(seed.quiver_.size());
    seed.ginv_ = identity_matrix(seed.quiver_.size());
    return seed;
}

Color GSeed::color(int k) const {
    if (k < 0 || k >= size()) throw UnknownVertex("#" + std::to_string(k));
    bool pos = false, neg = false;
    for (int j = 0; j < size(); ++j) {
        if (ginv_[k][j] > 0) pos = true;
        if (ginv_[k][j] < 0) neg = true;
    }
    if (pos && neg)
        throw SignCoherenceViolation("vertex " + quiver_.id(k) +
                                     " has a mixed-sign coefficient row");
    return neg ? Color::Red : Color::Green;
}

Color GSeed::color(const std::string& id) const { return color(quiver_.index_of(id)); }

std::vector<Color> GSeed::colors() const {
    std::vector<Color> out(size());
    for (int k = 0; k < size(); ++k) out[k] = color(k);
    return out;
}

bool GSeed::all_red() const {
    for (int k = 0; k < size(); ++k)
        if (color(k) != Color::Red) return false;
    return true;
}

bool GSeed::all_green() const {
    for (int k = 0; k < size(); ++k)
        if (color(k) != Color::Green) return false;
    return true;
}

GSeed GSeed::mutated(int k) const {
    Color before = color(k);
    int n = size();
    std::vector<mpz_class> gk_new(n);
    for (int i = 0; i < n; ++i) gk_new[i] = -g_[i][k];
    for (int j = 0; j < n; ++j) {
        const mpz_class& arrows_in = quiver_.b(j, k);
        if (before == Color::Green && arrows_in > 0)
            for (int i = 0; i < n; ++i) gk_new[i] += arrows_in * g_[i][j];
        if (before == Color::Red && arrows_in < 0)
            for (int i = 0; i < n; ++i) gk_new[i] -= arrows_in * g_[i][j];
    }

    GSeed out;
    out.quiver_ = quiver_.mutated(k);
    out.g_ = g_;
    for (int i = 0; i < n; ++i) out.g_[i][k] = gk_new[i];

    // G changes by a rank-1 column update, so the inverse does too:
    // with u = g_k' - g_k and w = G^-1 u, the determinant scales by
    // d = 1 + w_k and the new inverse is G^-1 - (1/d) w (row k of G^-1).
    // Both determinants are +/-1, hence d = +/-1 and 1/d = d.
    std::vector<mpz_class> u(n), w(n, 0);
    for (int i = 0; i < n; ++i) u[i] = gk_new[i] - g_[i][k];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[i] += ginv_[i][j] * u[j];
    mpz_class d = 1 + w[k];
    if (d != 1 && d != -1)
        throw std::logic_error("seed mutation lost unimodularity");
    std::vector<mpz_class> row_k = ginv_[k];
    out.ginv_ = ginv_;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.ginv_[i][j] -= d * w[i] * row_k[j];

    if (out.color(k) == before)
        throw std::logic_error("mutation failed to flip the color of " +
                               quiver_.id(k));
    return out;
}

GSeed GSeed::mutated(const std::string& id) const {
    return mutated(quiver_.index_of(id));
}

std::string GSeed::state_key() const {
    std::string key = std::to_string(size());
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j) {
            key += ',';
            key += quiver_.b(i, j).get_str();
        }
    key += '|';
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j) {
            key += ',';
            key += g_[i][j].get_str();
        }
    return key;
}

nlohmann::json Verdict::to_json() const {
    nlohmann::json g = nlohmann::json::array();
    for (const auto& row : final_g) {
        nlohmann::json jrow = nlohmann::json::array();
        for (const auto& v : row) jrow.push_back(mpz_to_json(v));
        g.push_back(std::move(jrow));
    }
    nlohmann::json jsteps = nlohmann::json::array();
    for (const auto& step : steps) {
        nlohmann::json colors = nlohmann::json::object();
        for (const auto& [id, c] : step.colors_after) colors[id] = color_name(c);
        jsteps.push_back({{"vertex", step.vertex},
                          {"color_before", color_name(step.before)},
                          {"colors_after", std::move(colors)}});
    }
    return {{"accepted", accepted},
            {"reason", reason},
            {"final_g", std::move(g)},
            {"steps", std::move(jsteps)}};
}

Verdict verify_sequence(const Quiver& q, const std::vector<std::string>& seq,
                        SequenceMode mode) {
    for (const auto& id : seq)
        if (q.frozen(id)) throw FrozenVertex(id);

    Verdict verdict;
    GSeed seed = GSeed::initial(q);
    int first_red_mutation = -1;
    for (size_t t = 0; t < seq.size(); ++t) {
        SequenceStep step;
        step.vertex = seq[t];
        step.before = seed.color(seq[t]);
        if (step.before == Color::Red && first_red_mutation < 0)
            first_red_mutation = static_cast<int>(t);
        seed = seed.mutated(seq[t]);
        for (int k = 0; k < seed.size(); ++k)
            step.colors_after.emplace_back(seed.quiver().id(k), seed.color(k));
        verdict.steps.push_back(std::move(step));
    }
    verdict.final_g = seed.g_matrix();

    bool ends_red = seed.all_red();
    if (!ends_red) {
        verdict.accepted = false;
        std::string greens;
        for (int k = 0; k < seed.size(); ++k)
            if (seed.color(k) == Color::Green)
                greens += (greens.empty() ? "" : ", ") + seed.quiver().id(k);
        verdict.reason = seq.empty() && seed.size() > 0
                             ? "no mutations applied; vertices still green"
                             : "final seed is not all-red (green: " + greens + ")";
        return verdict;
    }
    if (mode == SequenceMode::MaximalGreen && first_red_mutation >= 0) {
        verdict.accepted = false;
        verdict.reason = "step " + std::to_string(first_red_mutation + 1) +
                         " mutates at a red vertex";
        return verdict;
    }
    verdict.accepted = true;
    verdict.reason = mode == SequenceMode::MaximalGreen
                         ? "all vertices red; every mutation was green"
                         : "all vertices red";
    return verdict;
}

}  // namespace lequiver
