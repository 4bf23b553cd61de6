#include "kimura/littlewood_richardson.hpp"

#include <vector>

#include "kimura/errors.hpp"

namespace kimura {

namespace {

struct SkewCell {
    int row, col;
};

// Reverse reading word (rows top to bottom, right to left within a row) must
// be a lattice word: every prefix has count(v) >= count(v+1).
bool lattice_word(const std::vector<std::vector<int>>& filling, int values) {
    std::vector<int> count(static_cast<std::size_t>(values) + 1, 0);
    for (const auto& row : filling)
        for (auto it = row.rbegin(); it != row.rend(); ++it) {
            const int v = *it;
            if (v == 0) continue;  // cell of mu
            ++count[static_cast<std::size_t>(v)];
            if (v > 1 && count[static_cast<std::size_t>(v)] > count[static_cast<std::size_t>(v - 1)])
                return false;
        }
    return true;
}

struct LrSearch {
    const Partition& lambda;
    const Partition& mu;
    std::vector<int> remaining;                // per value, cells still to place
    std::vector<std::vector<int>> filling;     // 0 marks cells of mu
    std::vector<SkewCell> cells;               // skew cells in row-major order
    std::int64_t count = 0;

    void run(std::size_t k) {
        if (k == cells.size()) {
            if (lattice_word(filling, static_cast<int>(remaining.size())))
                ++count;
            return;
        }
        const auto [r, c] = cells[k];
        const int left = c > 0 ? filling[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] : 0;
        const int above = r > 0 && c < lambda.parts()[static_cast<std::size_t>(r - 1)]
                              ? filling[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)]
                              : 0;
        for (int v = 1; v <= static_cast<int>(remaining.size()); ++v) {
            if (remaining[static_cast<std::size_t>(v - 1)] == 0) continue;
            if (left != 0 && v < left) continue;           // rows weakly increase
            if (above != 0 && v <= above) continue;        // columns strictly increase
            filling[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            --remaining[static_cast<std::size_t>(v - 1)];
            run(k + 1);
            ++remaining[static_cast<std::size_t>(v - 1)];
            filling[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
        }
    }
};

bool contains(const Partition& outer, const Partition& inner) {
    if (inner.rows() > outer.rows()) return false;
    for (std::size_t i = 0; i < inner.rows(); ++i)
        if (inner.parts()[i] > outer.parts()[i]) return false;
    return true;
}

}  // namespace

std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (mu.weight() + nu.weight() != lambda.weight())
        throw UsageError("lr_coefficient: weight(mu) + weight(nu) != weight(lambda)");
    if (!contains(lambda, mu)) return 0;
    if (nu.empty()) return 1;  // lambda == mu at this point

    LrSearch search{lambda, mu, nu.parts(), {}, {}, 0};
    search.filling.resize(lambda.rows());
    for (std::size_t r = 0; r < lambda.rows(); ++r) {
        search.filling[r].assign(static_cast<std::size_t>(lambda.parts()[r]), 0);
        for (int c = mu.part(r + 1); c < lambda.parts()[r]; ++c)
            search.cells.push_back({static_cast<int>(r), c});
    }
    search.run(0);
    return search.count;
}

}  // namespace kimura
