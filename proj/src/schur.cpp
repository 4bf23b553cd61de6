#include "kimura/schur.hpp"

#include <algorithm>
#include <vector>

#include "kimura/characters.hpp"
#include "kimura/errors.hpp"
#include "kimura/rational.hpp"

namespace kimura {

SuperDim SuperDim::parse(std::string_view s) {
    auto bar = s.find('|');
    if (s.size() < 5 || s.front() != '(' || s.back() != ')' || bar == std::string_view::npos)
        throw UsageError("malformed super-dimension: '" + std::string(s) + "' (expected \"(p|q)\")");
    try {
        SuperDim out;
        out.even = std::stoll(std::string(s.substr(1, bar - 1)));
        out.odd = std::stoll(std::string(s.substr(bar + 1, s.size() - bar - 2)));
        if (out.even < 0 || out.odd < 0) throw UsageError("super-dimensions must be nonnegative");
        return out;
    } catch (const std::logic_error&) {
        throw UsageError("malformed super-dimension: '" + std::string(s) + "'");
    }
}

SuperDim direct_sum(const SuperDim& a, const SuperDim& b) {
    return {a.even + b.even, a.odd + b.odd};
}

SuperDim tensor(const SuperDim& a, const SuperDim& b) {
    return {a.even * b.even + a.odd * b.odd, a.even * b.odd + a.odd * b.even};
}

namespace {

// Letters are 1..p (unprimed) then p+1..p+q (primed), in that total order.
struct HookTableauCount {
    std::vector<int> shape;      // row lengths
    std::vector<int> col_len;    // conjugate
    int p, q;
    std::int64_t even = 0, odd = 0;
    std::vector<std::vector<int>> cells;

    void run(int row, int col, int primed_cells) {
        if (row == static_cast<int>(shape.size())) {
            (primed_cells % 2 == 0 ? even : odd) += 1;
            return;
        }
        const int next_row = col + 1 == shape[static_cast<std::size_t>(row)] ? row + 1 : row;
        const int next_col = col + 1 == shape[static_cast<std::size_t>(row)] ? 0 : col + 1;
        const int left = col > 0 ? cells[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - 1)] : 0;
        const int above = row > 0 ? cells[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)] : 0;

        int lo = left > above ? left : above;
        if (lo < 1) lo = 1;
        for (int v = lo; v <= p + q; ++v) {
            const bool primed = v > p;
            if (v == left && primed) continue;    // primed strict along rows
            if (v == above && !primed) continue;  // unprimed strict down columns
            if (primed) {
                // the rest of this row must be strictly larger primed letters
                const int rest = shape[static_cast<std::size_t>(row)] - col - 1;
                if (p + q - v < rest) continue;
            } else if (q == 0) {
                // no primed letters to absorb the rest of this column
                const int below = col_len[static_cast<std::size_t>(col)] - row - 1;
                if (p - v < below) continue;
            }
            cells[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = v;
            run(next_row, next_col, primed_cells + (primed ? 1 : 0));
        }
        cells[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = 0;
    }
};

}  // namespace

SuperDim schur_dims(const Partition& shape, const SuperDim& a, int weight_limit) {
    if (shape.weight() > weight_limit)
        throw LimitError("schur_dims: shape weight " + std::to_string(shape.weight()) +
                         " exceeds the enumeration budget " + std::to_string(weight_limit));
    if (shape.empty()) return {1, 0};
    if (a.even > INT32_MAX || a.odd > INT32_MAX)
        throw LimitError("schur_dims: super-dimension too large to enumerate");
    if (!fits_hook(shape, a.even, a.odd)) return {0, 0};

    HookTableauCount search;
    search.shape = shape.parts();
    search.col_len = shape.conjugate().parts();
    search.p = static_cast<int>(a.even);
    search.q = static_cast<int>(a.odd);
    search.cells.resize(shape.rows());
    for (std::size_t r = 0; r < shape.rows(); ++r)
        search.cells[r].assign(static_cast<std::size_t>(shape.parts()[r]), 0);
    search.run(0, 0, 0);
    return {search.even, search.odd};
}

SchurResult schur_apply(const Partition& shape, const SuperDim& a, int weight_limit) {
    return {shape, a, schur_dims(shape, a, weight_limit)};
}

std::int64_t schur_sdim_character(const Partition& shape, const SuperDim& a) {
    const int n = shape.weight();
    if (n < 1) throw UsageError("schur_sdim_character: shape weight must be at least 1");

    const std::int64_t sdim = a.even - a.odd;
    Rational total(0);
    for (const Partition& mu : enumerate_partitions(n)) {
        Rational term(character(shape, mu));
        for (std::size_t i = 0; i < mu.rows(); ++i) term *= Rational(sdim);
        total += term / Rational(centralizer_order(mu));
    }
    if (!total.is_integer())
        throw CrossCheckError("schur_sdim_character: non-integral supertrace for shape " +
                              shape.str());
    return total.to_integer();
}

SuperDim power_dims(PowerKind kind, std::int64_t n, const SuperDim& a, int weight_limit) {
    if (n < 0) throw UsageError("power_dims: n must be nonnegative");
    if (n == 0) return {1, 0};
    if (n > weight_limit)
        throw LimitError("power_dims: n exceeds the enumeration budget");
    std::vector<int> parts;
    if (kind == PowerKind::Wedge)
        parts.assign(static_cast<std::size_t>(n), 1);
    else
        parts.assign(1, static_cast<int>(n));
    return schur_dims(Partition(std::move(parts)), a, weight_limit);
}

KimStats kim_stats(const SuperDim& a) {
    const std::int64_t p = a.even, q = a.odd;
    if (p > 100000 || q > 100000)
        throw LimitError("kim_stats: super-dimension too large for the vanishing checks");
    const int budget = static_cast<int>(std::max(p, q)) + 1;

    const bool plus_ok = !power_dims(PowerKind::Wedge, p, {p, 0}, budget).is_zero() &&
                         power_dims(PowerKind::Wedge, p + 1, {p, 0}, budget).is_zero();
    const bool minus_ok = !power_dims(PowerKind::Sym, q, {0, q}, budget).is_zero() &&
                          power_dims(PowerKind::Sym, q + 1, {0, q}, budget).is_zero();
    if (!plus_ok || !minus_ok)
        throw CrossCheckError("kim_stats: power vanishing checks failed for " + a.str());

    KimStats s;
    s.kim_plus = p;
    s.kim_minus = q;
    s.kim = p + q;
    s.euler = p - q;
    s.is_even = (q == 0);
    s.is_odd = (p == 0);
    return s;
}

}  // namespace kimura
