#include "kimura/group_algebra.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>

#include "kimura/characters.hpp"
#include "kimura/errors.hpp"

namespace kimura {

namespace {

constexpr int kDenseTableMaxDegree = 7;                 // n!^2 table entries
constexpr std::size_t kDenseThreshold = std::size_t{1} << 20;  // term pairs

// Per-degree permutation data: flat images and the class of every rank.
struct PermIndex {
    int n = 0;
    std::size_t order = 0;
    std::vector<int> images;        // order * n, rank-major
    std::vector<int> class_of;      // rank -> index into classes
    std::vector<Partition> classes; // cycle types, enumeration order
};

// Left-multiplication table: row s lists rank(sigma_s o tau_t) for all t.
struct MultTable {
    std::size_t order = 0;
    std::vector<std::uint16_t> left;
    std::uint16_t at(std::size_t s, std::size_t t) const { return left[s * order + t]; }
};

const PermIndex& perm_index(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<PermIndex>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;

    if (n < 1 || n > 9) throw LimitError("group algebra permutation index supports 1 <= n <= 9");
    auto idx = std::make_unique<PermIndex>();
    idx->n = n;
    idx->order = static_cast<std::size_t>(factorial(n));
    idx->images.resize(idx->order * static_cast<std::size_t>(n));
    idx->class_of.resize(idx->order);
    idx->classes = enumerate_partitions(n);
    std::map<Partition, int> class_index;
    for (std::size_t c = 0; c < idx->classes.size(); ++c)
        class_index[idx->classes[c]] = static_cast<int>(c);
    for (std::size_t r = 0; r < idx->order; ++r) {
        Permutation sigma = Permutation::unrank(n, r);
        std::copy(sigma.images0().begin(), sigma.images0().end(),
                  idx->images.begin() + static_cast<std::ptrdiff_t>(r * static_cast<std::size_t>(n)));
        idx->class_of[r] = class_index.at(sigma.cycle_type());
    }
    return *cache.emplace(n, std::move(idx)).first->second;
}

std::uint64_t rank_images(const int* img, int n) {
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i) {
        int smaller_after = 0;
        for (int j = i + 1; j < n; ++j)
            if (img[j] < img[i]) ++smaller_after;
        r = r * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller_after);
    }
    return r;
}

const MultTable& mult_table(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<MultTable>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;

    if (n < 1 || n > kDenseTableMaxDegree)
        throw LimitError("dense multiplication table supports 1 <= n <= 7");
    const PermIndex& idx = perm_index(n);
    auto table = std::make_unique<MultTable>();
    table->order = idx.order;
    table->left.resize(idx.order * idx.order);
    std::vector<int> composed(static_cast<std::size_t>(n));
    for (std::size_t s = 0; s < idx.order; ++s) {
        const int* sig = &idx.images[s * static_cast<std::size_t>(n)];
        for (std::size_t t = 0; t < idx.order; ++t) {
            const int* tau = &idx.images[t * static_cast<std::size_t>(n)];
            for (int i = 0; i < n; ++i) composed[static_cast<std::size_t>(i)] = sig[tau[i]];
            table->left[s * idx.order + t] =
                static_cast<std::uint16_t>(rank_images(composed.data(), n));
        }
    }
    return *cache.emplace(n, std::move(table)).first->second;
}

// Common-denominator integer form: element = (1/den) * num[].
struct ScaledDense {
    std::int64_t den = 1;
    std::vector<std::int64_t> num;
};

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
    const std::int64_t g = std::gcd(a, b);
    const __int128 l = static_cast<__int128>(a / g) * b;
    if (l > INT64_MAX) throw std::overflow_error("denominator lcm overflow");
    return static_cast<std::int64_t>(l);
}

ScaledDense to_scaled_dense(const GroupAlgebraElement& x, std::size_t order) {
    ScaledDense out;
    for (const auto& [rank, coeff] : x.terms()) out.den = checked_lcm(out.den, coeff.den());
    out.num.assign(order, 0);
    for (const auto& [rank, coeff] : x.terms())
        out.num[rank] = coeff.num() * (out.den / coeff.den());
    return out;
}

GroupAlgebraElement from_scaled_dense(const ScaledDense& x, int degree) {
    GroupAlgebraElement out(degree);
    for (std::size_t r = 0; r < x.num.size(); ++r)
        if (x.num[r] != 0)
            out.add_term_by_rank(static_cast<std::uint64_t>(r), Rational(x.num[r], x.den));
    return out;
}

ScaledDense dense_convolve(const ScaledDense& x, const ScaledDense& y, const MultTable& table) {
    const std::size_t m = table.order;
    std::vector<__int128> acc(m, 0);
    for (std::size_t s = 0; s < m; ++s) {
        const std::int64_t xs = x.num[s];
        if (xs == 0) continue;
        const std::uint16_t* row = &table.left[s * m];
        for (std::size_t t = 0; t < m; ++t) {
            const std::int64_t yt = y.num[t];
            if (yt == 0) continue;
            acc[row[t]] += static_cast<__int128>(xs) * yt;
        }
    }
    ScaledDense out;
    const __int128 den = static_cast<__int128>(x.den) * y.den;
    if (den > INT64_MAX) throw std::overflow_error("denominator product overflow");
    out.den = static_cast<std::int64_t>(den);
    out.num.resize(m);
    std::int64_t g = out.den;
    for (std::size_t r = 0; r < m; ++r) {
        if (acc[r] > INT64_MAX || acc[r] < INT64_MIN)
            throw std::overflow_error("convolution coefficient overflow");
        out.num[r] = static_cast<std::int64_t>(acc[r]);
        g = std::gcd(g, out.num[r] < 0 ? -out.num[r] : out.num[r]);
    }
    if (g > 1) {
        out.den /= g;
        for (auto& v : out.num) v /= g;
    }
    return out;
}

GroupAlgebraElement sparse_multiply(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
    const int n = x.degree();
    std::vector<std::pair<Permutation, Rational>> xs, ys;
    xs.reserve(x.support_size());
    ys.reserve(y.support_size());
    for (const auto& [rank, c] : x.terms()) xs.emplace_back(Permutation::unrank(n, rank), c);
    for (const auto& [rank, c] : y.terms()) ys.emplace_back(Permutation::unrank(n, rank), c);

    std::map<std::uint64_t, Rational> acc;
    for (const auto& [sigma, cx] : xs)
        for (const auto& [tau, cy] : ys) {
            const std::uint64_t r = sigma.compose(tau).rank();
            auto [it, inserted] = acc.emplace(r, cx * cy);
            if (!inserted) it->second += cx * cy;
        }
    GroupAlgebraElement out(n);
    for (const auto& [rank, c] : acc)
        if (!c.is_zero()) out.add_term_by_rank(rank, c);
    return out;
}

}  // namespace

GroupAlgebraElement::GroupAlgebraElement(int degree) : degree_(degree) {
    if (degree < 1) throw UsageError("group algebra degree must be at least 1");
}

Rational GroupAlgebraElement::coefficient(const Permutation& sigma) const {
    if (sigma.degree() != degree_) throw UsageError("coefficient: degree mismatch");
    return coefficient_of_rank(sigma.rank());
}

Rational GroupAlgebraElement::coefficient_of_rank(std::uint64_t rank) const {
    auto it = terms_.find(rank);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add_term(const Permutation& sigma, const Rational& c) {
    if (sigma.degree() != degree_) throw UsageError("add_term: degree mismatch");
    add_term_by_rank(sigma.rank(), c);
}

void GroupAlgebraElement::add_term_by_rank(std::uint64_t rank, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(rank, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GroupAlgebraElement GroupAlgebraElement::identity(int degree) {
    GroupAlgebraElement e(degree);
    e.add_term_by_rank(0, Rational(1));
    return e;
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
    if (degree_ != o.degree_) throw UsageError("group algebra sum: degree mismatch");
    for (const auto& [rank, c] : o.terms_) add_term_by_rank(rank, c);
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
    if (degree_ != o.degree_) throw UsageError("group algebra difference: degree mismatch");
    for (const auto& [rank, c] : o.terms_) add_term_by_rank(rank, -c);
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [rank, coeff] : terms_) coeff *= c;
    return *this;
}

GroupAlgebraElement ga_multiply(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
    if (x.degree() != y.degree()) throw UsageError("ga_multiply: degree mismatch");
    if (x.is_zero() || y.is_zero()) return GroupAlgebraElement(x.degree());

    const std::size_t pairs = x.support_size() * y.support_size();
    if (x.degree() <= kDenseTableMaxDegree && pairs >= kDenseThreshold) {
        try {
            const MultTable& table = mult_table(x.degree());
            return from_scaled_dense(
                dense_convolve(to_scaled_dense(x, table.order), to_scaled_dense(y, table.order),
                               table),
                x.degree());
        } catch (const std::overflow_error&) {
            // fall back to the sparse path; rationals there reduce termwise
        }
    }
    return sparse_multiply(x, y);
}

GroupAlgebraElement young_idempotent(const Partition& lambda, int max_degree) {
    if (lambda.empty()) throw UsageError("young_idempotent: empty partition");
    const int n = lambda.weight();
    if (n > max_degree)
        throw LimitError("young_idempotent: degree " + std::to_string(n) +
                         " exceeds the configured maximum " + std::to_string(max_degree));
    const PermIndex& idx = perm_index(n);
    const std::int64_t dim = irrep_dimension(lambda);
    const std::int64_t order = factorial(n);

    std::vector<std::int64_t> chi(idx.classes.size());
    for (std::size_t c = 0; c < idx.classes.size(); ++c)
        chi[c] = character(lambda, idx.classes[c]);

    GroupAlgebraElement e(n);
    for (std::size_t r = 0; r < idx.order; ++r) {
        const std::int64_t value = chi[static_cast<std::size_t>(idx.class_of[r])];
        if (value != 0) e.add_term_by_rank(r, Rational(dim * value, order));
    }
    return e;
}

bool IdempotentReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const IdempotentCheck& c) { return c.pass; });
}

IdempotentReport verify_idempotent_system(int n, int max_degree) {
    if (n < 1) throw UsageError("verify_idempotent_system: n must be at least 1");
    if (n > max_degree)
        throw LimitError("verify_idempotent_system: n = " + std::to_string(n) +
                         " exceeds the configured maximum " + std::to_string(max_degree));
    if (n > kDenseTableMaxDegree)
        throw LimitError("verify_idempotent_system: dense products support n <= 7");

    const PermIndex& idx = perm_index(n);
    const MultTable& table = mult_table(n);
    const std::int64_t order = factorial(n);
    const auto& lambdas = idx.classes;  // partitions of n, enumeration order

    // e_lambda in scaled form: den = n!, num[r] = dim * chi(class(r))
    std::vector<ScaledDense> idems(lambdas.size());
    for (std::size_t a = 0; a < lambdas.size(); ++a) {
        const std::int64_t dim = irrep_dimension(lambdas[a]);
        std::vector<std::int64_t> chi(lambdas.size());
        for (std::size_t c = 0; c < lambdas.size(); ++c)
            chi[c] = character(lambdas[a], idx.classes[c]);
        idems[a].den = order;
        idems[a].num.resize(idx.order);
        for (std::size_t r = 0; r < idx.order; ++r)
            idems[a].num[r] = dim * chi[static_cast<std::size_t>(idx.class_of[r])];
    }

    auto scaled_equal = [](const ScaledDense& a, const ScaledDense& b) {
        for (std::size_t r = 0; r < a.num.size(); ++r)
            if (static_cast<__int128>(a.num[r]) * b.den != static_cast<__int128>(b.num[r]) * a.den)
                return false;
        return true;
    };
    auto scaled_is_zero = [](const ScaledDense& a) {
        return std::all_of(a.num.begin(), a.num.end(), [](std::int64_t v) { return v == 0; });
    };

    IdempotentReport report;
    report.n = n;
    for (std::size_t a = 0; a < lambdas.size(); ++a)
        for (std::size_t b = 0; b < lambdas.size(); ++b) {
            const ScaledDense prod = dense_convolve(idems[a], idems[b], table);
            IdempotentCheck check;
            check.lambda = lambdas[a];
            if (a == b) {
                check.kind = IdempotentCheck::Kind::Idem;
                check.pass = scaled_equal(prod, idems[a]);
            } else {
                check.kind = IdempotentCheck::Kind::Orth;
                check.mu = lambdas[b];
                check.pass = scaled_is_zero(prod);
            }
            report.checks.push_back(std::move(check));
        }

    ScaledDense sum;
    sum.den = order;
    sum.num.assign(idx.order, 0);
    for (const ScaledDense& e : idems)
        for (std::size_t r = 0; r < idx.order; ++r) sum.num[r] += e.num[r];
    ScaledDense one;
    one.den = 1;
    one.num.assign(idx.order, 0);
    one.num[0] = 1;  // rank 0 is the identity permutation
    IdempotentCheck complete;
    complete.kind = IdempotentCheck::Kind::Complete;
    complete.pass = scaled_equal(sum, one);
    report.checks.push_back(std::move(complete));
    return report;
}

}  // namespace kimura
