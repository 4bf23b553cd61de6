#include "kimura/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "kimura/errors.hpp"
#include "kimura/permutation.hpp"

namespace kimura {

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

std::map<Key, std::int64_t>& memo() {
    static std::map<Key, std::int64_t> table;
    return table;
}
std::mutex& memo_mutex() {
    static std::mutex m;
    return m;
}

// Beta set of lambda padded to its own row count: beta_i = lambda_i + (k - i).
std::vector<int> beta_set(const std::vector<int>& lambda) {
    const int k = static_cast<int>(lambda.size());
    std::vector<int> beta(lambda.size());
    for (int i = 0; i < k; ++i)
        beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (k - 1 - i);
    return beta;  // strictly decreasing
}

std::vector<int> partition_from_beta(std::vector<int> beta) {
    std::sort(beta.rbegin(), beta.rend());
    const int k = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < k; ++i) {
        int part = beta[static_cast<std::size_t>(i)] - (k - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return parts;
}

// mu is consumed largest part first; lambda and mu always have equal weight.
std::int64_t mn_recurse(const std::vector<int>& lambda, const std::vector<int>& mu) {
    if (mu.empty()) return 1;
    {
        std::lock_guard<std::mutex> lock(memo_mutex());
        auto it = memo().find({lambda, mu});
        if (it != memo().end()) return it->second;
    }

    const int strip = mu.front();
    const std::vector<int> rest(mu.begin() + 1, mu.end());
    const std::vector<int> beta = beta_set(lambda);

    std::int64_t total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - strip;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        // strip height = number of beta values jumped over
        int height = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++height;
        std::vector<int> next = beta;
        next[i] = target;
        const std::int64_t sub = mn_recurse(partition_from_beta(std::move(next)), rest);
        total += (height % 2 == 0) ? sub : -sub;
    }

    std::lock_guard<std::mutex> lock(memo_mutex());
    memo().emplace(Key{lambda, mu}, total);
    return total;
}

}  // namespace

std::int64_t character(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw UsageError("character: lambda and mu must have equal weight");
    if (lambda.weight() < 1)
        throw UsageError("character: weight must be at least 1");
    return mn_recurse(lambda.parts(), mu.parts());
}

std::int64_t centralizer_order(const Partition& mu) {
    std::int64_t z = 1;
    std::size_t i = 0;
    const auto& parts = mu.parts();
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        const auto mult = static_cast<int>(j - i);
        for (int m = 1; m <= mult; ++m) z *= parts[i] * m;
        i = j;
    }
    return z;
}

std::int64_t class_size(const Partition& mu) {
    return factorial(mu.weight()) / centralizer_order(mu);
}

}  // namespace kimura
